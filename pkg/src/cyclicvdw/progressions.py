"""k-term cyclic arithmetic progressions mod N and difference-gcd sets D(N, k).

A progression is identified by its element set, never by a particular
(base, diff) generating pair; many pairs can generate the same set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    BudgetExceededError,
    DegenerateProgressionError,
    InvalidArgumentError,
)

# Enumeration refuses moduli above this unless explicitly overridden; the
# dedupe set is what actually eats memory.
DEFAULT_ENUMERATION_CAP = 10_000

METHOD_BRUTE_FORCE = "brute_force"
METHOD_CLOSED_FORM = "closed_form"
METHOD_CONJECTURE = "conjecture"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidArgumentError(msg)


@dataclass(frozen=True)
class RingParams:
    """A modulus N together with a progression length k."""

    modulus: int
    length: int

    def __post_init__(self):
        _require(self.modulus >= 1, f"modulus must be positive, got {self.modulus}")
        _require(self.length >= 3, f"length must be >= 3, got {self.length}")


@dataclass(frozen=True)
class CyclicProgression:
    """A k-element residue set mod N realized as an arithmetic progression.

    `elements` is the strictly increasing residue tuple; (witnessed_base,
    witnessed_diff) is one generating pair, kept for provenance only.
    """

    modulus: int
    elements: tuple[int, ...]
    witnessed_base: int
    witnessed_diff: int

    @property
    def length(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "elements": list(self.elements),
            "base": self.witnessed_base,
            "diff": self.witnessed_diff,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CyclicProgression":
        return cls(d["modulus"], tuple(d["elements"]), d["base"], d["diff"])


@dataclass(frozen=True)
class DifferenceSet:
    """The set D(N, k) of gcd(d, k) values over admissible common differences d."""

    modulus: int
    length: int
    values: tuple[int, ...]
    method: str

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "length": self.length,
            "values": list(self.values),
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DifferenceSet":
        return cls(d["modulus"], d["length"], tuple(d["values"]), d["method"])


def subgroup_order(modulus: int, d: int) -> int:
    """Order of the cyclic subgroup of Z_modulus generated by d."""
    _require(modulus >= 1, f"modulus must be positive, got {modulus}")
    _require(1 <= d <= modulus - 1, f"d must lie in 1..{modulus - 1}, got {d}")
    return modulus // gcd(d, modulus)


def canonical_diffs(modulus: int, k: int) -> tuple[int, ...]:
    """All canonical common differences 0 < d < N/2 admitting a k-term progression.

    A difference d works iff k <= N/gcd(N, d); for even N the value N/2 never
    appears since a progression with that difference has only two elements.
    """
    _require(k >= 3, f"k must be >= 3, got {k}")
    _require(modulus >= k, f"modulus must be >= k, got N={modulus}, k={k}")
    return tuple(
        d for d in range(1, (modulus + 1) // 2) if k * gcd(modulus, d) <= modulus
    )


def make_progression(modulus: int, base: int, diff: int, k: int) -> CyclicProgression:
    """Build the progression {(base + i*diff) mod N : 0 <= i < k}.

    Fails with DegenerateProgressionError when the k generated values are not
    all distinct.
    """
    _require(modulus >= 1, f"modulus must be positive, got {modulus}")
    _require(k >= 3, f"k must be >= 3, got {k}")
    base %= modulus
    diff %= modulus
    seen = set()
    x = base
    for _ in range(k):
        seen.add(x)
        x = (x + diff) % modulus
    if len(seen) < k:
        raise DegenerateProgressionError(modulus, base, diff, k, len(seen))
    return CyclicProgression(modulus, tuple(sorted(seen)), base, diff)


def generating_pairs(p: CyclicProgression) -> set[tuple[int, int]]:
    """All (base, diff) pairs with diff in 1..N-1 generating p's element set."""
    n = p.modulus
    k = len(p.elements)
    target = set(p.elements)
    pairs = set()
    for d in range(1, n):
        for t in p.elements:
            elems = {(t + i * d) % n for i in range(k)}
            if len(elems) == k and elems == target:
                pairs.add((t, d))
    return pairs


def canonical_difference(p: CyclicProgression) -> int:
    """The common difference of p: the smallest generating d with 0 < d < N/2."""
    cands = [d for _, d in generating_pairs(p) if 2 * d < p.modulus]
    return min(cands)


def enumerate_progressions(
    modulus: int, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[CyclicProgression]:
    """Every distinct k-term progression mod N, each element set exactly once.

    Returns [] when k > N.  The witnessed pair of each progression uses the
    smallest canonical difference, then the smallest base.
    """
    _require(k >= 3, f"k must be >= 3, got {k}")
    _require(
        modulus <= cap,
        f"modulus {modulus} exceeds enumeration cap {cap}; pass cap= to override",
    )
    if k > modulus:
        return []
    seen: dict[tuple[int, ...], tuple[int, int]] = {}
    for d in canonical_diffs(modulus, k):
        for t in range(modulus):
            elems = tuple(sorted((t + i * d) % modulus for i in range(k)))
            if elems not in seen:
                seen[elems] = (t, d)
    return [
        CyclicProgression(modulus, elems, t, d)
        for elems, (t, d) in sorted(seen.items())
    ]


def find_contained_progression(
    residues, modulus: int, k: int
) -> CyclicProgression | None:
    """Some k-term progression mod N lying entirely inside the given set, or None.

    Equivalent to scanning enumerate_progressions(N, k) but iterates (d, t)
    directly over canonical differences; the first hit in (d, t) order wins.
    """
    _require(k >= 3, f"k must be >= 3, got {k}")
    s = set(residues)
    _require(
        all(0 <= x < modulus for x in s),
        f"residues must lie in 0..{modulus - 1}",
    )
    if k > modulus:
        return None
    if len(s) < k:
        return None
    if len(s) * 2 >= modulus:
        # Dense set: mark the bases whose progression meets the complement.
        complement = [x for x in range(modulus) if x not in s]
        for d in canonical_diffs(modulus, k):
            bad = bytearray(modulus)
            for x in complement:
                for i in range(k):
                    bad[(x - i * d) % modulus] = 1
            for t in range(modulus):
                if not bad[t]:
                    return make_progression(modulus, t, d, k)
        return None
    ordered = sorted(s)
    for d in canonical_diffs(modulus, k):
        for t in ordered:
            x = t
            for _ in range(k):
                if x not in s:
                    break
                x = (x + d) % modulus
            else:
                return make_progression(modulus, t, d, k)
    return None


def difference_gcd_set(
    modulus: int, k: int, method: str = METHOD_BRUTE_FORCE
) -> DifferenceSet:
    """D(N, k), either by brute force over canonical differences or, when N is a
    multiple of k, by the closed form {g : 1 <= g <= N/k, g | k}."""
    _require(k >= 3, f"k must be >= 3, got {k}")
    if method == METHOD_BRUTE_FORCE:
        _require(modulus >= k, f"brute force needs N >= k, got N={modulus}, k={k}")
        values = sorted({gcd(d, k) for d in canonical_diffs(modulus, k)})
    elif method == METHOD_CLOSED_FORM:
        _require(
            modulus % k == 0,
            f"closed form requires k | N, got N={modulus}, k={k}",
        )
        m = modulus // k
        values = [g for g in range(1, m + 1) if k % g == 0]
    else:
        raise InvalidArgumentError(f"unknown method {method!r}")
    return DifferenceSet(modulus, k, tuple(values), method)


def conjectured_difference_set(m: int, n: int, k: int) -> DifferenceSet:
    """The conjectured D(mk, nk) = {1 <= g <= m : g | nk} for m > n >= 1."""
    _require(m > n >= 1, f"need m > n >= 1, got m={m}, n={n}")
    _require(n * k >= 3, f"progression length nk must be >= 3, got {n * k}")
    values = tuple(g for g in range(1, m + 1) if (n * k) % g == 0)
    return DifferenceSet(m * k, n * k, values, METHOD_CONJECTURE)


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of the conjectured D(mk, nk) against brute-force enumeration."""

    m: int
    n: int
    k: int
    conjectured: tuple[int, ...]
    brute_force: tuple[int, ...]
    agrees: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "conjectured": list(self.conjectured),
            "brute_force": list(self.brute_force),
            "agrees": self.agrees,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ConjectureReport":
        return cls(
            d["m"], d["n"], d["k"],
            tuple(d["conjectured"]), tuple(d["brute_force"]), d["agrees"],
        )


def check_conjecture(m: int, n: int, k: int, cap: int = 2000) -> ConjectureReport:
    """Compare the conjectured D(mk, nk) to brute force over Z_mk.

    The brute force uses progression length nk and modulus mk; refuses moduli
    above `cap`.
    """
    conj = conjectured_difference_set(m, n, k)
    if m * k > cap:
        raise BudgetExceededError(f"modulus {m * k} exceeds enumeration cap {cap}")
    brute = difference_gcd_set(m * k, n * k, METHOD_BRUTE_FORCE)
    return ConjectureReport(
        m, n, k, conj.values, brute.values, conj.values == brute.values
    )
