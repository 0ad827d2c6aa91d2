"""Shared wire formats: residue sets as ascending comma-separated integers,
or as JSON objects carrying the modulus alongside the element array."""

from __future__ import annotations

from .errors import InvalidArgumentError


def residues_to_text(residues) -> str:
    """`14,29,42,43,44` — strictly increasing, comma separated."""
    return ",".join(str(x) for x in sorted(residues))


def parse_residues(text: str) -> tuple[int, ...]:
    """Parse a comma-separated residue list; must be strictly increasing."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        return ()
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidArgumentError(f"bad residue list {text!r}: {exc}") from None
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidArgumentError(
            f"residue list must be strictly increasing: {text!r}"
        )
    if values[0] < 0:
        raise InvalidArgumentError(f"residues must be non-negative: {text!r}")
    return values


def residue_set_json(modulus: int, residues) -> dict:
    return {"modulus": modulus, "elements": sorted(residues)}


def read_residue_file(path) -> list[tuple[int, ...]]:
    """One residue set per line, `#` comments and blank lines skipped."""
    sets = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            sets.append(parse_residues(line))
    return sets
