"""Append-only results cache: one JSON record per line, keyed by the
canonical argument tuple of the producing operation.

Exact results are never displaced by bound-only reruns of the same key.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path

TOOL_VERSION = "0.1.0"

_EXACT_STATUSES = {"exact"}


@dataclass(frozen=True)
class CacheRecord:
    key: dict
    status: str
    value: dict
    tool_version: str
    timestamp: float

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "status": self.status,
            "value": self.value,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }


def _canon(key: dict) -> str:
    return json.dumps(key, sort_keys=True, separators=(",", ":"))


class ResultsCache:
    """JSON-lines cache file; later records win except exact-over-bound."""

    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[str, CacheRecord] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    d = json.loads(line)
                    rec = CacheRecord(
                        d["key"], d["status"], d["value"],
                        d.get("tool_version", ""), d.get("timestamp", 0.0),
                    )
                    self._admit(rec)

    def _admit(self, rec: CacheRecord) -> bool:
        ck = _canon(rec.key)
        old = self._records.get(ck)
        if (
            old is not None
            and old.status in _EXACT_STATUSES
            and rec.status not in _EXACT_STATUSES
        ):
            return False
        self._records[ck] = rec
        return True

    def get(self, key: dict) -> CacheRecord | None:
        return self._records.get(_canon(key))

    def put(self, key: dict, status: str, value: dict) -> CacheRecord:
        rec = CacheRecord(key, status, value, TOOL_VERSION, time.time())
        if self._admit(rec):
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
        return self._records[_canon(key)]

    def __len__(self) -> int:
        return len(self._records)
