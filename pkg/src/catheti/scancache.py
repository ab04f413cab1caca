"""Append-only JSON-lines cache of rank-scan results."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from . import __version__
from .descent import e_ab_hints, rank_bounds
from .ecq import curve_e_ab
from .pythag import enumerate_primitive

CACHE_ENV = "CATHETI_CACHE"
DEFAULT_CACHE = "catheti-scan.jsonl"


@dataclass(frozen=True)
class ScanRecord:
    triple: Tuple[int, int, int]
    rank_upper: int
    rank_lower: int
    accepted_pairs_count: int
    elapsed_ms: int
    search_height: int = 0
    tool_version: str = __version__

    @property
    def key(self) -> Tuple[int, int]:
        return self.triple[0], self.triple[1]

    @property
    def certified_zero(self) -> bool:
        return self.rank_upper == 0

    def to_json(self) -> str:
        d = asdict(self)
        d["triple"] = list(self.triple)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        d = json.loads(line)
        d["triple"] = tuple(int(v) for v in d["triple"])
        return cls(**d)


def default_cache_path() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE))


def load_cache(path: Path) -> Dict[Tuple[int, int], ScanRecord]:
    """Records keyed by (a, b); on duplicates the larger search height wins."""
    out: Dict[Tuple[int, int], ScanRecord] = {}
    if not path.exists():
        return out
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = ScanRecord.from_json(line)
            old = out.get(rec.key)
            if old is None or rec.search_height > old.search_height:
                out[rec.key] = rec
    return out


class CacheWriter:
    """Single appending writer; one flushed line per record."""

    def __init__(self, path: Path):
        self.path = Path(path)
        if self.path.parent != Path(""):
            self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = open(self.path, "a", encoding="utf-8")

    def append(self, rec: ScanRecord) -> None:
        self._fh.write(rec.to_json() + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> "CacheWriter":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def scan_one(triple: Tuple[int, int, int], search_height: int = 0) -> ScanRecord:
    a, b, c = triple
    start = time.perf_counter()
    report = rank_bounds(curve_e_ab(a, b), search_height, factor_hints=e_ab_hints(a, b))
    elapsed = int((time.perf_counter() - start) * 1000)
    return ScanRecord(triple, report.rank_upper, report.rank_lower, len(report.accepted_pairs), elapsed, search_height)


def _scan_star(args):
    return scan_one(*args)


def run_scan(
    leg_bound: int,
    jobs: int = 1,
    cache_path: Optional[Path] = None,
    search_height: int = 0,
) -> List[ScanRecord]:
    """Scan every primitive triple under the bound, reusing cached records.

    Returns one record per triple, in enumeration order. Workers only compute;
    this process is the only one that writes to the cache.
    """
    triples = [t.as_tuple() for t in enumerate_primitive(leg_bound)] if leg_bound >= 5 else []
    cached = load_cache(Path(cache_path)) if cache_path else {}
    todo = [t for t in triples if t[:2] not in cached or cached[t[:2]].search_height < search_height]
    fresh: Dict[Tuple[int, int], ScanRecord] = {}
    writer = CacheWriter(Path(cache_path)) if cache_path and todo else None
    try:
        if jobs > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results: Iterable[ScanRecord] = pool.map(_scan_star, [(t, search_height) for t in todo], chunksize=8)
                for rec in results:
                    fresh[rec.key] = rec
                    if writer:
                        writer.append(rec)
        else:
            for t in todo:
                rec = scan_one(t, search_height)
                fresh[rec.key] = rec
                if writer:
                    writer.append(rec)
    finally:
        if writer:
            writer.close()
    return [fresh.get(t[:2]) or cached[t[:2]] for t in triples]
