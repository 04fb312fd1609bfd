"""Sweep every admissible (m, n, r) up to a group-order bound.

Each triple yields one :class:`SweepRecord`; records serialize to one JSON
object per line. Anomalies are data, not exceptions: a failure while
building one record is captured on that record and the sweep moves on.

Anomaly tags
------------
mode-divergence       paper-mode and strict-mode triple counts differ
non-bijective-triple  a paper-mode y whose map has a nontrivial kernel
oracle-mismatch       orbit count, Burnside count and closed form disagree
integrality-failure   a closed-form total is not divisible by m*n
record-failure        an unexpected exception while building the record
"""
from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from . import errors, morphisms
from .errors import IntegralityError, ValidationError
from .modarith import gcd
from .morphisms import MorphismTriple
from .reidemeister import (
    exact_spectrum, formula_total, reidemeister_burnside, reidemeister_number, reidemeister_orbits,
)
from .zmgroup import Element, ZmParams, validate

log = logging.getLogger(__name__)

DEFAULT_BRUTE_CAP = 150
DEFAULT_EXHAUSTIVE_CAP = 60
FAILING_TAGS = frozenset({"oracle-mismatch", "integrality-failure", "record-failure"})
MISMATCH_EXAMPLES = 5

__all__ = [
    "SweepRecord", "enumerate_triples", "build_record", "sweep", "read_keys",
    "write_records", "FAILING_TAGS", "DEFAULT_BRUTE_CAP", "DEFAULT_EXHAUSTIVE_CAP",
]


@dataclass
class SweepRecord:
    m: int
    n: int
    r: int
    d: int
    order: int
    aut_count_paper: int
    aut_count_strict: int
    spectrum_strict: list[int]
    spectrum_exact: list[int]
    oracle_coverage: str
    per_y: list[dict] = field(default_factory=list)
    anomalies: list[dict] = field(default_factory=list)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.r)

    def failed(self) -> bool:
        return any(a["tag"] in FAILING_TAGS for a in self.anomalies)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "SweepRecord":
        return cls(**json.loads(line))


def enumerate_triples(max_order: int) -> list[tuple[int, int, int]]:
    """Admissible (m, n, r) with m*n <= max_order, r in [0, m), sorted by (m*n, m, n, r)."""
    if max_order > errors.max_order():
        raise errors.SizeError(f"max_order {max_order} exceeds size bound {errors.max_order()}")
    found = []
    for order in range(1, max_order + 1):
        for m in range(1, order + 1):
            if order % m:
                continue
            n = order // m
            if gcd(m, n) != 1:
                continue
            for r in range(m):
                try:
                    validate(m, n, r)
                except ValidationError:
                    continue
                found.append((m, n, r))
    return found


def _sample_xs(p: ZmParams, exhaustive: bool) -> list[tuple[int, int]]:
    units = [x for x in range(p.m) if gcd(x, p.m) == 1]
    if exhaustive:
        return [(x1, x2) for x1 in units for x2 in range(p.m)]
    # every x1 class plus every x2 offset of the identity on <a>
    picks = [(x1, 0) for x1 in units] + [(units[0], x2) for x2 in range(p.m)]
    return sorted(set(picks))


def _kernel_witness(p: ZmParams, y: int) -> tuple[Element, Element]:
    if p.order <= errors.brute_limit():
        check = morphisms.check_morphism(p, MorphismTriple(1 % p.m, 0, y))
        if check.witness is not None:
            return check.witness
    return (Element(0, 0), Element(p.n // gcd(y, p.n), 0))


def _pair(w: tuple[Element, Element]) -> list[list[int]]:
    return [list(w[0]), list(w[1])]


def build_record(
    p: ZmParams,
    brute_cap: int = DEFAULT_BRUTE_CAP,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
) -> SweepRecord:
    anomalies: list[dict] = []
    paper_ys = morphisms.admissible_ys(p, "paper")
    strict_ys = set(morphisms.admissible_ys(p, "strict"))
    paper_count = len(morphisms.enumerate_triples(p, "paper"))
    strict_count = len(morphisms.enumerate_triples(p, "strict"))
    if paper_count != morphisms.aut_count_paper(p):
        raise errors.ConsistencyError(f"paper-mode count {paper_count} != m*phi(m)*n/d on {p}")

    divergent = [y for y in paper_ys if y not in strict_ys]
    if divergent:
        anomalies.append({
            "tag": "mode-divergence", "paper_count": paper_count,
            "strict_count": strict_count, "ys": divergent,
        })
        for y in divergent:
            witness = _kernel_witness(p, y)
            anomalies.append({
                "tag": "non-bijective-triple", "triple": [1 % p.m, 0, y], "witness": _pair(witness),
            })

    brute = p.order <= brute_cap
    exhaustive = brute and p.order <= exhaustive_cap
    coverage = "exhaustive" if exhaustive else "sampled" if brute else "skipped"

    per_y = []
    spectrum_strict = set()
    for y in paper_ys:
        entry: dict = {"y": y, "r_formula": None, "r_orbit": None, "r_burnside": None}
        per_y.append(entry)
        total = formula_total(p, y)
        if total % p.order:
            anomalies.append({"tag": "integrality-failure", "y": y, "total": total})
            continue
        entry["r_formula"] = r_formula = total // p.order
        if y not in strict_ys:
            continue
        spectrum_strict.add(r_formula)
        if not brute:
            continue
        checked, mismatches = 0, []
        for x1, x2 in _sample_xs(p, exhaustive):
            f = MorphismTriple(x1, x2, y)
            r_orbit = reidemeister_orbits(p, f)
            r_burnside = reidemeister_burnside(p, f)
            if entry["r_orbit"] is None:
                entry["r_orbit"], entry["r_burnside"] = r_orbit, r_burnside
            checked += 1
            if not r_orbit == r_burnside == r_formula:
                mismatches.append([x1, x2, r_orbit, r_burnside, reidemeister_number(p, f)])
        if mismatches:
            anomalies.append({
                "tag": "oracle-mismatch", "y": y, "r_formula": r_formula,
                "checked": checked, "mismatched": len(mismatches),
                "examples": mismatches[:MISMATCH_EXAMPLES],
            })

    try:
        spectrum_exact = exact_spectrum(p, "strict").spectrum
    except IntegralityError as exc:
        anomalies.append({"tag": "integrality-failure", "detail": str(exc)})
        spectrum_exact = []

    return SweepRecord(
        m=p.m, n=p.n, r=p.r, d=p.d, order=p.order,
        aut_count_paper=paper_count, aut_count_strict=strict_count,
        spectrum_strict=sorted(spectrum_strict), spectrum_exact=spectrum_exact,
        oracle_coverage=coverage, per_y=per_y, anomalies=anomalies,
    )


def _safe_record(args: tuple[tuple[int, int, int], int, int]) -> SweepRecord:
    (m, n, r), brute_cap, exhaustive_cap = args
    p = validate(m, n, r)
    try:
        return build_record(p, brute_cap, exhaustive_cap)
    except Exception as exc:  # captured as data; the sweep must not abort
        log.exception("record (%d,%d,%d) failed", m, n, r)
        return SweepRecord(
            m=m, n=n, r=p.r, d=p.d, order=p.order,
            aut_count_paper=morphisms.aut_count_paper(p),
            aut_count_strict=len(morphisms.enumerate_triples(p, "strict")),
            spectrum_strict=[], spectrum_exact=[], oracle_coverage="skipped",
            anomalies=[{"tag": "record-failure", "error": f"{type(exc).__name__}: {exc}"}],
        )


def sweep(
    max_order: int,
    brute_cap: int = DEFAULT_BRUTE_CAP,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
    skip: Iterable[tuple[int, int, int]] = (),
    workers: int = 1,
) -> Iterator[SweepRecord]:
    """Yield one record per admissible triple, in enumeration order.

    With ``workers > 1`` records are computed in a process pool; output
    order is unchanged.
    """
    skip = set(skip)
    jobs = [(t, brute_cap, exhaustive_cap) for t in enumerate_triples(max_order) if t not in skip]
    if workers <= 1:
        yield from map(_safe_record, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_safe_record, jobs, chunksize=4)


def read_keys(path: Path) -> set[tuple[int, int, int]]:
    """(m, n, r) keys already present in a record file."""
    keys = set()
    if not path.exists():
        return keys
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rec = json.loads(line)
                keys.add((rec["m"], rec["n"], rec["r"]))
    return keys


def write_records(records: Iterable[SweepRecord], path: Optional[Path] = None, stream=None) -> list[SweepRecord]:
    """Append records to ``path`` (or write to ``stream``), flushing each line."""
    written = []
    fh = path.open("a", encoding="utf-8") if path is not None else stream
    try:
        for rec in records:
            fh.write(rec.to_json() + "\n")
            fh.flush()
            written.append(rec)
    finally:
        if path is not None:
            fh.close()
    return written


def default_workers() -> int:
    return max(1, min(8, (os.cpu_count() or 1)))
