"""Exhaustive classification of every coloring system at a fixed color count.

Systems are enumerated in a fixed order: origin ascending, then the H mask
as an integer, then the V mask, so system number ``i`` is always the same
system and census output files are comparable byte for byte.  Classification
of a system goes through its canonical form, so the work per isomorphism
class is done once no matter how the index range is split across workers,
and every member of a class receives the same verdict.

Output is JSON lines, one record per system, streamed with periodic
flushes and a cursor sidecar so an interrupted run can resume where the
last complete record ended.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .fileio import (
    FileFormatError,
    _as_int,
    _require_keys,
    dump_compact,
    dump_pretty,
    parse_witness,
    witness_to_json,
)
from .search import SearchBudget, classify
from .systems import (
    MAX_CANON_COLORS,
    Bounded,
    ColoringSystem,
    HasColoring,
    InputError,
    PeriodicWitness,
    Unknown,
    Verdict,
    canonicalize,
    verdict_kind,
)


def total_systems(n: int) -> int:
    """n * 2^(n^2) * 2^(n^2): every (origin, H, V) combination."""
    _check_color_count(n)
    return n << (2 * n * n)


def _check_color_count(n: int) -> None:
    # every record carries a canonical id, so the n! canonicalization cap binds
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_CANON_COLORS:
        raise InputError(f"census color count must be in [1, {MAX_CANON_COLORS}], got {n!r}")


def system_at(n: int, index: int) -> ColoringSystem:
    """The index-th system: index = (origin * 2^(n^2) + h_mask) * 2^(n^2) + v_mask."""
    total = total_systems(n)
    if not isinstance(index, int) or not 0 <= index < total:
        raise InputError(f"system index {index!r} out of range [0, {total})")
    relation_bits = n * n
    rest, v_mask = divmod(index, 1 << relation_bits)
    origin, h_mask = divmod(rest, 1 << relation_bits)
    return ColoringSystem(n=n, origin=origin, h_mask=h_mask, v_mask=v_mask)


def system_index(sys: ColoringSystem) -> int:
    relation_bits = sys.n * sys.n
    return ((sys.origin << relation_bits) | sys.h_mask) << relation_bits | sys.v_mask


def enumerate_systems(n: int) -> Iterator[ColoringSystem]:
    for index in range(total_systems(n)):
        yield system_at(n, index)


@dataclass(frozen=True)
class CensusRecord:
    system_index: int
    system: ColoringSystem
    verdict: Verdict
    canonical_id: str


@dataclass(frozen=True)
class CensusSummary:
    n: int
    total_systems: int
    bounded: int
    has_coloring: int
    unknown: int
    mu_exact: Optional[int]
    mu_lower_bound: int
    champion: Optional[int]


def summary_to_json(s: CensusSummary) -> dict:
    return {
        "n": s.n,
        "total_systems": s.total_systems,
        "bounded": s.bounded,
        "has_coloring": s.has_coloring,
        "unknown": s.unknown,
        "mu_exact": s.mu_exact,
        "mu_lower_bound": s.mu_lower_bound,
        "champion": s.champion,
    }


@dataclass(frozen=True)
class MuEstimate:
    """exact is present only when the census closed every system."""

    exact: Optional[int]
    lower_bound: int


# -- classification -----------------------------------------------------------


def _invert(perm: tuple) -> list:
    out = [0] * len(perm)
    for c, pc in enumerate(perm):
        out[pc] = c
    return out


def _relabel_witness(w: PeriodicWitness, relabel: list) -> PeriodicWitness:
    return PeriodicWitness(
        p=w.p, q=w.q, rows=tuple(tuple(relabel[c] for c in row) for row in w.rows)
    )


def census_records(
    n: int,
    budget: SearchBudget,
    dedupe: bool = True,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[CensusRecord]:
    """Classify systems start..stop-1 in enumeration order.

    With dedupe on, the verdict is computed for the canonical form and
    shared across the isomorphism class; witnesses are relabeled back
    through the canonicalizing bijection so they certify the actual
    system in the record.
    """
    total = total_systems(n)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise InputError(f"record range [{start}, {stop}) outside [0, {total}]")
    cache: dict = {}
    for index in range(start, stop):
        sys = system_at(n, index)
        canon, perm = canonicalize(sys)
        cid = f"{canon.n}.{canon.origin}.{canon.h_mask:x}.{canon.v_mask:x}"
        if dedupe:
            key = (canon.origin, canon.h_mask, canon.v_mask)
            verdict = cache.get(key)
            if verdict is None:
                verdict = classify(canon, budget)
                cache[key] = verdict
            if isinstance(verdict, HasColoring):
                verdict = HasColoring(_relabel_witness(verdict.witness, _invert(perm)))
        else:
            verdict = classify(sys, budget)
        yield CensusRecord(system_index=index, system=sys, verdict=verdict, canonical_id=cid)


# -- record lines ---------------------------------------------------------------


def _verdict_detail(v: Verdict) -> dict:
    if isinstance(v, Bounded):
        return {"max_len": v.max_len}
    if isinstance(v, HasColoring):
        return witness_to_json(v.witness)
    return {"depth_reached": v.depth_reached, "period_cap_reached": v.period_cap_reached}


def record_line(rec: CensusRecord) -> str:
    return dump_compact(
        {
            "system_index": rec.system_index,
            "canonical_id": rec.canonical_id,
            "verdict": verdict_kind(rec.verdict),
            "detail": _verdict_detail(rec.verdict),
        }
    )


def parse_record_line(n: int, line: str) -> CensusRecord:
    what = "census record"
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{what}: {exc.msg} at column {exc.colno}") from exc
    _require_keys(obj, ("system_index", "canonical_id", "verdict", "detail"), what)
    index = _as_int(obj["system_index"], f"{what}.system_index")
    cid = obj["canonical_id"]
    if not isinstance(cid, str):
        raise FileFormatError(f"{what}.canonical_id must be a string")
    kind = obj["verdict"]
    detail = obj["detail"]
    if not isinstance(detail, dict):
        raise FileFormatError(f"{what}.detail must be an object")
    if kind == "bounded":
        _require_keys(detail, ("max_len",), f"{what}.detail")
        verdict: Verdict = Bounded(max_len=_as_int(detail["max_len"], f"{what}.detail.max_len"))
    elif kind == "has_coloring":
        verdict = HasColoring(witness=parse_witness(detail, f"{what}.detail"))
    elif kind == "unknown":
        _require_keys(detail, ("depth_reached", "period_cap_reached"), f"{what}.detail")
        verdict = Unknown(
            depth_reached=_as_int(detail["depth_reached"], f"{what}.detail.depth_reached"),
            period_cap_reached=_as_int(
                detail["period_cap_reached"], f"{what}.detail.period_cap_reached"
            ),
        )
    else:
        raise FileFormatError(f"{what}: unknown verdict kind {kind!r}")
    return CensusRecord(
        system_index=index, system=system_at(n, index), verdict=verdict, canonical_id=cid
    )


# -- summaries --------------------------------------------------------------------


class _Totals:
    def __init__(self, n: int):
        self.n = n
        self.count = 0
        self.bounded = 0
        self.has_coloring = 0
        self.unknown = 0
        self.best_len = 0
        self.champion: Optional[int] = None

    def add(self, index: int, verdict: Verdict) -> None:
        self.count += 1
        if isinstance(verdict, Bounded):
            self.bounded += 1
            if verdict.max_len > self.best_len:
                self.best_len = verdict.max_len
                self.champion = index
        elif isinstance(verdict, HasColoring):
            self.has_coloring += 1
        else:
            self.unknown += 1

    def summary(self) -> CensusSummary:
        lower = 1 + self.best_len if self.bounded else 1
        total = total_systems(self.n)
        exact = lower if (self.unknown == 0 and self.count == total) else None
        return CensusSummary(
            n=self.n,
            total_systems=total,
            bounded=self.bounded,
            has_coloring=self.has_coloring,
            unknown=self.unknown,
            mu_exact=exact,
            mu_lower_bound=lower,
            champion=self.champion,
        )


def summarize_records(n: int, records: Iterable[CensusRecord]) -> CensusSummary:
    totals = _Totals(n)
    for rec in records:
        totals.add(rec.system_index, rec.verdict)
    return totals.summary()


# -- parallel line production --------------------------------------------------


def _line_chunk(args) -> list:
    n, budget, dedupe, start, stop = args
    return [record_line(rec) for rec in census_records(n, budget, dedupe=dedupe, start=start, stop=stop)]


def _iter_lines(
    n: int, budget: SearchBudget, dedupe: bool, jobs: int, start: int, stop: int
) -> Iterator[str]:
    if jobs <= 1:
        for rec in census_records(n, budget, dedupe=dedupe, start=start, stop=stop):
            yield record_line(rec)
        return
    span = stop - start
    chunk = max(1, -(-span // (jobs * 8)))
    tasks = [
        (n, budget, dedupe, a, min(a + chunk, stop)) for a in range(start, stop, chunk)
    ]
    with multiprocessing.Pool(processes=jobs) as pool:
        for lines in pool.imap(_line_chunk, tasks):
            yield from lines


# -- resumable streaming runs -----------------------------------------------------


def _cursor_path(out_path: str) -> str:
    return out_path + ".cursor"


def _cursor_payload(n: int, budget: SearchBudget, dedupe: bool, next_index: int) -> dict:
    return {
        "n": n,
        "depth_cap": budget.depth_cap,
        "period_cap": budget.period_cap,
        "node_cap": budget.node_cap,
        "dedupe": dedupe,
        "next_index": next_index,
    }


def _write_atomic(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _check_cursor(out_path: str, n: int, budget: SearchBudget, dedupe: bool) -> None:
    path = _cursor_path(out_path)
    if not os.path.exists(path):
        return
    with open(path, "r", encoding="utf-8") as fh:
        try:
            prior = json.load(fh)
        except json.JSONDecodeError:
            return  # stale cursor; the record scan is the source of truth
    current = _cursor_payload(n, budget, dedupe, 0)
    for key in ("n", "depth_cap", "period_cap", "node_cap", "dedupe"):
        if key in prior and prior[key] != current[key]:
            raise InputError(
                f"{out_path} was produced with {key}={prior[key]!r}; "
                f"resuming with {key}={current[key]!r} would mix incomparable records"
            )


def _scan_existing(out_path: str, n: int, totals: _Totals) -> int:
    """Count the leading run of complete, in-order records; truncate the rest.
    Returns the next index to produce."""
    good_bytes = 0
    count = 0
    with open(out_path, "rb") as fh:
        for raw in fh:
            if not raw.endswith(b"\n"):
                break  # partial tail from an interrupted write
            try:
                rec = parse_record_line(n, raw.decode("utf-8"))
            except (InputError, UnicodeDecodeError):
                break
            if rec.system_index != count:
                break
            totals.add(rec.system_index, rec.verdict)
            count += 1
            good_bytes += len(raw)
    with open(out_path, "r+b") as fh:
        fh.truncate(good_bytes)
    return count


def run_census(
    n: int,
    budget: SearchBudget,
    *,
    dedupe: bool = True,
    jobs: int = 1,
    out_path: Optional[str] = None,
    resume: bool = False,
    stop_after: Optional[int] = None,
    flush_every: int = 64,
    throttle_s: float = 0.0,
) -> Optional[CensusSummary]:
    """Classify all systems at color count n, optionally streaming to a file.

    Returns the summary, or None when stop_after paused the run early (a
    paused run has no summary; resume it to completion first).  With
    resume=True an existing output file is extended from its last complete
    record instead of being restarted.
    """
    _check_color_count(n)
    if not isinstance(jobs, int) or jobs < 1:
        raise InputError(f"jobs must be >= 1, got {jobs!r}")
    if flush_every < 1:
        raise InputError(f"flush_every must be >= 1, got {flush_every!r}")
    if throttle_s < 0:
        raise InputError(f"throttle must be >= 0, got {throttle_s!r}")
    if stop_after is not None and stop_after < 0:
        raise InputError(f"stop_after must be >= 0, got {stop_after!r}")
    if resume and out_path is None:
        raise InputError("resume needs an output path to resume from")

    total = total_systems(n)
    totals = _Totals(n)
    start = 0
    if out_path is not None:
        if resume and os.path.exists(out_path):
            _check_cursor(out_path, n, budget, dedupe)
            start = _scan_existing(out_path, n, totals)
        else:
            with open(out_path, "w", encoding="utf-8"):
                pass
            if os.path.exists(_cursor_path(out_path)):
                os.remove(_cursor_path(out_path))

    emitted = 0
    paused = False
    out = open(out_path, "a", encoding="utf-8") if out_path is not None else None
    try:
        if start < total:
            for line in _iter_lines(n, budget, dedupe, jobs, start, total):
                if stop_after is not None and emitted >= stop_after:
                    paused = True
                    break
                index = start + emitted
                rec = parse_record_line(n, line)
                totals.add(index, rec.verdict)
                if out is not None:
                    out.write(line + "\n")
                    if (emitted + 1) % flush_every == 0:
                        out.flush()
                        _write_atomic(
                            _cursor_path(out_path),
                            dump_pretty(_cursor_payload(n, budget, dedupe, index + 1)),
                        )
                emitted += 1
                if throttle_s:
                    time.sleep(throttle_s)
    finally:
        if out is not None:
            out.flush()
            out.close()
            _write_atomic(
                _cursor_path(out_path),
                dump_pretty(_cursor_payload(n, budget, dedupe, start + emitted)),
            )
    if paused:
        return None
    summary = totals.summary()
    if out_path is not None:
        _write_atomic(out_path + ".summary.json", dump_pretty(summary_to_json(summary)))
        os.remove(_cursor_path(out_path))
    return summary


def mu(n: int, budget: SearchBudget, dedupe: bool = True) -> MuEstimate:
    """Desk-scale bound on the longest-bounded-system length at color count n.

    exact = 1 + max bounded length when every system was certified one way
    or the other; otherwise only the lower bound (from the systems that
    were certified bounded) is reported.
    """
    summary = run_census(n, budget, dedupe=dedupe)
    assert summary is not None
    return MuEstimate(exact=summary.mu_exact, lower_bound=summary.mu_lower_bound)
