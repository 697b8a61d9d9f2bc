"""Curve-family surveys: enumerate equations, run the pipeline per curve,
persist JSONL records, and aggregate verdict fractions.

Persistence is append-only JSONL with a config fingerprint header, so an
interrupted run resumes by scanning keys already present (a partial trailing
line from a kill mid-write is truncated).  Output order is enumeration
order even under worker-pool parallelism, keeping files byte-identical
across runs up to the timing field.

Surveys count equations, not isomorphism classes; summaries carry that bias
note and label results as empirical fractions.
"""

from __future__ import annotations

import itertools
import json
import sys
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import gf
from .curves import (
    counts_up_to_genus,
    curve_from_text,
    curve_to_text,
    validate_curve,
)
from .errors import (
    BadDegrees,
    CorruptRecord,
    FrobtorusError,
    ParseError,
    ResumeMismatch,
    Singular,
)
from .simplicity import (
    ABSOLUTELY_SIMPLE,
    INCONCLUSIVE,
    NOT_ABSOLUTELY_SIMPLE,
    NOT_SIMPLE,
    classify,
    verdict_from_json,
    verdict_to_json,
    verify_verdict,
)
from .zeta import is_weil, weil_from_counts, weil_from_json, weil_to_json
from .curves import PointCounts

FORMAT = "frobtorus-survey-v1"
KIND_ORDER = (ABSOLUTELY_SIMPLE, NOT_SIMPLE, NOT_ABSOLUTELY_SIMPLE, INCONCLUSIVE)
BIAS_NOTE = "empirical fraction over equations, not isomorphism classes"


@dataclass(frozen=True)
class SurveyConfig:
    p: int
    genus: int
    degree: int
    limit: int | None = None
    mode: str = "full"  # "full" or "find"
    find_count: int | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.genus < 1:
            raise BadDegrees(f"genus must be >= 1, got {self.genus}")
        if self.degree not in (2 * self.genus + 1, 2 * self.genus + 2):
            raise BadDegrees(
                f"deg f = {self.degree} incompatible with genus {self.genus}"
            )
        if self.mode not in ("full", "find"):
            raise ValueError(f"unknown survey mode {self.mode!r}")
        if self.mode == "find" and (self.find_count is None or self.find_count < 1):
            raise ValueError("find mode needs a positive find_count")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive when given")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        gf.field_create(self.p, 1)  # NonPrime up front
        # largest extensions touched: counting needs p^genus, and char-2
        # validation enumerates roots of h over p^(deg h) with deg h <= g+1
        gf.field_create(self.p, self.genus)
        if self.p == 2:
            gf.field_create(2, self.genus + 1)


def enumerate_equations(cfg: SurveyConfig):
    """(h, f) integer coefficient tuples in lexicographic order, low-to-high.

    Odd p fixes h = 0; p = 2 walks nonzero h of degree <= g+1 in the outer
    loop.  f is monic of exactly the configured degree.
    """
    rng = range(cfg.p)
    if cfg.p != 2:
        for lows in itertools.product(rng, repeat=cfg.degree):
            yield (), lows + (1,)
    else:
        for hv in itertools.product(rng, repeat=cfg.genus + 2):
            if not any(hv):
                continue
            for lows in itertools.product(rng, repeat=cfg.degree):
                yield hv, lows + (1,)


def equation_text(p: int, h_ints, f_ints) -> str:
    """Curve key for prime-field equations; matches curve_to_text output."""
    h = list(h_ints)
    while h and h[-1] == 0:
        h.pop()
    return "{}; h={}; f={}".format(
        p, ",".join(map(str, h)), ",".join(map(str, f_ints))
    )


def curve_record(C) -> dict:
    """Run counts -> Weil polynomial -> verdict on a validated curve."""
    t0 = time.perf_counter()
    counts = counts_up_to_genus(C)
    t1 = time.perf_counter()
    P = weil_from_counts(counts)
    t2 = time.perf_counter()
    v = classify(P)
    t3 = time.perf_counter()
    return {
        "curve": curve_to_text(C),
        "counts": {"q": counts.q, "g": counts.g, "counts": list(counts.counts)},
        "weil": weil_to_json(P),
        "verdict": verdict_to_json(v),
        "timing": {
            "count_s": t1 - t0,
            "zeta_s": t2 - t1,
            "classify_s": t3 - t2,
        },
    }


def _analyze_equation(args) -> tuple[str, dict | None]:
    p, genus, h_ints, f_ints = args
    base = gf.field_create(p, 1)
    h = [gf.scalar(base, c) for c in h_ints]
    f = [gf.scalar(base, c) for c in f_ints]
    key = equation_text(p, h_ints, f_ints)
    try:
        C = validate_curve(base, h, f, genus)
    except Singular:
        return key, None
    return key, curve_record(C)


def _scan_existing(path: str, cfg: SurveyConfig):
    """Read an existing survey file for resume.

    Returns (keys, kind_counts, valid, keep_bytes) where keep_bytes is the
    prefix length to retain (a partial trailing line is dropped).
    """
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except FileNotFoundError:
        return set(), dict.fromkeys(KIND_ORDER, 0), 0, None
    if not data:
        return set(), dict.fromkeys(KIND_ORDER, 0), 0, None
    keys: set[str] = set()
    kinds = dict.fromkeys(KIND_ORDER, 0)
    valid = 0
    offset = 0
    lineno = 0
    keep = 0
    header_seen = False
    while offset < len(data):
        nl = data.find(b"\n", offset)
        if nl < 0:
            break  # partial trailing line: drop it
        line = data[offset:nl]
        lineno += 1
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            if data.find(b"\n", nl + 1) < 0:
                break  # half-written final line that still got its newline
            raise CorruptRecord(
                f"unreadable record at line {lineno}", line=lineno
            ) from None
        if not header_seen:
            header_seen = True
            if (
                not isinstance(obj, dict)
                or obj.get("format") != FORMAT
                or obj.get("p") != cfg.p
                or obj.get("genus") != cfg.genus
                or obj.get("degree") != cfg.degree
            ):
                raise ResumeMismatch(
                    f"existing file {path} holds a different survey "
                    f"(header {obj!r})"
                )
        else:
            if not isinstance(obj, dict) or "curve" not in obj:
                raise CorruptRecord(f"record at line {lineno} has no curve key",
                                    line=lineno)
            keys.add(obj["curve"])
            kind = obj.get("verdict", {}).get("kind")
            if kind in kinds:
                kinds[kind] += 1
            valid += 1
        offset = nl + 1
        keep = offset
    return keys, kinds, valid, keep


def _result_stream(cfg: SurveyConfig, skip_keys: set[str]):
    """Yield ('skip', key, None) or ('new', key, record|None) in enumeration
    order, analyzing concurrently when cfg.jobs > 1."""
    tasks = (
        (cfg.p, cfg.genus, hv, fv)
        for hv, fv in enumerate_equations(cfg)
    )
    if cfg.jobs == 1:
        for args in tasks:
            key = equation_text(cfg.p, args[2], args[3])
            if key in skip_keys:
                yield "skip", key, None
            else:
                yield ("new",) + _analyze_equation(args)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        window = cfg.jobs * 4
        pending: deque = deque()
        task_iter = iter(tasks)
        while True:
            while len(pending) < window:
                args = next(task_iter, None)
                if args is None:
                    break
                key = equation_text(cfg.p, args[2], args[3])
                if key in skip_keys:
                    pending.append(("skip", key, None))
                else:
                    pending.append(("fut", key, pool.submit(_analyze_equation, args)))
            if not pending:
                return
            tag, key, payload = pending.popleft()
            if tag == "skip":
                yield "skip", key, None
            else:
                yield ("new",) + payload.result()


def run_survey(cfg: SurveyConfig, out_path: str | None = None, stream=None) -> dict:
    """Full-enumeration survey; returns the summary dict.

    Records go to out_path (resumable JSONL) or to the stream (default
    stdout) when no path is given.
    """
    t_start = time.perf_counter()
    keys: set[str] = set()
    kinds = dict.fromkeys(KIND_ORDER, 0)
    valid = 0
    fh = None
    if out_path is not None:
        keys, kinds, valid, keep = _scan_existing(out_path, cfg)
        if keep is None or keep == 0:
            fh = open(out_path, "w", encoding="utf-8")
            fh.write(_header_line(cfg))
            fh.flush()
        else:
            fh = open(out_path, "r+", encoding="utf-8")
            fh.truncate(keep)
            fh.seek(0, 2)
    else:
        fh = stream if stream is not None else sys.stdout
        fh.write(_header_line(cfg))
    enumerated = 0
    singular = 0
    try:
        for tag, key, record in _result_stream(cfg, keys):
            enumerated += 1
            if tag == "skip":
                continue
            if record is None:
                singular += 1
                continue
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")
            fh.flush()
            valid += 1
            kinds[record["verdict"]["kind"]] += 1
            if cfg.limit is not None and valid >= cfg.limit:
                break
    finally:
        if out_path is not None and fh is not None:
            fh.close()
    elapsed = time.perf_counter() - t_start
    return _summary(cfg, enumerated, valid, singular, kinds, elapsed)


def _header_line(cfg: SurveyConfig) -> str:
    head = {"format": FORMAT, "p": cfg.p, "genus": cfg.genus, "degree": cfg.degree}
    return json.dumps(head, separators=(",", ":")) + "\n"


def _summary(cfg, enumerated, valid, singular, kinds, elapsed) -> dict:
    frac = kinds[ABSOLUTELY_SIMPLE] / valid if valid else 0.0
    return {
        "format": FORMAT,
        "config": {
            "p": cfg.p,
            "genus": cfg.genus,
            "degree": cfg.degree,
            "limit": cfg.limit,
        },
        "enumerated": enumerated,
        "valid": valid,
        "singular_skipped": singular,
        "by_kind": {k: kinds[k] for k in KIND_ORDER},
        "absolutely_simple_fraction": frac,
        "note": BIAS_NOTE,
        "elapsed_s": elapsed,
    }


def run_find(cfg: SurveyConfig, stream=None) -> int:
    """Stream records of absolutely simple curves until find_count is hit.

    Returns how many were found (may fall short if the family is exhausted).
    """
    fh = stream if stream is not None else sys.stdout
    found = 0
    for tag, key, record in _result_stream(cfg, set()):
        if record is None:
            continue
        if record["verdict"]["kind"] == ABSOLUTELY_SIMPLE:
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")
            found += 1
            if found >= cfg.find_count:
                break
    return found


def analyze_one(curve_text: str | None = None, weil_json=None) -> dict:
    """Single-input pipeline: a curve text, or a Weil polynomial JSON
    (object or string) to skip counting."""
    if (curve_text is None) == (weil_json is None):
        raise ValueError("provide exactly one of curve_text and weil_json")
    if curve_text is not None:
        C = curve_from_text(curve_text)
        return curve_record(C)
    if isinstance(weil_json, str):
        try:
            weil_json = json.loads(weil_json)
        except json.JSONDecodeError as bad:
            raise ParseError(f"bad Weil polynomial JSON: {bad}") from None
    P = weil_from_json(weil_json)
    t0 = time.perf_counter()
    v = classify(P)
    t1 = time.perf_counter()
    check = is_weil(P)
    return {
        "weil": weil_to_json(P),
        "verdict": verdict_to_json(v),
        "weil_check": {"ok": check.ok, "max_rel_error": check.max_rel_error},
        "timing": {"classify_s": t1 - t0},
    }


def report(path: str) -> dict:
    """Re-verify every record in a survey file and aggregate.

    Raises CorruptRecord (with the offending line number) when a record is
    unreadable or fails its self-verification replay.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    kinds = dict.fromkeys(KIND_ORDER, 0)
    records = 0
    first_content = True
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError:
            raise CorruptRecord(f"line {lineno} is not JSON", line=lineno) from None
        if first_content and isinstance(obj, dict) and "format" in obj:
            first_content = False
            if obj["format"] != FORMAT:
                raise CorruptRecord(f"unknown format {obj['format']!r}", line=lineno)
            continue
        first_content = False
        try:
            _verify_record(obj)
        except FrobtorusError as bad:
            raise CorruptRecord(
                f"record at line {lineno} fails verification: {bad}", line=lineno
            ) from None
        records += 1
        kinds[obj["verdict"]["kind"]] += 1
    frac = kinds[ABSOLUTELY_SIMPLE] / records if records else 0.0
    return {
        "records": records,
        "by_kind": {k: kinds[k] for k in KIND_ORDER},
        "absolutely_simple_fraction": frac,
        "verified": True,
        "note": BIAS_NOTE,
    }


def _verify_record(obj) -> None:
    if not isinstance(obj, dict):
        raise CorruptRecord("record is not an object")
    for fieldname in ("curve", "counts", "weil", "verdict", "timing"):
        if fieldname not in obj:
            raise CorruptRecord(f"record is missing {fieldname!r}")
    c = obj["counts"]
    try:
        counts = PointCounts(q=c["q"], g=c["g"], counts=tuple(c["counts"]))
    except (KeyError, TypeError):
        raise CorruptRecord("malformed counts") from None
    P = weil_from_counts(counts)
    stored = weil_from_json(obj["weil"])
    if stored != P:
        raise CorruptRecord("stored Weil polynomial does not match its counts")
    v = verdict_from_json(obj["verdict"])
    if not verify_verdict(P, v):
        raise CorruptRecord("verdict certificate does not replay")
