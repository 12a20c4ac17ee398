"""Prime-sweep orchestration, density aggregation, and record serialization.

The survey classifies both signs of every prime p <= X with p outside
{2, 3, 13}; the excluded primes are reported in the summary and removed
from the ratio denominator 2 * pi(X).  Ratios stay exact Fractions until
serialization.  Classification is embarrassingly parallel; merging adds
counters, and records are ordered by |d| then sign, so output is identical
for any worker count.
"""

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .classifier import ClassificationRecord, Verdict, classify, theoretical_densities
from .curvedata import EXCLUDED_PRIMES, TClass
from .errors import InvalidArgument, UsageError
from .ntheory import primes_up_to


@dataclass
class SurveyAggregate:
    X: int
    pi_X: int
    admissible_primes: int
    excluded: tuple
    counts: dict  # Verdict -> int
    ratios: dict  # Verdict -> Fraction, denominator 2 * admissible_primes
    t_breakdown: dict  # (TClass, Verdict) -> int


def _classify_batch(primes):
    counts = {v: 0 for v in Verdict}
    breakdown = {}
    records = []
    for p in primes:
        for sign in (-1, 1):
            rec = classify(sign * p)
            counts[rec.verdict] += 1
            key = (rec.t_class, rec.verdict)
            breakdown[key] = breakdown.get(key, 0) + 1
            records.append(rec)
    return counts, breakdown, records


def _merge(into, part):
    counts, breakdown, records = into
    c2, b2, r2 = part
    for k, v in c2.items():
        counts[k] = counts.get(k, 0) + v
    for k, v in b2.items():
        breakdown[k] = breakdown.get(k, 0) + v
    records.extend(r2)
    return into


def survey_with_records(X: int, jobs: int = 1):
    """Classify d = +/-p for all admissible p <= X; returns (aggregate, records)."""
    if X < 5:
        raise InvalidArgument("survey needs X >= 5")
    primes = primes_up_to(X)
    admissible = [p for p in primes if p not in EXCLUDED_PRIMES]
    total = ({v: 0 for v in Verdict}, {}, [])
    if jobs <= 1 or len(admissible) < 64:
        total = _merge(total, _classify_batch(admissible))
    else:
        size = max(1, len(admissible) // (jobs * 8))
        chunks = [admissible[i : i + size] for i in range(0, len(admissible), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_classify_batch, chunks):
                total = _merge(total, part)
    counts, breakdown, records = total
    records.sort(key=lambda r: (r.d.p, r.d.sign))
    denom = 2 * len(admissible)
    agg = SurveyAggregate(
        X=X,
        pi_X=len(primes),
        admissible_primes=len(admissible),
        excluded=tuple(p for p in primes if p in EXCLUDED_PRIMES),
        counts=counts,
        ratios={v: Fraction(n, denom) for v, n in counts.items()},
        t_breakdown=breakdown,
    )
    return agg, records


def survey(X: int, jobs: int = 1) -> SurveyAggregate:
    return survey_with_records(X, jobs)[0]


# --- serialization ---


def _fraction_fields(value: Fraction):
    return {"exact": f"{value.numerator}/{value.denominator}", "approx": float(f"{float(value):.6g}")}


def over_256(value: Fraction) -> str:
    """Render a density with the conventional denominator 256."""
    k = 256 // value.denominator
    return f"{value.numerator * k}/256"


def record_to_dict(rec: ClassificationRecord) -> dict:
    return {
        "d": rec.d.d,
        "els": rec.els,
        "root_number": rec.root_number,
        "t_class": rec.t_class.value,
        "bits": dict(rec.pairing_bits),
        "verdict": rec.verdict.value,
        "assumptions": sorted(a.value for a in rec.assumptions),
        "selmer_dim": rec.selmer_dim,
    }


def aggregate_to_dict(agg: SurveyAggregate) -> dict:
    densities = theoretical_densities()
    breakdown = {}
    for tc in TClass:
        row = {
            v.value: agg.t_breakdown.get((tc, v), 0)
            for v in Verdict
            if agg.t_breakdown.get((tc, v), 0)
        }
        if row:
            breakdown[tc.value] = row
    return {
        "X": agg.X,
        "pi_X": agg.pi_X,
        "admissible_primes": agg.admissible_primes,
        "excluded_primes": list(agg.excluded),
        "sample_size": 2 * agg.admissible_primes,
        "counts": {v.value: agg.counts.get(v, 0) for v in Verdict},
        "ratios": {v.value: _fraction_fields(agg.ratios[v]) for v in Verdict},
        "t_breakdown": breakdown,
        "C1": over_256(densities["C1"]),
        "C2": over_256(densities["C2"]),
    }


def _record_row(rec: ClassificationRecord):
    bits = ";".join(f"{k}={v}" for k, v in rec.pairing_bits.items())
    assumptions = ";".join(sorted(a.value for a in rec.assumptions))
    return [
        str(rec.d.d),
        "true" if rec.els else "false",
        str(rec.root_number),
        rec.t_class.value,
        bits,
        rec.verdict.value,
        assumptions,
    ]


CSV_HEADER = ["d", "els", "root_number", "t_class", "bits", "verdict", "assumptions"]


def emit(payload, fmt: str = "json") -> str:
    """Serialize records, an aggregate, or an (aggregate, records) pair."""
    if isinstance(payload, SurveyAggregate):
        agg, records = payload, None
    elif isinstance(payload, tuple):
        agg, records = payload
    else:
        agg, records = None, list(payload)

    if fmt == "json":
        doc = {}
        if records is not None:
            doc["records"] = [record_to_dict(r) for r in records]
        if agg is not None:
            doc["summary"] = aggregate_to_dict(agg)
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records or ():
            writer.writerow(_record_row(rec))
        return buf.getvalue()
    raise UsageError(f"unknown output format {fmt!r}")
