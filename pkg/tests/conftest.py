import time

import pytest

from dquint.curvedata import QUARTICS, TwistedQuartic
from dquint.governing import ROWS, ct_bit, is_applicable
from dquint.ntheory import primes_up_to
from dquint.points import find_point
from dquint.survey import survey


@pytest.fixture(scope="session")
def survey_1m():
    """Aggregate over both signs of every admissible prime up to 10^6."""
    start = time.monotonic()
    agg = survey(10**6)
    return agg, time.monotonic() - start


@pytest.fixture(scope="session")
def row_stats_1m():
    """Per-row (applicable, bit-zero) counts over primes up to 10^6."""
    primes = [p for p in primes_up_to(10**6) if p not in (2, 3, 13)]
    stats = {}
    for name, row in ROWS.items():
        applicable = 0
        zero = 0
        for p in primes:
            if is_applicable(row, p):
                applicable += 1
                if ct_bit(row, p) == 0:
                    zero += 1
        stats[name] = (applicable, zero)
    return len(primes), stats


@pytest.fixture(scope="session")
def point_search_313():
    """First point found on H^-313 up to height 2200, with elapsed seconds."""
    q = TwistedQuartic(QUARTICS["H"], -313)
    start = time.monotonic()
    pt = find_point(q, 2200)
    return pt, time.monotonic() - start
