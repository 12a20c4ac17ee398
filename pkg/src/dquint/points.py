"""Bounded-height rational point search and exact D(d)-tuple construction.

Heights are measured by max(|numerator|, denominator) of x in lowest terms.
The search order is deterministic: increasing height h, ties broken by
smaller denominator, then smaller numerator, so the first point found is
reproducible.  All arithmetic is exact; the only filter before the integer
square-root test is a sign check.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .curvedata import QUARTICS, TwistedQuartic, quintuple_elements
from .errors import DegenerateScaling, DegenerateTuple, InvalidArgument
from .ntheory import rational_square_root


@dataclass(frozen=True)
class QuarticPoint:
    x: Fraction = None
    y: Fraction = None
    at_infinity: bool = False


@dataclass(frozen=True)
class TupleReport:
    ok: bool
    failing: tuple = None  # indices of the offending entry or pair
    reason: str = ""


def _int_square(t: int) -> bool:
    return t >= 0 and isqrt(t) * isqrt(t) == t


def find_point(q: TwistedQuartic, height_bound: int) -> QuarticPoint:
    """First point on d*y^2 = g(x) in canonical order, or None.

    The points at infinity are checked first; they exist exactly when
    d * lc(g) is a rational square.  Affine candidates x = a/b run over
    lowest-terms fractions with max(|a|, b) <= height_bound.
    """
    if height_bound < 1:
        raise InvalidArgument("height_bound must be >= 1")
    d = q.d
    c4, c3, c2, c1, c0 = q.model.coefficients
    if _int_square(d * c4):
        return QuarticPoint(at_infinity=True)

    def hit(a, b, value):
        t = d * value
        if not _int_square(t):
            return None
        x = Fraction(a, b)
        y = Fraction(isqrt(t), abs(d) * b * b)
        assert d * y * y == q.model(x)
        return QuarticPoint(x, y)

    for h in range(1, height_bound + 1):
        h2 = h * h
        h3 = h2 * h
        h4 = h2 * h2
        # b < h, a = -h then +h (only |a| = h reaches height h here)
        neg = (c0, -c1 * h, c2 * h2, -c3 * h3, c4 * h4)
        pos = (c0, c1 * h, c2 * h2, c3 * h3, c4 * h4)
        for b in range(1, h):
            if gcd(h, b) != 1:
                continue
            for a, (k0, k1, k2, k3, k4) in ((-h, neg), (h, pos)):
                val = (((k0 * b + k1) * b + k2) * b + k3) * b + k4
                pt = hit(a, b, val)
                if pt is not None:
                    return pt
        # b = h, |a| <= h (a = +/-h only in lowest terms when h = 1)
        k3, k2, k1, k0 = c3 * h, c2 * h2, c1 * h3, c0 * h4
        for a in range(-h, h + 1):
            if gcd(abs(a), h) != 1:
                continue
            val = (((c4 * a + k3) * a + k2) * a + k1) * a + k0
            pt = hit(a, h, val)
            if pt is not None:
                return pt
    return None


def _pairwise_report(elements, d) -> TupleReport:
    els = [Fraction(e) for e in elements]
    n = len(els)
    for i in range(n):
        for j in range(i + 1, n):
            if els[i] == els[j]:
                return TupleReport(False, (i, j), f"elements {i} and {j} coincide")
    for i, e in enumerate(els):
        if e == 0:
            return TupleReport(False, (i,), f"element {i} is zero")
    for i in range(n):
        for j in range(i + 1, n):
            if rational_square_root(els[i] * els[j] + d) is None:
                return TupleReport(
                    False, (i, j), f"{els[i]} * {els[j]} + {d} is not a square"
                )
    return TupleReport(True)


def verify_d_tuple(elements, d: int) -> TupleReport:
    """Exact check of the D(d) property; failures are reported, not raised."""
    return _pairwise_report(elements, d)


@dataclass(frozen=True)
class DTuple:
    """Distinct nonzero rationals whose pairwise products plus d are squares."""

    elements: tuple
    d: int

    def __post_init__(self):
        report = _pairwise_report(self.elements, self.d)
        if not report.ok:
            raise DegenerateTuple(report.reason)


def point_to_quintuple(pt: QuarticPoint, d: int) -> DTuple:
    """Scale the polynomial quintuple at x by u = (4/3)xy into a D(d)-quintuple.

    The output is normalized so that its final entry (the image of 4x^2) is
    positive; the two square roots y and -y thus give the same tuple.
    """
    if pt.at_infinity:
        raise InvalidArgument("quintuple construction needs an affine point")
    x, y = Fraction(pt.x), Fraction(pt.y)
    if x == 0 or y == 0:
        raise DegenerateScaling("scaling factor (4/3)xy vanishes")
    if d * y * y != QUARTICS["H"](x):
        raise InvalidArgument(f"({x}, {y}) does not lie on the twist of H by {d}")
    u = Fraction(4, 3) * x * y
    elements = tuple(e / u for e in quintuple_elements(x))
    if elements[-1] < 0:
        elements = tuple(-e for e in elements)
    return DTuple(elements, d)
