"""Per-twist verdict logic.

For d = sign * p the decision runs: local solvability first (unconditional),
then the root number (conditional on the rank-distribution and parity
conjectures), then, inside the 5-dimensional Selmer locus T, the pairing
bits from the governing module.  A nonzero bit against the distinguished
class proves a Sha obstruction; all-zero bits leave the method undecided.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .curvedata import TClass, TwistIndex, as_twist, els_H, root_number, t_class
from .governing import ROWS, ct_bit


class Verdict(Enum):
    EmptyLocal = "EmptyLocal"
    EmptyShaObstruction = "EmptyShaObstruction"
    EmptyRankZeroExpected = "EmptyRankZeroExpected"
    PointsExpected = "PointsExpected"
    Undecided = "Undecided"


class Assumption(Enum):
    """Named conjectures a verdict may depend on.

    Conjecture1: 100% of prime quadratic twists in the family have rank 0
    or 1.  Conjecture2: the parity conjecture, (-1)^rank = root number.
    """

    Conjecture1 = "Conjecture1"
    Conjecture2 = "Conjecture2"


# rows whose applicability is guaranteed by membership in each T-class
_ROWS_FOR_CLASS = {
    TClass.TPlus: ("H_H1", "H_H2", "H1_H2"),
    TClass.TMinus5: ("Hneg_F1",),
    TClass.TMinus7: ("Hneg_F1", "Hneg_F2", "F1_F2"),
    TClass.NotInT: (),
}


@dataclass
class ClassificationRecord:
    d: TwistIndex
    els: bool
    root_number: int
    t_class: TClass
    pairing_bits: dict = field(default_factory=dict)
    verdict: Verdict = Verdict.Undecided
    assumptions: frozenset = frozenset()
    selmer_dim: int = None
    notes: str = ""


def classify(d) -> ClassificationRecord:
    """Full record for the twist by d = +/-p (p outside {2, 3, 13})."""
    ti = as_twist(d)
    els = els_H(ti.d)
    w = root_number(ti)
    tc = t_class(ti)
    bits = {name: ct_bit(ROWS[name], ti.p) for name in _ROWS_FOR_CLASS[tc]}
    rec = ClassificationRecord(ti, els, w, tc, bits)

    if not els:
        # unconditional: an obstruction already at some completion
        rec.verdict = Verdict.EmptyLocal
        return rec

    if w == 1:
        rec.verdict = Verdict.EmptyRankZeroExpected
        rec.assumptions = frozenset({Assumption.Conjecture1, Assumption.Conjecture2})
        return rec

    rec.assumptions = frozenset({Assumption.Conjecture2})
    if tc is TClass.NotInT:
        rec.verdict = Verdict.PointsExpected
        rec.selmer_dim = 3
        return rec

    rec.selmer_dim = 5
    if tc is TClass.TMinus5:
        # (-1/p) = -1 for these p, so the bit against F1 is always 1
        assert bits["Hneg_F1"] == 1
        rec.verdict = Verdict.EmptyShaObstruction
    elif tc is TClass.TMinus7:
        if bits["Hneg_F2"] == 1:
            rec.verdict = Verdict.EmptyShaObstruction
        elif bits["F1_F2"] == 1:
            rec.verdict = Verdict.PointsExpected
        else:
            rec.verdict = Verdict.Undecided
    else:  # TPlus
        if bits["H_H1"] == 1 or bits["H_H2"] == 1:
            rec.verdict = Verdict.EmptyShaObstruction
        elif bits["H1_H2"] == 1:
            rec.verdict = Verdict.PointsExpected
        else:
            rec.verdict = Verdict.Undecided

    if rec.verdict is Verdict.Undecided:
        rec.notes = "method cannot decide: all pairing bits vanish"
    elif rec.verdict is Verdict.EmptyShaObstruction:
        rec.notes = "nonzero pairing bit forces a visible 2-torsion obstruction"
    return rec


# residue classes mod 312 = 8*3*13 of the twists outside T that are locally
# solvable with root number -1 (hence expected global points), by sign of d
RESIDUES_MOD_312_POSITIVE = frozenset(
    {29, 35, 53, 55, 77, 79, 101, 103, 107, 127, 131, 155, 173, 179, 199, 251, 269, 295}
)
RESIDUES_MOD_312_NEGATIVE = frozenset(
    {17, 43, 113, 139, 185, 209, 211, 233, 235, 257, 259, 283}
)


def residue_rule_not_in_T(d) -> bool:
    """Congruence shortcut for the NotInT points-expected locus."""
    ti = as_twist(d)
    r = ti.d % 312
    if ti.d > 0:
        return r in RESIDUES_MOD_312_POSITIVE
    return r in RESIDUES_MOD_312_NEGATIVE


def theoretical_densities() -> dict:
    """Limiting verdict densities over the sample of both signs of all primes."""
    return {
        "C1": Fraction(43, 256),
        "C2": Fraction(46, 256),
        "undecided": Fraction(3, 256),
        "notT_points": Fraction(5, 32),
        "TPlus_points": Fraction(1, 256),
        "TMinus7_points": Fraction(1, 128),
        "TPlus_undecided": Fraction(1, 256),
        "TMinus7_undecided": Fraction(1, 128),
    }
