"""Rational points on prime quadratic twists of y^2 = (x^2-x-3)(x^2+2x-12).

Decides, for twists by d = +/-p, whether the twisted quartic can have
rational points (local solvability, root number, Selmer-pairing bits),
searches for explicit points, builds and verifies D(d)-quintuples, and
surveys verdict densities over prime sweeps.
"""

from . import errors
from .classifier import (
    Assumption,
    ClassificationRecord,
    Verdict,
    classify,
    residue_rule_not_in_T,
    theoretical_densities,
)
from .curvedata import (
    QUARTICS,
    TClass,
    TwistIndex,
    TwistedQuartic,
    d_value_polynomial,
    els_H,
    els_generator,
    get_model,
    quintuple_elements,
    root_number,
    t_class,
)
from .governing import ROWS, GoverningRow, QuadraticSurd, ct_bit, splits_completely_in_K
from .localsolve import LocalReport, Witness, is_els, solvable_at, solvable_real
from .ntheory import (
    ExactRational,
    is_prime,
    kronecker,
    kronecker_two,
    legendre,
    primes_up_to,
    rational_square_root,
    sqrt_mod,
)
from .points import DTuple, QuarticPoint, find_point, point_to_quintuple, verify_d_tuple
from .survey import SurveyAggregate, emit, survey, survey_with_records

__version__ = "0.1.0"
