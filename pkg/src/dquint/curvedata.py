"""Fixed quartic models, closed-form local solvability, root numbers, twist classes.

The central curve is the genus one quartic

    H:  y^2 = (x^2 - x - 3)(x^2 + 2x - 12) = x^4 + x^3 - 17x^2 + 6x + 36,

twisted to H^d : d*y^2 = g(x).  An alternate model H-alt,
y^2 = (x^2 + 6x - 18)(-x^2 + 2x + 2), describes the same family; the point
search supports both (see module points).  The generator quartics H1, H2
(2-coverings landing with H in the same Selmer group) and F1, F2 (their
counterparts for the twist by -1), plus H3, F3, F4, are stored with their
descent triples omega_star, whose entries multiply to a rational square.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidModel, InvalidTwist, SpecialPrime
from .ntheory import is_prime, is_squarefree, kronecker, kronecker_two, legendre

EXCLUDED_PRIMES = frozenset({2, 3, 13})


@dataclass(frozen=True)
class TwistIndex:
    """A signed prime twist d = sign * p with p outside {2, 3, 13}."""

    sign: int
    p: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidTwist(f"sign must be +1 or -1, got {self.sign}")
        if not is_prime(self.p):
            raise InvalidTwist(f"{self.p} is not prime")
        if self.p in EXCLUDED_PRIMES:
            raise SpecialPrime(f"p = {self.p} is excluded (p must avoid 2, 3, 13)")

    @classmethod
    def from_d(cls, d: int) -> "TwistIndex":
        if d == 0:
            raise InvalidTwist("d must be nonzero")
        return cls(1 if d > 0 else -1, abs(d))

    @property
    def d(self) -> int:
        return self.sign * self.p


def as_twist(d) -> TwistIndex:
    return d if isinstance(d, TwistIndex) else TwistIndex.from_d(d)


@dataclass(frozen=True)
class QuarticModel:
    """Integer quartic g(x), coefficients stored highest degree first."""

    name: str
    coefficients: tuple  # (c4, c3, c2, c1, c0)
    omega_star: tuple  # descent triple; entries multiply to a square
    selmer_home: str  # which twist family the untwisted class lives in

    def __call__(self, x):
        c4, c3, c2, c1, c0 = self.coefficients
        return (((c4 * x + c3) * x + c2) * x + c1) * x + c0

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[0]


_MODELS = (
    # y^2 = (x^2 - x - 3)(x^2 + 2x - 12)
    QuarticModel("H", (1, 1, -17, 6, 36), (13, 13, 1), "E"),
    # alternate quartic y^2 = (x^2 + 6x - 18)(-x^2 + 2x + 2), point-search fallback
    QuarticModel("H-alt", (-1, -4, 32, -24, -36), (13, 13, 1), "E"),
    QuarticModel("H1", (4, 0, -56, 0, 169), (3, 1, 3), "E"),
    QuarticModel("H2", (18, -24, -32, 40, 34), (2, -2, -1), "E"),
    QuarticModel("H3", (25, 48, -114, -144, 225), (6, -6, -1), "E^3"),
    QuarticModel("F1", (11, 12, 56, 24, 68), (-2, -2, 1), "E^-1"),
    QuarticModel("F2", (1, 0, 56, 0, 676), (-3, -1, 3), "E^-1"),
    QuarticModel("F3", (-71, -336, -538, -336, -71), (6, 2, 3), "E^-1"),
    QuarticModel("F4", (-5, 76, -168, -296, -92), (6, 6, 1), "E^-3"),
)

QUARTICS = {m.name: m for m in _MODELS}


_MODEL_ALIASES = {m.name.lower(): m for m in _MODELS}
_MODEL_ALIASES["h_alt"] = QUARTICS["H-alt"]


def get_model(name: str) -> QuarticModel:
    model = _MODEL_ALIASES.get(name.lower())
    if model is None:
        raise InvalidModel(f"unknown quartic model {name!r}")
    return model


@dataclass(frozen=True)
class TwistedQuartic:
    """The curve d*y^2 = g(x) for a stored model g and squarefree d."""

    model: QuarticModel
    d: int

    def __post_init__(self):
        if self.d == 0 or not is_squarefree(self.d):
            raise InvalidTwist(f"d = {self.d} is not a nonzero squarefree integer")


class TClass(Enum):
    TPlus = "TPlus"
    TMinus5 = "TMinus5"
    TMinus7 = "TMinus7"
    NotInT = "NotInT"


def els_H(d: int) -> bool:
    """Everywhere-local solvability of H^d: every prime q|d has (q/13) in {0,1}."""
    if d == 0:
        raise InvalidTwist("d must be nonzero")
    from .ntheory import factorize

    fac = factorize(d)
    if any(e > 1 for e in fac.values()):
        raise InvalidTwist(f"d = {d} is not squarefree")
    return all(legendre(q, 13) >= 0 for q in fac)


_GENERATOR_ELS = {
    "H1": lambda d: d % 12 == 1 or d == -3,
    "H2": lambda d: d > 0 and d % 8 == 1,
    "F1": lambda d: d > 0 and d % 8 in (1, 3),
    "F2": lambda d: d > 0 and d % 12 == 1,
}


def els_generator(name: str, d: int) -> bool:
    """Closed-form ELS test for the generator quartics H1, H2, F1, F2."""
    if name not in _GENERATOR_ELS:
        raise InvalidModel(f"no closed-form ELS rule for model {name!r}")
    if not is_prime(abs(d)):
        raise InvalidTwist(f"|d| = {abs(d)} must be prime")
    return _GENERATOR_ELS[name](d)


def root_number(d) -> int:
    """Sign of the functional equation of E^d, determined by |d| = p alone.

    w = -1 exactly when (p/2)*(p/3)*(p/13) = 1, where (p/2) is +1 for
    p = 1,7 (mod 8) and -1 for p = 3,5 (mod 8).
    """
    ti = as_twist(d)
    p = ti.p
    prod = kronecker_two(p) * legendre(p, 3) * legendre(p, 13)
    return -1 if prod == 1 else 1


def t_class(d) -> TClass:
    """Congruence class of d inside the 5-dimensional-Selmer locus T, or NotInT."""
    ti = as_twist(d)
    dd = ti.d
    if kronecker(dd, 13) != 1:
        return TClass.NotInT
    k2, k3 = kronecker_two(dd), kronecker(dd, 3)
    m8 = dd % 8
    if dd > 0:
        if k3 == 1 and m8 == 1:
            return TClass.TPlus
    elif k2 * k3 == -1:
        if m8 == 5:
            return TClass.TMinus5
        if m8 == 7:
            return TClass.TMinus7
    return TClass.NotInT


def quintuple_elements(x) -> tuple:
    """The five polynomial tuple entries evaluated at x, before scaling.

    Each pairwise product plus d_value_polynomial(x) is a perfect square,
    which is what makes the scaled tuple a D(d)-quintuple.
    """
    x = Fraction(x)
    x2 = x * x
    third = Fraction(1, 3)
    return (
        third * (x2 + 6 * x - 18) * (-x2 + 2 * x + 2),
        third * x2 * (x + 5) * (3 - x),
        (x - 2) * (5 * x + 6),
        third * (x2 + 4 * x - 6) * (-x2 + 4 * x + 6),
        4 * x2,
    )


def d_value_polynomial(x) -> Fraction:
    """(16/9) * x^2 * (x^2 - x - 3) * (x^2 + 2x - 12), the tuple's D-value."""
    x = Fraction(x)
    x2 = x * x
    return Fraction(16, 9) * x2 * (x2 - x - 3) * (x2 + 2 * x - 12)
