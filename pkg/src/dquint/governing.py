"""Prime-splitting tests that evaluate the pairing bit of twisted class pairs.

Each row pairs two quartic classes (A, B) with a multiquadratic base field K
(given by its radicand generators) and a surd alpha; the pairing bit of the
twisted pair at an applicable prime p is 0 exactly when p splits completely
in K(sqrt(alpha)).  Applicability means p splits completely in K itself
(plus p = 1 mod 4 where flagged); on that locus the norm of alpha is forced
to be a square mod p, so the bit does not depend on the choice of square
root of the radicand, which is asserted on every evaluation.
"""

from dataclasses import dataclass

from .errors import NotApplicable, RamifiedPrime
from .ntheory import is_prime, kronecker, sqrt_mod


@dataclass(frozen=True)
class QuadraticSurd:
    """alpha = a + b*sqrt(m) with m squarefree, m > 1; b = 0 makes it rational."""

    a: int
    b: int
    m: int

    @property
    def norm(self) -> int:
        return self.a * self.a - self.b * self.b * self.m


@dataclass(frozen=True)
class GoverningRow:
    pair_id: str
    k_generators: tuple
    alpha: object  # QuadraticSurd or plain integer
    requires_1mod4: bool
    notes: str


ROWS = {
    row.pair_id: row
    for row in (
        GoverningRow(
            "H_H1",
            (3, 13),
            QuadraticSurd(4, 1, 13),
            True,
            "pairing of H^d with H1^d, d = p > 0",
        ),
        GoverningRow(
            "H_H2",
            (-1, 2, 13),
            QuadraticSurd(4, 2, 13),
            False,
            "pairing of H^d with H2^d, d = p > 0",
        ),
        GoverningRow(
            "Hneg_F1",
            (-2, 13),
            -1,
            False,
            "pairing of H^-d with F1^d, d = p > 0",
        ),
        GoverningRow(
            "Hneg_F2",
            (13, -1, -3),
            # 48 + 12*sqrt(13) is the expansion of 3*(1+sqrt(13))*(3+sqrt(13))
            QuadraticSurd(48, 12, 13),
            False,
            "pairing of H^-d with F2^d, d = p > 0",
        ),
        GoverningRow(
            "H1_H2",
            (3, -1, 2),
            # 80 + 48*sqrt(3) is the expansion of 8*(1+sqrt(3))*(4+2*sqrt(3))
            QuadraticSurd(80, 48, 3),
            False,
            "pairing of H1^d with H2^d, d = p > 0",
        ),
        GoverningRow(
            "F1_F2",
            (3, -1, 2),
            QuadraticSurd(80, 48, 3),
            False,
            "pairing of F1^d with F2^d, d = p > 0; same field as H1_H2",
        ),
    )
}


def splits_completely_in_K(p: int, generators) -> bool:
    """Whether p splits completely in Q(sqrt(g) for g in generators)."""
    for g in generators:
        if g % p == 0:
            raise RamifiedPrime(f"{p} divides generator {g}")
    return all(kronecker(g, p) == 1 for g in generators)


def is_applicable(row: GoverningRow, p: int) -> bool:
    """Whether the row's splitting test is defined at p."""
    if p == 2 or not is_prime(p):
        return False
    norm = row.alpha if isinstance(row.alpha, int) else row.alpha.norm
    if (2 * 3 * 13 * norm) % p == 0:
        return False
    if row.requires_1mod4 and p % 4 != 1:
        return False
    return splits_completely_in_K(p, row.k_generators)


def ct_bit(row: GoverningRow, p: int) -> int:
    """Pairing bit at p: 0 iff p splits completely in K(sqrt(alpha))."""
    if not is_applicable(row, p):
        raise NotApplicable(f"row {row.pair_id} is not applicable at p = {p}")
    alpha = row.alpha
    if isinstance(alpha, int):
        return 0 if kronecker(alpha, p) == 1 else 1
    s = sqrt_mod(alpha.m, p)
    u_plus = (alpha.a + alpha.b * s) % p
    u_minus = (alpha.a - alpha.b * s) % p
    if u_plus == 0 or u_minus == 0:
        raise RamifiedPrime(f"{p} divides a conjugate of alpha in row {row.pair_id}")
    k_plus = kronecker(u_plus, p)
    # u_plus * u_minus = norm(alpha) is a square mod p on the applicability
    # locus, so the two conjugates give the same answer.
    assert k_plus == kronecker(u_minus, p), (row.pair_id, p)
    return 0 if k_plus == 1 else 1
