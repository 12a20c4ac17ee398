import random

import pytest

from dquint.curvedata import QUARTICS, TwistedQuartic, els_H, els_generator
from dquint.localsolve import (
    Witness,
    is_els,
    is_square_qp,
    quartic_disc,
    solvable_at,
    solvable_real,
)
from dquint.ntheory import is_prime, legendre, primes_up_to, valuation

H = QUARTICS["H"]

SMALL_TWISTS = [1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 13, -13, 15, -15, 21, -21, 35, -35]


def test_quartic_disc():
    # disc of (x^2-x-3)(x^2+2x-12) from the factor formula:
    # disc(f1)*disc(f2)*Res(f1,f2)^2 = 13 * 52 * 27^2
    assert quartic_disc(1, 1, -17, 6, 36) == 492804
    # degree-6 homogeneity in the coefficients
    rng = random.Random(5)
    for _ in range(20):
        coeffs = [rng.randint(-9, 9) for _ in range(5)]
        lam = rng.randint(1, 5)
        scaled = [lam * c for c in coeffs]
        assert quartic_disc(*scaled) == lam**6 * quartic_disc(*coeffs)
    for model in QUARTICS.values():
        assert quartic_disc(*model.coefficients) != 0


def test_is_square_qp():
    assert is_square_qp(0, 5)
    assert is_square_qp(4, 5)
    assert is_square_qp(-1, 5)  # (-1/5) = 1
    assert not is_square_qp(50, 2)  # valuation 1
    assert is_square_qp(68, 2)  # 4 * 17, 17 = 1 (mod 8)
    assert not is_square_qp(12, 2)  # 4 * 3, 3 != 1 (mod 8)
    assert not is_square_qp(12, 3)  # odd 3-valuation
    assert is_square_qp(9 * 7, 3)  # unit 7 = 1 (mod 3) is a QR


def test_solvable_real_examples():
    assert solvable_real(TwistedQuartic(H, 1))
    assert solvable_real(TwistedQuartic(H, -1))
    # H2 and F1, F2 are positive definite, so their negative twists have no real points
    assert not solvable_real(TwistedQuartic(QUARTICS["H2"], -1))
    assert not solvable_real(TwistedQuartic(QUARTICS["F1"], -1))
    assert not solvable_real(TwistedQuartic(QUARTICS["F2"], -1))
    # H1 takes negative values (at x^2 = 7), so both signs work
    assert solvable_real(TwistedQuartic(QUARTICS["H1"], -1))


def test_solvable_at_examples():
    assert not solvable_at(TwistedQuartic(H, 5), 5).solvable
    rep = solvable_at(TwistedQuartic(H, 1), 7)
    assert rep.solvable and rep.witness.kind == "infinity"
    assert solvable_at(TwistedQuartic(QUARTICS["H1"], 13), 13).solvable


def test_is_els_examples():
    ok, _ = is_els(TwistedQuartic(H, 1))
    assert ok
    ok, reports = is_els(TwistedQuartic(H, 5))
    assert not ok
    assert any(r.place == 5 and not r.solvable for r in reports)
    ok, _ = is_els(TwistedQuartic(QUARTICS["F2"], 13))
    assert ok


def _baby_decide(q, p, kmax=3):
    """Independent oracle: breadth-first residue scan with pinned-value test.

    Returns True/False, or None when some class is still unresolved at
    depth kmax.
    """
    d = q.d
    high = list(q.model.coefficients)
    need = 3 if p == 2 else 1

    def value(coeffs, x):
        out = 0
        for c in coeffs:
            out = out * x + c
        return d * out

    if is_square_qp(d * high[0], p):
        return True
    unresolved = False
    found = False
    for coeffs, start in ((high, [(r, 1) for r in range(p)]),
                          (list(reversed(high)), [(j * p, 2) for j in range(p)])):
        queue = list(start)
        while queue:
            r, k = queue.pop()
            val = value(coeffs, r)
            if val == 0:
                found = True
                break
            v = valuation(val, p)
            if v + need <= k:
                unit = val // p**v
                pinned_square = (
                    v % 2 == 0
                    and ((unit % 8 == 1) if p == 2 else legendre(unit, p) == 1)
                )
                if pinned_square:
                    found = True
                    break
            elif k < kmax:
                queue.extend((r + j * p**k, k + 1) for j in range(p))
            else:
                unresolved = True
        if found:
            return True
    if unresolved:
        return None
    return False


def test_baby_oracle_agreement():
    decided = 0
    for p in (3, 5, 7):
        for name in ("H", "H1", "H2", "F1", "F2"):
            model = QUARTICS[name]
            for d in SMALL_TWISTS:
                q = TwistedQuartic(model, d)
                baby = _baby_decide(q, p)
                if baby is None:
                    continue
                assert solvable_at(q, p).solvable == baby, (name, d, p)
                decided += 1
    assert decided > 200


def test_witness_classes_hensel_lift():
    for name in ("H", "H1", "H2", "F1", "F2"):
        model = QUARTICS[name]
        for d in SMALL_TWISTS:
            q = TwistedQuartic(model, d)
            for p in (3, 5, 7, 11, 13):
                rep = solvable_at(q, p)
                w = rep.witness
                if not rep.solvable or w is None or w.kind != "affine" or w.modulus is None:
                    continue
                val = d * model(w.residue)
                v = valuation(val, p)
                assert v % 2 == 0
                assert v < 2 * rep.depth_used
                assert legendre(val // p**v, p) == 1
                assert w.modulus == p**rep.depth_used


def test_twist_by_unit_square_is_invisible():
    rng = random.Random(6)
    primes = [p for p in primes_up_to(60) if p > 2]
    for _ in range(40):
        p = rng.choice(primes)
        name = rng.choice(("H", "H1", "H2", "F1", "F2"))
        d = rng.choice(SMALL_TWISTS)
        # q0 is a unit square at p, so twisting by it cannot change the verdict
        q0 = next(
            r
            for r in primes_up_to(200)
            if r != p and d % r != 0 and (legendre(r, p) == 1 if p > 2 else r % 8 == 1)
        )
        a = solvable_at(TwistedQuartic(QUARTICS[name], d), p).solvable
        b = solvable_at(TwistedQuartic(QUARTICS[name], d * q0), p).solvable
        assert a == b, (name, d, p, q0)


def test_oracle_matches_closed_forms_small():
    for p in primes_up_to(100):
        if p in (2, 3, 13):
            continue
        for d in (p, -p):
            assert is_els(TwistedQuartic(H, d))[0] == els_H(d), ("H", d)
            for name in ("H1", "H2", "F1", "F2"):
                q = TwistedQuartic(QUARTICS[name], d)
                assert is_els(q)[0] == els_generator(name, d), (name, d)
