"""Exact and modular arithmetic primitives.

All rational arithmetic in this package uses the stdlib ``fractions.Fraction``
(eagerly reduced, arbitrary precision); ``ExactRational`` is an alias for it.
Symbols take values in {-1, 0, 1}, with 0 exactly when the modulus divides
the argument.
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import InvalidArgument, InvalidModulus

ExactRational = Fraction

# Deterministic Miller-Rabin witnesses, valid for all n < 2**64
# (smallest composite passing all of them exceeds 3.3e24).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**64; larger inputs are rejected."""
    if n >= 1 << 64:
        raise InvalidArgument("is_prime supports inputs below 2**64 only")
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list:
    """All primes <= limit in increasing order (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray((limit - i * i) // i + 1)
    return [i for i in range(2, limit + 1) if sieve[i]]


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise InvalidModulus(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker(a: int, p: int) -> int:
    """(a/p) for odd prime p and nonzero a, negative and even a included."""
    if a == 0:
        raise InvalidArgument("kronecker symbol of 0 is not used here")
    return legendre(a, p)


def kronecker_two(d: int) -> int:
    """The symbol (d/2) for odd d: +1 if |d| = 1,7 (mod 8), -1 if |d| = 3,5."""
    if d % 2 == 0:
        raise InvalidArgument("(d/2) is defined for odd d only")
    return 1 if abs(d) % 8 in (1, 7) else -1


def sqrt_mod(a: int, p: int):
    """Square root of a mod p (odd prime), canonical in [0, (p-1)/2].

    Returns None when a is a non-residue.  Tonelli-Shanks; see
    https://en.wikipedia.org/wiki/Tonelli-Shanks_algorithm
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
        return min(s, p - s)
    # p = 1 (mod 4): full Tonelli-Shanks
    q = p - 1
    e = 0
    while q % 2 == 0:
        q //= 2
        e += 1
    n = 2
    while legendre(n, p) != -1:
        n += 1
    x = pow(a, (q + 1) // 2, p)
    b = pow(a, q, p)
    g = pow(n, q, p)
    r = e
    while b != 1:
        m = 0
        t = b
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m
    return min(x, p - x)


def rational_square_root(q):
    """Exact square root of a Fraction (or int), or None if q is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = isqrt(num)
    if rn * rn != num:
        return None
    rd = isqrt(den)
    if rd * rd != den:
        return None
    return Fraction(rn, rd)


def factorize(n: int) -> dict:
    """Prime factorization of |n| by trial division, as {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise InvalidArgument("cannot factor 0")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        hit = False
        for g in (f, f + 2):
            while n % g == 0:
                out[g] = out.get(g, 0) + 1
                n //= g
                hit = True
        if hit and n > 1 and is_prime(n):
            break
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int) -> int:
    """The squarefree integer equal to n modulo nonzero rational squares."""
    if n == 0:
        raise InvalidArgument("0 has no squarefree part")
    out = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return out


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def valuation(n: int, p: int) -> int:
    """Exponent of p in n (n nonzero)."""
    if n == 0:
        raise InvalidArgument("0 has infinite valuation")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
