"""Exact scalar arithmetic: rationals, rising factorials, reductions mod p.

All computations in this package are exact.  Rationals are represented by
:class:`fractions.Fraction` (aliased :data:`BigRat`); residues modulo a
prime p are plain Python ints in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .errors import DenominatorDivisibleByP

BigRat = Fraction

Rational = Union[int, Fraction]


def pochhammer(x: Rational, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1); the empty product for n = 0."""
    if n < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def double_factorial(n: int) -> int:
    """Product n(n-2)(n-4)...; equals 1 for n = 0 and n = -1."""
    if n < -1:
        raise ValueError(f"double factorial undefined below -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def binomial_rational(x: Rational, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x."""
    if k < 0:
        raise ValueError(f"binomial order must be nonnegative, got {k}")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / pochhammer(1, k)


def rat_to_fp(x: Rational, p: int) -> int:
    """Reduce a rational with p-coprime denominator to its residue mod p."""
    if p <= 1:
        raise ValueError(f"modulus must be at least 2, got {p}")
    if isinstance(x, int):
        return x % p
    x = Fraction(x)
    den = x.denominator
    if den % p == 0:
        raise DenominatorDivisibleByP(
            f"cannot reduce {x} modulo {p}: denominator divisible by {p}"
        )
    return (x.numerator % p) * pow(den % p, -1, p) % p


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (intended for small n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    limit = isqrt(n)
    while d <= limit:
        if n % d == 0:
            return False
        d += 2
    return True


def gcd_all(*values: int) -> int:
    """Greatest common divisor of any number of integers (0 for no input)."""
    return gcd(*values) if values else 0
