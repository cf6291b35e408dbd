"""Superelliptic curve descriptions and their discrete invariants.

A curve is given by y^N = f(x) with f(x) = prod_i (x - lambda_i)^{A_i},
over the rationals (p = 0) or a prime field F_p with gcd(N, p) = 1.
Branch points lambda_i are either explicit constants (ints) or named
symbolic values (strings); all invariants here depend only on (N, A, p).

The three shape cases are named by the sign of N - sum(A):
``Case1`` (N > sum), ``Case2`` (N < sum), ``Case3`` (N = sum).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import (
    CharDividesN,
    DuplicateBranchPoint,
    InfinityUndefinedInCase3,
    NotIrreducible,
    NotNormalized,
    NotPrime,
    ValidationError,
)
from .exactmath import is_prime
from .mpoly import MPoly, XPoly

INFINITY = "inf"

CASE1 = "Case1"
CASE2 = "Case2"
CASE3 = "Case3"

Lambda = Union[int, str]


@dataclass(frozen=True)
class CurveSpec:
    """Validated description of y^N = prod (x - lambda_i)^{A_i}."""

    p: int
    N: int
    exponents: tuple[int, ...]
    lambdas: tuple[Lambda, ...]

    @property
    def r(self) -> int:
        """Number of branch points minus one (indices run 0..r)."""
        return len(self.exponents) - 1

    @property
    def exponent_sum(self) -> int:
        return sum(self.exponents)

    @property
    def symbolic_vars(self) -> tuple[str, ...]:
        return tuple(v for v in self.lambdas if isinstance(v, str))

    def equation_str(self) -> str:
        factors = []
        for lam, a in zip(self.lambdas, self.exponents):
            if lam == 0:
                base = "x"
            elif isinstance(lam, int) and lam < 0:
                base = f"(x + {-lam})"
            else:
                base = f"(x - {lam})"
            factors.append(base if a == 1 else f"{base}^{a}")
        return f"y^{self.N} = " + "*".join(factors)


@dataclass(frozen=True)
class CaseData:
    """Shape case of the curve and the branching exponent at infinity."""

    case: str
    A_inf: int


@dataclass(frozen=True)
class LocalData:
    """Reduced branching data at one ramified point.

    ``g = gcd(N, A)``, ``N_red = N/g``, ``A_red = A/g`` and the normalized
    cofactors satisfy ``m*A_red + n*N_red == 1`` with ``0 <= m < N_red``.
    """

    point: Lambda
    g: int
    N_red: int
    A_red: int
    m: int
    n: int


@dataclass(frozen=True)
class HgmParams:
    """Rational parameters of the hypergeometric series attached to a
    normalized curve (branch points 0, 1, then the moving points)."""

    a: Fraction
    b: tuple[Fraction, ...]
    c: Fraction


def validate(
    p: int,
    N: int,
    exponents: Sequence[int],
    lambdas: Sequence[Lambda],
) -> CurveSpec:
    """Check a raw curve description and return an immutable spec.

    Raises :class:`NotPrime`, :class:`NotIrreducible`, :class:`CharDividesN`
    or :class:`DuplicateBranchPoint` when a requirement fails.
    """
    if not isinstance(N, int) or N < 1:
        raise ValidationError(f"N must be a positive integer, got {N!r}")
    if not isinstance(p, int) or p < 0:
        raise ValidationError(f"p must be 0 or a prime, got {p!r}")
    exponents = tuple(exponents)
    if not exponents:
        raise ValidationError("at least one branch point is required")
    for a in exponents:
        if not isinstance(a, int) or a < 1:
            raise ValidationError(f"multiplicities must be positive integers, got {a!r}")
    if len(lambdas) != len(exponents):
        raise ValidationError(
            f"{len(lambdas)} branch point(s) for {len(exponents)} multiplicit(ies)"
        )
    if p and not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if gcd(N, *exponents) != 1:
        raise NotIrreducible(
            f"gcd(N, multiplicities) = {gcd(N, *exponents)} > 1: "
            "the defining equation factors"
        )
    if p and gcd(N, p) != 1:
        raise CharDividesN(f"characteristic {p} divides N = {N}")

    clean: list[Lambda] = []
    seen_concrete: set[int] = set()
    seen_names: set[str] = set()
    for lam in lambdas:
        if isinstance(lam, bool) or not isinstance(lam, (int, str)):
            raise ValidationError(f"branch point must be an int or a name, got {lam!r}")
        if isinstance(lam, int):
            value = lam % p if p else lam
            if value in seen_concrete:
                raise DuplicateBranchPoint(
                    f"branch point {lam} repeats (mod {p})" if p else f"branch point {lam} repeats"
                )
            seen_concrete.add(value)
            clean.append(value)
        else:
            if not lam.isidentifier() or lam in ("x", "y", INFINITY):
                raise ValidationError(f"invalid branch point name {lam!r}")
            if lam in seen_names:
                raise DuplicateBranchPoint(f"branch point name {lam!r} repeats")
            seen_names.add(lam)
            clean.append(lam)
    return CurveSpec(p=p, N=N, exponents=exponents, lambdas=tuple(clean))


def classify(spec: CurveSpec) -> CaseData:
    """Shape case by the sign of N - sum(A), and |N - sum(A)|."""
    t = spec.N - spec.exponent_sum
    if t > 0:
        return CaseData(CASE1, t)
    if t < 0:
        return CaseData(CASE2, -t)
    return CaseData(CASE3, 0)


def local_data(spec: CurveSpec, point: Lambda | int) -> LocalData:
    """Reduced branching data at branch point index j, or at ``"inf"``."""
    if point == INFINITY:
        case = classify(spec)
        if case.case == CASE3:
            raise InfinityUndefinedInCase3(
                "the point at infinity is not a branch point when N equals the "
                "multiplicity sum"
            )
        A = case.A_inf
        label: Lambda = INFINITY
    else:
        if not isinstance(point, int) or not (0 <= point <= spec.r):
            raise ValidationError(f"branch point index out of range: {point!r}")
        A = spec.exponents[point]
        label = point
    g = gcd(spec.N, A)
    N_red = spec.N // g
    A_red = A // g
    m = pow(A_red, -1, N_red)
    n = (1 - m * A_red) // N_red
    assert m * A_red + n * N_red == 1 and 0 <= m < N_red
    return LocalData(point=label, g=g, N_red=N_red, A_red=A_red, m=m, n=n)


def singular_points(spec: CurveSpec) -> list[Lambda]:
    """Indices of branch points with multiplicity > 1 on the plane model,
    plus ``"inf"`` when the point at infinity is branched with multiplicity
    > 1 (never in Case3, where infinity is unbranched)."""
    out: list[Lambda] = [j for j, a in enumerate(spec.exponents) if a > 1]
    case = classify(spec)
    if case.case != CASE3 and case.A_inf > 1:
        out.append(INFINITY)
    return out


def genus(spec: CurveSpec) -> int:
    """Genus of the smooth projective model."""
    N = spec.N
    total = spec.r * N - sum(gcd(N, a) for a in spec.exponents)
    total -= gcd(N, N - spec.exponent_sum)
    assert total % 2 == 0, "genus formula must give an integer"
    return 1 + total // 2


def hgm_params(spec: CurveSpec) -> HgmParams:
    """Series parameters attached to a normalized curve.

    Requires lambda_0 = 0 and lambda_1 = 1; the b-parameters correspond to
    the moving branch points lambda_2..lambda_r.
    """
    if spec.r < 1 or spec.lambdas[0] != 0 or spec.lambdas[1] != 1:
        raise NotNormalized(
            "series parameters need branch points starting with 0 and 1, "
            f"got {spec.lambdas}"
        )
    N = spec.N
    a = Fraction(spec.exponent_sum, N) - 1
    b = tuple(Fraction(spec.exponents[k], N) for k in range(2, spec.r + 1))
    c = a + 1 - Fraction(spec.exponents[1], N)
    return HgmParams(a=a, b=b, c=c)


def curve_poly(spec: CurveSpec) -> XPoly:
    """The right-hand side f(x) = prod (x - lambda_i)^{A_i} as an XPoly."""
    variables = spec.symbolic_vars
    p = spec.p
    out = XPoly.one(variables, p)
    for lam, a in zip(spec.lambdas, spec.exponents):
        if isinstance(lam, int):
            root = MPoly.const(variables, p, lam)
        else:
            root = MPoly.variable(variables, p, lam)
        factor = XPoly(variables, p, [-root, MPoly.const(variables, p, 1)])
        out = out * factor ** a
    return out


# -- JSON round trip ----------------------------------------------------


def curve_to_json_obj(spec: CurveSpec) -> dict:
    return {
        "p": spec.p,
        "N": spec.N,
        "exponents": list(spec.exponents),
        "lambdas": [str(lam) for lam in spec.lambdas],
    }


def curve_from_json_obj(obj: dict) -> CurveSpec:
    try:
        p = obj["p"]
        N = obj["N"]
        exponents = obj["exponents"]
        raw_lambdas = obj["lambdas"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"curve description missing field: {exc}") from None
    lambdas: list[Lambda] = []
    for item in raw_lambdas:
        if isinstance(item, str):
            stripped = item.strip()
            try:
                lambdas.append(int(stripped, 10))
            except ValueError:
                lambdas.append(stripped)
        else:
            lambdas.append(item)
    return validate(p=p, N=N, exponents=exponents, lambdas=lambdas)


def curve_from_json(text: str) -> CurveSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid curve JSON: {exc}") from None
    return curve_from_json_obj(obj)
