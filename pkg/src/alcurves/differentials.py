"""Bases of regular differentials on three models of a superelliptic curve.

Forms are written ``q(x) dx / y^s`` and grouped by the y-exponent s
(0 <= s <= N-1), which indexes the character decomposition under the
order-N automorphism y -> zeta*y.  Three models are supported:

* ``X`` — the smooth projective model; the block for each s consists of
  ``x^m * prod_j (x - lambda_j)^{e_{s,j}} dx / y^s`` where the factor
  exponents are the smallest choices that clear the poles at the branch
  points and ``m`` runs below a count fixed by the pole at infinity.
* ``C`` — the plane projective curve (quotient description by degrees).
* ``Ctilde`` — the partial desingularization obtained by separating the
  branches over the singular points of C at finite distance; its blocks
  consist of ``x^{i-1} dx / y^s`` for i up to a per-s count.

Also provided: a semigroup membership test for pole orders at one branch
point, representation counts for two-generator numerical semigroups, and
the unique decomposition m'*p - n'*N = s used by the Cartier operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

from .curve import CASE2, CurveSpec, classify, curve_poly
from .errors import NotCoprime
from .mpoly import MPoly, XPoly

MODEL_X = "X"
MODEL_C = "C"
MODEL_CTILDE = "Ctilde"

MODELS = (MODEL_X, MODEL_C, MODEL_CTILDE)


@dataclass(frozen=True)
class DifferentialForm:
    """A differential q(x) dx / y^s with polynomial numerator."""

    s: int
    numerator: XPoly

    def __str__(self) -> str:
        num = str(self.numerator)
        if "+" in num or "-" in num or "*" in num:
            num = f"({num})"
        if self.s == 0:
            return f"{num} dx"
        if self.s == 1:
            return f"{num}/y dx"
        return f"{num}/y^{self.s} dx"


@dataclass(frozen=True)
class BasisBlock:
    """All basis forms sharing one y-exponent s."""

    s: int
    forms: tuple[DifferentialForm, ...]
    factor_exponents: tuple[int, ...] | None = None
    x_degree_count: int | None = None

    @property
    def dim(self) -> int:
        return len(self.forms)


@dataclass(frozen=True)
class BasisReport:
    """Ordered basis of regular differentials on one model."""

    model: str
    curve: CurveSpec
    blocks: tuple[BasisBlock, ...]

    @property
    def total(self) -> int:
        return sum(b.dim for b in self.blocks)

    @property
    def dims(self) -> dict[int, int]:
        return {b.s: b.dim for b in self.blocks}

    def labeled_forms(self) -> list[tuple[tuple[int, int], DifferentialForm]]:
        """Flat (label, form) list; labels are (s, index-within-block),
        1-based, ordered by s then index."""
        out = []
        for block in self.blocks:
            for idx, form in enumerate(block.forms, start=1):
                out.append(((block.s, idx), form))
        return out


def is_regular_on_X(spec: CurveSpec, s: int, a: Sequence[int]) -> bool:
    """Whether x^(a_0+...+a_r-compatible) form prod_j (x-lambda_j)^{a_j} dx/y^s
    extends regularly over the smooth model.

    True exactly when every branch point bound ``a_j >= (s*A_j + gcd(N,A_j))/N - 1``
    holds and the infinity bound ``sum(a) <= (s*sum(A) - gcd(N, N-sum(A)))/N - 1``
    holds (all comparisons exact over the rationals).
    """
    N = spec.N
    if not (0 <= s <= N - 1):
        raise ValueError(f"y-exponent s must satisfy 0 <= s <= N-1, got {s}")
    a = tuple(int(v) for v in a)
    if len(a) != spec.r + 1:
        raise ValueError(
            f"exponent vector has {len(a)} entries for {spec.r + 1} branch points"
        )
    for aj, Aj in zip(a, spec.exponents):
        bound = Fraction(s * Aj + gcd(N, Aj), N) - 1
        if aj < bound:
            return False
    g_inf = gcd(N, N - spec.exponent_sum)
    return sum(a) <= Fraction(s * spec.exponent_sum - g_inf, N) - 1


def _root_factor(spec: CurveSpec, j: int) -> XPoly:
    """(x - lambda_j) as an XPoly."""
    variables = spec.symbolic_vars
    p = spec.p
    lam = spec.lambdas[j]
    if isinstance(lam, int):
        root = MPoly.const(variables, p, lam)
    else:
        root = MPoly.variable(variables, p, lam)
    return XPoly(variables, p, [-root, MPoly.const(variables, p, 1)])


def basis_X(spec: CurveSpec) -> BasisReport:
    """Basis of regular differentials on the smooth model, by character."""
    N = spec.N
    sum_A = spec.exponent_sum
    g_inf = gcd(N, N - sum_A)
    factors = [_root_factor(spec, j) for j in range(spec.r + 1)]
    blocks = []
    for s in range(N):
        e_s = tuple(
            ceil(Fraction(s * Aj + gcd(N, Aj), N) - 1) for Aj in spec.exponents
        )
        d_s = max(0, floor(Fraction(s * sum_A - g_inf, N)) - sum(e_s))
        base = XPoly.one(spec.symbolic_vars, spec.p)
        for factor, e in zip(factors, e_s):
            if e:
                base = base * factor ** e
        forms = tuple(
            DifferentialForm(s=s, numerator=base.shift(m)) for m in range(d_s)
        )
        blocks.append(
            BasisBlock(s=s, forms=forms, factor_exponents=e_s, x_degree_count=d_s)
        )
    return BasisReport(model=MODEL_X, curve=spec, blocks=tuple(blocks))


def basis_C(spec: CurveSpec) -> BasisReport:
    """Basis of regular differentials on the plane projective model."""
    N = spec.N
    sum_A = spec.exponent_sum
    variables = spec.symbolic_vars
    p = spec.p
    blocks = []
    if classify(spec).case == CASE2:
        f = curve_poly(spec)
        f_powers = {0: XPoly.one(variables, p)}
        for s in range(N):
            forms = []
            j_max = floor(Fraction(s - 2 + sum_A, N))
            for j in range(1, j_max + 1):
                if j - 1 not in f_powers:
                    f_powers[j - 1] = f_powers[j - 2] * f
                fj = f_powers[j - 1]
                i_max = s - 2 - j * N + sum_A
                for i in range(i_max + 1):
                    forms.append(DifferentialForm(s=s, numerator=fj.shift(i)))
            blocks.append(BasisBlock(s=s, forms=tuple(forms)))
    else:
        for s in range(N):
            forms = tuple(
                DifferentialForm(
                    s=s, numerator=XPoly.x_monomial(variables, p, i)
                )
                for i in range(max(0, s - 1))
            )
            blocks.append(BasisBlock(s=s, forms=forms))
    return BasisReport(model=MODEL_C, curve=spec, blocks=tuple(blocks))


def basis_Ctilde(spec: CurveSpec) -> BasisReport:
    """Basis of regular differentials on the partial desingularization."""
    N = spec.N
    sum_A = spec.exponent_sum
    g_inf = gcd(N, N - sum_A)
    variables = spec.symbolic_vars
    blocks = []
    for s in range(N):
        count = max(0, floor(Fraction(s * sum_A - g_inf, N)))
        forms = tuple(
            DifferentialForm(
                s=s, numerator=XPoly.x_monomial(variables, spec.p, i - 1)
            )
            for i in range(1, count + 1)
        )
        blocks.append(BasisBlock(s=s, forms=forms))
    return BasisReport(model=MODEL_CTILDE, curve=spec, blocks=tuple(blocks))


def basis(spec: CurveSpec, model: str) -> BasisReport:
    """Dispatch to one of the three model bases."""
    if model == MODEL_X:
        return basis_X(spec)
    if model == MODEL_C:
        return basis_C(spec)
    if model == MODEL_CTILDE:
        return basis_Ctilde(spec)
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def serre_local_membership(
    N_red: int,
    A_red: int,
    g: int,
    m: int,
    n: int,
    d: int,
    e: int,
) -> bool:
    """Local regularity test at one branch point with reduced data.

    Returns True exactly when there is NO pair (a, b) of nonnegative
    integers with ``a*N_red + b*A_red == d`` and
    ``-a*m + b*n = e (mod g)``.
    """
    if N_red < 1 or A_red < 1 or g < 1:
        raise ValueError("reduced branching data must be positive")
    if m * A_red + n * N_red != 1:
        raise ValueError(
            f"cofactors ({m}, {n}) do not satisfy m*A_red + n*N_red == 1"
        )
    if d < 0:
        return True
    for a in range(d // N_red + 1):
        rem = d - a * N_red
        if rem % A_red == 0:
            b = rem // A_red
            if (-a * m + b * n - e) % g == 0:
                return False
    return True


def count_representations(d: int, p: int, q: int, require_positive: bool = False) -> int:
    """Number of ways d = a*p + b*q with integer a, b >= 0 (or >= 1)."""
    if p < 1 or q < 1:
        raise ValueError("generators must be positive")
    if gcd(p, q) != 1:
        raise NotCoprime(f"generators {p} and {q} share the factor {gcd(p, q)}")
    if d < 0:
        return 0
    lo = 1 if require_positive else 0
    count = 0
    for a in range(lo, d // p + 1):
        rem = d - a * p
        if rem % q == 0 and rem // q >= lo:
            count += 1
    return count


def split_exponents(p: int, N: int, s: int) -> tuple[int, int]:
    """The unique (m', n') with ``m'*p - n'*N == s``, ``1 <= m' <= N-1`` and
    ``0 <= n' < p``."""
    if gcd(p, N) != 1:
        raise NotCoprime(f"p = {p} and N = {N} share the factor {gcd(p, N)}")
    if not (1 <= s <= N - 1):
        raise ValueError(f"character s must satisfy 1 <= s <= N-1, got {s}")
    m = (s * pow(p, -1, N)) % N
    n = (m * p - s) // N
    assert 1 <= m <= N - 1 and 0 <= n < p and m * p - n * N == s
    return m, n
