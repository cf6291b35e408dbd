"""Truncated hypergeometric series and the series-side Cartier coefficients.

The multivariate series here has coefficients

    (a; n_1+...+n_d) * prod_j (b_j; n_j)  /  ((c; n_1+...+n_d) * prod_j (1; n_j))

with ``(x; n)`` the rising factorial.  A *truncation* ``(sigma; tau_1..tau_{d+1})``
selects the exponent tuples with ``n_j <= tau_{j+1}`` for every variable and
``sigma - tau_1 <= n_1+...+n_d <= sigma``; only finitely many terms survive.

For a curve y^N = f(x) over F_p, the coefficient ``gamma_{s,(l+1)p-j}`` of
the Cartier operator can be computed without expanding f^{n'}: separate the
repeated branch points into distinct slots, truncate the attached series,
scale by a rising-factorial prefactor, reduce mod p, and collapse the slots
back.  :func:`gamma_via_hgm` implements this route, either literally
(enumerating slot exponent tuples) or by a grouped-convolution evaluation
that sums the same terms organized by collapsed monomial — the two ways are
algebraically identical regroupings of one finite sum, and the grouped form
stays polynomial-size when the slot count is large.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Sequence, Union

from .curve import CurveSpec, Lambda
from .differentials import split_exponents
from .errors import (
    NegativeDPrime,
    NotNormalized,
    PochhammerZeroDenominator,
)
from .exactmath import binomial_rational, is_prime, pochhammer, rat_to_fp
from .mpoly import MPoly, align_variables

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class ALParams:
    """Parameters (a; b_1..b_d; c) of the multivariate series."""

    a: Fraction
    b: tuple[Fraction, ...]
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c.denominator == 1 and self.c <= 0:
            raise PochhammerZeroDenominator(
                f"third parameter c = {self.c} is a nonpositive integer; "
                "series denominators vanish"
            )


@dataclass(frozen=True)
class TruncationSpec:
    """Window (sigma; tau_1..tau_{d+1}): per-variable caps tau_2.. and the
    total-degree window sigma - tau_1 <= sum <= sigma."""

    sigma: int
    taus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "taus", tuple(int(t) for t in self.taus))
        if not self.taus:
            raise ValueError("truncation needs at least the window slack tau_1")

    def selects(self, exponents: Sequence[int]) -> bool:
        e = tuple(exponents)
        if len(e) != len(self.taus) - 1:
            raise ValueError(
                f"tuple length {len(e)} does not match {len(self.taus) - 1} variable(s)"
            )
        if any(v < 0 for v in e):
            return False
        if any(v > cap for v, cap in zip(e, self.taus[1:])):
            return False
        total = sum(e)
        return self.sigma - self.taus[0] <= total <= self.sigma


def al_coefficient(params: ALParams, n: Sequence[int]) -> Fraction:
    """Exact series coefficient at the exponent tuple n."""
    n = tuple(int(v) for v in n)
    if len(n) != len(params.b):
        raise ValueError(
            f"tuple length {len(n)} does not match {len(params.b)} parameter(s)"
        )
    if any(v < 0 for v in n):
        raise ValueError(f"exponents must be nonnegative, got {n}")
    total = sum(n)
    den = pochhammer(params.c, total)
    for v in n:
        den *= pochhammer(1, v)
    if den == 0:
        raise PochhammerZeroDenominator(
            f"(c; {total}) vanishes for c = {params.c}"
        )
    num = pochhammer(params.a, total)
    for bj, v in zip(params.b, n):
        num *= pochhammer(bj, v)
    return num / den


def _selected_tuples(trunc: TruncationSpec, nvars: int) -> list[tuple[int, ...]]:
    """All selected exponent tuples, in ascending lexicographic order."""
    if len(trunc.taus) != nvars + 1:
        raise ValueError(
            f"truncation has {len(trunc.taus) - 1} caps for {nvars} variable(s)"
        )
    sigma = trunc.sigma
    if sigma < 0:
        return []
    lower = sigma - trunc.taus[0]
    caps = trunc.taus[1:]
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], total: int) -> None:
        idx = len(prefix)
        if idx == nvars:
            if total >= lower:
                out.append(tuple(prefix))
            return
        cap = min(caps[idx], sigma - total)
        for v in range(cap + 1):
            prefix.append(v)
            rec(prefix, total + v)
            prefix.pop()

    rec([], 0)
    return out


def truncated_series(
    params: ALParams, trunc: TruncationSpec, variables: Sequence[str]
) -> MPoly:
    """The truncated series as an exact rational polynomial."""
    variables = tuple(variables)
    if len(variables) != len(params.b):
        raise ValueError(
            f"{len(variables)} variable name(s) for {len(params.b)} parameter(s)"
        )
    terms = {}
    for e in _selected_tuples(trunc, len(variables)):
        value = al_coefficient(params, e)
        if value:
            terms[e] = value
    return MPoly(variables, 0, terms)


# -- slot separation of repeated branch points --------------------------


@dataclass(frozen=True)
class SeparableDeformation:
    """Bookkeeping for separating repeated branch points into slots.

    Group 1 holds ``A_1 - 1`` slots that collapse to the branch point 1;
    group k (2 <= k <= r) holds ``A_k`` slots that collapse to lambda_k.
    """

    curve: CurveSpec
    slot_vars: tuple[str, ...]
    group_sizes: tuple[int, ...]
    group_values: tuple[Lambda, ...]
    collapse: dict[str, Lambda]


def separable_deformation(spec: CurveSpec) -> SeparableDeformation:
    """Slot layout for a normalized curve (lambda_0 = 0, lambda_1 = 1)."""
    if spec.r < 1 or spec.lambdas[0] != 0 or spec.lambdas[1] != 1:
        raise NotNormalized(
            "slot separation needs branch points starting with 0 and 1, "
            f"got {spec.lambdas}"
        )
    prefix = "t"
    taken = set(spec.symbolic_vars)
    while any(f"{prefix}{k}_{i}" in taken
              for k in range(1, spec.r + 1)
              for i in range(1, max(spec.exponents) + 1)):
        prefix = "_" + prefix
    slot_vars: list[str] = []
    group_sizes: list[int] = []
    group_values: list[Lambda] = []
    collapse: dict[str, Lambda] = {}
    for k in range(1, spec.r + 1):
        size = spec.exponents[k] - 1 if k == 1 else spec.exponents[k]
        value: Lambda = 1 if k == 1 else spec.lambdas[k]
        group_sizes.append(size)
        group_values.append(value)
        for i in range(1, size + 1):
            name = f"{prefix}{k}_{i}"
            slot_vars.append(name)
            collapse[name] = value
    return SeparableDeformation(
        curve=spec,
        slot_vars=tuple(slot_vars),
        group_sizes=tuple(group_sizes),
        group_values=tuple(group_values),
        collapse=collapse,
    )


# -- the series-side route to gamma coefficients ------------------------


@dataclass(frozen=True)
class SeriesEntryParams:
    """Derived parameters for the coefficient gamma_{s,(l+1)p-j}."""

    s: int
    l: int
    j: int
    m_prime: int
    n_prime: int
    a_prime: Fraction
    c_prime: Fraction
    d_prime: int


def series_entry_params(spec: CurveSpec, s: int, l: int, j: int) -> SeriesEntryParams:
    """Compute (m', n', a', c', d') for one operator coefficient.

    ``a'`` is the smallest positive rational congruent to
    ``s*deg(f)/N - j`` modulo p, ``c' = a' + 1 - s/N`` and
    ``d' = n'*deg(f) - (l+1)p + j`` (negative d' is an error).
    """
    if spec.p == 0:
        raise ValueError("this operation requires positive characteristic")
    if j < 1:
        raise ValueError(f"numerator index j must be >= 1, got {j}")
    p = spec.p
    m_prime, n_prime = split_exponents(p, spec.N, s)
    deg_f = spec.exponent_sum
    d_prime = n_prime * deg_f - (l + 1) * p + j
    if d_prime < 0:
        raise NegativeDPrime(
            f"series order n'*deg(f) - (l+1)p + j = {d_prime} is negative for "
            f"(s, l, j) = ({s}, {l}, {j})"
        )
    base = Fraction(s * deg_f, spec.N) - j
    a_prime = base - p * floor(base / p)
    if a_prime == 0:
        a_prime = Fraction(p)
    c_prime = a_prime + 1 - Fraction(s, spec.N)
    return SeriesEntryParams(
        s=s,
        l=l,
        j=j,
        m_prime=m_prime,
        n_prime=n_prime,
        a_prime=a_prime,
        c_prime=c_prime,
        d_prime=d_prime,
    )


def _list_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if not va:
            continue
        for k, vb in enumerate(b):
            if vb:
                out[i + k] += va * vb
    return out


def _list_pow(base: list[Fraction], e: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(e):
        out = _list_mul(out, base)
    return out


def gamma_via_hgm(
    spec: CurveSpec, s: int, l: int, j: int, method: str = "grouped"
) -> MPoly:
    """The coefficient gamma_{s,(l+1)p-j} computed from the truncated series.

    ``method="literal"`` enumerates slot exponent tuples one by one,
    truncates, scales by (c'; d')/(a'; d'), reduces mod p, then collapses
    the slots.  ``method="grouped"`` (default) evaluates the identical sum
    grouped by collapsed monomial, which is exponentially smaller when
    branch points repeat.  Both return the same polynomial in the symbolic
    branch points; rationals are reduced mod p only after being assembled,
    and a denominator divisible by p raises an error rather than being
    skipped.
    """
    entry = series_entry_params(spec, s, l, j)
    deformation = separable_deformation(spec)
    p = spec.p
    b = Fraction(s, spec.N)
    prefactor = pochhammer(entry.c_prime, entry.d_prime) / pochhammer(
        entry.a_prime, entry.d_prime
    )

    if method == "literal":
        slots = deformation.slot_vars
        params = ALParams(a=entry.a_prime, b=(b,) * len(slots), c=entry.c_prime)
        trunc = TruncationSpec(
            sigma=entry.d_prime, taus=(entry.n_prime,) * (len(slots) + 1)
        )
        series = truncated_series(params, trunc, slots)
        reduced = series.scale(prefactor).reduce_mod(p)
        collapsed = reduced.substitute(deformation.collapse)
        return align_variables(collapsed, spec.symbolic_vars)

    if method != "grouped":
        raise ValueError(f"unknown method {method!r}; expected grouped or literal")

    n_pr = entry.n_prime
    d_pr = entry.d_prime
    g_list = [pochhammer(b, e) / pochhammer(1, e) for e in range(n_pr + 1)]
    W = [_list_pow(g_list, size) for size in deformation.group_sizes]
    W1 = W[0]
    deg_W1 = len(W1) - 1

    ratios = [Fraction(1)]
    for n in range(d_pr):
        ratios.append(ratios[-1] * (entry.a_prime + n) / (entry.c_prime + n))

    sym_vars = spec.symbolic_vars
    sym_index = {name: i for i, name in enumerate(sym_vars)}
    moving_values = deformation.group_values[1:]
    caps = [n_pr * size for size in deformation.group_sizes[1:]]

    acc: dict[tuple[int, ...], int] = {}
    for D in itertools.product(*(range(c + 1) for c in caps)):
        sum_D = sum(D)
        if sum_D > d_pr:
            continue
        wk = Fraction(1)
        for W_k, Dk in zip(W[1:], D):
            wk *= W_k[Dk]
            if not wk:
                break
        if not wk:
            continue
        lo = max(sum_D, d_pr - n_pr)
        hi = min(d_pr, sum_D + deg_W1)
        total = Fraction(0)
        for n in range(lo, hi + 1):
            w1 = W1[n - sum_D]
            if w1:
                total += ratios[n] * w1
        value = prefactor * total * wk
        if not value:
            continue
        residue = rat_to_fp(value, p)
        exps = [0] * len(sym_vars)
        for lam, Dk in zip(moving_values, D):
            if isinstance(lam, str):
                exps[sym_index[lam]] = Dk
            else:
                residue = residue * pow(lam % p, Dk, p) % p
        if residue:
            key = tuple(exps)
            acc[key] = (acc.get(key, 0) + residue) % p
    acc = {k: v for k, v in acc.items() if v}
    return MPoly(sym_vars, p, acc)


def classical_Hp(p: int) -> MPoly:
    """The degree-(p-1)/2 polynomial sum_i binom((p-1)/2, i)^2 z^i over F_p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"an odd prime is required, got {p}")
    m = (p - 1) // 2
    return MPoly(("z",), p, {(i,): comb(m, i) ** 2 for i in range(m + 1)})


def binomial_pochhammer_identity(b: Rational, d: int) -> bool:
    """Exact rational identity (-1)^d * binom(-b, d) == (b; d)/(1; d)."""
    b = Fraction(b)
    lhs = (-1) ** d * binomial_rational(-b, d)
    rhs = pochhammer(b, d) / pochhammer(1, d)
    return lhs == rhs


def lemma66_check(
    s: int,
    N: int,
    A_1: int,
    d_1: int,
    d_prime: int,
    a_prime: Rational,
    c_prime: Rational,
    p: int,
) -> bool:
    """Mod-p identity linking a binomial in s*A_1/N to prefactor ratios:

    (-1)^{d_1} binom(-s*A_1/N, d_1)  ==
    (c'; d')/(a'; d') * (a'; d'-d_1)/(c'; d'-d_1)   (mod p)

    Requires 0 <= d_1 <= min(d', p-1) and p-integral values on both sides.
    """
    if not (0 <= d_1 <= d_prime):
        raise ValueError(f"need 0 <= d_1 <= d', got d_1={d_1}, d'={d_prime}")
    if d_1 >= p:
        raise ValueError(f"need d_1 < p, got d_1={d_1}, p={p}")
    a_prime = Fraction(a_prime)
    c_prime = Fraction(c_prime)
    lhs = (-1) ** d_1 * binomial_rational(-Fraction(s * A_1, N), d_1)
    try:
        rhs = (
            pochhammer(c_prime, d_prime)
            / pochhammer(a_prime, d_prime)
            * pochhammer(a_prime, d_prime - d_1)
            / pochhammer(c_prime, d_prime - d_1)
        )
    except ZeroDivisionError:
        raise PochhammerZeroDenominator(
            f"(a'; d') or (c'; d'-d_1) vanishes for a'={a_prime}, c'={c_prime}"
        ) from None
    return rat_to_fp(lhs, p) == rat_to_fp(rhs, p)
