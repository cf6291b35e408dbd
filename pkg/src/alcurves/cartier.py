"""The Cartier operator on regular differentials, in explicit coordinates.

For a curve y^N = f(x) over F_p with gcd(N, p) = 1, each character s
(1 <= s <= N-1) determines unique integers m', n' with
``m'*p - n'*N == s``, ``1 <= m' <= N-1``, ``0 <= n' < p``.  Writing
``gamma_{s,e}`` for the coefficient of x^e in f(x)^{n'}, the operator sends
``x^{j-1} dx / y^s`` to ``sum_l gamma_{s,(l+1)p-j}^(1/p) x^l dx / y^{m'}``.

Matrices are assembled column by column: the image of each basis form is
re-expressed in the basis of the target character block.  Because the
operator is 1/p-semilinear, the recorded entry for a target form with
numerator t(x) multiplies the *Frobenius twist* of t (every named-variable
exponent times p) during re-expression; entries are stored before
extracting p-th roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .curve import CurveSpec, curve_poly
from .differentials import (
    MODEL_CTILDE,
    BasisBlock,
    BasisReport,
    basis,
    split_exponents,
)
from .errors import (
    BasisReexpressionFailed,
    BlockViolation,
    InvalidSpecialization,
    VariableMismatch,
)
from .mpoly import MPoly, XPoly

CONVENTION_NOTE = (
    "entries are recorded before extracting p-th roots: writing Cop for the "
    "operator and w_1..w_g for the ordered basis, Cop(w_j) = "
    "sum_i entries[i][j]^(1/p) * w_i; over a prime field the residue-wise "
    "p-th root is the identity, so the matrix acts as recorded"
)


@dataclass(frozen=True)
class CartierData:
    """Power-expansion data for one character: f^{n'} coefficient list."""

    s: int
    m_prime: int
    n_prime: int
    gammas: tuple[MPoly, ...]

    def gamma(self, e: int) -> MPoly:
        """Coefficient of x^e in f^{n'} (zero outside 0..n'*deg f)."""
        if 0 <= e < len(self.gammas):
            return self.gammas[e]
        first = self.gammas[0]
        return MPoly.zero(first.variables, first.p)


@dataclass(frozen=True)
class CartierManinMatrix:
    """Operator matrix on one model's basis, entries in F_p[lambda]."""

    model: str
    curve: CurveSpec
    basis_labels: tuple[tuple[int, int], ...]
    entries: tuple[tuple[MPoly, ...], ...]
    convention_note: str = CONVENTION_NOTE

    @property
    def size(self) -> int:
        return len(self.basis_labels)

    def entry(self, i: int, j: int) -> MPoly:
        return self.entries[i][j]


def _require_positive_char(spec: CurveSpec) -> None:
    if spec.p == 0:
        raise ValueError("this operation requires positive characteristic")


def gamma_coeffs(spec: CurveSpec, s: int) -> CartierData:
    """Coefficients of f^{n'_s} for the character s."""
    _require_positive_char(spec)
    m_prime, n_prime = split_exponents(spec.p, spec.N, s)
    fpow = curve_poly(spec) ** n_prime
    deg = n_prime * spec.exponent_sum
    assert fpow.degree() == deg, "f^n' must have degree n' * deg(f)"
    gammas = tuple(fpow.coeff(e) for e in range(deg + 1))
    assert gammas[-1].is_constant() and gammas[-1].constant_value() == 1
    return CartierData(s=s, m_prime=m_prime, n_prime=n_prime, gammas=gammas)


def cartier_on_form(
    spec: CurveSpec, s: int, j: int
) -> list[tuple[tuple[int, int], MPoly]]:
    """Image of x^{j-1} dx / y^s as ((m', l+1), coefficient) pairs.

    The coefficient attached to target index (m', l+1) is
    gamma_{s,(l+1)p-j}; the recorded pairs run over the full index window
    of l (coefficients may be zero inside the window).
    """
    if j < 1:
        raise ValueError(f"numerator index j must be >= 1, got {j}")
    data = gamma_coeffs(spec, s)
    p = spec.p
    l_min = (j + p - 1) // p - 1
    l_max = (data.n_prime * spec.exponent_sum + j) // p - 1
    out = []
    for l in range(l_min, l_max + 1):
        out.append(((data.m_prime, l + 1), data.gamma((l + 1) * p - j)))
    return out


def _image_numerator(B: XPoly, p: int) -> XPoly:
    """R(x) with R_l = coefficient of x^{(l+1)p-1} in B."""
    coeffs = []
    l = 0
    while (l + 1) * p - 1 <= B.degree():
        coeffs.append(B.coeff((l + 1) * p - 1))
        l += 1
    return XPoly(B.variables, B.p, coeffs)


def _reexpress(R: XPoly, block: BasisBlock, p: int) -> list[MPoly]:
    """Solve R = sum_i a_i * twist(t_i) over the block numerators t_i.

    Every named-variable exponent of t_i is multiplied by p (the
    coefficientwise Frobenius); the solve is back-substitution against the
    strictly increasing numerator degrees.
    """
    targets = [form.numerator for form in block.forms]
    degs = [t.degree() for t in targets]
    if len(set(degs)) != len(degs):
        raise BasisReexpressionFailed(
            f"target block s={block.s} has repeated numerator degrees {degs}"
        )
    variables = R.variables
    out = [MPoly.zero(variables, p) for _ in targets]
    rem = R
    for idx in sorted(range(len(targets)), key=lambda i: degs[i], reverse=True):
        lead = targets[idx].leading_coeff()
        if not lead.is_constant():
            raise BasisReexpressionFailed(
                f"target numerator {targets[idx]} has non-constant leading coefficient"
            )
        lc = lead.constant_value()
        a = rem.coeff(degs[idx]).scale(pow(lc, -1, p))
        if a.is_zero():
            continue
        out[idx] = a
        rem = rem - targets[idx].exponent_scale_vars(p).scale(a)
    if not rem.is_zero():
        raise BasisReexpressionFailed(
            f"image remainder {rem} is not in the span of target block s={block.s}"
        )
    return out


def cartier_manin(spec: CurveSpec, model: str = MODEL_CTILDE) -> CartierManinMatrix:
    """Matrix of the Cartier operator on the chosen model's basis.

    Basis order is ascending in s, then ascending within each block; the
    column for basis form number j holds the coordinates of its image.
    """
    _require_positive_char(spec)
    p = spec.p
    report: BasisReport = basis(spec, model)
    labeled = report.labeled_forms()
    labels = tuple(lab for lab, _ in labeled)
    n_forms = len(labeled)

    offsets: dict[int, int] = {}
    block_by_s: dict[int, BasisBlock] = {}
    pos = 0
    for block in report.blocks:
        offsets[block.s] = pos
        block_by_s[block.s] = block
        pos += block.dim

    f = curve_poly(spec)
    fpow_cache: dict[int, XPoly] = {}
    variables = spec.symbolic_vars
    zero = MPoly.zero(variables, p)
    entries = [[zero] * n_forms for _ in range(n_forms)]

    for cidx, ((s, _), form) in enumerate(labeled):
        if s == 0:
            m_prime, n_prime = 0, 0
        else:
            m_prime, n_prime = split_exponents(p, spec.N, s)
        if n_prime not in fpow_cache:
            fpow_cache[n_prime] = f ** n_prime
        B = form.numerator * fpow_cache[n_prime]
        R = _image_numerator(B, p)
        target = block_by_s.get(m_prime)
        if target is None or (target.dim == 0 and not R.is_zero()):
            if R.is_zero():
                continue
            raise BasisReexpressionFailed(
                f"image of basis form {labels[cidx]} lands in the empty block s={m_prime}"
            )
        column = _reexpress(R, target, p)
        off = offsets[m_prime]
        for k, value in enumerate(column):
            entries[off + k][cidx] = value

    return CartierManinMatrix(
        model=model,
        curve=spec,
        basis_labels=labels,
        entries=tuple(tuple(row) for row in entries),
    )


def evaluate_and_rank(
    matrix: CartierManinMatrix, assignment: Mapping[str, int]
) -> tuple[int, bool]:
    """Rank of the matrix after substituting constants for the symbolic
    branch points, plus whether the evaluated matrix is identically zero.

    The substitution must keep all branch points pairwise distinct in F_p;
    otherwise :class:`InvalidSpecialization` is raised.  Over the prime
    field the 1/p-semilinear twist is the identity, so the plain matrix
    rank is the operator rank.
    """
    spec = matrix.curve
    p = spec.p
    needed = set(spec.symbolic_vars)
    given = set(assignment)
    if needed != given:
        raise VariableMismatch(
            f"assignment variables {sorted(given)} do not match curve "
            f"variables {sorted(needed)}"
        )
    values = []
    for lam in spec.lambdas:
        v = lam if isinstance(lam, int) else int(assignment[lam])
        values.append(v % p)
    if len(set(values)) != len(values):
        raise InvalidSpecialization(
            f"substituted branch points {values} are not pairwise distinct mod {p}"
        )
    lookup = {name: int(assignment[name]) % p for name in assignment}
    size = matrix.size
    rows = [
        [int(matrix.entries[i][j].evaluate(lookup)) % p for j in range(size)]
        for i in range(size)
    ]
    is_zero = all(v == 0 for row in rows for v in row)

    rank = 0
    col = 0
    r = 0
    while r < size and col < size:
        pivot = next((i for i in range(r, size) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(size):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [(vi - factor * vr) % p for vi, vr in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank, is_zero


def block_structure(matrix: CartierManinMatrix) -> dict[int, int]:
    """Map s -> m'_s for the characters present, after checking that every
    nonzero entry lies in the (rows of character m'_s) x (columns of
    character s) block."""
    spec = matrix.curve
    p = spec.p
    char_map: dict[int, int] = {}
    for s, _ in matrix.basis_labels:
        if s not in char_map:
            char_map[s] = 0 if s == 0 else split_exponents(p, spec.N, s)[0]
    for i, (s_row, _) in enumerate(matrix.basis_labels):
        for j, (s_col, _) in enumerate(matrix.basis_labels):
            if not matrix.entries[i][j].is_zero() and s_row != char_map[s_col]:
                raise BlockViolation(
                    f"nonzero entry at row {matrix.basis_labels[i]}, column "
                    f"{matrix.basis_labels[j]}: expected rows of character "
                    f"{char_map[s_col]} for columns of character {s_col}"
                )
    return dict(sorted(char_map.items()))
