"""Exact sparse multivariate polynomials, and dense-in-x polynomials.

Two layers:

* :class:`MPoly` — a sparse polynomial in a fixed tuple of named variables
  (typically the symbolic branch points).  Coefficients are exact rationals
  when ``p == 0`` and residues in ``[0, p)`` when ``p`` is a prime.
* :class:`XPoly` — a polynomial in one distinguished variable ``x`` whose
  coefficients are :class:`MPoly` values sharing one variable tuple and
  modulus.  Dense in ``x`` (a coefficient list), sparse in the named
  variables.

Canonical term order everywhere is lexicographic on exponent vectors with
the highest vector first, variables ordered as in the ``variables`` tuple.
Products modulo p are routed through the convolution kernel in
:mod:`alcurves.kernels`; over the rationals a dictionary-based product is
used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import kernels
from .errors import DenominatorDivisibleByP, VariableMismatch
from .exactmath import rat_to_fp

Scalar = Union[int, Fraction]
SubstValue = Union[int, Fraction, str, "MPoly"]


def _term_sort_key(item):
    return item[0]


class MPoly:
    """Sparse exact polynomial in named variables.

    ``p == 0`` means rational coefficients (:class:`fractions.Fraction`);
    ``p > 0`` means coefficients are integers reduced into ``[0, p)``.
    """

    __slots__ = ("variables", "p", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        p: int,
        terms: Mapping[tuple[int, ...], Scalar] | Iterable[tuple[tuple[int, ...], Scalar]] = (),
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if p < 0:
            raise ValueError(f"modulus must be 0 (rationals) or a prime, got {p}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Scalar] = {}
        nv = len(variables)
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise ValueError(
                    f"exponent vector {exps} does not match {nv} variable(s)"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if p:
                value: Scalar = rat_to_fp(coeff, p) if not isinstance(coeff, int) else coeff % p
            else:
                value = Fraction(coeff)
            if exps in clean:
                value = clean[exps] + value
                if p:
                    value %= p
            clean[exps] = value
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "p", p)
        object.__setattr__(
            self, "terms", {e: c for e, c in clean.items() if c != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple[str, ...], p: int, terms: dict) -> "MPoly":
        """Trusting constructor: terms must already be normalized."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, variables: Sequence[str], p: int) -> "MPoly":
        return cls(variables, p, {})

    @classmethod
    def const(cls, variables: Sequence[str], p: int, value: Scalar) -> "MPoly":
        return cls(variables, p, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, variables: Sequence[str], p: int, name: str) -> "MPoly":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"unknown variable {name!r} (have {variables})")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, p, {exps: 1})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        zero = Fraction(0) if self.p == 0 else 0
        return self.terms.get((0,) * len(self.variables), zero)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if name not in self.variables:
            raise VariableMismatch(f"unknown variable {name!r} (have {self.variables})")
        i = self.variables.index(name)
        return max((exps[i] for exps in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=-1)

    def canonical_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms sorted lexicographically, highest exponent vector first."""
        return sorted(self.terms.items(), key=_term_sort_key, reverse=True)

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "MPoly") -> None:
        if self.variables != other.variables or self.p != other.p:
            raise VariableMismatch(
                f"incompatible polynomials: vars {self.variables}/{other.variables}, "
                f"moduli {self.p}/{other.p}"
            )

    def _coerce(self, value: Scalar) -> Scalar:
        return value % self.p if self.p else Fraction(value)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.variables, self.p, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        p = self.p
        for exps, c in other.terms.items():
            v = out.get(exps, 0) + c
            if p:
                v %= p
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return MPoly._raw(self.variables, p, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        p = self.p
        if p:
            return MPoly._raw(
                self.variables, p, {e: (-c) % p for e, c in self.terms.items()}
            )
        return MPoly._raw(self.variables, 0, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.variables, self.p, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (self.__neg__()).__add__(other)

    def scale(self, value: Scalar) -> "MPoly":
        """Multiply every coefficient by a scalar."""
        if self.p:
            v = value if isinstance(value, int) else rat_to_fp(value, self.p)
            v %= self.p
            if v == 0:
                return MPoly.zero(self.variables, self.p)
            return MPoly._raw(
                self.variables, self.p, {e: (c * v) % self.p for e, c in self.terms.items()}
            )
        v = Fraction(value)
        if v == 0:
            return MPoly.zero(self.variables, 0)
        return MPoly._raw(self.variables, 0, {e: c * v for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_compatible(other)
        p = self.p
        out: dict[tuple[int, ...], Scalar] = {}
        if len(self.terms) > len(other.terms):
            left, right = other, self
        else:
            left, right = self, other
        for ea, ca in left.terms.items():
            for eb, cb in right.terms.items():
                key = tuple(i + j for i, j in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        if p:
            out = {e: c % p for e, c in out.items()}
        return MPoly._raw(self.variables, p, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        result = MPoly.const(self.variables, self.p, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.variables, self.p, tuple(self.canonical_terms()))
        )

    def __reduce__(self):
        return (MPoly, (self.variables, self.p, tuple(self.terms.items())))

    # -- structural operations ----------------------------------------

    def exponent_scale(self, k: int) -> "MPoly":
        """Multiply every exponent by k (for p > 0 this is the coefficientwise
        p-power Frobenius when k = p, since residues are fixed by it)."""
        if k < 0:
            raise ValueError("exponent multiplier must be nonnegative")
        out: dict[tuple[int, ...], Scalar] = {}
        for exps, c in self.terms.items():
            key = tuple(e * k for e in exps)
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:  # k == 0 collapses monomials
                v = prev + c
                if self.p:
                    v %= self.p
                out[key] = v
        return MPoly(self.variables, self.p, out)

    def substitute(self, assignments: Mapping[str, SubstValue]) -> "MPoly":
        """Replace variables by scalars, variable names, or polynomials.

        Unassigned variables are retained.  The result's variable tuple is
        the retained variables (in original order) followed by newly
        introduced variables in order of first appearance.
        """
        for name in assignments:
            if name not in self.variables:
                raise VariableMismatch(
                    f"assignment for unknown variable {name!r} (have {self.variables})"
                )
        retained = [v for v in self.variables if v not in assignments]
        new_vars: list[str] = []
        for v in self.variables:
            if v not in assignments:
                continue
            value = assignments[v]
            if isinstance(value, str):
                if value not in retained and value not in new_vars:
                    new_vars.append(value)
            elif isinstance(value, MPoly):
                if value.p != self.p:
                    raise VariableMismatch(
                        f"substituted polynomial for {v!r} has modulus {value.p}, "
                        f"expected {self.p}"
                    )
                for w in value.variables:
                    if value.degree_in(w) >= 0 and w not in retained and w not in new_vars:
                        new_vars.append(w)
        result_vars = tuple(retained + new_vars)
        p = self.p

        def lift(value: SubstValue) -> "MPoly":
            if isinstance(value, str):
                return MPoly.variable(result_vars, p, value)
            if isinstance(value, MPoly):
                positions = [
                    result_vars.index(w) if w in result_vars else -1
                    for w in value.variables
                ]
                terms = {}
                for exps, c in value.terms.items():
                    key = [0] * len(result_vars)
                    for pos, e in zip(positions, exps):
                        if e:
                            key[pos] = e
                    terms[tuple(key)] = c
                return MPoly(result_vars, p, terms)
            return MPoly.const(result_vars, p, value)

        value_polys = {}
        for v in self.variables:
            if v in assignments:
                value_polys[v] = lift(assignments[v])
            else:
                value_polys[v] = MPoly.variable(result_vars, p, v)

        result = MPoly.zero(result_vars, p)
        power_cache: dict[tuple[str, int], MPoly] = {}
        for exps, coeff in self.canonical_terms():
            term = MPoly.const(result_vars, p, coeff)
            for v, e in zip(self.variables, exps):
                if e == 0:
                    continue
                key = (v, e)
                pw = power_cache.get(key)
                if pw is None:
                    pw = value_polys[v] ** e
                    power_cache[key] = pw
                term = term * pw
            result = result + term
        return result

    def evaluate(self, assignments: Mapping[str, Scalar]) -> Scalar:
        """Evaluate at scalar values for every variable."""
        out = self.substitute(dict(assignments))
        return out.constant_value()

    def reduce_mod(self, p: int) -> "MPoly":
        """Reduce a rational-coefficient polynomial modulo a prime p."""
        if self.p != 0:
            raise ValueError(f"polynomial already has modulus {self.p}")
        out = {}
        for exps, coeff in self.terms.items():
            try:
                value = rat_to_fp(coeff, p)
            except DenominatorDivisibleByP:
                monomial = _monomial_str(self.variables, exps) or "1"
                raise DenominatorDivisibleByP(
                    f"coefficient {coeff} of monomial {monomial} cannot be "
                    f"reduced modulo {p}"
                ) from None
            if value:
                out[exps] = value
        return MPoly._raw(self.variables, p, out)

    # -- serialization -------------------------------------------------

    def to_terms_json(self) -> list[dict]:
        """Canonical JSON-ready term list."""
        out = []
        for exps, coeff in self.canonical_terms():
            if self.p:
                encoded: int | str = coeff
            elif coeff.denominator == 1:
                encoded = int(coeff)
            else:
                encoded = f"{coeff.numerator}/{coeff.denominator}"
            out.append({"exponents": list(exps), "coefficient": encoded})
        return out

    @classmethod
    def from_terms_json(cls, variables: Sequence[str], p: int, data: Iterable[dict]) -> "MPoly":
        terms = {}
        for item in data:
            coeff = item["coefficient"]
            if isinstance(coeff, str):
                coeff = Fraction(coeff)
            terms[tuple(item["exponents"])] = coeff
        return cls(variables, p, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.canonical_terms():
            mono = _monomial_str(self.variables, exps)
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self.variables!r}, {self.p}, {dict(self.canonical_terms())!r})"


def _monomial_str(variables: tuple[str, ...], exps: tuple[int, ...]) -> str:
    pieces = []
    for v, e in zip(variables, exps):
        if e == 1:
            pieces.append(v)
        elif e > 1:
            pieces.append(f"{v}^{e}")
    return "*".join(pieces)


class XPoly:
    """Polynomial in x with :class:`MPoly` coefficients (dense in x)."""

    __slots__ = ("variables", "p", "coeffs")

    def __init__(self, variables: Sequence[str], p: int, coeffs: Sequence[MPoly] = ()):
        variables = tuple(variables)
        for c in coeffs:
            if not isinstance(c, MPoly):
                raise TypeError("XPoly coefficients must be MPoly instances")
            if c.variables != variables or c.p != p:
                raise VariableMismatch(
                    "XPoly coefficient has mismatched variables or modulus"
                )
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str], p: int) -> "XPoly":
        return cls(variables, p, ())

    @classmethod
    def one(cls, variables: Sequence[str], p: int) -> "XPoly":
        return cls(variables, p, (MPoly.const(variables, p, 1),))

    @classmethod
    def from_scalar_coeffs(cls, variables: Sequence[str], p: int, values: Sequence[Scalar]) -> "XPoly":
        variables = tuple(variables)
        return cls(
            variables, p, [MPoly.const(variables, p, v) for v in values]
        )

    @classmethod
    def x_monomial(cls, variables: Sequence[str], p: int, degree: int, coeff: Scalar | MPoly = 1) -> "XPoly":
        variables = tuple(variables)
        if not isinstance(coeff, MPoly):
            coeff = MPoly.const(variables, p, coeff)
        zero = MPoly.zero(variables, p)
        return cls(variables, p, [zero] * degree + [coeff])

    # -- queries -------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> MPoly:
        """Coefficient of x^e (zero beyond the degree)."""
        if e < 0:
            raise ValueError(f"exponent must be nonnegative, got {e}")
        if e >= len(self.coeffs):
            return MPoly.zero(self.variables, self.p)
        return self.coeffs[e]

    def leading_coeff(self) -> MPoly:
        if not self.coeffs:
            return MPoly.zero(self.variables, self.p)
        return self.coeffs[-1]

    def variable_degree(self, name: str) -> int:
        return max((c.degree_in(name) for c in self.coeffs), default=-1)

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "XPoly") -> None:
        if self.variables != other.variables or self.p != other.p:
            raise VariableMismatch(
                f"incompatible polynomials: vars {self.variables}/{other.variables}, "
                f"moduli {self.p}/{other.p}"
            )

    def __add__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(
            self.variables,
            self.p,
            [self.coeff(i) + other.coeff(i) for i in range(n)],
        )

    def __neg__(self) -> "XPoly":
        return XPoly(self.variables, self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.__add__(other.__neg__())

    def scale(self, value: Scalar | MPoly) -> "XPoly":
        if isinstance(value, MPoly):
            return XPoly(self.variables, self.p, [c * value for c in self.coeffs])
        return XPoly(self.variables, self.p, [c.scale(value) for c in self.coeffs])

    def shift(self, k: int) -> "XPoly":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError(f"shift must be nonnegative, got {k}")
        if self.is_zero():
            return self
        zero = MPoly.zero(self.variables, self.p)
        return XPoly(self.variables, self.p, (zero,) * k + self.coeffs)

    def __mul__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return XPoly.zero(self.variables, self.p)
        if self.p:
            return _xpoly_mul_kernel(self, other)
        return _xpoly_mul_dict(self, other)

    def __pow__(self, exponent: int) -> "XPoly":
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        result = XPoly.one(self.variables, self.p)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "XPoly":
        """Derivative with respect to x."""
        return XPoly(
            self.variables,
            self.p,
            [self.coeffs[i].scale(i) for i in range(1, len(self.coeffs))],
        )

    def exponent_scale_vars(self, k: int) -> "XPoly":
        """Multiply all named-variable exponents by k (x-degrees unchanged)."""
        return XPoly(self.variables, self.p, [c.exponent_scale(k) for c in self.coeffs])

    def substitute(self, assignments: Mapping[str, SubstValue]) -> "XPoly":
        """Substitute into every coefficient (x is untouched)."""
        new_coeffs = [c.substitute(assignments) for c in self.coeffs]
        if new_coeffs:
            variables = new_coeffs[0].variables
            return XPoly(variables, self.p, new_coeffs)
        return self

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.variables, self.p, self.coeffs))

    def __reduce__(self):
        return (XPoly, (self.variables, self.p, self.coeffs))

    # -- serialization -------------------------------------------------

    def to_json(self) -> list[list[dict]]:
        """Coefficient term-lists by ascending x-degree."""
        return [c.to_terms_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, variables: Sequence[str], p: int, data: Iterable[Iterable[dict]]) -> "XPoly":
        return cls(
            variables,
            p,
            [MPoly.from_terms_json(variables, p, item) for item in data],
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c.is_zero():
                continue
            if e == 0:
                xpart = ""
            elif e == 1:
                xpart = "x"
            else:
                xpart = f"x^{e}"
            cstr = str(c)
            if not xpart:
                parts.append(cstr)
            elif cstr == "1":
                parts.append(xpart)
            elif len(c.terms) == 1 and not cstr.startswith("-") and "+" not in cstr:
                parts.append(f"{cstr}*{xpart}")
            else:
                parts.append(f"({cstr})*{xpart}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({self.variables!r}, {self.p}, deg={self.degree()})"


def _xpoly_mul_dict(a: XPoly, b: XPoly) -> XPoly:
    n = a.degree() + b.degree() + 1
    acc: list[MPoly] = [MPoly.zero(a.variables, a.p) for _ in range(n)]
    for i, ca in enumerate(a.coeffs):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b.coeffs):
            if cb.is_zero():
                continue
            acc[i + j] = acc[i + j] + ca * cb
    return XPoly(a.variables, a.p, acc)


def _xpoly_mul_kernel(a: XPoly, b: XPoly) -> XPoly:
    """Multiply two XPolys over F_p via the dense convolution kernel."""
    variables = a.variables
    p = a.p
    nv = len(variables)

    def box(poly: XPoly, dims: tuple[int, ...]) -> list[int]:
        strides = [1] * (nv + 1)
        for k in range(nv - 1, -1, -1):
            strides[k] = strides[k + 1] * dims[k + 1]
        flat = [0] * (dims[0] * strides[0])
        for d, coeff in enumerate(poly.coeffs):
            base = d * strides[0]
            for exps, c in coeff.terms.items():
                off = base
                for k in range(nv):
                    off += exps[k] * strides[k + 1]
                flat[off] = c
        return flat

    dims_a = (a.degree() + 1,) + tuple(a.variable_degree(v) + 1 for v in variables)
    dims_b = (b.degree() + 1,) + tuple(b.variable_degree(v) + 1 for v in variables)
    flat = kernels.mul_dense_mod(box(a, dims_a), dims_a, box(b, dims_b), dims_b, p)

    dims_out = kernels.output_dims(dims_a, dims_b)
    strides = [1] * (nv + 1)
    for k in range(nv - 1, -1, -1):
        strides[k] = strides[k + 1] * dims_out[k + 1]
    per_degree: list[dict] = [dict() for _ in range(dims_out[0])]
    for off, value in enumerate(flat):
        if not value:
            continue
        d, rem = divmod(off, strides[0])
        exps = [0] * nv
        for k in range(nv):
            exps[k], rem = divmod(rem, strides[k + 1])
        per_degree[d][tuple(exps)] = value
    coeffs = [MPoly._raw(variables, p, terms) for terms in per_degree]
    return XPoly(variables, p, coeffs)


def align_variables(poly: MPoly, variables: Sequence[str]) -> MPoly:
    """Re-express an MPoly over a given variable tuple.

    Variables of ``poly`` that are absent from ``variables`` must not occur
    with positive exponent; variables new to ``poly`` get exponent zero.
    """
    variables = tuple(variables)
    if poly.variables == variables:
        return poly
    positions = [
        variables.index(w) if w in variables else -1 for w in poly.variables
    ]
    terms = {}
    for exps, c in poly.terms.items():
        key = [0] * len(variables)
        for pos, e in zip(positions, exps):
            if e:
                if pos < 0:
                    raise VariableMismatch(
                        f"variable occurs with positive exponent but is absent "
                        f"from target tuple {variables}"
                    )
                key[pos] = e
        terms[tuple(key)] = c
    return MPoly(variables, poly.p, terms)


# -- module-level operation entry points -------------------------------


def mpoly_pow(base: XPoly, exponent: int) -> XPoly:
    """Raise a polynomial to a nonnegative power by binary exponentiation."""
    if not isinstance(base, XPoly):
        raise TypeError("mpoly_pow expects an XPoly base")
    return base ** exponent


def coeff_of_x(poly: XPoly, e: int) -> MPoly:
    """Coefficient of x^e (the zero polynomial beyond the degree)."""
    return poly.coeff(e)


def substitute(poly: MPoly, assignments: Mapping[str, SubstValue]) -> MPoly:
    """Substitute values/names/polynomials for variables of an MPoly."""
    return poly.substitute(assignments)


def reduce_mod_p(poly: MPoly, p: int) -> MPoly:
    """Reduce a rational-coefficient MPoly modulo a prime p."""
    return poly.reduce_mod(p)
