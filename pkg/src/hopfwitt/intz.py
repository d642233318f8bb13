"""The ring of integer-valued polynomials on its binomial basis.

Elements are finite Z-linear combinations of C(x,n) = x(x-1)...(x-n+1)/n!,
stored as a map from basis index to integer coefficient.  This basis is
free over Z, products are computed by expanding to Q[x], multiplying, and
transforming back (any non-integer coefficient on the way back would
falsify integer-valuedness and raises FalsificationError), and the Hopf
structure is:

- comultiplication  Delta C(x,n) = sum_{i+j=n} C(x,i) (x) C(x,j),
  the coefficient-level form of the Vandermonde identity
  C(a+b,n) = sum C(a,i) C(b,j);
- counit: evaluation at 0;
- antipode: the unique degree-recursive solution of
  m (S (x) id) Delta = unit . counit, which works out to f(x) |-> f(-x).

The same module holds the degree filtration (span of C(x,k), k <= n) and
the pairing against Z[[u]], u = t-1, under which C(x,n) is dual to u^n and
integer points become group-like series (1+u)^a.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterator, Mapping

from .binomial import binomial_expand, binomial_int, binomial_poly, binomial_transform
from .errors import FalsificationError, InputError
from .poly import SparsePoly
from .series import TruncSeries


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class IntZElement:
    """An integer-valued polynomial in binomial-basis coordinates."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for n, c in coeffs.items():
                if n < 0:
                    raise InputError("basis indices must be nonnegative")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise InputError("basis coefficients must be integers")
                if c:
                    clean[n] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def basis(cls, n: int) -> IntZElement:
        return cls({n: 1})

    @classmethod
    def one(cls) -> IntZElement:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> IntZElement:
        return cls()

    @classmethod
    def from_poly(cls, p: SparsePoly, var: str = "x") -> IntZElement:
        """Transform p in Q[x] to the binomial basis; non-integer-valued
        input is a caller error."""
        coeffs = binomial_transform(p, var)
        out: dict[int, int] = {}
        for n, c in enumerate(coeffs):
            if c.denominator != 1:
                raise InputError(
                    f"polynomial is not integer-valued: C(x,{n}) coefficient {c}"
                )
            if c:
                out[n] = int(c)
        return cls(out)

    # -- queries -----------------------------------------------------------

    def coefficient(self, n: int) -> int:
        return self._coeffs.get(n, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def to_poly(self, var: str = "x") -> SparsePoly:
        return binomial_expand(self._coeffs, var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntZElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # -- additive structure ------------------------------------------------

    def __add__(self, other: IntZElement) -> IntZElement:
        out = dict(self._coeffs)
        for n, c in other._coeffs.items():
            s = out.get(n, 0) + c
            if s:
                out[n] = s
            else:
                out.pop(n, None)
        return IntZElement(out)

    def __neg__(self) -> IntZElement:
        return IntZElement({n: -c for n, c in self._coeffs.items()})

    def __sub__(self, other: IntZElement) -> IntZElement:
        return self + (-other)

    def scale(self, k: int) -> IntZElement:
        return IntZElement({n: k * c for n, c in self._coeffs.items()})

    # -- text and JSON forms ----------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for n, c in sorted(self._coeffs.items()):
            if n == 0:
                chunk = str(abs(c))
            elif abs(c) == 1:
                chunk = f"C(x,{n})"
            else:
                chunk = f"{abs(c)}*C(x,{n})"
            if not parts:
                parts.append(chunk if c > 0 else "-" + chunk)
            else:
                parts.append(("+" if c > 0 else "-") + chunk)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntZElement({self})"

    @classmethod
    def parse(cls, text: str) -> IntZElement:
        """Accepts sums like ``3*C(x,2)+C(x,1)-4``."""
        import re

        if not text.strip():
            raise InputError("empty element")
        coeffs: dict[int, int] = {}
        pos = 0
        term_re = re.compile(
            r"\s*(?P<sign>[+-])?\s*(?:"
            r"(?P<coef>\d+)\s*(?P<star>\*)?\s*)?"
            r"(?:C\(\s*x\s*,\s*(?P<idx>\d+)\s*\))?"
        )
        first = True
        while pos < len(text.rstrip()):
            m = term_re.match(text, pos)
            if not m or m.end() == pos:
                raise InputError(f"bad element syntax at: {text[pos:]!r}")
            sign, coef, star, idx = m.group("sign", "coef", "star", "idx")
            if sign is None and not first:
                raise InputError(f"missing +/- between terms in {text!r}")
            if coef is None and idx is None:
                raise InputError(f"empty term in {text!r}")
            if coef is not None and idx is None and star is not None:
                raise InputError(f"dangling * in {text!r}")
            s = -1 if sign == "-" else 1
            c = int(coef) if coef is not None else 1
            n = int(idx) if idx is not None else 0
            coeffs[n] = coeffs.get(n, 0) + s * c
            pos = m.end()
            first = False
        return cls(coeffs)

    def to_json(self) -> str:
        return json.dumps(
            {"coeffs": {str(n): str(c) for n, c in sorted(self._coeffs.items())}},
            sort_keys=True, separators=(",", ":"),
        )

    @classmethod
    def from_json_obj(cls, obj: object) -> IntZElement:
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise InputError("element JSON must be an object with a 'coeffs' key")
        raw = obj["coeffs"]
        if not isinstance(raw, dict):
            raise InputError("'coeffs' must be an object")
        try:
            return cls({int(n): int(c) for n, c in raw.items()})
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad element JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> IntZElement:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from exc
        return cls.from_json_obj(obj)


class TensorElement:
    """An element of IntZ (x) IntZ in the basis C(x,m) (x) C(x,n)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if coeffs:
            for (m, n), c in coeffs.items():
                if m < 0 or n < 0:
                    raise InputError("basis indices must be nonnegative")
                if c:
                    clean[(m, n)] = c
        self._coeffs = clean

    @classmethod
    def simple(cls, f: IntZElement, g: IntZElement) -> TensorElement:
        out: dict[tuple[int, int], int] = {}
        for m, a in f.items():
            for n, b in g.items():
                out[(m, n)] = a * b
        return cls(out)

    def coefficient(self, m: int, n: int) -> int:
        return self._coeffs.get((m, n), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0][0])))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __add__(self, other: TensorElement) -> TensorElement:
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElement(out)

    def __neg__(self) -> TensorElement:
        return TensorElement({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def multiply(self, other: TensorElement) -> TensorElement:
        """Componentwise product (f (x) g)(f' (x) g') = ff' (x) gg'."""
        out: dict[tuple[int, int], int] = {}
        for (m1, n1), c1 in self._coeffs.items():
            for (m2, n2), c2 in other._coeffs.items():
                left = basis_product(m1, m2)
                right = basis_product(n1, n2)
                for i, a in left.items():
                    for j, b in right.items():
                        key = (i, j)
                        s = out.get(key, 0) + c1 * c2 * a * b
                        if s:
                            out[key] = s
                        else:
                            out.pop(key, None)
        return TensorElement(out)

    def contract_product(self) -> IntZElement:
        """Apply the multiplication map, m(f (x) g) = f*g."""
        total = IntZElement()
        for (m, n), c in self._coeffs.items():
            total = total + basis_product(m, n).scale(c)
        return total

    def map_left(self, fn) -> "dict[tuple[int, int, int], int]":
        """Apply an IntZElement -> TensorElement map to the left slot,
        yielding coefficients on C_i (x) C_j (x) C_k."""
        out: dict[tuple[int, int, int], int] = {}
        for (m, n), c in self._coeffs.items():
            inner: TensorElement = fn(IntZElement.basis(m))
            for (i, j), d in inner._coeffs.items():
                key = (i, j, n)
                s = out.get(key, 0) + c * d
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def map_right(self, fn) -> "dict[tuple[int, int, int], int]":
        out: dict[tuple[int, int, int], int] = {}
        for (m, n), c in self._coeffs.items():
            inner: TensorElement = fn(IntZElement.basis(n))
            for (j, k), d in inner._coeffs.items():
                key = (m, j, k)
                s = out.get(key, 0) + c * d
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"

        def side(n: int) -> str:
            return "1" if n == 0 else f"C(x,{n})"

        parts: list[str] = []
        for (m, n), c in self.items():
            body = f"{side(m)}@{side(n)}"
            chunk = body if abs(c) == 1 else f"{abs(c)}*{body}"
            if not parts:
                parts.append(chunk if c > 0 else "-" + chunk)
            else:
                parts.append(("+" if c > 0 else "-") + chunk)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"TensorElement({self})"

    def to_json(self) -> str:
        return json.dumps(
            {"coeffs": {f"{m},{n}": str(c) for (m, n), c in self.items()}},
            sort_keys=True, separators=(",", ":"),
        )


# -- ring and Hopf operations ---------------------------------------------


def mult(f: IntZElement, g: IntZElement) -> IntZElement:
    """Product, via expansion to Q[x] and the binomial transform back.

    The re-transform landing outside Z would contradict closure of the
    integer-valued subring under multiplication, so it raises
    FalsificationError rather than InputError.
    """
    p = f.to_poly() * g.to_poly()
    coeffs = binomial_transform(p)
    out: dict[int, int] = {}
    for n, c in enumerate(coeffs):
        if c.denominator != 1:
            raise FalsificationError(
                f"product left the integral lattice at C(x,{n}): {c}"
            )
        if c:
            out[n] = int(c)
    return IntZElement(out)


_BASIS_PRODUCT_CACHE: dict[tuple[int, int], IntZElement] = {}


def basis_product(m: int, n: int) -> IntZElement:
    """Cached C(x,m) * C(x,n); the repeated-product workhorse."""
    key = (m, n) if m <= n else (n, m)
    if key not in _BASIS_PRODUCT_CACHE:
        _BASIS_PRODUCT_CACHE[key] = mult(
            IntZElement.basis(key[0]), IntZElement.basis(key[1])
        )
    return _BASIS_PRODUCT_CACHE[key]


def comult(f: IntZElement) -> TensorElement:
    """Delta C(x,n) = sum_{i+j=n} C(x,i) (x) C(x,j), extended Z-linearly."""
    out: dict[tuple[int, int], int] = {}
    for n, c in f.items():
        for i in range(n + 1):
            key = (i, n - i)
            out[key] = out.get(key, 0) + c
    return TensorElement(out)


def counit(f: IntZElement) -> int:
    """Evaluation at 0: only C(x,0) survives."""
    return f.coefficient(0)


def eval_at(f: IntZElement, a: int) -> int:
    """Value at an integer point, a sum of generalized binomials."""
    return sum(c * binomial_int(a, n) for n, c in f.items())


_ANTIPODE_CACHE: dict[int, IntZElement] = {}


def antipode_basis(n: int) -> IntZElement:
    """S(C(x,n)), solved degree by degree from m(S (x) id)Delta = unit.counit.

    For n >= 1 the axiom forces S(C_n) = -sum_{i<n} S(C_i) * C_{n-i}; the
    base case is S(1) = 1.
    """
    if n < 0:
        raise InputError("basis index must be nonnegative")
    if n in _ANTIPODE_CACHE:
        return _ANTIPODE_CACHE[n]
    if n == 0:
        result = IntZElement.one()
    else:
        acc = IntZElement()
        for i in range(n):
            acc = acc + mult(antipode_basis(i), IntZElement.basis(n - i))
        result = -acc
    _ANTIPODE_CACHE[n] = result
    return result


def antipode(f: IntZElement) -> IntZElement:
    total = IntZElement()
    for n, c in f.items():
        total = total + antipode_basis(n).scale(c)
    return total


# -- filtration -------------------------------------------------------------


def filtration_degree(f: IntZElement) -> int | None:
    """Smallest n with f in fil^n = span{C(x,k): k <= n}; None for 0.

    None plays the role of -infinity: the zero element lies in every
    filtration stage.
    """
    if f.is_zero():
        return None
    return max(f.support())


def fil_member(f: IntZElement, n: int) -> bool:
    d = filtration_degree(f)
    return d is None or d <= n


def graded_constant(m: int, n: int) -> int:
    """Top binomial-basis coefficient of C(x,m) * C(x,n).

    This is the structure constant of the associated graded divided power
    algebra, gamma_m gamma_n = C(m+n, n) gamma_{m+n}; it is extracted from
    the actual product, not from the closed form.
    """
    if m < 0 or n < 0:
        raise InputError("basis indices must be nonnegative")
    return mult(IntZElement.basis(m), IntZElement.basis(n)).coefficient(m + n)


# -- Frobenius congruence ---------------------------------------------------


def frobenius_mod_p_identity(f: IntZElement, p: int) -> bool:
    """Whether f^p == f modulo p, the perfectness witness mod p.

    The binomial coefficients of g = f^p - f are integer combinations of
    the values g(0..deg g), so the whole check runs on the value table
    reduced mod p: build the difference table of (f(k)^p - f(k)) mod p and
    ask that every leading entry vanishes.  No rational arithmetic and no
    degree-p*deg(f) expansion is ever materialized.
    """
    if not is_prime(p):
        raise InputError(f"modulus {p} is not prime")
    d = filtration_degree(f)
    if d is None:
        return True
    bound = p * d + 1
    row = []
    for k in range(bound):
        v = eval_at(f, k) % p
        row.append((pow(v, p, p) - v) % p)
    while row:
        if row[0] % p:
            return False
        row = [(row[i + 1] - row[i]) % p for i in range(len(row) - 1)]
    return True


# -- duality pairing --------------------------------------------------------


def pair(f: IntZElement, s: TruncSeries) -> int:
    """<C(x,n), u^k> = delta_{n,k}, extended bilinearly.

    The series truncation must exceed every basis index of f, otherwise
    dropped terms could contribute and the answer would be untrustworthy.
    """
    d = filtration_degree(f)
    if d is not None and s.trunc <= d:
        raise InputError(
            f"series truncation {s.trunc} too small for element of degree {d}"
        )
    return sum(c * s.coefficient(n) for n, c in f.items())


def series_group_law(s: TruncSeries, left_var: str = "u1", right_var: str = "u2") -> SparsePoly:
    """Push s through u |-> u1 + u2 + u1*u2, truncating each variable at
    the truncation order.  This is the formal-group comultiplication on
    the dual side (multiplicativity of t = 1 + u)."""
    u1 = SparsePoly.variable(left_var)
    u2 = SparsePoly.variable(right_var)
    law = u1 + u2 + u1 * u2
    total = SparsePoly()
    power = SparsePoly.constant(1)
    for k in range(s.trunc):
        c = s.coefficient(k)
        if c:
            total = total + power * c
        if k + 1 < s.trunc:
            power = _truncate_bidegree(power * law, left_var, right_var, s.trunc)
    return total


def _truncate_bidegree(p: SparsePoly, v1: str, v2: str, bound: int) -> SparsePoly:
    kept = {}
    for mono, c in p.items():
        exps = dict(mono)
        if exps.get(v1, 0) < bound and exps.get(v2, 0) < bound:
            kept[mono] = c
    return SparsePoly(kept)


def pair_tensor(te: TensorElement, law: SparsePoly,
                left_var: str = "u1", right_var: str = "u2") -> int:
    """Pair f (x) g against a bivariate series, slot by slot."""
    total = 0
    for (m, n), c in te.items():
        mono: list[tuple[str, int]] = []
        if m:
            mono.append((left_var, m))
        if n:
            mono.append((right_var, n))
        coeff = law.coefficient(tuple(sorted(mono)))
        if coeff.denominator != 1:
            raise InputError("bivariate series has non-integer coefficients")
        total += c * int(coeff)
    return total


def group_like(a: int, trunc: int, var: str = "u") -> TruncSeries:
    """(1+u)^a, the group-like series attached to the integer point a."""
    return TruncSeries.binomial_power(a, var, trunc)
