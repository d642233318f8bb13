"""Truncated big Witt vectors with exact universal operation polynomials.

A truncation set S is a finite divisor-closed set of positive integers;
W_S(R) has one coordinate a_d per d in S and ghost components

    w_n(a) = sum_{d | n, d in S} d * a_d^(n/d).

Ring operations are computed through universal polynomials with integer
coefficients, generated once per (operation, truncation set) by solving
the ghost system triangularly over Z[a_d, b_d]: the ghost of the result is
prescribed (sum, product, negation of ghosts, or a ghost shift for the
Frobenius), and each coordinate is recovered by an exact division by its
index.  A division leaving a remainder would falsify the integrality
theorem the whole construction rests on, so it raises FalsificationError.
Because the polynomials have integer coefficients they can then be
evaluated over any coefficient ring, torsion or not.

The p-typical theory is the special case S = {1, p, ..., p^(k-1)}.

Frobenius F_n lands in the quotient set S/n = {m : nm in S}; Verschiebung
V_n inserts coordinates along multiples of n; the Teichmueller lift [r]
has r in coordinate 1 and zeros elsewhere.  The twisted operator

    TF_n(a; t) = F_n(a) - [t]^(n-1) * restrict(a)

interpolates between F_n - id at t = 1 and F_n at t = 0.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import FalsificationError, InputError
from .poly import SparsePoly
from .rings import CoeffRing, IntegerRing, ring_from_json_obj


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


class TruncationSet:
    """A finite divisor-closed set of positive integers."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[int]):
        ms = sorted(set(members))
        if not ms:
            raise InputError("truncation set must be nonempty")
        if ms[0] < 1:
            raise InputError("truncation set members must be positive")
        for n in ms:
            for d in divisors(n):
                if d not in ms:
                    raise InputError(
                        f"truncation set is not divisor-closed: {d} divides {n}"
                    )
        self.members = tuple(ms)

    @classmethod
    def divisor_closure(cls, seeds: Iterable[int]) -> TruncationSet:
        out: set[int] = set()
        for n in seeds:
            out.update(divisors(n))
        return cls(out)

    @classmethod
    def p_typical(cls, p: int, length: int) -> TruncationSet:
        """{1, p, ..., p^(length-1)}."""
        if length < 1:
            raise InputError("length must be positive")
        return cls(p ** i for i in range(length))

    def quotient(self, n: int) -> TruncationSet:
        """S/n = {m : n*m in S}; empty quotients are rejected."""
        q = [m for m in range(1, max(self.members) + 1) if n * m in self.members]
        if not q:
            raise InputError(f"S/{n} is empty for S = {list(self.members)}")
        return TruncationSet(q)

    def __contains__(self, n: int) -> bool:
        return n in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncationSet):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.members) + "}"

    __repr__ = __str__


class WittVector:
    """A Witt vector: truncation set, coefficient ring, one component per
    member of S."""

    __slots__ = ("trunc", "ring", "comps")

    def __init__(self, trunc: TruncationSet, ring: CoeffRing, comps: Mapping[int, object]):
        missing = [d for d in trunc if d not in comps]
        extra = [d for d in comps if d not in trunc]
        if missing or extra:
            raise InputError(
                f"components must match the truncation set {trunc}: "
                f"missing {missing}, extra {extra}"
            )
        self.trunc = trunc
        self.ring = ring
        self.comps = {d: comps[d] for d in trunc}

    @classmethod
    def zero(cls, trunc: TruncationSet, ring: CoeffRing) -> WittVector:
        return cls(trunc, ring, {d: ring.zero() for d in trunc})

    @classmethod
    def from_list(cls, trunc: TruncationSet, ring: CoeffRing,
                  values: Sequence) -> WittVector:
        if len(values) != len(trunc):
            raise InputError(
                f"need {len(trunc)} components for {trunc}, got {len(values)}"
            )
        return cls(trunc, ring, dict(zip(trunc, values)))

    def component(self, d: int):
        if d not in self.trunc:
            raise InputError(f"{d} is not in the truncation set {self.trunc}")
        return self.comps[d]

    def as_list(self) -> list:
        return [self.comps[d] for d in self.trunc]

    def restrict(self, target: TruncationSet) -> WittVector:
        """Drop components outside a smaller truncation set."""
        for d in target:
            if d not in self.trunc:
                raise InputError(f"cannot restrict: {d} missing from {self.trunc}")
        return WittVector(target, self.ring, {d: self.comps[d] for d in target})

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(v) for v in self.comps.values())

    def _check_compatible(self, other: WittVector) -> None:
        if self.trunc != other.trunc:
            raise InputError(
                f"truncation sets differ: {self.trunc} vs {other.trunc}"
            )
        if self.ring != other.ring:
            raise InputError("coefficient rings differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WittVector):
            return NotImplemented
        return (
            self.trunc == other.trunc
            and self.ring == other.ring
            and all(self.ring.eq(self.comps[d], other.comps[d]) for d in self.trunc)
        )

    def __hash__(self) -> int:
        return hash((self.trunc, tuple(str(self.comps[d]) for d in self.trunc)))

    def __str__(self) -> str:
        body = ",".join(self.ring.element_str(self.comps[d]) for d in self.trunc)
        return f"({body})"

    def __repr__(self) -> str:
        return f"W{self.trunc}{self}"

    def to_json(self) -> str:
        return json.dumps(
            {
                "trunc": list(self.trunc),
                "ring": self.ring.to_json_obj(),
                "coeffs": {str(d): self.ring.element_str(self.comps[d])
                           for d in self.trunc},
            },
            sort_keys=True, separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> WittVector:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise InputError("Witt vector JSON must be an object")
        try:
            trunc = TruncationSet(int(d) for d in obj["trunc"])
            ring = ring_from_json_obj(obj["ring"])
            raw = obj["coeffs"]
        except KeyError as exc:
            raise InputError(f"missing key in Witt vector JSON: {exc}") from exc
        comps = {int(d): ring.element_from_str(str(v)) for d, v in raw.items()}
        return cls(trunc, ring, comps)


# -- ghost components -------------------------------------------------------


def ghost(a: WittVector) -> list:
    """All ghost components, in truncation-set order."""
    R = a.ring
    out = []
    for n in a.trunc:
        acc = R.zero()
        for d in divisors(n):
            if d in a.trunc:
                term = R.mul(R.from_int(d), R.pow(a.comps[d], n // d))
                acc = R.add(acc, term)
        out.append(acc)
    return out


def ghost_component(a: WittVector, n: int):
    R = a.ring
    acc = R.zero()
    for d in divisors(n):
        if d in a.trunc:
            acc = R.add(acc, R.mul(R.from_int(d), R.pow(a.comps[d], n // d)))
    return acc


# -- universal polynomials --------------------------------------------------


def _avar(d: int) -> SparsePoly:
    return SparsePoly.variable(f"a{d}")


def _bvar(d: int) -> SparsePoly:
    return SparsePoly.variable(f"b{d}")


def _symbolic_ghost(vars_of: Callable[[int], SparsePoly],
                    S: TruncationSet, n: int) -> SparsePoly:
    acc = SparsePoly()
    for d in divisors(n):
        if d in S:
            acc = acc + vars_of(d) ** (n // d) * d
    return acc


def _solve_ghost_system(targets: Mapping[int, SparsePoly],
                        S_out: TruncationSet, what: str) -> dict[int, SparsePoly]:
    """Find integer polynomials P_d, d in S_out, whose symbolic ghost
    matches the targets; the mainspring of the whole module.

    Triangular: n*P_n = target_n - sum_{d|n, d<n, d in S_out} d * P_d^(n/d),
    and the division by n must be exact over Z or the integrality theorem
    is falsified.
    """
    out: dict[int, SparsePoly] = {}
    for n in S_out:
        acc = targets[n]
        for d in divisors(n):
            if d in S_out and d != n:
                acc = acc - out[d] ** (n // d) * d
        cand = acc.exact_div(n)
        if not cand.is_integral():
            raise FalsificationError(
                f"universal {what} polynomial at index {n} is not integral"
            )
        out[n] = cand
    return out


_UNIVERSAL_CACHE: dict[tuple, dict[int, SparsePoly]] = {}


def universal_poly(op: str, S: TruncationSet, n: int | None = None) -> dict[int, SparsePoly]:
    """Universal polynomials for one operation over one truncation set.

    op is "sum", "product", "neg", or "frobenius" (which needs n); the
    result maps each output index to a polynomial in a_d (and b_d for the
    binary operations).  Memoized per (op, S, n).
    """
    key = (op, S.members, n)
    if key in _UNIVERSAL_CACHE:
        return _UNIVERSAL_CACHE[key]
    ghost_a = {m: _symbolic_ghost(_avar, S, m) for m in S}
    ghost_b = {m: _symbolic_ghost(_bvar, S, m) for m in S}
    if op == "sum":
        targets = {m: ghost_a[m] + ghost_b[m] for m in S}
        result = _solve_ghost_system(targets, S, "sum")
    elif op == "product":
        targets = {m: ghost_a[m] * ghost_b[m] for m in S}
        result = _solve_ghost_system(targets, S, "product")
    elif op == "neg":
        targets = {m: -ghost_a[m] for m in S}
        result = _solve_ghost_system(targets, S, "negation")
    elif op == "frobenius":
        if n is None:
            raise InputError("frobenius needs the index n")
        T = S.quotient(n)
        targets = {m: ghost_a[n * m] for m in T}
        result = _solve_ghost_system(targets, T, f"frobenius-{n}")
    else:
        raise InputError(f"unknown operation {op!r}")
    _UNIVERSAL_CACHE[key] = result
    return result


def evaluate_universal(p: SparsePoly, assignment: Mapping[str, object],
                       ring: CoeffRing):
    """Evaluate an integer polynomial at ring elements."""
    total = ring.zero()
    for mono, c in p.items():
        if c.denominator != 1:
            raise FalsificationError("universal polynomial has a rational coefficient")
        term = ring.from_int(int(c))
        for name, e in mono:
            if name not in assignment:
                raise InputError(f"no assignment for {name!r}")
            term = ring.mul(term, ring.pow(assignment[name], e))
        total = ring.add(total, term)
    return total


def _binary_assignment(a: WittVector, b: WittVector) -> dict[str, object]:
    out: dict[str, object] = {}
    for d in a.trunc:
        out[f"a{d}"] = a.comps[d]
    for d in b.trunc:
        out[f"b{d}"] = b.comps[d]
    return out


# -- arithmetic -------------------------------------------------------------


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    a._check_compatible(b)
    polys = universal_poly("sum", a.trunc)
    env = _binary_assignment(a, b)
    return WittVector(
        a.trunc, a.ring,
        {d: evaluate_universal(polys[d], env, a.ring) for d in a.trunc},
    )


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    a._check_compatible(b)
    polys = universal_poly("product", a.trunc)
    env = _binary_assignment(a, b)
    return WittVector(
        a.trunc, a.ring,
        {d: evaluate_universal(polys[d], env, a.ring) for d in a.trunc},
    )


def witt_neg(a: WittVector) -> WittVector:
    polys = universal_poly("neg", a.trunc)
    env = {f"a{d}": a.comps[d] for d in a.trunc}
    return WittVector(
        a.trunc, a.ring,
        {d: evaluate_universal(polys[d], env, a.ring) for d in a.trunc},
    )


def witt_sub(a: WittVector, b: WittVector) -> WittVector:
    return witt_add(a, witt_neg(b))


def witt_int(n: int, trunc: TruncationSet, ring: CoeffRing) -> WittVector:
    """The image of the integer n under Z -> W_S(R) (n-fold sum of 1)."""
    one = teichmuller(ring.one(), trunc, ring)
    acc = WittVector.zero(trunc, ring)
    k = abs(n)
    # double-and-add keeps this O(log n) Witt sums
    base = one
    while k:
        if k & 1:
            acc = witt_add(acc, base)
        if k > 1:
            base = witt_add(base, base)
        k >>= 1
    return witt_neg(acc) if n < 0 else acc


def witt_scalar(n: int, a: WittVector) -> WittVector:
    """n-fold additive multiple of a."""
    acc = WittVector.zero(a.trunc, a.ring)
    base = a
    k = abs(n)
    while k:
        if k & 1:
            acc = witt_add(acc, base)
        if k > 1:
            base = witt_add(base, base)
        k >>= 1
    return witt_neg(acc) if n < 0 else acc


# -- the standard operators -------------------------------------------------


def teichmuller(r, trunc: TruncationSet, ring: CoeffRing) -> WittVector:
    """[r] = (r, 0, ..., 0)."""
    comps = {d: ring.zero() for d in trunc}
    comps[1] = r
    return WittVector(trunc, ring, comps)


def frobenius(n: int, a: WittVector) -> WittVector:
    """F_n : W_S -> W_{S/n}, ghost_m(F_n a) = ghost_{nm}(a)."""
    if n < 1:
        raise InputError("Frobenius index must be positive")
    T = a.trunc.quotient(n)
    polys = universal_poly("frobenius", a.trunc, n)
    env = {f"a{d}": a.comps[d] for d in a.trunc}
    return WittVector(
        T, a.ring, {m: evaluate_universal(polys[m], env, a.ring) for m in T}
    )


def verschiebung(n: int, a: WittVector, target: TruncationSet) -> WittVector:
    """V_n : W_S -> W_T, (V_n a)_m = a_{m/n} when n | m and m/n in S.

    The caller supplies the divisor-closed target; it must satisfy
    T/n = S so no component of a is silently dropped.
    """
    if n < 1:
        raise InputError("Verschiebung index must be positive")
    if target.quotient(n) != a.trunc:
        raise InputError(
            f"target {target} does not satisfy T/{n} = {a.trunc}"
        )
    comps = {}
    for m in target:
        if m % n == 0 and (m // n) in a.trunc:
            comps[m] = a.comps[m // n]
        else:
            comps[m] = a.ring.zero()
    return WittVector(target, a.ring, comps)


def twisted_frobenius(n: int, a: WittVector, t) -> WittVector:
    """TF_n(a; t) = F_n(a) - [t]^(n-1) * restrict(a), valued in W_{S/n}.

    t is a ring element; t = ring.one() degenerates to F_n - restrict and
    t = ring.zero() to F_n.
    """
    T = a.trunc.quotient(n)
    lead = frobenius(n, a)
    tei = teichmuller(t, T, a.ring)
    tw = witt_mul(_witt_pow(tei, n - 1), a.restrict(T))
    return witt_sub(lead, tw)


def _witt_pow(a: WittVector, k: int) -> WittVector:
    if k < 0:
        raise InputError("negative Witt powers are not defined")
    result = witt_int(1, a.trunc, a.ring)
    base = a
    while k:
        if k & 1:
            result = witt_mul(result, base)
        if k > 1:
            base = witt_mul(base, base)
        k >>= 1
    return result


witt_pow = _witt_pow


# -- ghost inversion over Z -------------------------------------------------


def from_ghost(values: Sequence[int], trunc: TruncationSet) -> WittVector:
    """Recover the integer Witt vector with the given ghost components.

    Only defined over Z (torsion-free, so the triangular solve is exact
    when solvable); raises InputError when the ghost vector is not in the
    image.
    """
    ring = IntegerRing()
    if len(values) != len(trunc):
        raise InputError("ghost vector length does not match the truncation set")
    vals = dict(zip(trunc, values))
    comps: dict[int, int] = {}
    for m in trunc:
        acc = vals[m]
        for d in divisors(m):
            if d in trunc and d != m:
                acc -= d * comps[d] ** (m // d)
        if acc % m:
            raise InputError(
                f"ghost vector is not integral at index {m}: remainder {acc % m}"
            )
        comps[m] = acc // m
    return WittVector(trunc, ring, comps)


def divides_additively(p: int, a: WittVector) -> bool:
    """Whether a = p . z for some z in W_S(Z) (additive p-th multiple).

    Over Z this is decidable through ghosts: p.z has ghost p*ghost(z), so
    divide the ghost vector by p and ask whether it de-ghosts integrally.
    """
    if not isinstance(a.ring, IntegerRing):
        raise InputError("additive divisibility is only decided over Z")
    gh = ghost(a)
    if any(g % p for g in gh):
        return False
    try:
        from_ghost([g // p for g in gh], a.trunc)
    except InputError:
        return False
    return True


# -- kernels ----------------------------------------------------------------


def all_vectors(trunc: TruncationSet, ring: CoeffRing,
                bound: int = 200_000) -> Iterator[WittVector]:
    """Every Witt vector over a finite ring, in deterministic order."""
    if not ring.is_finite:
        raise InputError(f"cannot enumerate Witt vectors over {ring}")
    total = ring.size() ** len(trunc)
    if total > bound:
        raise InputError(
            f"enumeration of {total} vectors exceeds the bound {bound}"
        )
    pools = [list(ring.elements()) for _ in trunc]
    for combo in itertools.product(*pools):
        yield WittVector.from_list(trunc, ring, list(combo))


def kernel_enumerate(op: Callable[[WittVector], WittVector],
                     trunc: TruncationSet, ring: CoeffRing,
                     bound: int = 200_000) -> list[WittVector]:
    """Brute-force kernel of an additive operator on W_S(R), R finite.

    Sanity-checks the subgroup property on the result (closure under the
    Witt sum); an operator that is not additive will usually fail that
    check and the failure is reported as such.
    """
    kernel = [a for a in all_vectors(trunc, ring, bound) if op(a).is_zero()]
    _check_subgroup(kernel, trunc, ring)
    return kernel


def _check_subgroup(vectors: list[WittVector], trunc: TruncationSet,
                    ring: CoeffRing) -> None:
    """Zero present and closure under the Witt sum, on a sample when the
    kernel is large."""
    if not any(v.is_zero() for v in vectors):
        raise FalsificationError("kernel does not contain zero")
    seen = {str(v) for v in vectors}
    pairs = itertools.product(vectors, vectors)
    if len(vectors) > 25:
        pairs = itertools.islice(pairs, 625)
    for x, y in pairs:
        if str(witt_add(x, y)) not in seen:
            raise FalsificationError(
                "kernel is not closed under addition; operator not additive?"
            )


def stable_twisted_kernel(n: int, t, trunc: TruncationSet, ring: CoeffRing,
                          bound: int = 200_000) -> list[WittVector]:
    """Members of ker(TF_n(-; t)) on W_S that lift to kernel elements one
    truncation level deeper.

    The twisted kernels form an inverse system as the truncation set
    grows; the honest finite-level kernel can overshoot the limit because
    the constraint coming from the next level is invisible.  One extra
    level is enough to stabilize over the finite rings handled here, and
    the enumeration stays exhaustive: search ker(TF_n) on the deepened
    set and project.
    """
    deep = TruncationSet.divisor_closure(
        set(trunc.members) | {n * d for d in trunc}
    )
    found: list[WittVector] = []
    seen: set[str] = set()
    for a in all_vectors(deep, ring, bound):
        if twisted_frobenius(n, a, t).is_zero():
            small = a.restrict(trunc)
            key = str(small)
            if key not in seen:
                seen.add(key)
                found.append(small)
    _check_subgroup(found, trunc, ring)
    return found
