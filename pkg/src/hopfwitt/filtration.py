"""Filtered and graded Z-modules, Rees algebras, and a deformed binomial basis.

A FilteredModule is a decreasing filtration of a finite free Z-module
with injective structure maps and a bounded support range: below n_min
every stage equals the underlying module, above n_max every stage is
zero.  This shape makes the convolution tensor product a plain sum of
image lattices, computed exactly with Hermite normal forms.

GradedAlgebraPresentation holds a weight-graded commutative algebra over
Z or Z[t] by generators and structure constants.  rees() produces the
one-parameter deformation of the binomial ring whose specializations at
t=1 and t=0 recover the original product and its divided-power shadow.
The same deformation is realized polynomially by the basis
b_n(x,t) = x(x-t)...(x-t(n-1))/n!, whose structure constants are
computed by exact division and certified to lie in Z[t].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import json

from . import intz, linalg
from .errors import FalsificationError, InputError
from .poly import SparsePoly

Matrix = list[list[int]]


class FilteredModule:
    """Decreasing filtration X^n of a finite free Z-module.

    ranks[i] is the rank of stage n_min + i; maps[i] is the injection of
    stage n_min + i + 1 into stage n_min + i as an integer matrix acting
    on column vectors.  Stage n_min is the underlying module and stage
    n_max + 1 is zero.
    """

    def __init__(self, n_min: int, n_max: int, ranks: list[int], maps: list[Matrix]):
        if n_max < n_min:
            raise InputError("empty filtration range")
        if len(ranks) != n_max - n_min + 1:
            raise InputError("rank list does not match the range")
        if len(maps) != len(ranks) - 1:
            raise InputError("need one structure map per adjacent pair of stages")
        for i, M in enumerate(maps):
            r, c = linalg.shape(M)
            if (r, c) != (ranks[i], ranks[i + 1]):
                raise InputError(
                    f"structure map {i} has shape {r}x{c}, expected {ranks[i]}x{ranks[i + 1]}")
            if linalg.rank(M) != c:
                raise InputError(f"structure map into stage {n_min + i} is not injective")
        self.n_min = n_min
        self.n_max = n_max
        self.ranks = list(ranks)
        self.maps = [[row[:] for row in M] for M in maps]

    # -- constructors -------------------------------------------------

    @classmethod
    def concentrated(cls, rank: int, level: int = 0) -> FilteredModule:
        """Free module of the given rank sitting through stage `level`.

        Stages at or below `level` are the whole module, stages above it
        vanish: the one-step filtration often written L_level.
        """
        if rank < 0:
            raise InputError("rank must be nonnegative")
        return cls(level, level, [rank], [])

    @classmethod
    def from_lattices(cls, ambient_rank: int, n_min: int, lattices: list[Matrix]) -> FilteredModule:
        """Build from per-stage spanning columns inside a fixed ambient Z^r.

        lattices[i] is a matrix whose columns span stage n_min + i.
        Each stage must be contained in the previous one; stage 0 must
        span the ambient.  Bases and maps are canonicalized via HNF.
        """
        if not lattices:
            raise InputError("need at least one stage")
        bases: list[Matrix] = []
        for cols in lattices:
            if cols and len(cols) != ambient_rank:
                raise InputError("lattice columns must live in the ambient module")
            nonempty = cols and len(cols[0]) > 0
            rows = linalg.row_hnf(linalg.transpose(cols)) if nonempty else []
            bases.append(linalg.transpose(rows) if rows else [[] for _ in range(ambient_rank)])
        if linalg.row_hnf(linalg.transpose(bases[0])) != linalg.identity(ambient_rank):
            raise InputError("bottom stage must span the ambient module")
        ranks = [linalg.shape(B)[1] for B in bases]
        maps: list[Matrix] = []
        for i in range(len(bases) - 1):
            sols = []
            for j in range(ranks[i + 1]):
                v = [bases[i + 1][a][j] for a in range(ambient_rank)]
                sol = linalg.solve_integer(bases[i], v)
                if sol is None:
                    raise InputError(
                        f"stage {n_min + i + 1} is not contained in stage {n_min + i}")
                sols.append(sol)
            maps.append(linalg.transpose(sols) if sols else [[] for _ in range(ranks[i])])
        return cls(n_min, n_min + len(lattices) - 1, ranks, maps)

    # -- queries ------------------------------------------------------

    def rank_at(self, n: int) -> int:
        if n <= self.n_min:
            return self.ranks[0]
        if n > self.n_max:
            return 0
        return self.ranks[n - self.n_min]

    def embedding(self, n: int) -> Matrix:
        """Matrix of stage n inside the underlying module (stage n_min)."""
        if n <= self.n_min:
            return linalg.identity(self.ranks[0])
        if n > self.n_max:
            return [[] for _ in range(self.ranks[0])]
        M = linalg.identity(self.ranks[0])
        for i in range(n - self.n_min):
            M = linalg.mat_mul(M, self.maps[i])
        return M

    def image_lattice(self, n: int) -> Matrix:
        """Canonical HNF basis (rows) of stage n inside the underlying module."""
        E = self.embedding(n)
        if linalg.shape(E)[1] == 0:
            return []
        return linalg.row_hnf(linalg.transpose(E))

    def profile(self) -> tuple:
        lo, hi = self.n_min, self.n_max
        return (lo, hi,
                tuple(tuple(map(tuple, self.image_lattice(n))) for n in range(lo, hi + 1)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredModule):
            return NotImplemented
        return self.ranks[0] == other.ranks[0] and self.profile() == other.profile()

    def shift(self, k: int) -> FilteredModule:
        """Reindex: stage n of the shift is stage n - k of the original."""
        return FilteredModule(self.n_min + k, self.n_max + k, self.ranks, self.maps)

    def to_json(self) -> str:
        return json.dumps(
            {"n_min": self.n_min, "n_max": self.n_max, "ranks": self.ranks, "maps": self.maps},
            separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> FilteredModule:
        try:
            obj = json.loads(text)
            return cls(int(obj["n_min"]), int(obj["n_max"]),
                       [int(r) for r in obj["ranks"]],
                       [[[int(x) for x in row] for row in M] for M in obj["maps"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad filtered module JSON: {exc}") from None


def degree_filtration_module(N: int) -> FilteredModule:
    """Filtration of the rank N+1 binomial span where stage q keeps the
    basis elements of index q through N.  Every graded piece has rank one."""
    if N < 0:
        raise InputError("N must be nonnegative")
    ranks = [N + 1 - q for q in range(N + 1)]
    maps = []
    for q in range(N):
        r = ranks[q]
        maps.append([[1 if a == b + 1 else 0 for b in range(r - 1)] for a in range(r)])
    return FilteredModule(0, N, ranks, maps)


def day_tensor(X: FilteredModule, Y: FilteredModule) -> FilteredModule:
    """Convolution tensor: stage n is the sum of the images of
    (stage i of X) tensor (stage j of Y) over i + j = n, inside the
    tensor product of the underlying modules."""
    ambient = X.ranks[0] * Y.ranks[0]
    lo = X.n_min + Y.n_min
    hi = X.n_max + Y.n_max
    lattices = []
    for n in range(lo, hi + 1):
        blocks = []
        for i in range(X.n_min, X.n_max + 1):
            j = n - i
            if j > Y.n_max:
                continue
            blocks.append(linalg.kron(X.embedding(i), Y.embedding(max(j, Y.n_min))))
        lattices.append(linalg.hstack(blocks, ambient))
    return FilteredModule.from_lattices(ambient, lo, lattices)


def associated_graded(X: FilteredModule) -> dict[int, int]:
    """Ranks of the graded pieces stage n / stage n+1.

    Quotients must be free: a structure map whose cokernel has torsion
    (an invariant factor above one) is rejected.
    """
    out: dict[int, int] = {}
    for idx in range(len(X.ranks)):
        n = X.n_min + idx
        if idx < len(X.maps):
            M = X.maps[idx]
            if any(d not in (0, 1) for d in linalg.invariant_factors(M)):
                raise InputError(
                    f"graded piece at stage {n} has torsion; only split filtrations are supported")
            out[n] = X.ranks[idx] - X.ranks[idx + 1]
        else:
            out[n] = X.ranks[idx]
    assert sum(out.values()) == X.ranks[0]
    return out


# -- graded algebra presentations ------------------------------------

_ONE = SparsePoly.constant(1)


def _t_poly(x) -> SparsePoly:
    if isinstance(x, SparsePoly):
        return x
    return SparsePoly.constant(x)


class GradedAlgebraPresentation:
    """Weight-graded commutative algebra given by generators and constants.

    Generators are labels with nonnegative weights; structure constants
    are integer polynomials in t, where t itself carries weight one.
    Products are stored for generator pairs whose weights sum to at most
    `bound`.  A presentation whose constants are free of t is an
    ordinary graded algebra over Z.
    """

    def __init__(self, generators: list[tuple[str, int]], unit: str,
                 constants: dict[tuple[str, str], dict[str, SparsePoly]], bound: int,
                 homogeneous: bool = True):
        labels = [g for g, _ in generators]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate generator labels")
        self.generators = list(generators)
        self.weights = dict(generators)
        if unit not in self.weights or self.weights[unit] != 0:
            raise InputError("unit must be a generator of weight zero")
        self.unit = unit
        self.bound = bound
        self.homogeneous = homogeneous
        self.constants: dict[tuple[str, str], dict[str, SparsePoly]] = {}
        for (i, j), out in constants.items():
            cleaned = {k: _t_poly(v) for k, v in out.items() if not _t_poly(v).is_zero()}
            self.constants[(i, j)] = cleaned
            self.constants[(j, i)] = cleaned
        self._validate()

    def _validate(self):
        for (i, j), out in self.constants.items():
            if i not in self.weights or j not in self.weights:
                raise InputError(f"constants reference unknown labels {i}, {j}")
            w = self.weights[i] + self.weights[j]
            if w > self.bound:
                raise InputError(f"product ({i},{j}) exceeds the weight bound")
            for k, poly in out.items():
                if k not in self.weights:
                    raise InputError(f"product ({i},{j}) hits unknown label {k}")
                if not poly.is_integral():
                    raise InputError(f"constant for {k} in ({i},{j}) is not integral")
                if not poly.is_univariate_in("t"):
                    raise InputError(f"constant for {k} in ({i},{j}) involves variables other than t")
                if self.homogeneous:
                    for mono, _ in poly.items():
                        d = dict(mono).get("t", 0)
                        if self.weights[k] + d != w:
                            raise InputError(
                                f"constant t^{d}*{k} in ({i},{j}) breaks weight homogeneity")
        for g, wg in self.generators:
            if wg <= self.bound:
                if self.constants.get((self.unit, g)) != {g: _ONE}:
                    raise InputError(f"unit law fails on {g}")

    def product(self, i: str, j: str) -> dict[str, SparsePoly]:
        if (i, j) not in self.constants:
            raise InputError(f"product ({i},{j}) not stored (weight bound {self.bound})")
        return dict(self.constants[(i, j)])

    def multiply(self, x: dict[str, SparsePoly], y: dict[str, SparsePoly]) -> dict[str, SparsePoly]:
        """Product of Z[t]-combinations of generators."""
        acc: dict[str, SparsePoly] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.product(i, j).items():
                    acc[k] = acc.get(k, SparsePoly()) + a * b * c
        return {k: v for k, v in acc.items() if not v.is_zero()}

    def check_associative(self, max_weight: int | None = None) -> None:
        """(xy)z = x(yz) for generator triples within the weight budget."""
        limit = self.bound if max_weight is None else min(max_weight, self.bound)
        gens = [g for g, w in self.generators if w <= limit]
        for a in gens:
            for b in gens:
                if self.weights[a] + self.weights[b] > limit:
                    continue
                ab = self.multiply({a: _ONE}, {b: _ONE})
                for c in gens:
                    if self.weights[a] + self.weights[b] + self.weights[c] > limit:
                        continue
                    one = self.multiply(ab, {c: _ONE})
                    two = self.multiply({a: _ONE}, self.multiply({b: _ONE}, {c: _ONE}))
                    if one != two:
                        raise FalsificationError(f"associativity fails on ({a},{b},{c})")

    def weight_rank(self, n: int) -> int:
        """Z-rank of the weight n piece of the free Z[t]-module on the
        generators, with t of weight one."""
        return sum(1 for _, w in self.generators if w <= n)

    def specialize(self, value) -> dict[tuple[str, str], dict[str, int]]:
        """Substitute an integer for t; returns plain integer constants,
        one entry per unordered generator pair."""
        out: dict[tuple[str, str], dict[str, int]] = {}
        seen = set()
        for (i, j), cs in self.constants.items():
            key = tuple(sorted((i, j)))
            if key in seen:
                continue
            seen.add(key)
            spec = {}
            for k, poly in cs.items():
                v = poly.evaluate({"t": Fraction(value)})
                if v:
                    spec[k] = int(v)
            out[key] = spec
        return out

    def to_json(self) -> str:
        weights: dict[str, list[str]] = {}
        for g, w in self.generators:
            weights.setdefault(str(w), []).append(g)
        order = {g: (w, g) for g, w in self.generators}
        pairs = []
        seen = set()
        for (i, j) in sorted(self.constants, key=lambda p: (order[p[0]], order[p[1]])):
            key = tuple(sorted((i, j), key=lambda g: order[g]))
            if key in seen:
                continue
            seen.add(key)
            out = self.constants[(i, j)]
            pairs.append({"i": key[0], "j": key[1],
                          "out": {k: str(out[k]) for k in sorted(out, key=lambda g: order[g])}})
        return json.dumps(
            {"weights": weights, "constants": pairs, "bound": self.bound, "unit": self.unit},
            separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> GradedAlgebraPresentation:
        try:
            obj = json.loads(text)
            gens = []
            for w, labels in sorted(obj["weights"].items(), key=lambda kv: int(kv[0])):
                for g in labels:
                    gens.append((g, int(w)))
            constants: dict[tuple[str, str], dict[str, SparsePoly]] = {}
            for entry in obj["constants"]:
                out = {k: SparsePoly.parse(v) for k, v in entry["out"].items()}
                constants[(entry["i"], entry["j"])] = out
            return cls(gens, obj.get("unit", "1"), constants, int(obj["bound"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad graded algebra JSON: {exc}") from None


# -- the Rees deformation of the binomial ring -----------------------


def binomial_constants(i: int, j: int) -> dict[int, int]:
    """Coefficients of the product of binomial basis elements i and j in
    the binomial basis."""
    prod = intz.mult(intz.IntZElement.basis(i), intz.IntZElement.basis(j))
    return dict(prod.items())


def _gen_label(k: int) -> str:
    return "1" if k == 0 else f"C{k}"


def rees(bound: int = 10, constants_fn=None) -> GradedAlgebraPresentation:
    """One-parameter deformation of the filtered binomial ring.

    The generator of weight k is the basis element of degree k; a
    product coefficient landing on basis index k acquires t^(i+j-k).
    The filtration must be multiplicative: a product coefficient with
    index above i+j is rejected.
    """
    if bound < 0:
        raise InputError("bound must be nonnegative")
    fn = constants_fn or binomial_constants
    gens = [(_gen_label(k), k) for k in range(bound + 1)]
    t = SparsePoly.variable("t")
    constants: dict[tuple[str, str], dict[str, SparsePoly]] = {}
    for i in range(bound + 1):
        for j in range(i, bound + 1 - i):
            out: dict[str, SparsePoly] = {}
            for k, c in fn(i, j).items():
                if c == 0:
                    continue
                if k > i + j:
                    raise InputError(
                        f"filtration is not multiplicative: product ({i},{j}) hits index {k}")
                out[_gen_label(k)] = t ** (i + j - k) * c
            constants[(_gen_label(i), _gen_label(j))] = out
    return GradedAlgebraPresentation(gens, "1", constants, bound)


# -- deformed binomial basis polynomials ------------------------------


@dataclass(frozen=True)
class DeformedBasisElem:
    """b_n(x,t) = x(x-t)(x-2t)...(x-(n-1)t) / n!."""

    index: int
    poly: SparsePoly

    def at_t(self, value) -> SparsePoly:
        return self.poly.substitute({"t": Fraction(value)})

    def evaluate(self, x_value, t_value) -> Fraction:
        return self.poly.evaluate({"x": Fraction(x_value), "t": Fraction(t_value)})


def drinfeld_poly(n: int) -> DeformedBasisElem:
    if n < 0:
        raise InputError("index must be nonnegative")
    x = SparsePoly.variable("x")
    t = SparsePoly.variable("t")
    prod = SparsePoly.constant(1)
    fact = 1
    for i in range(n):
        prod = prod * (x - t * i)
        fact *= i + 1
    return DeformedBasisElem(n, prod * Fraction(1, fact))


def _x_coefficient(p: SparsePoly, k: int) -> SparsePoly:
    """Coefficient of x^k as a polynomial in the remaining variables."""
    terms = {}
    for mono, coeff in p.items():
        d = dict(mono)
        if d.get("x", 0) == k:
            rest = tuple(sorted((v, e) for v, e in d.items() if v != "x"))
            terms[rest] = terms.get(rest, Fraction(0)) + coeff
    return SparsePoly(terms)


def drinfeld_structure_constants(m: int, n: int, bound: int | None = None) -> dict[int, SparsePoly]:
    """Expand b_m * b_n = sum_k c_k(t) * b_k by descending elimination.

    The c_k are certified to be integer polynomials in t of t-degree at
    most m+n-k; either failure raises FalsificationError, since the
    integrality of these constants is exactly the claim that the
    deformed basis spans a ring over Z[t].
    """
    if m < 0 or n < 0:
        raise InputError("indices must be nonnegative")
    if bound is not None and m + n > bound:
        raise InputError(f"m+n exceeds the stated bound {bound}")
    residue = drinfeld_poly(m).poly * drinfeld_poly(n).poly
    facts = [1]
    for i in range(1, m + n + 1):
        facts.append(facts[-1] * i)
    out: dict[int, SparsePoly] = {}
    for k in range(m + n, -1, -1):
        lead = _x_coefficient(residue, k)
        if lead.is_zero():
            continue
        # the leading x^k coefficient of b_k is 1/k!
        c = lead * facts[k]
        if not c.is_integral():
            raise FalsificationError(
                f"structure constant c_{k} of ({m},{n}) is not in Z[t]: {c}")
        if not c.is_univariate_in("t"):
            raise FalsificationError(
                f"structure constant c_{k} of ({m},{n}) involves x: {c}")
        d = c.degree_in("t")
        if d > m + n - k:
            raise FalsificationError(
                f"structure constant c_{k} of ({m},{n}) has t-degree {d} > {m + n - k}")
        out[k] = c
        residue = residue - c * drinfeld_poly(k).poly
    if not residue.is_zero():
        raise FalsificationError(f"elimination left a nonzero residue for ({m},{n})")
    return out


def _truncate_total_degree(p: SparsePoly, bound: int) -> SparsePoly:
    terms = {}
    for mono, coeff in p.items():
        if sum(e for _, e in mono) <= bound:
            terms[mono] = coeff
    return SparsePoly(terms)


def drinfeld_group_law_samples(n_max: int, samples: list[tuple[int, int, int]]) -> None:
    """Numeric shadow of the group structure carried by the deformed basis.

    Two identities are checked per sample (a, b, t), through index n_max,
    with FalsificationError on any mismatch:

    1. the coefficient series E_a(X) = sum_n b_n(a,t) X^n is a
       homomorphism from the deformed law X + Y + tXY to multiplication:
       E_a(X + Y + tXY) = E_a(X) * E_a(Y) modulo total degree n_max + 1;
    2. convolution in the evaluation point is plain addition:
       b_n(a + b, t) = sum over i+j=n of b_i(a,t) b_j(b,t).
    """
    basis = [drinfeld_poly(k) for k in range(n_max + 1)]
    X = SparsePoly.variable("X")
    Y = SparsePoly.variable("Y")
    for a, b, t in samples:
        law = X + Y + X * Y * t
        lawpow = SparsePoly.constant(1)
        lhs = SparsePoly()
        ex = SparsePoly()
        for n in range(n_max + 1):
            cn = basis[n].evaluate(a, t)
            lhs = lhs + _truncate_total_degree(lawpow, n_max) * cn
            ex = ex + X ** n * cn
            lawpow = _truncate_total_degree(lawpow * law, n_max)
        rhs = _truncate_total_degree(ex * _truncate_total_degree(ex.substitute({"X": Y}), n_max), n_max)
        if lhs != rhs:
            raise FalsificationError(
                f"series homomorphism fails at a={a}, t={t}")
        for n in range(n_max + 1):
            left = basis[n].evaluate(a + b, t)
            right = sum((basis[i].evaluate(a, t) * basis[n - i].evaluate(b, t)
                         for i in range(n + 1)), Fraction(0))
            if left != right:
                raise FalsificationError(
                    f"additive convolution fails at n={n}, a={a}, b={b}, t={t}: {left} != {right}")
