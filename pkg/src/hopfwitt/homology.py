"""Bar and cobar complexes over Z with exact integer homology.

Small bigraded (co)algebras are described by finite label sets with
structure constants.  The normalized bar complex of an augmented algebra
and the cobar complex of a coaugmented coalgebra are assembled as chain
complexes of free Z-modules indexed by (total degree, weight), with
Koszul signs on shifted degrees:

  bar:   d(a_1|...|a_n) = sum_i (-1)^{e_i} (a_1|...|a_i a_{i+1}|...|a_n),
         e_i = sum_{j<=i} (|a_j| + 1), unit components of products dropped;
  cobar: d(c_1|...|c_n) = sum_i (-1)^{f_i} (c_1|...|c_i'|c_i''|...|c_n),
         f_i = sum_{j<i} (|c_j| - 1) + |c_i'|, over the reduced diagonal.

Both conventions are certified by the d*d = 0 check every ChainComplex
runs at construction.  Homology is computed by Smith normal form, so
free ranks and torsion are exact.  Bar homology of a commutative algebra
carries the shuffle product, with signs again on shifted degrees.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import FalsificationError, InputError

Matrix = list[list[int]]
Chain = dict[tuple, int]

_TUPLE_CAP = 200_000


def _add_term(acc: Chain, key: tuple, coeff: int) -> None:
    s = acc.get(key, 0) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class GradedAugmentedAlgebra:
    """Finite bigraded commutative algebra over Z, augmented to Z.

    Every label has a (degree, weight); the unit sits in (0, 0) and the
    augmentation kills every other label.  Products are stored for all
    ordered pairs and checked for bigrading, Koszul commutativity,
    unitality, and associativity.
    """

    def __init__(self, basis: list[tuple[str, int, int]], unit: str,
                 products: dict[tuple[str, str], dict[str, int]]):
        labels = [b[0] for b in basis]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate basis labels")
        self.labels = labels
        self.bidegree = {b[0]: (b[1], b[2]) for b in basis}
        if unit not in self.bidegree or self.bidegree[unit] != (0, 0):
            raise InputError("unit must be a basis label in bidegree (0, 0)")
        self.unit = unit
        self.products = {}
        for (a, b), out in products.items():
            self.products[(a, b)] = {k: v for k, v in out.items() if v}
        self._validate()

    def _validate(self):
        for a in self.labels:
            for b in self.labels:
                if (a, b) not in self.products:
                    raise InputError(f"product ({a},{b}) missing")
        for (a, b), out in self.products.items():
            da, wa = self.bidegree[a]
            db, wb = self.bidegree[b]
            for k, c in out.items():
                if k not in self.bidegree:
                    raise InputError(f"product ({a},{b}) hits unknown label {k}")
                dk, wk = self.bidegree[k]
                if (dk, wk) != (da + db, wa + wb):
                    raise InputError(f"product ({a},{b}) is not bigraded at {k}")
            # Koszul commutativity
            flip = self.products[(b, a)]
            sign = -1 if (da % 2) and (db % 2) else 1
            if out != {k: sign * c for k, c in flip.items()}:
                raise InputError(f"products ({a},{b}) and ({b},{a}) violate Koszul symmetry")
        for g in self.labels:
            if self.products[(self.unit, g)] != {g: 1}:
                raise InputError(f"unit law fails on {g}")
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    left: dict[str, int] = {}
                    for k, s in self.products[(a, b)].items():
                        for m, u in self.products[(k, c)].items():
                            left[m] = left.get(m, 0) + s * u
                    right: dict[str, int] = {}
                    for k, s in self.products[(b, c)].items():
                        for m, u in self.products[(a, k)].items():
                            right[m] = right.get(m, 0) + s * u
                    if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                        raise InputError(f"associativity fails on ({a},{b},{c})")

    @classmethod
    def trivial(cls) -> GradedAugmentedAlgebra:
        return cls([("1", 0, 0)], "1", {("1", "1"): {"1": 1}})

    @classmethod
    def exterior(cls, degree: int, weight: int, label: str = "e") -> GradedAugmentedAlgebra:
        """Exterior algebra on one generator: the square is zero."""
        return cls(
            [("1", 0, 0), (label, degree, weight)], "1",
            {("1", "1"): {"1": 1}, ("1", label): {label: 1},
             (label, "1"): {label: 1}, (label, label): {}})

    def augmentation_ideal(self) -> list[str]:
        return [g for g in self.labels if g != self.unit]

    def reduced_product(self, a: str, b: str) -> dict[str, int]:
        """Product with any unit component dropped (normalized bar face)."""
        return {k: c for k, c in self.products[(a, b)].items() if k != self.unit}


class GradedCoalgebra:
    """Finite bigraded coalgebra over Z with a group-like coaugmentation."""

    def __init__(self, basis: list[tuple[str, int, int]], coaug: str,
                 delta: dict[str, dict[tuple[str, str], int]]):
        labels = [b[0] for b in basis]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate basis labels")
        self.labels = labels
        self.bidegree = {b[0]: (b[1], b[2]) for b in basis}
        if coaug not in self.bidegree or self.bidegree[coaug] != (0, 0):
            raise InputError("coaugmentation must be a basis label in bidegree (0, 0)")
        self.coaug = coaug
        self.delta = {}
        for c, out in delta.items():
            self.delta[c] = {k: v for k, v in out.items() if v}
        self._validate()

    def _validate(self):
        for c in self.labels:
            if c not in self.delta:
                raise InputError(f"diagonal of {c} missing")
        for c, out in self.delta.items():
            dc, wc = self.bidegree[c]
            for (a, b), v in out.items():
                if a not in self.bidegree or b not in self.bidegree:
                    raise InputError(f"diagonal of {c} hits unknown labels ({a},{b})")
                da, wa = self.bidegree[a]
                db, wb = self.bidegree[b]
                if (da + db, wa + wb) != (dc, wc):
                    raise InputError(f"diagonal of {c} is not bigraded at ({a},{b})")
            # counit laws pin the coaugmented terms exactly
            left = {b: v for (a, b), v in out.items() if a == self.coaug}
            right = {a: v for (a, b), v in out.items() if b == self.coaug}
            expect = {c: 1}
            if c == self.coaug:
                if out != {(c, c): 1}:
                    raise InputError("coaugmentation must be group-like")
                continue
            if left != expect or right != expect:
                raise InputError(f"counit law fails on {c}")
        for c in self.labels:
            one: Chain = {}
            two: Chain = {}
            for (a, b), v in self.delta[c].items():
                for (a1, a2), u in self.delta[a].items():
                    _add_term(one, (a1, a2, b), v * u)
                for (b1, b2), u in self.delta[b].items():
                    _add_term(two, (a, b1, b2), v * u)
            if one != two:
                raise InputError(f"coassociativity fails on {c}")

    @classmethod
    def trivial(cls) -> GradedCoalgebra:
        return cls([("1", 0, 0)], "1", {"1": {("1", "1"): 1}})

    @classmethod
    def divided_power(cls, bound: int, label: str = "g") -> GradedCoalgebra:
        """Divided-power coalgebra on a generator in degree 2, weight 1,
        truncated at weight `bound`: the diagonal of the k-th element is
        the full convolution sum."""
        if bound < 0:
            raise InputError("bound must be nonnegative")
        basis = [(f"{label}{k}", 2 * k, k) for k in range(bound + 1)]
        delta = {}
        for n in range(bound + 1):
            delta[f"{label}{n}"] = {(f"{label}{i}", f"{label}{n - i}"): 1 for i in range(n + 1)}
        return cls(basis, f"{label}0", delta)

    def reduced_diagonal(self, c: str) -> dict[tuple[str, str], int]:
        return {(a, b): v for (a, b), v in self.delta[c].items()
                if a != self.coaug and b != self.coaug}


class ChainComplex:
    """Bigraded complex of free Z-modules with differential of degree -1.

    ranks[w][q] is the rank in total degree q and weight w; diffs[w][q]
    is the matrix of d from (q, w) to (q-1, w) acting on column vectors.
    The identity d(q) compose d(q+1) = 0 is checked for every weight at
    construction.
    """

    def __init__(self, ranks: dict[int, dict[int, int]], diffs: dict[int, dict[int, Matrix]]):
        self.ranks = {w: dict(qs) for w, qs in ranks.items()}
        self.diffs = {w: {q: [row[:] for row in M] for q, M in qs.items()} for w, qs in diffs.items()}
        for w, qs in self.diffs.items():
            for q, M in qs.items():
                r, c = linalg.shape(M)
                if c != self.rank(q, w) or r != self.rank(q - 1, w):
                    raise InputError(f"differential at degree {q}, weight {w} has wrong shape")
        for w, qs in self.diffs.items():
            for q, M in qs.items():
                up = qs.get(q + 1)
                if up is not None and not linalg.is_zero_matrix(linalg.mat_mul(M, up)):
                    raise FalsificationError(f"d*d != 0 at degree {q + 1}, weight {w}")

    def rank(self, q: int, w: int) -> int:
        return self.ranks.get(w, {}).get(q, 0)

    def differential(self, q: int, w: int) -> Matrix | None:
        return self.diffs.get(w, {}).get(q)

    def homology(self) -> dict[tuple[int, int], tuple[int, list[int]]]:
        """Free rank and torsion invariants of H at each (degree, weight)."""
        out = {}
        for w, qs in self.ranks.items():
            for q, r in qs.items():
                if r == 0:
                    continue
                d_here = self.differential(q, w)
                d_up = self.differential(q + 1, w)
                rank_here = linalg.rank(d_here) if d_here else 0
                rank_up = linalg.rank(d_up) if d_up else 0
                free = r - rank_here - rank_up
                torsion = [d for d in (linalg.invariant_factors(d_up) if d_up else []) if d > 1]
                out[(q, w)] = (free, torsion)
        return out


def homology_tsv(C: ChainComplex) -> str:
    """Homology table: degree, weight, free rank, torsion invariants."""
    lines = ["degree\tweight\trank\ttorsion"]
    H = C.homology()
    for (q, w) in sorted(H):
        free, torsion = H[(q, w)]
        tor = ",".join(str(d) for d in torsion) if torsion else "-"
        lines.append(f"{q}\t{w}\t{free}\t{tor}")
    return "\n".join(lines) + "\n"


# -- bar construction -------------------------------------------------


def _strand_sort_key(word: tuple) -> tuple:
    return (len(word), word)


class _Strands:
    """Helper accumulating word bases per (degree, weight)."""

    def __init__(self):
        self.words: dict[tuple[int, int], list[tuple]] = {}

    def add(self, key: tuple[int, int], word: tuple):
        self.words.setdefault(key, []).append(word)

    def finish(self):
        self.index: dict[tuple[int, int], dict[tuple, int]] = {}
        for key, ws in self.words.items():
            ws.sort(key=_strand_sort_key)
            self.index[key] = {w: i for i, w in enumerate(ws)}

    def matrix_from_images(self, src: tuple[int, int], dst: tuple[int, int],
                           image) -> Matrix:
        rows = len(self.words.get(dst, []))
        cols = len(self.words.get(src, []))
        M = linalg.zeros(rows, cols)
        for j, word in enumerate(self.words.get(src, [])):
            for target, coeff in image(word).items():
                M[self.index[dst][target]][j] += coeff
        return M


def _assemble(strands: _Strands, image, degree_shift: int = -1) -> ChainComplex:
    strands.finish()
    ranks: dict[int, dict[int, int]] = {}
    for (q, w), ws in strands.words.items():
        ranks.setdefault(w, {})[q] = len(ws)
    diffs: dict[int, dict[int, Matrix]] = {}
    for (q, w) in strands.words:
        dst = (q + degree_shift, w)
        if dst in strands.words:
            diffs.setdefault(w, {})[q] = strands.matrix_from_images((q, w), dst, image)
    return ChainComplex(ranks, diffs)


def bar_word_bidegree(A: GradedAugmentedAlgebra, word: tuple) -> tuple[int, int]:
    d = sum(A.bidegree[a][0] for a in word) + len(word)
    w = sum(A.bidegree[a][1] for a in word)
    return (d, w)


def bar_differential_word(A: GradedAugmentedAlgebra, word: tuple) -> Chain:
    """Normalized bar face sum of a single word."""
    out: Chain = {}
    sign_exp = 0
    for i in range(len(word) - 1):
        sign_exp += A.bidegree[word[i]][0] + 1
        sign = -1 if sign_exp % 2 else 1
        for k, c in A.reduced_product(word[i], word[i + 1]).items():
            merged = word[:i] + (k,) + word[i + 2:]
            _add_term(out, merged, sign * c)
    return out


def _bar_strands(A: GradedAugmentedAlgebra, stages: int, weight_bound: int) -> _Strands:
    if stages < 0 or weight_bound < 0:
        raise InputError("bounds must be nonnegative")
    letters = A.augmentation_ideal()
    strands = _Strands()
    count = 0
    for n in range(stages + 1):
        for word in itertools.product(letters, repeat=n):
            d, w = bar_word_bidegree(A, word)
            if abs(w) > weight_bound:
                continue
            count += 1
            if count > _TUPLE_CAP:
                raise InputError("bound overflow: too many bar words in the window")
            strands.add((d, w), word)
    return strands


def bar_complex(A: GradedAugmentedAlgebra, stages: int, weight_bound: int) -> ChainComplex:
    """Normalized bar complex through the given number of tensor stages,
    keeping strands of absolute weight at most weight_bound."""
    strands = _bar_strands(A, stages, weight_bound)
    return _assemble(strands, lambda word: bar_differential_word(A, word))


# -- cobar construction -----------------------------------------------


def cobar_word_bidegree(C: GradedCoalgebra, word: tuple) -> tuple[int, int]:
    d = sum(C.bidegree[c][0] for c in word) - len(word)
    w = sum(C.bidegree[c][1] for c in word)
    return (d, w)


def cobar_differential_word(C: GradedCoalgebra, word: tuple) -> Chain:
    """Derivation extension of the reduced diagonal with Koszul signs."""
    out: Chain = {}
    sign_exp = 0
    for i, letter in enumerate(word):
        if i > 0:
            sign_exp += C.bidegree[word[i - 1]][0] - 1
        for (a, b), v in C.reduced_diagonal(letter).items():
            sign = -1 if (sign_exp + C.bidegree[a][0]) % 2 else 1
            split = word[:i] + (a, b) + word[i + 1:]
            _add_term(out, split, sign * v)
    return out


def _cobar_stage_cap(C: GradedCoalgebra, letters: list[str],
                     degree_bound: int, weight_bound: int) -> int:
    """Largest word length that can still meet the window bounds.

    Needs the letter weights uniformly signed, or every letter's degree
    at distance at least one from the bar shift; otherwise no finite
    stage bound is certain and the input is rejected.
    """
    if not letters:
        return 0
    wts = [C.bidegree[c][1] for c in letters]
    if all(w > 0 for w in wts):
        return weight_bound // min(wts)
    if all(w < 0 for w in wts):
        return weight_bound // min(-w for w in wts)
    shifts = [C.bidegree[c][0] - 1 for c in letters]
    if all(s >= 1 for s in shifts) or all(s <= -1 for s in shifts):
        return degree_bound
    raise InputError(
        "cannot bound cobar word length: letters need uniformly signed "
        "weights or degrees uniformly away from one")


def cobar_complex(C: GradedCoalgebra, degree_bound: int, weight_bound: int) -> ChainComplex:
    """Cobar complex of the reduced coalgebra, keeping words of absolute
    total degree at most degree_bound and absolute weight at most
    weight_bound."""
    if degree_bound < 0 or weight_bound < 0:
        raise InputError("bounds must be nonnegative")
    letters = [c for c in C.labels if c != C.coaug]
    strands = _Strands()
    count = 0
    for n in range(_cobar_stage_cap(C, letters, degree_bound, weight_bound) + 1):
        for word in itertools.product(letters, repeat=n):
            d, w = cobar_word_bidegree(C, word)
            if abs(w) > weight_bound or abs(d) > degree_bound:
                continue
            count += 1
            if count > _TUPLE_CAP:
                raise InputError("bound overflow: too many cobar words in the window")
            strands.add((d, w), word)
    return _assemble(strands, lambda word: cobar_differential_word(C, word))


# -- shuffle product on bar words ------------------------------------


def shuffle_chains(A: GradedAugmentedAlgebra, x: Chain, y: Chain) -> Chain:
    """Eilenberg-Zilber shuffle of bar chains, with Koszul signs on the
    shifted degrees |a| + 1 of the letters."""
    out: Chain = {}
    for xw, xc in x.items():
        for yw, yc in y.items():
            p, q = len(xw), len(yw)
            sx = [A.bidegree[a][0] + 1 for a in xw]
            sy = [A.bidegree[b][0] + 1 for b in yw]
            for positions in itertools.combinations(range(p + q), p):
                posset = set(positions)
                word = []
                sign_exp = 0
                xi = yi = 0
                for spot in range(p + q):
                    if spot in posset:
                        # every y letter already placed hops past this x letter
                        sign_exp += sx[xi] * sum(sy[:yi])
                        word.append(xw[xi])
                        xi += 1
                    else:
                        word.append(yw[yi])
                        yi += 1
                sign = -1 if sign_exp % 2 else 1
                _add_term(out, tuple(word), sign * xc * yc)
    return out


def _reduce_mod_lattice(v: list[int], hnf_rows: Matrix) -> tuple[int, ...]:
    z = list(v)
    for row in hnf_rows:
        j = next(k for k, x in enumerate(row) if x)
        q = z[j] // row[j]
        if q:
            z = [a - q * b for a, b in zip(z, row)]
    return tuple(z)


class BarHomologyWindow:
    """Bar complex of A in a bounded window, with cycle reduction.

    reduce_cycle maps a chain to its canonical representative modulo
    boundaries, strand by strand; comparing reduced forms decides
    equality of homology classes.
    """

    def __init__(self, A: GradedAugmentedAlgebra, stages: int, weight_bound: int):
        self.algebra = A
        self.stages = stages
        self.weight_bound = weight_bound
        self.strands = _bar_strands(A, stages, weight_bound)
        self.complex = _assemble(self.strands, lambda word: bar_differential_word(A, word))
        self._boundary_hnf: dict[tuple[int, int], Matrix] = {}

    def strand_of(self, word: tuple) -> tuple[int, int]:
        return bar_word_bidegree(self.algebra, word)

    def _vectorize(self, chain: Chain) -> dict[tuple[int, int], list[int]]:
        split: dict[tuple[int, int], Chain] = {}
        for word, c in chain.items():
            split.setdefault(self.strand_of(word), {})[word] = c
        out = {}
        for key, part in split.items():
            if key not in self.strands.index:
                raise InputError(f"chain leaves the computed window at {key}")
            v = [0] * len(self.strands.words[key])
            for word, c in part.items():
                v[self.strands.index[key][word]] = c
            out[key] = v
        return out

    def _boundaries(self, key: tuple[int, int]) -> Matrix:
        if key not in self._boundary_hnf:
            q, w = key
            up = self.complex.differential(q + 1, w)
            rows = linalg.row_hnf(linalg.transpose(up)) if up else []
            self._boundary_hnf[key] = rows
        return self._boundary_hnf[key]

    def reduce_cycle(self, chain: Chain) -> dict[tuple[int, int], tuple[int, ...]]:
        """Canonical form of a cycle modulo boundaries; raises on a
        chain that is not a cycle in every strand."""
        out = {}
        for key, v in self._vectorize(chain).items():
            q, w = key
            d = self.complex.differential(q, w)
            if d and any(linalg.mat_vec(d, v)):
                raise InputError(f"chain is not a cycle in strand {key}")
            red = _reduce_mod_lattice(v, self._boundaries(key))
            if any(red):
                out[key] = red
        return out

    def shuffle_classes(self, x: Chain, y: Chain) -> dict[tuple[int, int], tuple[int, ...]]:
        """Shuffle two cycles and reduce the result to canonical form."""
        self.reduce_cycle(x)
        self.reduce_cycle(y)
        return self.reduce_cycle(shuffle_chains(self.algebra, x, y))
