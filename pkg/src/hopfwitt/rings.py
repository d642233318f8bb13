"""Coefficient rings for Witt vectors.

Four kinds, all commutative with unit and exact arithmetic:

- IntegerRing: Z, elements are Python ints.
- ZModRing(m): Z/m, elements are ints in [0, m).
- GaloisField(p, k): F_{p^k}, elements are length-k tuples of ints mod p
  (little-endian coefficients on the power basis of w, where w is a root
  of the modulus).  A small table of Conway polynomials covers the field
  sizes exercised here; a custom modulus is accepted and checked
  irreducible by trial division, which is cheap at these sizes.
- PolynomialRing: Z[vars], elements are SparsePoly values with integer
  coefficients; this is the ring universal identities are proved over.

The finite rings enumerate their elements in a fixed order (Z/m as
0..m-1, F_q by the base-p little-endian integer index), which is what
makes kernel enumerations deterministic.
"""

from __future__ import annotations

from typing import Iterator

from .errors import InputError
from .intz import is_prime
from .poly import SparsePoly

# Conway polynomials, little-endian coefficient lists including the leading
# 1, for the field sizes the test surface uses.
_CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),          # w^2 + w + 1
    (2, 3): (1, 1, 0, 1),       # w^3 + w + 1
    (2, 4): (1, 1, 0, 0, 1),    # w^4 + w + 1
    (3, 2): (2, 2, 1),          # w^2 + 2w + 2
    (3, 3): (1, 2, 0, 1),       # w^3 + 2w + 1
    (5, 2): (2, 4, 1),          # w^2 + 4w + 2
    (7, 2): (3, 6, 1),          # w^2 + 6w + 3
}


class CoeffRing:
    """Shared interface; concrete rings override everything that matters."""

    is_finite = False

    def zero(self): ...
    def one(self): ...
    def from_int(self, n: int): ...
    def add(self, a, b): ...
    def neg(self, a): ...
    def mul(self, a, b): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, n: int):
        if n < 0:
            raise InputError("negative powers are not defined here")
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            if n > 1:
                base = self.mul(base, base)
            n >>= 1
        return result

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def elements(self) -> Iterator:
        raise InputError(f"{self} is not finite, cannot enumerate")

    def size(self) -> int:
        raise InputError(f"{self} is not finite")

    def element_str(self, a) -> str: ...
    def element_from_str(self, text: str): ...
    def to_json_obj(self) -> dict: ...

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffRing):
            return NotImplemented
        return self.to_json_obj() == other.to_json_obj()

    def __hash__(self) -> int:
        return hash(str(sorted(self.to_json_obj().items())))

    def __repr__(self) -> str:
        return str(self)


class IntegerRing(CoeffRing):
    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def element_str(self, a) -> str:
        return str(a)

    def element_from_str(self, text: str):
        try:
            return int(text)
        except ValueError as exc:
            raise InputError(f"bad integer: {text!r}") from exc

    def to_json_obj(self) -> dict:
        return {"kind": "Z"}

    def __str__(self) -> str:
        return "Z"


class ZModRing(CoeffRing):
    is_finite = True

    def __init__(self, m: int):
        if m < 2:
            raise InputError("modulus must be at least 2")
        self.m = m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def from_int(self, n: int):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def elements(self) -> Iterator[int]:
        return iter(range(self.m))

    def size(self) -> int:
        return self.m

    def element_str(self, a) -> str:
        return str(a)

    def element_from_str(self, text: str):
        try:
            return int(text) % self.m
        except ValueError as exc:
            raise InputError(f"bad residue: {text!r}") from exc

    def to_json_obj(self) -> dict:
        return {"kind": "Zmod", "m": self.m}

    def __str__(self) -> str:
        return f"Z/{self.m}"


class GaloisField(CoeffRing):
    is_finite = True

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if k < 1:
            raise InputError("extension degree must be positive")
        self.p = p
        self.k = k
        if modulus is None:
            if k == 1:
                modulus = (0, 1)  # w - 0: the prime field, no extension
            elif (p, k) in _CONWAY:
                modulus = _CONWAY[(p, k)]
            else:
                raise InputError(
                    f"no built-in modulus for F_{p}^{k}; supply one explicitly"
                )
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InputError("modulus must be monic of degree k")
        if k > 1 and not _is_irreducible(modulus, p):
            raise InputError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        # reduction table: w^(k+i) in the power basis, i = 0..k-2
        self._red: list[tuple[int, ...]] = []
        if k > 1:
            top = tuple((-c) % p for c in modulus[:k])  # w^k = -(lower part)
            rep = list(top)
            self._red.append(tuple(rep))
            for _ in range(k - 2):
                carry = rep[-1]
                rep = [0] + rep[:-1]  # multiply by w
                if carry:
                    rep = [(rep[i] + carry * top[i]) % p for i in range(k)]
                self._red.append(tuple(rep))

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1 % self.p,) + (0,) * (self.k - 1)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        k, p = self.k, self.p
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for i in range(k, 2 * k - 1):
            c = conv[i] % p
            if c:
                red = self._red[i - k]
                for j in range(k):
                    out[j] = (out[j] + c * red[j]) % p
        return tuple(out)

    def elements(self) -> Iterator[tuple[int, ...]]:
        for idx in range(self.p ** self.k):
            digits = []
            v = idx
            for _ in range(self.k):
                digits.append(v % self.p)
                v //= self.p
            yield tuple(digits)

    def size(self) -> int:
        return self.p ** self.k

    def element_str(self, a) -> str:
        return ",".join(str(c) for c in a)

    def element_from_str(self, text: str):
        try:
            parts = [int(c) for c in text.split(",")]
        except ValueError as exc:
            raise InputError(f"bad field element: {text!r}") from exc
        if len(parts) != self.k:
            raise InputError(
                f"field element needs {self.k} coordinates, got {len(parts)}"
            )
        return tuple(c % self.p for c in parts)

    def to_json_obj(self) -> dict:
        return {"kind": "Fq", "p": self.p, "k": self.k,
                "modulus": list(self.modulus)}

    def __str__(self) -> str:
        return f"F_{self.p ** self.k}"


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over F_p, little-endian lists."""
    num = [c % p for c in num]
    d = len(den) - 1
    while len(num) >= len(den):
        lead = num[-1]
        if lead:
            shift = len(num) - len(den)
            for i in range(len(den)):
                num[shift + i] = (num[shift + i] - lead * den[i]) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for idx in range(p ** d):
            digits = []
            v = idx
            for _ in range(d):
                digits.append(v % p)
                v //= p
            den = digits + [1]
            if not _poly_mod(list(modulus), den, p):
                return False
    return True


class PolynomialRing(CoeffRing):
    """Z[vars]: elements are SparsePoly values with integer coefficients."""

    def zero(self):
        return SparsePoly()

    def one(self):
        return SparsePoly.constant(1)

    def from_int(self, n: int):
        return SparsePoly.constant(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def element_str(self, a) -> str:
        return str(a)

    def element_from_str(self, text: str):
        p = SparsePoly.parse(text)
        if not p.is_integral():
            raise InputError("polynomial ring elements need integer coefficients")
        return p

    def to_json_obj(self) -> dict:
        return {"kind": "Poly"}

    def __str__(self) -> str:
        return "Z[..]"


def ring_from_spec(spec: str) -> CoeffRing:
    """Parse the CLI ring syntax: Z | Zmod:m | Fq:p,k | Poly."""
    spec = spec.strip()
    if spec == "Z":
        return IntegerRing()
    if spec == "Poly":
        return PolynomialRing()
    if spec.startswith("Zmod:"):
        try:
            return ZModRing(int(spec[5:]))
        except ValueError as exc:
            raise InputError(f"bad modulus in {spec!r}") from exc
    if spec.startswith("Fq:"):
        body = spec[3:].split(",")
        if len(body) != 2:
            raise InputError(f"Fq ring spec needs p,k: {spec!r}")
        try:
            return GaloisField(int(body[0]), int(body[1]))
        except ValueError as exc:
            raise InputError(f"bad Fq parameters in {spec!r}") from exc
    raise InputError(f"unknown ring spec {spec!r}")


def ring_from_json_obj(obj: object) -> CoeffRing:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError("ring JSON must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "Z":
        return IntegerRing()
    if kind == "Poly":
        return PolynomialRing()
    if kind == "Zmod":
        return ZModRing(int(obj["m"]))
    if kind == "Fq":
        modulus = obj.get("modulus")
        return GaloisField(
            int(obj["p"]), int(obj["k"]),
            tuple(modulus) if modulus is not None else None,
        )
    raise InputError(f"unknown ring kind {kind!r}")
