"""Exact arithmetic in small finite fields GF(p^m).

An element of GF(p^m) is encoded as an integer in [0, q): the base-p
digits of the integer are the coefficients, lowest degree first, of its
polynomial representative in the fixed modulus basis.  The modulus for
each supported order is pinned (Conway polynomial choices) so that the
integer encoding of every element is stable across runs and tools:

    q    modulus, low-to-high coefficients
    2    x + 1
    3    x + 1
    4    x^2 + x + 1
    5    x + 3
    7    x + 4
    8    x^3 + x + 1
    9    x^2 + 2x + 2
    11   x + 9
    13   x + 11
    16   x^4 + x + 1

The class of x (encoded as the integer p) generates the multiplicative
group for every extension field in the table.  Larger fields (q > 16)
are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

MODULUS_TABLE: dict[int, tuple[int, int, tuple[int, ...]]] = {
    2: (2, 1, (1, 1)),
    3: (3, 1, (1, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (3, 1)),
    7: (7, 1, (4, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    11: (11, 1, (9, 1)),
    13: (13, 1, (11, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


# -- polynomial helpers over F_p (coefficient lists, low degree first) --


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    _trim(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coef = (a[-1] * inv_lead) % p
        quot[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _trim(a)
    return _trim(quot), a


def _poly_inverse(a: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    # extended Euclid on (a, modulus); a must be nonzero mod modulus
    r0, r1 = _trim(list(modulus)), _trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([(x - y) % p for x, y in _zip_pad(s0, _poly_mul(q, s1, p), p)])
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    c = pow(r0[0], -1, p)
    return _trim([(c * x) % p for x in s0])


def _zip_pad(a: Sequence[int], b: Sequence[int], p: int):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division against every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for lower in np.ndindex(*([p] * d)):
            f = list(lower) + [1]
            _, rem = _poly_divmod(modulus, f, p)
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with a fixed irreducible modulus.

    Element-level operations take and return the integer encoding.
    Immutable; instances may be shared freely between workers.
    """

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError("extension degree must be >= 1")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not _is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.m

    @staticmethod
    def of(q: int) -> "FieldSpec":
        """The field of order q with the pinned modulus from MODULUS_TABLE."""
        if q not in MODULUS_TABLE:
            raise ValueError(f"unsupported field order {q}; supported: {sorted(MODULUS_TABLE)}")
        p, m, modulus = MODULUS_TABLE[q]
        return FieldSpec(p, m, modulus)

    # -- encoding ------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, low degree first, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def value(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    # -- element arithmetic (integer encodings) ------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        t = np.empty((q, q), dtype=np.int8)
        for a in range(q):
            ca = self.coeffs(a)
            for b in range(q):
                cb = self.coeffs(b)
                t[a, b] = self.value([(x + y) % self.p for x, y in zip(ca, cb)])
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array(
            [self.value([(-c) % self.p for c in self.coeffs(a)]) for a in range(self.q)],
            dtype=np.int8,
        )

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        t = np.empty((q, q), dtype=np.int8)
        for a in range(q):
            pa = _trim(list(self.coeffs(a)))
            for b in range(q):
                prod = _poly_mul(pa, _trim(list(self.coeffs(b))), self.p)
                _, rem = _poly_divmod(prod, self.modulus, self.p) if prod else ([], [])
                t[a, b] = self.value(rem + [0] * (self.m - len(rem)))
        return t

    @cached_property
    def inv_table(self) -> np.ndarray:
        # inverses by extended Euclid on polynomials; index 0 is a -1 sentinel
        t = np.full(self.q, -1, dtype=np.int8)
        for a in range(1, self.q):
            inv = _poly_inverse(_trim(list(self.coeffs(a))), self.modulus, self.p)
            t[a] = self.value(inv + [0] * (self.m - len(inv)))
        return t

    @cached_property
    def frob_table(self) -> np.ndarray:
        """a -> a^p."""
        return np.array([self.pow(a, self.p) for a in range(self.q)], dtype=np.int8)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Trace to the prime field: a + a^p + ... + a^(p^(m-1)), as residues."""
        out = np.zeros(self.q, dtype=np.int8)
        for a in range(self.q):
            acc, cur = 0, a
            for _ in range(self.m):
                acc = int(self.add_table[acc, cur])
                cur = int(self.frob_table[cur])
            digits = self.coeffs(acc)
            if any(digits[1:]):
                raise AssertionError("trace left the prime field")
            out[a] = digits[0]
        return out

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    def frobenius(self, a: int) -> int:
        return int(self.frob_table[a])

    @property
    def has_quadratic_structure(self) -> bool:
        return self.m % 2 == 0

    def conjugate(self, a: int) -> int:
        """a^q0 where q0 = p^(m/2), for fields that are quadratic over a subfield."""
        if not self.has_quadratic_structure:
            raise ValueError(f"GF({self.q}) is not a quadratic extension of a subfield")
        out = a
        for _ in range(self.m // 2):
            out = int(self.frob_table[out])
        return out

    @property
    def generator(self) -> int:
        """Pinned multiplicative generator: the class of x (or the root of x+c)."""
        if self.m == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    # -- elements ------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.q)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(self, v)

    # -- vectors of encoded values --------------------------------------

    def expand(self, values) -> np.ndarray:
        """F_q vector -> F_p vector of base-p digits, m per coordinate."""
        v = np.asarray(values, dtype=np.int64)
        out = np.empty(v.size * self.m, dtype=np.int8)
        for t in range(self.m):
            out[t :: self.m] = v % self.p
            v = v // self.p
        return out

    def collapse(self, expanded) -> np.ndarray:
        """Inverse of expand: digits back to encoded values."""
        e = np.asarray(expanded, dtype=np.int64)
        if e.size % self.m:
            raise ValueError("expanded length not a multiple of m")
        v = np.zeros(e.size // self.m, dtype=np.int64)
        for t in reversed(range(self.m)):
            v = v * self.p + e[t :: self.m]
        return v

    def vadd(self, a, b) -> np.ndarray:
        return self.add_table[np.asarray(a), np.asarray(b)].astype(np.int64)

    def vscale(self, scalar: int, values) -> np.ndarray:
        return self.mul_table[scalar, np.asarray(values)].astype(np.int64)

    # -- subfield machinery ---------------------------------------------

    def embedding_from(self, sub: "FieldSpec") -> np.ndarray:
        """Table mapping sub-field encodings into this field's encodings.

        Uses the canonical embedding sending sub.generator to
        generator^((q-1)/(q_sub-1)); with the pinned moduli this is a
        field homomorphism (checked).
        """
        if sub.p != self.p or self.m % sub.m:
            raise ValueError(f"GF({sub.q}) is not a subfield of GF({self.q})")
        emb = np.zeros(sub.q, dtype=np.int8)
        if sub.q == self.q:
            return np.arange(self.q, dtype=np.int8)
        image = self.pow(self.generator, (self.q - 1) // (sub.q - 1))
        sval, bval = 1, 1
        for _ in range(sub.q - 1):
            emb[sval] = bval
            sval = sub.mul(sval, sub.generator)
            bval = self.mul(bval, image)
        for a in range(sub.q):
            for b in range(sub.q):
                if emb[sub.add(a, b)] != self.add(int(emb[a]), int(emb[b])):
                    raise AssertionError("embedding is not additive; incompatible moduli")
        return emb

    def trace_to_subfield(self, a: int, sub: "FieldSpec") -> int:
        """Relative trace onto the copy of GF(sub.q) inside this field."""
        steps = self.m // sub.m
        acc, cur = 0, a
        for _ in range(steps):
            acc = self.add(acc, cur)
            for _ in range(sub.m):
                cur = int(self.frob_table[cur])
        return acc


def relative_dual_basis(big: FieldSpec, sub: FieldSpec) -> tuple[list[int], list[int]]:
    """Power basis (1, g, ..., g^(mm-1)) of big over sub and its trace-dual.

    Returns both bases as big-field encodings; the dual basis satisfies
    tr_{big/sub}(basis[i] * dual[j]) = delta_ij.
    """
    mm = big.m // sub.m
    emb = big.embedding_from(sub)
    one = int(emb[1])
    basis = [big.pow(big.generator, t) for t in range(mm)]
    gram = [[big.trace_to_subfield(big.mul(bi, bj), sub) for bj in basis] for bi in basis]
    # Gauss-Jordan over the embedded subfield (closed under big's ops)
    aug = [row[:] + [one if i == j else 0 for j in range(mm)] for i, row in enumerate(gram)]
    for col in range(mm):
        piv = next(r for r in range(col, mm) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = big.inv(aug[col][col])
        aug[col] = [big.mul(scale, x) for x in aug[col]]
        for r in range(mm):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [big.sub(x, big.mul(f, y)) for x, y in zip(aug[r], aug[col])]
    inv_gram = [row[mm:] for row in aug]
    dual = []
    for j in range(mm):
        acc = 0
        for t in range(mm):
            acc = big.add(acc, big.mul(inv_gram[t][j], basis[t]))
        dual.append(acc)
    return basis, dual


@dataclass(frozen=True)
class FieldElement:
    """One element of a FieldSpec, by its integer encoding."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"encoding {self.value} out of range for GF({self.field.q})")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise ValueError("field spec mismatch")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self) -> int:
        return self.field.trace(self.value)

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.field, self.field.conjugate(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.value})"


def GF(q: int) -> FieldSpec:
    """Shorthand for FieldSpec.of(q)."""
    return FieldSpec.of(q)
