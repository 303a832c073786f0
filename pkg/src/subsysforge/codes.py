"""Additive and F_q-linear codes over F_q^N with their inner products.

A code is stored as the reduced row echelon form of its F_p generators
in the expanded coordinate space: each F_q coordinate contributes m
consecutive F_p columns (the base-p digits of the encoded value).  Two
codes are equal exactly when their canonical matrices are equal.

Symplectic-layout codes live in F_q^{2n} addressed as (x|y) with the
first n coordinates forming the x half and the last n the y half; all
coordinate-level operations (puncturing, extension, weights) act per
qudit, i.e. on paired positions of the two halves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg
from .errors import CapExceededError
from .field import FieldSpec, GF

PLAIN = "plain"
SYMPLECTIC = "symplectic"

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
TRACE_SYMPLECTIC = "trace-symplectic"
TRACE_ALTERNATING = "trace-alternating"

FORMS = (EUCLIDEAN, HERMITIAN, TRACE_SYMPLECTIC, TRACE_ALTERNATING)

DEFAULT_CAP = 1 << 26


@dataclass(frozen=True)
class CodeVector:
    """A vector in F_q^N, entries as integer encodings."""

    field: FieldSpec
    entries: tuple[int, ...]
    layout: str = PLAIN

    def __post_init__(self):
        if self.layout not in (PLAIN, SYMPLECTIC):
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.layout == SYMPLECTIC and len(self.entries) % 2:
            raise ValueError("symplectic layout needs even length")
        if any(not 0 <= e < self.field.q for e in self.entries):
            raise ValueError("entry out of range for the field")

    @classmethod
    def symplectic(cls, field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> "CodeVector":
        if len(x) != len(y):
            raise ValueError("halves must have equal length")
        return cls(field, tuple(x) + tuple(y), SYMPLECTIC)

    @property
    def n(self) -> int:
        if self.layout != SYMPLECTIC:
            raise ValueError("n is defined for the symplectic layout")
        return len(self.entries) // 2

    @property
    def x_half(self) -> tuple[int, ...]:
        return self.entries[: self.n]

    @property
    def y_half(self) -> tuple[int, ...]:
        return self.entries[self.n :]

    def expanded(self) -> np.ndarray:
        return self.field.expand(self.entries)

    def __add__(self, other: "CodeVector") -> "CodeVector":
        _check_pair(self, other)
        vals = self.field.vadd(self.entries, other.entries)
        return CodeVector(self.field, tuple(int(v) for v in vals), self.layout)

    def scale(self, scalar: int) -> "CodeVector":
        vals = self.field.vscale(scalar, self.entries)
        return CodeVector(self.field, tuple(int(v) for v in vals), self.layout)


def _check_pair(u: CodeVector, v: CodeVector) -> None:
    if u.field != v.field:
        raise ValueError("field spec mismatch")
    if u.layout != v.layout or len(u.entries) != len(v.entries):
        raise ValueError("layout or length mismatch")


# -- inner products --------------------------------------------------------


def symplectic_weight(v: CodeVector) -> int:
    """Number of qudit positions where (x_i, y_i) != (0, 0)."""
    x, y = v.x_half, v.y_half
    return sum(1 for a, b in zip(x, y) if a or b)


def hamming_weight(v: CodeVector) -> int:
    return sum(1 for e in v.entries if e)


def trace_symplectic_product(u: CodeVector, v: CodeVector) -> int:
    """tr(a'.b - a.b') in F_p for u=(a|b), v=(a'|b')."""
    _check_pair(u, v)
    if u.layout != SYMPLECTIC:
        raise ValueError("trace-symplectic product needs the symplectic layout")
    f = u.field
    acc = 0
    for a, b, a2, b2 in zip(u.x_half, u.y_half, v.x_half, v.y_half):
        acc = f.add(acc, f.sub(f.mul(a2, b), f.mul(a, b2)))
    return f.trace(acc)


def euclidean_product(x: CodeVector, y: CodeVector):
    """Sum x_i y_i, an element of F_q."""
    _check_pair(x, y)
    if x.layout != PLAIN:
        raise ValueError("euclidean product needs the plain layout")
    f = x.field
    acc = 0
    for a, b in zip(x.entries, y.entries):
        acc = f.add(acc, f.mul(a, b))
    return f.element(acc)


def hermitian_product(x: CodeVector, y: CodeVector):
    """Sum x_i^q0 y_i over F_{q0^2}, conjugating the first argument."""
    _check_pair(x, y)
    if x.layout != PLAIN:
        raise ValueError("hermitian product needs the plain layout")
    f = x.field
    acc = 0
    for a, b in zip(x.entries, y.entries):
        acc = f.add(acc, f.mul(f.conjugate(a), b))
    return f.element(acc)


@lru_cache(maxsize=None)
def _quadratic_context(big: FieldSpec):
    """Subfield data for a field viewed as quadratic over GF(sqrt(q))."""
    if not big.has_quadratic_structure:
        raise ValueError(f"GF({big.q}) has no quadratic subfield structure")
    sub = GF(big.p ** (big.m // 2))
    emb = big.embedding_from(sub)
    down = {int(v): i for i, v in enumerate(emb)}
    beta = big.generator
    beta_bar = big.conjugate(beta)
    inv_denom = big.inv(big.sub(beta, beta_bar))
    return sub, emb, down, beta, beta_bar, inv_denom


def trace_alternating_product(u: CodeVector, v: CodeVector) -> int:
    """tr((u.vbar - ubar.v) / (beta - betabar)) down to the prime field."""
    _check_pair(u, v)
    if u.layout != PLAIN:
        raise ValueError("trace-alternating product needs the plain layout")
    f = u.field
    sub, _, down, _, _, inv_denom = _quadratic_context(f)
    acc = 0
    for a, b in zip(u.entries, v.entries):
        acc = f.add(acc, f.sub(f.mul(a, f.conjugate(b)), f.mul(f.conjugate(a), b)))
    val = f.mul(acc, inv_denom)
    return sub.trace(down[val])


def symplectic_to_quadratic(v: CodeVector) -> CodeVector:
    """Standard basis map F_q^{2n} -> F_{q^2}^n, (a|b) -> a*betabar + b*beta.

    Chosen so the trace-alternating product of images equals the
    trace-symplectic product of the originals exactly.
    """
    if v.layout != SYMPLECTIC:
        raise ValueError("input must be symplectic")
    big = GF(v.field.q**2)
    _, emb, _, beta, beta_bar, _ = _quadratic_context(big)
    out = tuple(
        big.add(big.mul(int(emb[a]), beta_bar), big.mul(int(emb[b]), beta))
        for a, b in zip(v.x_half, v.y_half)
    )
    return CodeVector(big, out, PLAIN)


def quadratic_to_symplectic(v: CodeVector) -> CodeVector:
    """Inverse of symplectic_to_quadratic."""
    big = v.field
    sub, emb, down, beta, beta_bar, _ = _quadratic_context(big)
    # dual pair to (betabar, beta) under the relative trace
    d_a, d_b = _quadratic_dual_pair(big)
    xs, ys = [], []
    for u in v.entries:
        xs.append(down[big.trace_to_subfield(big.mul(u, d_a), sub)])
        ys.append(down[big.trace_to_subfield(big.mul(u, d_b), sub)])
    return CodeVector.symplectic(sub, xs, ys)


@lru_cache(maxsize=None)
def _quadratic_dual_pair(big: FieldSpec) -> tuple[int, int]:
    sub, emb, down, beta, beta_bar, _ = _quadratic_context(big)
    basis = (beta_bar, beta)
    gram = [[big.trace_to_subfield(big.mul(bi, bj), sub) for bj in basis] for bi in basis]
    det = big.sub(big.mul(gram[0][0], gram[1][1]), big.mul(gram[0][1], gram[1][0]))
    inv_det = big.inv(det)
    d_a = big.mul(inv_det, big.sub(big.mul(gram[1][1], basis[0]), big.mul(gram[1][0], basis[1])))
    d_b = big.mul(inv_det, big.sub(big.mul(gram[0][0], basis[1]), big.mul(gram[0][1], basis[0])))
    return d_a, d_b


# -- the code object -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AdditiveCode:
    """An F_p-linear subspace of F_q^N in canonical (rref) form.

    Immutable after construction; all operations return new codes.
    """

    field: FieldSpec
    length: int
    layout: str
    gens: np.ndarray
    linear: bool = False

    def __post_init__(self):
        if self.layout not in (PLAIN, SYMPLECTIC):
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.layout == SYMPLECTIC and self.length % 2:
            raise ValueError("symplectic layout needs even length")
        if self.gens.shape != (self.gens.shape[0], self.length * self.field.m):
            raise ValueError("generator matrix width must be length*m")
        self.gens.flags.writeable = False

    # construction

    @classmethod
    def from_expanded(
        cls, field: FieldSpec, length: int, layout: str, rows, linear: bool = False
    ) -> "AdditiveCode":
        mat = linalg.as_matrix(rows, length * field.m)
        linear = linear or field.m == 1
        if linear and field.m > 1:
            closed = [mat]
            for s in range(1, field.m):
                scalar = field.pow(field.generator, s)
                closed.append(
                    np.vstack(
                        [field.expand(field.vscale(scalar, field.collapse(r))) for r in mat]
                    )
                    if mat.shape[0]
                    else mat
                )
            mat = np.vstack(closed)
        red, _ = linalg.rref(mat, field.p)
        return cls(field, length, layout, red, linear)

    @classmethod
    def span(cls, rows: Iterable[CodeVector], linear: bool = False, **hints) -> "AdditiveCode":
        """Smallest code of the requested linearity containing the rows.

        Empty input needs field/length/layout hints.
        """
        rows = list(rows)
        if not rows:
            try:
                return cls.zero(hints["field"], hints["length"], hints.get("layout", PLAIN), linear)
            except KeyError:
                raise ValueError("empty span needs field= and length= hints") from None
        first = rows[0]
        for r in rows[1:]:
            _check_pair(first, r)
        mat = [r.expanded() for r in rows]
        return cls.from_expanded(first.field, len(first.entries), first.layout, mat, linear)

    @classmethod
    def zero(cls, field: FieldSpec, length: int, layout: str = PLAIN, linear: bool = True):
        return cls(field, length, layout, np.zeros((0, length * field.m), dtype=np.int8), linear or field.m == 1)

    @classmethod
    def full(cls, field: FieldSpec, length: int, layout: str = PLAIN):
        return cls(field, length, layout, np.eye(length * field.m, dtype=np.int8), True)

    # basic queries

    @property
    def n(self) -> int:
        if self.layout != SYMPLECTIC:
            raise ValueError("n is defined for the symplectic layout")
        return self.length // 2

    @property
    def log_size(self) -> int:
        """log_p of the number of codewords."""
        return self.gens.shape[0]

    @property
    def size(self) -> int:
        return self.field.p**self.log_size

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(int(np.argmax(row != 0)) for row in self.gens)

    def contains(self, v) -> bool:
        if isinstance(v, CodeVector):
            if v.field != self.field or len(v.entries) != self.length or v.layout != self.layout:
                raise ValueError("vector does not match the code's ambient space")
            vec = v.expanded()
        else:
            vec = np.asarray(v)
            if vec.size != self.length * self.field.m:
                raise ValueError("expanded vector has the wrong width")
        return linalg.in_row_space(vec, self.gens, self.pivots, self.field.p)

    def contains_code(self, other: "AdditiveCode") -> bool:
        return all(self.contains(row) for row in other.gens)

    def is_fq_linear(self) -> bool:
        """Check closure under every F_q scalar (regardless of the flag)."""
        if self.field.m == 1:
            return True
        g = self.field.generator
        for row in self.gens:
            vals = self.field.collapse(row)
            for s in range(1, self.field.m):
                scaled = self.field.expand(self.field.vscale(self.field.pow(g, s), vals))
                if not self.contains(scaled):
                    return False
        return True

    def generator_vectors(self) -> list[CodeVector]:
        return [
            CodeVector(self.field, tuple(int(x) for x in self.field.collapse(row)), self.layout)
            for row in self.gens
        ]

    def vectors(self, cap: int = DEFAULT_CAP) -> Iterator[np.ndarray]:
        """All codewords as expanded rows, in deterministic block order."""
        if self.size > cap:
            raise CapExceededError(self.size, cap)
        for block in linalg.stream_span(self.gens, self.field.p):
            yield from block

    def sorted_value_rows(self, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
        """All codewords as packed F_q value tuples, lexicographically sorted."""
        if self.size > cap:
            raise CapExceededError(self.size, cap)
        out = []
        for block in linalg.stream_span(self.gens, self.field.p):
            for row in block:
                out.append(tuple(int(x) for x in self.field.collapse(row)))
        out.sort()
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.length == other.length
            and self.layout == other.layout
            and self.gens.shape == other.gens.shape
            and bool(np.array_equal(self.gens, other.gens))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.length, self.layout, self.gens.tobytes()))

    def __repr__(self) -> str:
        kind = "linear" if self.linear else "additive"
        return (
            f"AdditiveCode(GF({self.field.q})^{self.length}, {self.layout}, "
            f"log_p size {self.log_size}, {kind})"
        )

    # duals

    def dual(self, form: str = TRACE_SYMPLECTIC) -> "AdditiveCode":
        """Kernel of v -> (form(v, g_i))_i over F_p."""
        rows = _dual_condition_rows(self, form)
        ker = linalg.kernel(rows, self.field.p)
        return AdditiveCode(self.field, self.length, self.layout, ker, self.linear)


def _check_form_layout(code: AdditiveCode, form: str) -> None:
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    want = SYMPLECTIC if form == TRACE_SYMPLECTIC else PLAIN
    if code.layout != want:
        raise ValueError(f"form {form} needs the {want} layout")
    if form in (HERMITIAN, TRACE_ALTERNATING) and not code.field.has_quadratic_structure:
        raise ValueError(f"form {form} needs a quadratic extension field")


@lru_cache(maxsize=None)
def _trace_mul_table(field: FieldSpec) -> np.ndarray:
    """T[t, v] = tr(g^t * v) for the pinned generator g."""
    g = field.generator
    return np.array(
        [[field.trace(field.mul(field.pow(g, t), v)) for v in range(field.q)] for t in range(field.m)],
        dtype=np.int8,
    )


@lru_cache(maxsize=None)
def _component_mul_table(field: FieldSpec, conjugate_first: bool) -> np.ndarray:
    """C[s, t, v] = coefficient s of (g^t or conj(g^t)) * v."""
    g = field.generator
    out = np.zeros((field.m, field.m, field.q), dtype=np.int8)
    for t in range(field.m):
        gt = field.pow(g, t)
        if conjugate_first:
            gt = field.conjugate(gt)
        for v in range(field.q):
            c = field.coeffs(field.mul(gt, v))
            for s in range(field.m):
                out[s, t, v] = c[s]
    return out


@lru_cache(maxsize=None)
def _alternating_table(field: FieldSpec) -> np.ndarray:
    """A[t, v] = trace-alternating product of the unit g^t with the value v."""
    sub, _, down, _, _, inv_denom = _quadratic_context(field)
    g = field.generator
    out = np.zeros((field.m, field.q), dtype=np.int8)
    for t in range(field.m):
        gt = field.pow(g, t)
        gt_bar = field.conjugate(gt)
        for v in range(field.q):
            num = field.sub(field.mul(gt, field.conjugate(v)), field.mul(gt_bar, v))
            out[t, v] = sub.trace(down[field.mul(num, inv_denom)])
    return out


def _dual_condition_rows(code: AdditiveCode, form: str) -> np.ndarray:
    _check_form_layout(code, form)
    f, p, m = code.field, code.field.p, code.field.m
    width = code.length * m
    rows: list[np.ndarray] = []
    for gen in code.gens:
        vals = f.collapse(gen)
        if form == TRACE_SYMPLECTIC:
            n = code.length // 2
            gx, gy = vals[:n], vals[n:]
            T = _trace_mul_table(f)
            wx = (-T[:, gy]) % p  # (m, n): unit at x-coord c pairs with gy[c]
            wy = T[:, gx] % p
            rows.append(np.concatenate([wx.T.reshape(-1), wy.T.reshape(-1)]))
        elif form in (EUCLIDEAN, HERMITIAN):
            C = _component_mul_table(f, conjugate_first=form == HERMITIAN)
            for s in range(m):
                rows.append(C[s][:, vals].T.reshape(-1) % p)
        else:  # TRACE_ALTERNATING
            A = _alternating_table(f)
            rows.append(A[:, vals].T.reshape(-1) % p)
    return linalg.as_matrix(rows, width)


# -- set operations ---------------------------------------------------------


def _check_ambient(a: AdditiveCode, b: AdditiveCode) -> None:
    if a.field != b.field or a.length != b.length or a.layout != b.layout:
        raise ValueError("codes live in different ambient spaces")


def intersect(a: AdditiveCode, b: AdditiveCode) -> AdditiveCode:
    _check_ambient(a, b)
    rows = linalg.intersect_rows(a.gens, b.gens, a.field.p)
    return AdditiveCode(a.field, a.length, a.layout, rows, a.linear and b.linear)


def code_sum(a: AdditiveCode, b: AdditiveCode) -> AdditiveCode:
    _check_ambient(a, b)
    rows = linalg.sum_rows(a.gens, b.gens, a.field.p)
    return AdditiveCode(a.field, a.length, a.layout, rows, a.linear and b.linear)


# -- coordinate-level constructions ------------------------------------------


def _rebuild(code: AdditiveCode, new_length: int, value_rows, linear=None) -> AdditiveCode:
    f = code.field
    mat = [f.expand(r) for r in value_rows]
    return AdditiveCode.from_expanded(
        f, new_length, code.layout, mat, code.linear if linear is None else linear
    )


def puncture(code: AdditiveCode, coords: Iterable[int]) -> AdditiveCode:
    """Delete the given qudit coordinates (both halves for symplectic codes)."""
    coords = sorted(set(coords))
    n_units = code.n if code.layout == SYMPLECTIC else code.length
    if any(not 0 <= c < n_units for c in coords):
        raise ValueError(f"coordinate out of range 0..{n_units - 1}")
    keep = [i for i in range(n_units) if i not in coords]
    rows = []
    for gen in code.gens:
        vals = code.field.collapse(gen)
        if code.layout == SYMPLECTIC:
            x, y = vals[:n_units], vals[n_units:]
            rows.append(np.concatenate([x[keep], y[keep]]))
        else:
            rows.append(vals[keep])
    new_len = len(keep) * (2 if code.layout == SYMPLECTIC else 1)
    return _rebuild(code, new_len, rows)


def extend_alpha(code: AdditiveCode) -> AdditiveCode:
    """Append one qudit: every (a|b) becomes (a alpha | b 0) for all alpha."""
    if code.layout != SYMPLECTIC:
        raise ValueError("extension acts on symplectic codes")
    f, n = code.field, code.n
    rows = []
    for gen in code.gens:
        vals = f.collapse(gen)
        rows.append(np.concatenate([vals[:n], [0], vals[n:], [0]]))
    for t in range(f.m):
        unit = np.zeros(2 * (n + 1), dtype=np.int64)
        unit[n] = f.pow(f.generator, t)
        rows.append(unit)
    return _rebuild(code, 2 * (n + 1), rows)


def direct_sum(a: AdditiveCode, b: AdditiveCode) -> AdditiveCode:
    """Concatenation {uv}: supports side by side (per half for symplectic)."""
    if a.field != b.field or a.layout != b.layout:
        raise ValueError("direct sum needs matching field and layout")
    f = a.field
    rows = []
    if a.layout == SYMPLECTIC:
        na, nb = a.n, b.n
        for gen in a.gens:
            v = f.collapse(gen)
            rows.append(np.concatenate([v[:na], np.zeros(nb, int), v[na:], np.zeros(nb, int)]))
        for gen in b.gens:
            v = f.collapse(gen)
            rows.append(np.concatenate([np.zeros(na, int), v[:nb], np.zeros(na, int), v[nb:]]))
        new_len = 2 * (na + nb)
    else:
        for gen in a.gens:
            rows.append(np.concatenate([f.collapse(gen), np.zeros(b.length, int)]))
        for gen in b.gens:
            rows.append(np.concatenate([np.zeros(a.length, int), f.collapse(gen)]))
        new_len = a.length + b.length
    return AdditiveCode.from_expanded(f, new_len, a.layout, [f.expand(r) for r in rows],
                                      a.linear and b.linear)


def uuv_combine(a: AdditiveCode, b: AdditiveCode) -> AdditiveCode:
    """The {(u, u+v) : u in a, v in b} code on doubled length."""
    if a.field != b.field or a.layout != b.layout or a.length != b.length:
        raise ValueError("uuv combination needs identical ambient spaces")
    f = a.field
    rows = []
    if a.layout == SYMPLECTIC:
        n = a.n
        for gen in a.gens:
            v = f.collapse(gen)
            x, y = v[:n], v[n:]
            rows.append(np.concatenate([x, x, y, y]))
        for gen in b.gens:
            v = f.collapse(gen)
            x, y = v[:n], v[n:]
            rows.append(np.concatenate([np.zeros(n, int), x, np.zeros(n, int), y]))
        new_len = 4 * n
    else:
        L = a.length
        for gen in a.gens:
            v = f.collapse(gen)
            rows.append(np.concatenate([v, v]))
        for gen in b.gens:
            v = f.collapse(gen)
            rows.append(np.concatenate([np.zeros(L, int), v]))
        new_len = 2 * L
    return AdditiveCode.from_expanded(f, new_len, a.layout, [f.expand(r) for r in rows],
                                      a.linear and b.linear)


# -- weight enumeration -------------------------------------------------------


def _swt_of_block(block: np.ndarray, n: int, m: int) -> np.ndarray:
    return block.reshape(-1, 2, n, m).any(axis=(1, 3)).sum(axis=1)


def _scan_chunk(args) -> tuple[int | None, int | None]:
    """Scan one range of head-generator combinations; returns local minima."""
    tail_block, head, p, n, m, small_kernel, start, stop = args
    head = head.astype(np.int64)
    h = head.shape[0]
    best_any: int | None = None
    best_out: int | None = None
    for idx in range(start, stop):
        if h:
            digits = np.empty(h, dtype=np.int64)
            x = idx
            for i in range(h):
                digits[i] = x % p
                x //= p
            block = ((tail_block + digits @ head) % p).astype(np.int8)
        else:
            block = tail_block
        sw = _swt_of_block(block, n, m)
        nz = sw[sw > 0]
        if nz.size:
            local = int(nz.min())
            if best_any is None or local < best_any:
                best_any = local
        if small_kernel is None:
            best_out = best_any
            continue
        limit = best_out if best_out is not None else n + 1
        for s in sorted(set(int(v) for v in sw)):
            if s == 0 or s >= limit:
                continue
            cand = block[sw == s].astype(np.int64)
            rem = (cand @ small_kernel.T.astype(np.int64)) % p
            if rem.any(axis=1).any():
                best_out = s
                break
    return best_any, best_out


def min_symplectic_weights(
    big: AdditiveCode,
    small: AdditiveCode | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> tuple[float, float]:
    """Stream the whole of `big` once, returning two minima.

    Returns (min swt over nonzero vectors of big,
             min swt over vectors of big outside small);
    either is math.inf when the corresponding set is empty.  The result
    is deterministic and independent of how the scan is partitioned.
    Raises CapExceededError (reporting the required budget) when |big|
    exceeds cap.
    """
    if big.layout != SYMPLECTIC:
        raise ValueError("weight scan needs a symplectic code")
    if small is not None:
        _check_ambient(big, small)
    p, n, m = big.field.p, big.n, big.field.m
    if big.size > cap:
        raise CapExceededError(big.size, cap)
    gens = big.gens
    tail = 0
    while tail < gens.shape[0] and p ** (tail + 1) <= (1 << 16):
        tail += 1
    tail_block = linalg.enumerate_span(gens[:tail], p)
    head = gens[tail:]
    combos = p ** head.shape[0]
    small_kernel = None
    if small is not None:
        small_kernel = linalg.kernel(small.gens, p)
    args = (tail_block, head, p, n, m, small_kernel, 0, combos)
    if workers <= 1 or combos < 4:
        results = [_scan_chunk(args)]
    else:
        from concurrent.futures import ProcessPoolExecutor

        bounds = np.linspace(0, combos, workers + 1, dtype=int)
        chunks = [
            (tail_block, head, p, n, m, small_kernel, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:])
            if a < b
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, chunks))
    best_any = min((r[0] for r in results if r[0] is not None), default=None)
    best_out = min((r[1] for r in results if r[1] is not None), default=None)
    return (
        math.inf if best_any is None else best_any,
        math.inf if best_out is None else best_out,
    )


def min_weight_in_difference(
    big: AdditiveCode,
    small: AdditiveCode | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> float:
    """Minimum symplectic weight over big \\ small; math.inf if big ⊆ small.

    With small=None this is the minimum over the nonzero vectors of big.
    """
    return min_symplectic_weights(big, small, cap=cap, workers=workers)[1]


# -- randomized generation (tests and bounded search) ------------------------


def random_additive_code(rng, field: FieldSpec, length: int, layout: str, pdim: int) -> AdditiveCode:
    """Uniform-ish random code of exact F_p-dimension pdim."""
    width = length * field.m
    if pdim > width:
        raise ValueError("dimension exceeds the ambient space")
    rows = np.zeros((0, width), dtype=np.int8)
    while rows.shape[0] < pdim:
        cand = np.array([rng.randrange(field.p) for _ in range(width)], dtype=np.int8)
        stacked, _ = linalg.rref(np.vstack([rows, cand]), field.p)
        rows = stacked
    return AdditiveCode(field, length, layout, rows, field.m == 1)


def random_linear_code(rng, field: FieldSpec, length: int, layout: str, qdim: int) -> AdditiveCode:
    """Random F_q-linear code of exact F_q-dimension qdim."""
    code = AdditiveCode.zero(field, length, layout, linear=True)
    while code.log_size < qdim * field.m:
        vals = [rng.randrange(field.q) for _ in range(length)]
        cand = AdditiveCode.from_expanded(field, length, layout, [field.expand(vals)], linear=True)
        code = code_sum(code, cand)
    return code
