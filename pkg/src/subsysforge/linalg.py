"""Exact linear algebra over prime fields F_p on numpy int matrices.

Matrices are 2-D int8 arrays with entries in [0, p).  Everything here
is deterministic; reduced row echelon form is the canonical form used
for code equality throughout the package.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np


def as_matrix(rows, width: int) -> np.ndarray:
    m = np.array(rows, dtype=np.int8)
    if m.size == 0:
        return np.zeros((0, width), dtype=np.int8)
    return m.reshape(-1, width)


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form mod p, zero rows dropped.

    Returns (canonical matrix, pivot column indices).
    """
    m = mat.astype(np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        lead = r + nz[0]
        if lead != r:
            m[[r, lead]] = m[[lead, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r].astype(np.int8), tuple(pivots)


def kernel(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (rref rows) of {x : mat @ x = 0 mod p}."""
    cols = mat.shape[1]
    red, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-int(red[row, f])) % p
    out, _ = rref(basis, p)
    return out


def residue(vec: np.ndarray, red: np.ndarray, pivots: tuple[int, ...], p: int) -> np.ndarray:
    """Reduce vec by the rref rows; the zero vector means membership."""
    v = vec.astype(np.int64) % p
    for row, pc in enumerate(pivots):
        if v[pc]:
            v = (v - v[pc] * red[row]) % p
    return v.astype(np.int8)


def in_row_space(vec, red: np.ndarray, pivots: tuple[int, ...], p: int) -> bool:
    return not residue(np.asarray(vec), red, pivots, p).any()


def intersect_rows(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """rref basis of rowspace(a) ∩ rowspace(b)."""
    ann = np.vstack([kernel(a, p), kernel(b, p)])
    return kernel(ann, p)


def sum_rows(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    out, _ = rref(np.vstack([a, b]), p)
    return out


def rank(mat: np.ndarray, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def span_size(mat: np.ndarray, p: int) -> int:
    return p ** rank(mat, p)


def enumerate_span(gens: np.ndarray, p: int) -> np.ndarray:
    """All p^rows vectors of the row space, materialized.

    Order: mixed-radix over the generator rows, first row fastest.
    Callers must keep p^rows small; stream_span handles big spans.
    """
    cols = gens.shape[1]
    block = np.zeros((1, cols), dtype=np.int8)
    for g in gens.astype(np.int64):
        block = np.vstack([(block + c * g) % p for c in range(p)]).astype(np.int8)
    return block


def stream_span(gens: np.ndarray, p: int, block_rows: int = 1 << 16) -> Iterator[np.ndarray]:
    """Yield the row space in deterministic blocks of at most ~block_rows.

    The concatenation of the blocks enumerates every vector exactly once;
    nothing larger than one block is materialized at a time.
    """
    k = gens.shape[0]
    tail = 0
    while tail < k and p ** (tail + 1) <= block_rows:
        tail += 1
    base = enumerate_span(gens[:tail], p)
    head = gens[tail:].astype(np.int64)
    for combo in np.ndindex(*([p] * head.shape[0])):
        if head.shape[0]:
            offset = (np.asarray(combo) @ head) % p
            yield ((base + offset) % p).astype(np.int8)
        else:
            yield base
