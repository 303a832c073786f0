import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subsysforge import linalg
from subsysforge.codes import (
    EUCLIDEAN,
    HERMITIAN,
    PLAIN,
    SYMPLECTIC,
    TRACE_ALTERNATING,
    TRACE_SYMPLECTIC,
    AdditiveCode,
    CodeVector,
    code_sum,
    direct_sum,
    euclidean_product,
    extend_alpha,
    hermitian_product,
    intersect,
    min_symplectic_weights,
    min_weight_in_difference,
    puncture,
    quadratic_to_symplectic,
    random_additive_code,
    random_linear_code,
    symplectic_to_quadratic,
    symplectic_weight,
    trace_alternating_product,
    trace_symplectic_product,
    uuv_combine,
)
from subsysforge.errors import CapExceededError
from subsysforge.field import GF


def vec(q, entries, layout=PLAIN):
    return CodeVector(GF(q), tuple(entries), layout)


def svec(q, x, y):
    return CodeVector.symplectic(GF(q), x, y)


def random_vector(rng, field, length, layout=PLAIN):
    return CodeVector(field, tuple(rng.randrange(field.q) for _ in range(length)), layout)


# -- span / contains ---------------------------------------------------------


def test_span_empty_is_zero_code():
    c = AdditiveCode.span([], field=GF(2), length=3, layout=PLAIN)
    assert c.log_size == 0 and c.size == 1
    assert c.contains(vec(2, (0, 0, 0)))


def test_span_full_f2_square():
    c = AdditiveCode.span([vec(2, (1, 0)), vec(2, (0, 1))])
    assert c.size == 4
    assert c == AdditiveCode.full(GF(2), 2, PLAIN)


def test_span_gf4_additive_vs_linear():
    w = vec(4, (2,))
    additive = AdditiveCode.span([w])
    linear = AdditiveCode.span([w], linear=True)
    # oracle: enumerate both spans directly
    add_set = {tuple(GF(4).collapse(r)) for r in linalg.enumerate_span(additive.gens, 2)}
    lin_set = {tuple(GF(4).collapse(r)) for r in linalg.enumerate_span(linear.gens, 2)}
    assert add_set == {(0,), (2,)}
    assert lin_set == {(0,), (1,), (2,), (3,)}
    assert additive.size == 2 and linear.size == 4
    assert not additive.is_fq_linear() and linear.is_fq_linear()


def test_contains_zero_and_generators():
    rng = random.Random(1)
    for q in (2, 3, 4):
        f = GF(q)
        c = random_additive_code(rng, f, 4, PLAIN, 3)
        assert c.contains(np.zeros(4 * f.m, dtype=np.int8))
        for g in c.generator_vectors():
            assert c.contains(g)


def test_contains_matches_enumeration_oracle():
    rng = random.Random(2)
    for q in (2, 3, 4):
        f = GF(q)
        c = random_additive_code(rng, f, 3, PLAIN, 3)
        members = {tuple(r) for r in linalg.enumerate_span(c.gens, f.p)}
        for _ in range(50):
            v = np.array([rng.randrange(f.p) for _ in range(3 * f.m)], dtype=np.int8)
            assert c.contains(v) == (tuple(v) in members)


# -- products ------------------------------------------------------------------


def test_symplectic_product_alternating_and_example():
    assert trace_symplectic_product(svec(2, [1], [0]), svec(2, [0], [1])) == 1
    rng = random.Random(3)
    for q in (2, 3, 4, 9):
        f = GF(q)
        for _ in range(20):
            u = random_vector(rng, f, 6, SYMPLECTIC)
            assert trace_symplectic_product(u, u) == 0


def test_symplectic_product_bilinear():
    rng = random.Random(4)
    for q in (2, 3, 4):
        f = GF(q)
        for _ in range(30):
            u, v, w = (random_vector(rng, f, 4, SYMPLECTIC) for _ in range(3))
            lhs = trace_symplectic_product(u + v, w)
            rhs = (trace_symplectic_product(u, w) + trace_symplectic_product(v, w)) % f.p
            assert lhs == rhs


def test_euclidean_and_hermitian_examples():
    f2, f4 = GF(2), GF(4)
    assert euclidean_product(vec(2, (0, 0, 0)), vec(2, (1, 1, 0))).value == 0
    assert euclidean_product(vec(2, (1, 1, 1)), vec(2, (1, 1, 0))).value == 0
    # <w|w>_h = w^2 * w = w^3 = 1
    assert hermitian_product(vec(4, (2,)), vec(4, (2,))).value == 1
    assert hermitian_product(f4.zero and vec(4, (0,)), vec(4, (3,))).value == 0


def test_trace_alternating_example_and_bilinearity():
    # F_4 over F_2, u=(w), v=(1): numerator w*1 - w^2*1 = w - (w+1) = 1,
    # denominator beta - beta^2 = 1, so the product is tr(1) = 1.
    assert trace_alternating_product(vec(4, (2,)), vec(4, (1,))) == 1
    rng = random.Random(5)
    for q in (4, 9, 16):
        f = GF(q)
        for _ in range(20):
            u, v, w = (random_vector(rng, f, 3) for _ in range(3))
            assert trace_alternating_product(u, u) == 0
            lhs = trace_alternating_product(u + v, w)
            rhs = (trace_alternating_product(u, w) + trace_alternating_product(v, w)) % f.p
            assert lhs == rhs


def test_alternating_symplectic_isometry():
    rng = random.Random(6)
    for q in (2, 3, 4):
        f = GF(q)
        for _ in range(40):
            u = random_vector(rng, f, 8, SYMPLECTIC)
            v = random_vector(rng, f, 8, SYMPLECTIC)
            assert trace_alternating_product(
                symplectic_to_quadratic(u), symplectic_to_quadratic(v)
            ) == trace_symplectic_product(u, v)
            assert quadratic_to_symplectic(symplectic_to_quadratic(u)) == u


# -- duals ---------------------------------------------------------------------


def test_dual_zero_and_full():
    f = GF(3)
    zero = AdditiveCode.zero(f, 4, SYMPLECTIC)
    full = AdditiveCode.full(f, 4, SYMPLECTIC)
    assert zero.dual(TRACE_SYMPLECTIC) == full
    assert full.dual(TRACE_SYMPLECTIC) == zero


@pytest.mark.parametrize("q", [2, 3, 4])
def test_dual_size_law_and_involution(q):
    rng = random.Random(10 + q)
    f = GF(q)
    for _ in range(25):
        n = rng.randrange(1, 5)
        c = random_additive_code(rng, f, 2 * n, SYMPLECTIC, rng.randrange(0, 2 * n * f.m + 1))
        d = c.dual(TRACE_SYMPLECTIC)
        assert c.log_size + d.log_size == 2 * n * f.m
        assert d.dual(TRACE_SYMPLECTIC) == c


@pytest.mark.parametrize("form,q", [(EUCLIDEAN, 3), (EUCLIDEAN, 4), (HERMITIAN, 4), (HERMITIAN, 9), (TRACE_ALTERNATING, 4), (TRACE_ALTERNATING, 9)])
def test_dual_laws_other_forms(form, q):
    rng = random.Random(hash((form, q)) % 10**6)
    f = GF(q)
    for _ in range(15):
        length = rng.randrange(1, 4)
        c = random_additive_code(rng, f, length, PLAIN, rng.randrange(0, length * f.m + 1))
        d = c.dual(form)
        assert c.log_size + d.log_size == length * f.m
        assert d.dual(form) == c


def test_dual_orthogonality_cross_check():
    rng = random.Random(11)
    f = GF(4)
    c = random_additive_code(rng, f, 6, SYMPLECTIC, 5)
    d = c.dual(TRACE_SYMPLECTIC)
    for dv in d.generator_vectors():
        for cv in c.generator_vectors():
            assert trace_symplectic_product(dv, cv) == 0


def test_linear_dual_is_linear():
    rng = random.Random(12)
    f = GF(4)
    c = random_linear_code(rng, f, 6, SYMPLECTIC, 2)
    assert c.is_fq_linear()
    assert c.dual(TRACE_SYMPLECTIC).is_fq_linear()


# -- intersect / sum -------------------------------------------------------------


def test_intersect_sum_idempotent():
    rng = random.Random(13)
    f = GF(3)
    c = random_additive_code(rng, f, 4, PLAIN, 2)
    full = AdditiveCode.full(f, 4, PLAIN)
    assert intersect(c, c) == c
    assert code_sum(c, c) == c
    assert intersect(c, full) == c


def test_modular_dimension_law():
    rng = random.Random(14)
    for q in (2, 3, 4):
        f = GF(q)
        for _ in range(20):
            a = random_additive_code(rng, f, 4, PLAIN, rng.randrange(0, 4 * f.m))
            b = random_additive_code(rng, f, 4, PLAIN, rng.randrange(0, 4 * f.m))
            assert (
                a.log_size + b.log_size
                == code_sum(a, b).log_size + intersect(a, b).log_size
            )


# -- weights ---------------------------------------------------------------------


def test_symplectic_weight_examples():
    assert symplectic_weight(svec(2, [0, 0], [0, 0])) == 0
    assert symplectic_weight(svec(2, [1, 0, 1], [1, 1, 0])) == 3
    rng = random.Random(15)
    for _ in range(30):
        v = random_vector(rng, GF(4), 10, SYMPLECTIC)
        assert symplectic_weight(v) <= 5


def naive_min_weights(big, small):
    """Double-enumeration oracle: scan big and small as explicit sets."""
    f = big.field
    small_set = {tuple(r) for r in linalg.enumerate_span(small.gens, f.p)} if small else None
    best_any = best_out = math.inf
    n, m = big.n, f.m
    for row in linalg.enumerate_span(big.gens, f.p):
        vals = f.collapse(row)
        w = sum(1 for a, b in zip(vals[:n], vals[n:]) if a or b)
        if w == 0:
            continue
        best_any = min(best_any, w)
        if small_set is None or tuple(row) not in small_set:
            best_out = min(best_out, w)
    return best_any, best_out


def test_min_weight_against_naive_oracle():
    rng = random.Random(16)
    for q in (2, 3, 4):
        f = GF(q)
        for _ in range(12):
            n = rng.randrange(1, 4)
            big = random_additive_code(rng, f, 2 * n, SYMPLECTIC, rng.randrange(1, min(10, 2 * n * f.m) + 1))
            small = random_additive_code(rng, f, 2 * n, SYMPLECTIC, rng.randrange(0, 5))
            assert min_symplectic_weights(big, small) == naive_min_weights(big, small)


def test_min_weight_inf_when_subset():
    rng = random.Random(17)
    c = random_additive_code(rng, GF(2), 6, SYMPLECTIC, 4)
    assert min_weight_in_difference(c, c) == math.inf


def test_min_weight_cap():
    c = AdditiveCode.full(GF(2), 12, SYMPLECTIC)
    with pytest.raises(CapExceededError) as e:
        min_weight_in_difference(c, None, cap=1 << 10)
    assert e.value.required == 1 << 24


def test_min_weight_workers_deterministic():
    rng = random.Random(18)
    big = random_additive_code(rng, GF(2), 10, SYMPLECTIC, 9)
    small = random_additive_code(rng, GF(2), 10, SYMPLECTIC, 3)
    assert min_symplectic_weights(big, small, workers=2) == min_symplectic_weights(big, small)


# -- coordinate-level constructions ------------------------------------------------


def test_extend_alpha_zero_code():
    f = GF(3)
    z = AdditiveCode.zero(f, 6, SYMPLECTIC)
    e = extend_alpha(z)
    assert e.length == 8 and e.size == 3
    assert e.contains(CodeVector.symplectic(f, [0, 0, 0, 1], [0, 0, 0, 0]))


def test_extend_alpha_size_bookkeeping():
    rng = random.Random(19)
    for q in (2, 4):
        f = GF(q)
        c = random_additive_code(rng, f, 6, SYMPLECTIC, 4)
        assert extend_alpha(c).size == f.q * c.size


def test_extension_dual_commutation():
    rng = random.Random(20)
    for q in (2, 3, 4):
        f = GF(q)
        for _ in range(10):
            n = rng.randrange(1, 5)
            x = random_additive_code(rng, f, 2 * n, SYMPLECTIC, rng.randrange(0, 2 * n * f.m))
            assert extend_alpha(x.dual(TRACE_SYMPLECTIC)) == extend_alpha(x).dual(TRACE_SYMPLECTIC)


def test_puncture_preserves_dual_size_when_min_weight_two():
    # D2perp with min symplectic weight >= 2: puncturing keeps |D_p^perp| = |D^perp|
    f = GF(2)
    d = AdditiveCode.span(
        [svec(2, [1, 1, 1, 1], [0, 0, 0, 0]), svec(2, [0, 0, 0, 0], [1, 1, 1, 1])]
    )
    dperp = d.dual(TRACE_SYMPLECTIC)
    assert min_weight_in_difference(dperp, None) >= 2
    assert puncture(dperp, [0]).size == dperp.size


def test_puncture_out_of_range():
    c = AdditiveCode.zero(GF(2), 8, SYMPLECTIC)
    with pytest.raises(ValueError):
        puncture(c, [4])


def test_direct_sum_sizes_multiply():
    rng = random.Random(21)
    a = random_additive_code(rng, GF(3), 4, SYMPLECTIC, 3)
    b = random_additive_code(rng, GF(3), 6, SYMPLECTIC, 2)
    c = direct_sum(a, b)
    assert c.size == a.size * b.size and c.length == 10


def test_direct_sum_dual_factorizes():
    rng = random.Random(22)
    for q in (2, 3):
        f = GF(q)
        a = random_additive_code(rng, f, 4, SYMPLECTIC, 2)
        b = random_additive_code(rng, f, 4, SYMPLECTIC, 3)
        lhs = direct_sum(a, b).dual(TRACE_SYMPLECTIC)
        rhs = direct_sum(a.dual(TRACE_SYMPLECTIC), b.dual(TRACE_SYMPLECTIC))
        assert lhs == rhs


def test_uuv_combine_size():
    rng = random.Random(23)
    a = random_additive_code(rng, GF(2), 6, SYMPLECTIC, 3)
    b = random_additive_code(rng, GF(2), 6, SYMPLECTIC, 2)
    c = uuv_combine(a, b)
    assert c.length == 12 and c.size == a.size * b.size


def test_canonical_equality_independent_of_presentation():
    f = GF(2)
    rows = [svec(2, [1, 0], [1, 1]), svec(2, [0, 1], [1, 0])]
    a = AdditiveCode.span(rows)
    b = AdditiveCode.span([rows[1], rows[0] + rows[1], rows[0]])
    assert a == b and hash(a) == hash(b)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_span_of_generators_reproduces_code(data):
    q = data.draw(st.sampled_from([2, 3, 4]))
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    f = GF(q)
    c = random_additive_code(rng, f, 4, SYMPLECTIC, rng.randrange(0, 6))
    assert AdditiveCode.span(c.generator_vectors(), field=f, length=4, layout=SYMPLECTIC) == c
