import random

import pytest

from tonalg import diagram as dg
from tonalg.algebra import enumerate_basis


def test_make_diagram_identity():
    d = dg.make_diagram(1, 1, [["T1", "B1"]])
    assert d == dg.identity(1)


def test_make_diagram_special_elements():
    assert dg.make_diagram(2, 2, [["T1", "T2", "B1", "B2"]]) == dg.A(1, 2, 2)
    assert dg.make_diagram(2, 2, [["T1", "T2"], ["B1", "B2"]]) == dg.e(1, 2)


def test_make_diagram_errors_name_vertex():
    with pytest.raises(dg.DiagramError, match="T1"):
        dg.make_diagram(2, 1, [["T1", "B1"], ["T1", "T2"]])
    with pytest.raises(dg.DiagramError, match="B1"):
        dg.make_diagram(1, 1, [["T1"]])
    with pytest.raises(dg.DiagramError):
        dg.make_diagram(1, 1, [["T1", "B1", "B2"]])


def test_compose_identity():
    one = dg.identity(3)
    assert dg.compose(one, one) == (0, one)


def test_compose_single_loop():
    u = dg.e(1, 2)
    k, d = dg.compose(u, u)
    assert k == 1 and d == u


def test_compose_strand_joiner():
    a = dg.A(1, 2, 2)
    assert dg.compose(a, a) == (0, a)


def test_compose_shape_error():
    with pytest.raises(dg.DiagramError):
        dg.compose(dg.identity(2), dg.identity(3))


def test_tensor():
    assert dg.tensor(dg.identity(1), dg.identity(1)) == dg.identity(2)
    assert dg.tensor(dg.e(1, 2), dg.identity(2)) == dg.e(1, 4)
    b2 = dg.b_block(2)
    assert dg.tensor(b2, b2) == dg.make_diagram(
        4, 4, [["T1", "T2", "B1", "B2"], ["T3", "T4", "B3", "B4"]]
    )


def test_flip():
    assert dg.flip(dg.identity(4)) == dg.identity(4)
    assert dg.flip(dg.w(3)) == dg.w_star(3)
    rng = random.Random(1)
    basis = enumerate_basis(2, 3, 3)
    for _ in range(50):
        p = rng.choice(basis)
        assert dg.flip(dg.flip(p)) == p


def test_flip_antiautomorphism():
    rng = random.Random(2)
    basis = enumerate_basis(2, 4, 4)
    for _ in range(200):
        p, q = rng.choice(basis), rng.choice(basis)
        k1, d1 = dg.compose(p, q)
        k2, d2 = dg.compose(dg.flip(q), dg.flip(p))
        assert k1 == k2 and dg.flip(d1) == d2


def test_lateral_flip():
    s1 = dg.transposition(1, 3)
    assert dg.lateral_flip(s1) == dg.transposition(2, 3)
    assert dg.lateral_flip(dg.lateral_flip(dg.A(1, 3, 4))) == dg.A(1, 3, 4)


def test_kernel_and_tone():
    d = dg.identity(5)
    assert all(dg.kernel(b, 5) == 0 for b in d.blocks)
    for l in (1, 2, 3, 5):
        assert dg.is_l_tone(d, l)
    single = dg.Diagram(1, 0, ((0,),))
    assert not dg.is_l_tone(single, 2)
    assert dg.is_l_tone(dg.W(3, 5), 3)
    assert not dg.is_l_tone(dg.epsilon(1, 3), 2)
    assert dg.is_l_tone(dg.epsilon(1, 3), 1)


def test_prop_vector():
    assert dg.prop_vector(dg.identity(4), 3) == (4, 0, 0)
    assert dg.prop_number(dg.e(1, 2)) == 0
    for l, n in [(2, 4), (3, 6), (2, 3)]:
        for m in _gamma(l, n):
            assert dg.prop_vector(dg.a_m(m, l, n), l) == m


def _gamma(l, n):
    from tonalg.gamma import gamma_set

    return gamma_set(l, n)


def test_prop_vector_rejects_bad_tone():
    with pytest.raises(dg.DiagramError):
        dg.prop_vector(dg.epsilon(1, 3), 2)


def test_builder_layout():
    # co-l blocks first, then descending, then the non-propagating blocks
    am = dg.a_m((4, 4), 2, 16)
    assert dg.serialize(am) == (
        "16,16|T1,T2,B1,B2;T3,T4,B3,B4;T5,T6,B5,B6;T7,T8,B7,B8;"
        "T9,B9;T10,B10;T11,B11;T12,B12;T13,T14;T15,T16;B13,B14;B15,B16"
    )


def test_a_m_preidempotent():
    for l, n, m in [(2, 4, (2, 0)), (3, 6, (0, 0, 1)), (2, 6, (0, 0))]:
        am = dg.a_m(m, l, n)
        k, d = dg.compose(am, am)
        assert d == am
        assert k == (n - sum((i + 1) * x for i, x in enumerate(m))) // l


def test_b_m_idempotent_and_sandwich():
    bm = dg.b_m((4, 4, 2), 3, 24)
    assert dg.compose(bm, bm) == (0, bm)
    am = dg.a_m((4, 4, 2), 3, 24)
    k1, x = dg.compose(bm, am)
    k2, bab = dg.compose(x, bm)
    assert (k1 + k2, bab) == (0, bm)
    k1, y = dg.compose(am, bm)
    k2, aba = dg.compose(y, am)
    assert (k1 + k2, aba) == (0, am)


def test_sandwich_identities_full_range():
    from tonalg.gamma import gamma_set

    for l in (1, 2, 3):
        for n in range(0, 7):
            for m in gamma_set(l, n):
                am = dg.a_m(m, l, n)
                assert dg.compose(am, am).diagram == am
                if not any(m):
                    continue
                bm = dg.b_m(m, l, n)
                assert dg.compose(bm, bm) == (0, bm)
                k1, x = dg.compose(bm, am)
                k2, bab = dg.compose(x, bm)
                assert (k1 + k2, bab) == (0, bm)
                k1, y = dg.compose(am, bm)
                k2, aba = dg.compose(y, am)
                assert (k1 + k2, aba) == (0, am)


def test_a_m_invalid_vector():
    with pytest.raises(dg.DiagramError):
        dg.a_m((1, 0), 2, 2)
    with pytest.raises(dg.DiagramError):
        dg.b_m((0, 0), 2, 4)


def test_builder_preconditions():
    with pytest.raises(dg.DiagramError):
        dg.e_pi(3)
    with pytest.raises(dg.DiagramError):
        dg.W(3, 2)
    with pytest.raises(dg.DiagramError):
        dg.W_b(2, 2)
    assert dg.e_pi(4) == dg.tensor(dg.b_block(2), dg.b_block(2))


def test_restrict():
    assert dg.restrict(dg.identity(5), 2, 5) == dg.identity(4)
    p = dg.A(1, 2, 3)
    r = dg.restrict(p, 3, 3)
    assert r == dg.identity(1)
    r2 = dg.restrict(dg.e(1, 2), 1, 1)
    assert r2 == dg.make_diagram(1, 1, [["T1"], ["B1"]])


def test_restrict_realizes_corner_map():
    # sandwiching by the (l+1)-block and restricting drops to n-l strands
    l, n = 2, 4
    wb = dg.W_b(l, n)
    rng = random.Random(3)
    basis = enumerate_basis(l, n, n)
    for _ in range(100):
        p = rng.choice(basis)
        _, q1 = dg.compose(wb, p)
        _, q = dg.compose(q1, wb)
        img = dg.restrict(q, l + 1, n)
        assert img.n == img.m == n - l
        assert dg.is_l_tone(img, l)


def test_associativity_with_scalars():
    rng = random.Random(4)
    basis = enumerate_basis(2, 4, 4)
    for _ in range(200):
        a, b, c = (rng.choice(basis) for _ in range(3))
        k1, ab = dg.compose(a, b)
        k2, ab_c = dg.compose(ab, c)
        k3, bc = dg.compose(b, c)
        k4, a_bc = dg.compose(a, bc)
        assert (k1 + k2, ab_c) == (k3 + k4, a_bc)


def test_composition_closure_random():
    rng = random.Random(5)
    for l, n in [(2, 4), (3, 4)]:
        basis = enumerate_basis(l, n, n)
        for _ in range(150):
            p, q = rng.choice(basis), rng.choice(basis)
            _, d = dg.compose(p, q)
            assert dg.is_l_tone(d, l)


def test_serialize_round_trip():
    rng = random.Random(6)
    for l, n in [(1, 3), (2, 4)]:
        basis = enumerate_basis(l, n, n)
        for _ in range(60):
            d = rng.choice(basis)
            assert dg.parse(dg.serialize(d)) == d
    # non-square shapes too
    d = dg.w(3)
    assert dg.parse(dg.serialize(d)) == d
    d = dg.w_star(2)
    assert dg.parse(dg.serialize(d)) == d


def test_canonical_equality_is_structural():
    a = dg.make_diagram(2, 2, [["B2", "B1"], ["T2", "T1"]])
    b = dg.make_diagram(2, 2, [["T1", "T2"], ["B1", "B2"]])
    assert a == b and hash(a) == hash(b)
