import random
from math import factorial

import pytest

from tonalg import symmetric as sym
from tonalg.exactla import int_mat_mul, identity_matrix, fraction_rank


def test_partitions_of():
    assert sym.partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    assert sym.partitions_of(0) == ((),)
    assert len(sym.partitions_of(6)) == 11


def test_multipartitions():
    assert set(sym.multipartitions_of((2, 0))) == {((2,), ()), ((1, 1), ())}
    assert len(sym.multipartitions_of((1, 1))) == 1
    assert len(sym.multipartitions_of((2, 1))) == 2


def test_tableau_sequences():
    assert ["".join(map(str, s)) for s in sym.standard_tableaux((3, 1))] == [
        "1112",
        "1121",
        "1211",
    ]
    assert sym.standard_tableaux((1, 1, 1)) == [(1, 2, 3)]


def test_specht_dims():
    assert sym.specht_dim((2, 1)) == 2
    for n in range(1, 7):
        assert sym.specht_dim((n,)) == 1
        assert sym.specht_dim(tuple([1] * n)) == 1
        # one-row shape carries the trivial action
        assert all(M == [[1]] for M in sym.specht_rep((n,)).gens)
    for k in range(0, 7):
        for lam in sym.partitions_of(k):
            assert sym.specht_rep(lam).dim == sym.specht_dim(lam)


def test_dim_squares_sum_to_factorial():
    for k in range(0, 7):
        assert sum(sym.specht_dim(lam) ** 2 for lam in sym.partitions_of(k)) == factorial(k)


@pytest.mark.parametrize("k", range(2, 7))
def test_generator_relations(k):
    for lam in sym.partitions_of(k):
        rep = sym.specht_rep(lam)
        I = identity_matrix(rep.dim)
        for i, M in enumerate(rep.gens):
            assert int_mat_mul(M, M) == I
        for i in range(len(rep.gens) - 1):
            ab = int_mat_mul(rep.gens[i], rep.gens[i + 1])
            ba = int_mat_mul(rep.gens[i + 1], rep.gens[i])
            assert int_mat_mul(ab, rep.gens[i]) == int_mat_mul(ba, rep.gens[i + 1])
        for i in range(len(rep.gens)):
            for j in range(i + 2, len(rep.gens)):
                assert int_mat_mul(rep.gens[i], rep.gens[j]) == int_mat_mul(
                    rep.gens[j], rep.gens[i]
                )


@pytest.mark.parametrize("k", range(2, 7))
def test_form_contravariance(k):
    for lam in sym.partitions_of(k):
        rep = sym.specht_rep(lam)
        d = rep.dim
        assert rep.form == [[rep.form[j][i] for j in range(d)] for i in range(d)]
        for M in rep.gens:
            Mt = [[M[b][a] for b in range(d)] for a in range(d)]
            assert int_mat_mul(int_mat_mul(Mt, rep.form), M) == rep.form


def test_form_nondegenerate_over_q():
    # includes the 2x2 worked determinant for shape (2,1)
    rep = sym.specht_rep((2, 1))
    a, b, c, d = rep.form[0][0], rep.form[0][1], rep.form[1][0], rep.form[1][1]
    assert a * d - b * c != 0
    for k in range(1, 7):
        for lam in sym.partitions_of(k):
            r = sym.specht_rep(lam)
            assert fraction_rank(r.form) == r.dim


def test_matrix_of_arbitrary_permutation():
    rng = random.Random(11)
    rep = sym.specht_rep((2, 2, 1))
    for _ in range(25):
        p = tuple(rng.sample(range(5), 5))
        q = tuple(rng.sample(range(5), 5))
        assert int_mat_mul(rep.matrix(p), rep.matrix(q)) == rep.matrix(
            sym.perm_compose(p, q)
        )
    assert rep.matrix(tuple(range(5))) == identity_matrix(rep.dim)


def test_outer_rep():
    assert sym.outer_rep(((2,), ())).dim == 1
    r = sym.outer_rep(((2, 1), (1,)))
    assert r.dim == 2
    one = sym.outer_rep(((3,), (2,)))
    assert one.dim == 1 and one.form[0][0] > 0


def test_outer_rep_matrix_kron():
    r = sym.outer_rep(((2, 1), (2,)))
    s = ((1, 0, 2), (0, 1))
    M = r.matrix(s)
    assert len(M) == r.dim == 2
    f = sym.specht_rep((2, 1))
    assert M == f.matrix((1, 0, 2))


def test_boxes():
    assert sym.rem_boxes(((2,), ()), 1) == [((1,), ())]
    assert sym.add_boxes(((1,), ()), 1) == [((2,), ()), ((1, 1), ())]
    assert sym.rem_boxes(((), (1,)), 1) == []
    with pytest.raises(IndexError):
        sym.rem_boxes(((1,),), 2)


def test_sym_restriction():
    assert set(sym.sym_restriction((3, 1))) == {(2, 1), (3,)}
    assert sym.sym_restriction((4,)) == [(3,)]
    for k in range(1, 7):
        for lam in sym.partitions_of(k):
            assert sym.specht_dim(lam) == sum(
                sym.specht_dim(m) for m in sym.sym_restriction(lam)
            )
