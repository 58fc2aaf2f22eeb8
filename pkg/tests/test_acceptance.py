"""Acceptance battery: one test per criterion, exact expectations throughout.

Each test prints one pass/fail line (visible with pytest -s) and asserts the
criterion.  Expected values are either trivial, verified worked instances,
or computed by the independent oracles exercised in the unit suites.
"""

from tonalg import diagram as dg
from tonalg import gamma
from tonalg.algebra import enumerate_basis
from tonalg.branching import (
    restrict_rule,
    branching_dim_check,
    submodule_closure_check,
    leak_check,
    quotient_exactness_check,
    corner_iso_check,
)
from tonalg.gram import gram_det, generic_rank, gram_matrix, is_semisimple_at, rank_at
from tonalg.standard_modules import (
    all_labels,
    standard_dim,
    sum_of_squares_check,
    corner_compression_check,
    globalise_module_check,
)

GENERIC_POINT = 10 ** 6 + 3


def report(num, ok, text):
    print("%s criterion %d: %s" % ("PASS" if ok else "FAIL", num, text))
    assert ok, "criterion %d failed: %s" % (num, text)


def test_criterion_01_tone_closure_and_bottleneck():
    ok = True
    for l in (1, 2, 3):
        for n in range(0, 5):
            basis = enumerate_basis(l, n, n)
            if l == 1 and len(basis) > 1000:
                from tonalg.fastops import pairwise_tone_and_bottleneck

                t_ok, b_ok = pairwise_tone_and_bottleneck(basis, n, l)
                ok = ok and t_ok and b_ok
                continue
            for a in basis:
                va = dg.prop_vector(a, l)
                for b in basis:
                    _, d = dg.compose(a, b)
                    if not dg.is_l_tone(d, l):
                        ok = False
                    if not gamma.poset_leq(dg.prop_vector(d, l), va, l):
                        ok = False
    report(1, ok, "pairwise products stay in tone and respect the vector bottleneck")


def test_criterion_02_sum_of_squares():
    pairs = [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]
    ok = all(sum_of_squares_check(l, n) for l, n in pairs)
    report(2, ok, "algebra dimension equals the sum of squared module dimensions")


def test_criterion_03_module_dimension_instances():
    ok = (
        standard_dim(((2,), ()), 2, 4) == 10
        and standard_dim(((1,), ()), 2, 3) == 4
        and standard_dim(((2, 1), (1,)), 2, 5) == 20
    )
    report(3, ok, "worked module dimensions 10, 4, 20")


def test_criterion_04_branching_identities():
    rule1 = restrict_rule(((2,), ()), 2, 4)
    ok = rule1.sub == (((1,), ()), ((1,), (1,)))
    ok = ok and rule1.quo == (((2, 1), ()), ((3,), ()))
    dims1 = sorted((standard_dim(mu, 2, 3) for mu in rule1.all_labels()), reverse=True)
    ok = ok and dims1 == [4, 3, 2, 1] and sum(dims1) == 10
    rule2 = restrict_rule(((), (1,)), 2, 4)
    ok = ok and rule2.sub == (((1,), ()),) and rule2.quo == (((1,), (1,)),)
    ok = ok and [standard_dim(mu, 2, 3) for mu in rule2.all_labels()] == [4, 3]
    ok = ok and standard_dim(((), (1,)), 2, 4) == 7
    ok = ok and branching_dim_check(((2,), ()), 2, 4)
    ok = ok and branching_dim_check(((), (1,)), 2, 4)
    report(4, ok, "restriction identities 10 = 4+3+1+2 and 7 = 4+3")


def test_criterion_05_gram_nondegeneracy():
    ok = True
    for l in (2, 3):
        for n in range(0, 5):
            for mu in all_labels(l, n):
                if gram_det(mu, l, n).is_zero():
                    ok = False
    report(5, ok, "Gram determinants are nonzero polynomials")


def test_criterion_06_generic_semisimplicity():
    ok = True
    for l in (2, 3):
        for n in range(0, 5):
            for mu in all_labels(l, n):
                if generic_rank(mu, l, n) != gram_matrix(mu, l, n).dim:
                    ok = False
            if not is_semisimple_at(l, n, GENERIC_POINT):
                ok = False
    report(6, ok, "full generic ranks and semisimplicity at the surrogate point")


def test_criterion_07_modular_instance():
    r1 = rank_at(((1,), ()), 2, 3, 1)
    r2 = rank_at(((1,), (1,)), 2, 3, 1)
    dim1 = gram_matrix(((1,), ()), 2, 3).dim
    dim2 = gram_matrix(((1,), (1,)), 2, 3).dim
    ok = r1 == 1 and r2 == 3 and dim2 == 3 and dim1 == r1 + dim2
    report(7, ok, "at delta=1 the 4-dim module has rank 1 and socle dimension 3")


def test_criterion_08_index_machinery():
    ok = True
    for l in (1, 2, 3):
        for n in range(0, 10):
            if not gamma.refinement_check(l, n):
                ok = False
            if not gamma.chain_prefix_check(l, n):
                ok = False
    eta = gamma.eta_levels(3, 8)
    ok = ok and eta == {
        8: [(8, 0, 0)],
        7: [(6, 1, 0)],
        6: [(4, 2, 0), (5, 0, 1)],
        5: [(2, 3, 0), (3, 1, 1)],
        4: [(0, 4, 0), (1, 2, 1), (2, 0, 2)],
        3: [(0, 1, 2)],
    }
    report(8, ok, "total order refines the poset; chain prefixes; level tables")


def test_criterion_09_globalisation():
    ok = all(corner_compression_check(l, n) for l, n in [(2, 4), (2, 5), (3, 6)])
    for mu in all_labels(2, 2):
        ok = ok and globalise_module_check(mu, 2, 4)
    report(9, ok, "corner compression bijections and module embeddings")


def test_criterion_10_core_axiom():
    ok = True
    l = 2
    for n in range(0, 5):
        basis = enumerate_basis(l, n, n)
        g = gamma.gamma_set(l, n)
        for m in g:
            am = dg.a_m(m, l, n)
            for mp in g:
                if gamma.poset_leq(m, mp, l):
                    continue
                amp = dg.a_m(mp, l, n)
                for p in basis:
                    _, q1 = dg.compose(amp, p)
                    _, q2 = dg.compose(q1, am)
                    if not gamma.poset_lt(dg.prop_vector(q2, l), m, l):
                        ok = False
    report(10, ok, "products through incomparable levels fall strictly below")


def test_criterion_11_submodule_closure():
    rep = submodule_closure_check(((1,), ()), 2, 3)
    ok = rep["A_closed"] and rep["B1_closed"]
    ok = ok and leak_check(((1,), ()), 2, 3)
    for nplus1 in (2, 3, 4, 5):
        for lam in all_labels(2, nplus1):
            if not quotient_exactness_check(lam, 2, nplus1):
                ok = False
    report(11, ok, "propagating part closes, the enlarged class leaks, quotients exact")


def test_criterion_12_fusion_corner():
    ok = True
    from tonalg.branching import fusion_corner_basis

    bell = {2: 2, 4: 15}
    for n in (2, 4):
        if len(fusion_corner_basis(n)) != bell[n]:
            ok = False
        if not corner_iso_check(n):
            ok = False
    report(12, ok, "pair-joiner compression has full partition-algebra size")
