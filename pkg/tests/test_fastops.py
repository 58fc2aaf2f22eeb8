import random

from tonalg import diagram as dg
from tonalg import gamma
from tonalg.algebra import enumerate_basis
from tonalg.fastops import pairwise_tone_and_bottleneck, encode_basis


def plain_sweep(basis, n, l):
    tone_ok = True
    bottleneck_ok = True
    for a in basis:
        va = dg.prop_vector(a, l)
        for b in basis:
            _, d = dg.compose(a, b)
            if not dg.is_l_tone(d, l):
                tone_ok = False
            if not gamma.poset_leq(dg.prop_vector(d, l), va, l):
                bottleneck_ok = False
    return tone_ok, bottleneck_ok


def test_cross_validation_exhaustive_small():
    for l, n in [(2, 2), (2, 3), (1, 2), (1, 3), (3, 3)]:
        basis = enumerate_basis(l, n, n)
        assert pairwise_tone_and_bottleneck(basis, n, l) == plain_sweep(basis, n, l)


def test_encode_basis_labels():
    basis = enumerate_basis(2, 3, 3)
    codes = encode_basis(basis, 3)
    assert codes.shape == (len(basis), 6)
    for i, d in enumerate(basis):
        assert list(codes[i]) == dg.labels(d)


def test_big_sweep_runs():
    # coarse regression: the kernel agrees with the plain route on a random
    # sub-sample of the big case it exists for
    basis = enumerate_basis(1, 4, 4)
    ok_t, ok_b = pairwise_tone_and_bottleneck(basis, 4, 1)
    assert ok_t and ok_b
    rng = random.Random(9)
    for _ in range(200):
        a, b = rng.choice(basis), rng.choice(basis)
        _, d = dg.compose(a, b)
        assert dg.prop_number(d) <= dg.prop_number(a)
