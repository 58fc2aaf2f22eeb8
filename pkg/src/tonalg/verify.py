"""Named verification suite tying the library's structural checks together.

Each check is a named predicate over (l, n); `run_verify` evaluates the full
battery over a range of n and reports one pass/fail line per check instance.
Checks are sized so the battery stays interactive at desk scale.
"""

import os
import random
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from . import diagram as dg
from . import gamma
from .algebra import Element, enumerate_basis, reduce_mod_below
from .deltapoly import DeltaPoly
from .exactla import poly_mat_mul, poly_mat_eq, identity_matrix, poly_mat
from .standard_modules import (
    standard_module,
    sum_of_squares_check,
    ideal_section_dims_check,
    corner_compression_check,
    globalise_module_check,
    vanishing_top_layer_check,
    generator_diagrams,
    all_labels,
)
from .gram import (
    gram_det,
    generic_rank,
    gram_matrix,
    is_semisimple_at,
    contravariance_check,
    top_layer_check,
)
from .branching import (
    branching_dim_check,
    classified_dim_checks,
    submodule_closure_check,
    quotient_exactness_check,
    corner_iso_check,
)
from .structure import (
    section_checks,
    a_section_checks,
    corner_group_check,
)


CheckResult = namedtuple("CheckResult", ["name", "params", "ok"])

GENERIC_POINT = 10 ** 6 + 3


def _pairwise_products_ok(l, n):
    basis = enumerate_basis(l, n, n)
    if l == 1 and len(basis) > 1000:
        from .fastops import pairwise_tone_and_bottleneck

        t_ok, b_ok = pairwise_tone_and_bottleneck(basis, n, l)
        return t_ok and b_ok
    for a in basis:
        va = dg.prop_vector(a, l)
        for b in basis:
            k, d = dg.compose(a, b)
            if not dg.is_l_tone(d, l):
                return False
            if not gamma.poset_leq(dg.prop_vector(d, l), va, l):
                return False
    return True


def check_tone_closure(l, n):
    return _pairwise_products_ok(l, n)


def check_flip_antiautomorphism(l, n):
    rng = random.Random(17 * l + n)
    basis = enumerate_basis(l, n, n)
    for _ in range(min(len(basis) ** 2, 300)):
        a, b = rng.choice(basis), rng.choice(basis)
        k1, d1 = dg.compose(a, b)
        k2, d2 = dg.compose(dg.flip(b), dg.flip(a))
        if (k1, dg.flip(d1)) != (k2, d2):
            return False
    return True


def check_associativity(l, n):
    rng = random.Random(5 * l + n)
    basis = enumerate_basis(l, n, n)
    for _ in range(100):
        a, b, c = (rng.choice(basis) for _ in range(3))
        k1, ab = dg.compose(a, b)
        k2, ab_c = dg.compose(ab, c)
        k3, bc = dg.compose(b, c)
        k4, a_bc = dg.compose(a, bc)
        if (k1 + k2, ab_c) != (k3 + k4, a_bc):
            return False
    return True


def check_sandwich_identities(l, n):
    for m in gamma.gamma_set(l, n):
        a = dg.a_m(m, l, n)
        ka, aa = dg.compose(a, a)
        if aa != a or ka != (n - gamma.r_of(m)) // l:
            return False
        if not any(m):
            continue
        b = dg.b_m(m, l, n)
        k1, x = dg.compose(b, a)
        k2, bab = dg.compose(x, b)
        if (k1 + k2, bab) != (0, b):
            return False
        k1, y = dg.compose(a, b)
        k2, aba = dg.compose(y, a)
        if (k1 + k2, aba) != (0, a):
            return False
    return True


def check_basis_vector_partition(l, n):
    return ideal_section_dims_check(l, n)


def check_matching_group_corner(l, n):
    for m in gamma.gamma_set(l, n):
        ok, _ = corner_group_check(m, l, n)
        if not ok:
            return False
    return True


def check_lower_ideal_product(l, n):
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
                    return False
    return True


def check_total_order(l, n):
    return gamma.refinement_check(l, n) and gamma.chain_prefix_check(l, n)


def check_index_split(l, n):
    g = set(gamma.gamma_set(l, n))
    h = set(gamma.h_subset(l, n))
    small = set(gamma.gamma_set(l, n - l)) if n >= l else set()
    if g != h | small or h & small:
        return False
    for a in small:
        for b in h:
            if gamma.poset_leq(b, a, l):
                return False
    return True


def check_sum_of_squares(l, n):
    return sum_of_squares_check(l, n)


def check_gram_nondegenerate(l, n):
    return all(not gram_det(mu, l, n).is_zero() for mu in all_labels(l, n))


def check_generic_rank(l, n):
    for mu in all_labels(l, n):
        g = gram_matrix(mu, l, n)
        if generic_rank(mu, l, n) != g.dim:
            return False
    return True


def check_semisimple_generic_point(l, n, point=GENERIC_POINT):
    return is_semisimple_at(l, n, point)


def check_top_layer(l, n):
    return top_layer_check(l, n)


def check_contravariance(l, n):
    return all(contravariance_check(mu, l, n, trials=4, seed=l * 100 + n) for mu in all_labels(l, n))


def check_generator_relations(l, n):
    delta = DeltaPoly.delta(1)
    for mu in all_labels(l, n):
        mod = standard_module(mu, l, n)
        for name, d in generator_diagrams(l, n).items():
            M = mod.action_matrix(d)
            M2 = poly_mat_mul(M, M)
            if name.startswith("s"):
                if not poly_mat_eq(M2, identity_matrix(mod.dim)):
                    return False
            elif name == "A12":
                if not poly_mat_eq(M2, M):
                    return False
            elif name == "W":
                scaled = [[delta * e for e in row] for row in poly_mat(M)]
                if not poly_mat_eq(M2, scaled):
                    return False
    return True


def check_corner_compression(l, n):
    if n <= l:
        return True
    return corner_compression_check(l, n)


def check_module_globalisation(l, n):
    if n <= l:
        return True
    return all(globalise_module_check(mu, l, n) for mu in all_labels(l, n - l))


def check_top_layer_vanishing(l, n):
    return vanishing_top_layer_check(l, n)


def check_branching_dims(l, n):
    if n < 1:
        return True
    for lam in all_labels(l, n):
        if not branching_dim_check(lam, l, n):
            return False
        ok, _, _ = classified_dim_checks(lam, l, n)
        if not ok:
            return False
    return True


def check_submodule_closure(l, n):
    if n < 1:
        return True
    for lam in all_labels(l, n):
        rep = submodule_closure_check(lam, l, n)
        if not (rep["B1_closed"] and rep["A_closed"]):
            return False
        if not quotient_exactness_check(lam, l, n):
            return False
    return True


def check_heredity_sections(l, n):
    rep = section_checks(l, n)
    if not rep["sections_sum_to_dim"]:
        return False
    for step in rep["steps"]:
        if not all(v["ok"] for v in step["vectors"]):
            return False
    return a_section_checks(l, n)


def check_fusion_corner(l, n):
    if l != 2 or n % 2 != 0 or n == 0:
        return True
    return corner_iso_check(n)


def check_reduction_idempotent(l, n):
    for m in gamma.gamma_set(l, n):
        x = Element.from_diagram(dg.a_m(m, l, n), l)
        if reduce_mod_below(x, m) != x:
            return False
    return True


CHECKS = [
    ("tone-closure-and-bottleneck", check_tone_closure),
    ("flip-antiautomorphism", check_flip_antiautomorphism),
    ("associativity", check_associativity),
    ("sandwich-identities", check_sandwich_identities),
    ("basis-vector-partition", check_basis_vector_partition),
    ("matching-group-corner", check_matching_group_corner),
    ("lower-ideal-product", check_lower_ideal_product),
    ("total-order-and-chain", check_total_order),
    ("index-set-split", check_index_split),
    ("reduction-idempotent", check_reduction_idempotent),
    ("sum-of-squares", check_sum_of_squares),
    ("generator-relations", check_generator_relations),
    ("gram-nondegenerate", check_gram_nondegenerate),
    ("gram-generic-rank", check_generic_rank),
    ("semisimple-generic-point", check_semisimple_generic_point),
    ("gram-top-layer", check_top_layer),
    ("form-contravariance", check_contravariance),
    ("corner-compression", check_corner_compression),
    ("module-globalisation", check_module_globalisation),
    ("top-layer-vanishing", check_top_layer_vanishing),
    ("branching-dimensions", check_branching_dims),
    ("submodule-closure", check_submodule_closure),
    ("heredity-sections", check_heredity_sections),
    ("fusion-corner", check_fusion_corner),
]

_CHECK_MAP = dict(CHECKS)

CHECK_NAMES = [name for name, _ in CHECKS]


def _run_one(job):
    name, l, n = job
    fn = _CHECK_MAP[name]
    try:
        ok = bool(fn(l, n))
    except Exception:
        ok = False
    return CheckResult(name, "l=%d,n=%d" % (l, n), ok)


def thread_count():
    try:
        return max(1, int(os.environ.get("TONALG_THREADS", "1")))
    except ValueError:
        return 1


def run_verify(l, n_max, names=None):
    """Evaluate the battery for the given l over n = 0..n_max.

    Returns a list of CheckResult in deterministic order; jobs may fan out
    across processes when TONALG_THREADS > 1.
    """
    names = CHECK_NAMES if names is None else names
    jobs = []
    for n in range(0, n_max + 1):
        for name in names:
            jobs.append((name, l, n))
    workers = thread_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return results
