"""Contravariant Gram matrices of standard modules over Z[delta], exact
determinants and ranks, and semisimplicity verdicts at exact evaluation
points.

The entry attached to basis pairs (t, v), (t', v') is read off the sandwich
flip(t) * t': if its propagating vector drops the entry is zero; otherwise
the sandwich is delta^k times a matching permutation on the canonical
layout and the entry is delta^k times the symmetric-group form value.
"""

from fractions import Fraction
import random

from .deltapoly import DeltaPoly
from . import diagram as dg
from . import gamma
from .algebra import Element
from .exactla import (
    bareiss_det,
    poly_rank,
    fraction_rank,
    poly_mat_mul,
    poly_mat_eq,
    int_mat_mul,
    poly_mat_evaluate,
)
from .symmetric import perm_inverse
from .standard_modules import (
    standard_module,
    bottom_pattern,
    generator_diagrams,
    all_labels,
    InvariantError,
)


def _sandwich_matching(d, mvec, l, n):
    """Matching permutation of a diagram whose top and bottom rows both carry
    the canonical layout; None when its vector drops below mvec."""
    v = dg.prop_vector(d, l)
    if v != mvec:
        if gamma.poset_lt(v, mvec, l):
            return None
        raise InvariantError("incomparable vector %r in a Gram sandwich" % (v,))
    slots, trailing = bottom_pattern(mvec, l, n)
    bot_index = {}
    top_index = {}
    for i in range(l):
        for k, blk in enumerate(slots[i]):
            bot_index[blk] = (i, k)
            top_index[tuple(x - n for x in blk)] = (i, k)
    links = []
    for b in d.blocks:
        top = tuple(x for x in b if x < n)
        bot = tuple(x for x in b if x >= n)
        if top and bot:
            it, kt = top_index[top]
            ib, kb = bot_index[bot]
            if it != ib:
                raise InvariantError("class mismatch in a Gram sandwich")
            links.append((it, kt, kb))
    sigma = [[0] * mvec[i] for i in range(l)]
    for i, kt, kb in links:
        sigma[i][kt] = kb
    return tuple(tuple(s) for s in sigma)


class GramMatrix:
    """Exact symmetric Gram matrix of the contravariant form on a standard
    module, with its block structure by transversal pairs."""

    def __init__(self, mu, l, n):
        self.mu = tuple(tuple(lam) for lam in mu)
        self.l = l
        self.n = n
        self.module = standard_module(self.mu, l, n)
        mod = self.module
        self.dim = mod.dim
        r = mod.rep.dim
        F = mod.rep.form
        entries = [[DeltaPoly.zero() for _ in range(self.dim)] for _ in range(self.dim)]
        self.block_exponents = {}
        for i, ti in enumerate(mod.t_diagrams):
            fi = dg.flip(ti)
            for j, tj in enumerate(mod.t_diagrams):
                k, g = dg.compose(fi, tj)
                sigma = _sandwich_matching(g, mod.mvec, l, n)
                if sigma is None:
                    continue
                # the sandwich acts on the tableau factor exactly as in the
                # module action: through the inverse of its slot matching
                blk = int_mat_mul(
                    F, mod.rep.matrix(tuple(perm_inverse(p) for p in sigma))
                )
                self.block_exponents[(i, j)] = k
                for a in range(r):
                    for b in range(r):
                        if blk[a][b]:
                            entries[i * r + a][j * r + b] = DeltaPoly.delta(k, blk[a][b])
        self.entries = entries

    def evaluate(self, x):
        return poly_mat_evaluate(self.entries, x)


def gram_matrix(mu, l, n):
    return GramMatrix(mu, l, n)


def gram_det(mu, l, n):
    return bareiss_det(gram_matrix(mu, l, n).entries)


def generic_rank(mu, l, n):
    return poly_rank(gram_matrix(mu, l, n).entries)


def rank_at(mu, l, n, point):
    """Rank of the Gram matrix at an exact evaluation point (Fraction/int)."""
    return fraction_rank(gram_matrix(mu, l, n).evaluate(point))


def is_semisimple_at(l, n, point):
    """True iff every standard-module Gram matrix has full rank at the point."""
    for mu in all_labels(l, n):
        g = gram_matrix(mu, l, n)
        if fraction_rank(g.evaluate(point)) != g.dim:
            return False
    return True


def top_layer_check(l, n):
    """For labels in the top layer the Gram matrix is delta-free up to one
    global power and of full rank over the rationals."""
    from .symmetric import multipartitions_of

    for mvec in gamma.h_subset(l, n):
        for mu in multipartitions_of(mvec):
            g = gram_matrix(mu, l, n)
            exps = set()
            for row in g.entries:
                for e in row:
                    exps.update(e.c.keys())
            if len(exps) > 1:
                return False
            if fraction_rank(g.evaluate(1)) != g.dim:
                return False
    return True


def _random_element(l, n, rng, size=2):
    gens = list(generator_diagrams(l, n).values()) + [dg.identity(n)]
    x = Element(l, n, n)
    for _ in range(size):
        d = dg.identity(n)
        for _ in range(rng.randint(1, 3)):
            k, d = dg.compose(d, rng.choice(gens))
        x = x + Element.from_diagram(d, l, DeltaPoly.delta(k, rng.randint(-2, 2)))
    return x


def contravariance_check(mu, l, n, trials=8, seed=0):
    """<x.u, w> = <u, x^op.w> exactly in Z[delta], for random elements x."""
    rng = random.Random(seed)
    g = gram_matrix(mu, l, n)
    mod = g.module
    G = g.entries
    for _ in range(trials):
        x = _random_element(l, n, rng)
        M = mod.action_element(x)
        Mop = mod.action_element(x.op())
        Mt = [[M[j][i] for j in range(mod.dim)] for i in range(mod.dim)]
        if not poly_mat_eq(poly_mat_mul(Mt, G), poly_mat_mul(G, Mop)):
            return False
    return True


def gram_report(mu, l, n, point=None, want_det=False):
    """JSON-ready Gram data for the command line front end."""
    g = gram_matrix(mu, l, n)
    out = {
        "mu": [list(lam) for lam in g.mu],
        "l": l,
        "n": n,
        "dim": g.dim,
        "entries": [[e.to_json() for e in row] for row in g.entries],
        "generic_rank": poly_rank(g.entries),
    }
    if want_det:
        det = bareiss_det(g.entries)
        out["det"] = det.to_json()
        out["det_str"] = str(det)
    if point is not None:
        out["rank_at"] = fraction_rank(g.evaluate(point))
        out["at"] = str(point)
    return out
