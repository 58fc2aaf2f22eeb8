"""Heredity-chain data for the algebra and for its fully-propagating
quotient, with desk-scale verification of the hereditary-ideal conditions:
(pre)idempotent generators, section dimensions, and matching-group corners.
"""

from math import factorial

from . import diagram as dg
from . import gamma
from .algebra import enumerate_basis
from .standard_modules import transversal


class HeredityChain:
    """Ordered ideal data: kind is "p" (whole algebra, labels (r,0,...,0))
    or "a" (fully-propagating quotient, labels refined through the height
    levels in descending lexicographic order)."""

    def __init__(self, kind, l, n, labels):
        self.kind = kind
        self.l = l
        self.n = n
        self.labels = labels

    def __len__(self):
        return len(self.labels)


def p_chain(l, n):
    """Ideal labels (n,0,..,0), (n-l,0,..,0), ..., (b,0,..,0), descending."""
    labels = []
    r = n
    while r >= 0:
        labels.append(tuple([r] + [0] * (l - 1)))
        r -= l
    return HeredityChain("p", l, n, labels)


def a_chain(l, n):
    """Height-level refinement for the fully-propagating quotient: levels
    t = n down to the minimal height, within a level in descending
    lexicographic order (each step peels one label)."""
    eta = gamma.eta_levels(l, n)
    labels = []
    for t in range(n, gamma.h_min(l, n) - 1, -1):
        for m in sorted(eta.get(t, []), reverse=True):
            labels.append((t, m))
    return HeredityChain("a", l, n, labels)


def fully_propagating_dim(l, n):
    """Dimension of the quotient by the cut ideal: diagrams in which every
    part propagates with equal top and bottom order at most l."""
    count = 0
    for d in enumerate_basis(l, n, n):
        ok = True
        for b in d.blocks:
            top = sum(1 for v in b if v < n)
            bot = len(b) - top
            if top == 0 or bot == 0 or top != bot or top > l:
                ok = False
                break
        if ok:
            count += 1
    return count


def vector_counts(l, n):
    """Number of basis diagrams with each exact propagating vector."""
    counts = {}
    for d in enumerate_basis(l, n, n):
        v = dg.prop_vector(d, l)
        counts[v] = counts.get(v, 0) + 1
    return counts


def section_label_sets(l, n):
    """For each p-chain step, the vectors its section consumes (the poset
    down-set of the step label minus the next one's)."""
    ch = p_chain(l, n)
    g = gamma.gamma_set(l, n)
    downs = []
    for label in ch.labels:
        downs.append({m for m in g if gamma.poset_leq(m, label, l)})
    out = []
    for i, label in enumerate(ch.labels):
        nxt = downs[i + 1] if i + 1 < len(downs) else set()
        out.append((label, sorted(downs[i] - nxt)))
    return out


def corner_group_check(mvec, l, n, counts=None):
    """The sandwich of the basis by the absorbing idempotent spans exactly
    the matching diagrams, multiplying like the product of symmetric groups.

    Returns (ok, dimension): dimension = prod(m_i!)."""
    if not any(mvec):
        return True, 1
    bm = dg.b_m(mvec, l, n)
    survivors = set()
    for p in enumerate_basis(l, n, n):
        _, q1 = dg.compose(bm, p)
        k2, q2 = dg.compose(q1, bm)
        if dg.prop_vector(q2, l) == mvec:
            survivors.add(q2)
    want = 1
    for x in mvec:
        want *= factorial(x)
    if len(survivors) != want:
        return False, want
    # multiplication table: sandwich elements close with no delta and the
    # matchings compose like the (opposite) product of symmetric groups
    elems = sorted(survivors)
    match = {}
    for q in elems:
        sig = _matching_of(q, bm, mvec, l, n)
        if sig is None:
            return False, want
        match[q] = sig
    if len(set(match.values())) != want:
        return False, want
    for q1 in elems:
        for q2 in elems:
            k, r = dg.compose(q1, q2)
            if k != 0 or r not in survivors:
                return False, want
            s1, s2, sr = match[q1], match[q2], match[r]
            comp = tuple(
                tuple(s2[i][s1[i][k_]] for k_ in range(len(s1[i])))
                for i in range(l)
            )
            if comp != sr:
                return False, want
    return True, want


def _matching_of(q, bm, mvec, l, n):
    """Per-class matching of a diagram carrying the absorbing layout."""
    tops = {}
    bots = {}
    for b in bm.blocks:
        cls = dg.block_class(b, n, l)
        tops.setdefault(cls, []).append(tuple(v for v in b if v < n))
        bots.setdefault(cls, []).append(tuple(v for v in b if v >= n))
    for c in tops:
        tops[c].sort()
        bots[c].sort()
    sigma = []
    for i in range(1, l + 1):
        ti = {t: k for k, t in enumerate(tops.get(i, []))}
        bi = {t: k for k, t in enumerate(bots.get(i, []))}
        perm = [None] * mvec[i - 1]
        for b in q.blocks:
            top = tuple(v for v in b if v < n)
            bot = tuple(v for v in b if v >= n)
            if top in ti and bot in bi:
                perm[ti[top]] = bi[bot]
        if None in perm:
            return None
        sigma.append(tuple(perm))
    return tuple(sigma)


def section_checks(l, n, delta0=None):
    """Per-label heredity data for the p-chain steps.

    For each chain label (r, 0, ..., 0): the preidempotent delta exponent of
    its generator, the section dimension summed over consumed vectors, and
    (for each consumed vector) the transversal-square count and the corner
    group.  A step is flagged non-normalizable when the generator needs a
    positive delta power, its vector is zero, and delta0 == 0.
    """
    counts = vector_counts(l, n)
    report = {"l": l, "n": n, "steps": [], "total": len(enumerate_basis(l, n, n))}
    running = 0
    for label, consumed in section_label_sets(l, n):
        a = dg.a_m(label, l, n)
        k, aa = dg.compose(a, a)
        assert aa == a
        flagged = bool(delta0 == 0 and k > 0 and not any(label))
        sec_dim = 0
        per_vector = []
        for m in consumed:
            cnt = counts.get(m, 0)
            tsq = len(transversal(m, l, n)) ** 2
            group = 1
            for x in m:
                group *= factorial(x)
            per_vector.append(
                {
                    "vector": list(m),
                    "basis_count": cnt,
                    "transversal_sq_times_group": tsq * group,
                    "ok": cnt == tsq * group,
                }
            )
            sec_dim += cnt
        running += sec_dim
        report["steps"].append(
            {
                "label": list(label),
                "preidempotent_exponent": k,
                "non_normalizable": flagged,
                "section_dim": sec_dim,
                "vectors": per_vector,
            }
        )
    report["sections_sum_to_dim"] = running == report["total"]
    return report


def a_section_checks(l, n):
    """Section dimensions of the height-refined chain for the quotient sum
    to its dimension; every label is honestly idempotent."""
    counts = vector_counts(l, n)
    total = 0
    for t, m in a_chain(l, n).labels:
        a = dg.a_m(m, l, n)
        k, aa = dg.compose(a, a)
        if k != 0 or aa != a:
            return False
        total += counts.get(m, 0)
    return total == fully_propagating_dim(l, n)


def chain_order_compatibility(l, n):
    """Every p-chain down-set is an initial segment of the total order."""
    ch = gamma.chain(l, n)
    for label, _ in section_label_sets(l, n):
        down = [m for m in ch if gamma.poset_leq(m, label, l)]
        if down != ch[: len(down)]:
            return False
    return True


def structure_report(l, n, delta0=None):
    """JSON-ready structure data for the command line front end."""
    rep = section_checks(l, n, delta0)
    rep["p_chain"] = [list(m) for m in p_chain(l, n).labels]
    rep["a_chain"] = [[t, list(m)] for t, m in a_chain(l, n).labels]
    rep["a_sections_ok"] = a_section_checks(l, n)
    rep["chain_compatible_with_total_order"] = chain_order_compatibility(l, n)
    rep["fully_propagating_dim"] = fully_propagating_dim(l, n)
    if delta0 is not None:
        rep["delta0"] = str(delta0)
    return rep
