"""Restriction of standard modules along the one-strand inclusion, basis
classification by the first-vertex part type, filtration verification, and
the layered restriction (Bratteli) graph.

The inclusion sends d to 1_1 (x) d, so the new strand is vertex 1.  The
restriction of the standard module labelled by a multipartition has a
filtration whose submodule part collects the first-vertex-propagating
classes and whose quotient part collects the first-vertex-non-propagating
class; labels whose vector leaves the index set contribute nothing.
"""

from collections import Counter

from . import diagram as dg
from .standard_modules import (
    standard_module,
    standard_dim,
    generator_diagrams,
    all_labels,
)
from .symmetric import add_boxes, rem_boxes
from .algebra import enumerate_basis


def include(d):
    """Image of a square diagram under the one-strand inclusion."""
    return dg.tensor(dg.identity(1), d)


def _valid(mu, l, n):
    mvec = tuple(sum(lam) for lam in mu)
    return dg.gamma_member(mvec, l, n) is not None


class FiltrationMultiset:
    """Submodule labels (sub) and quotient labels (quo) of a restriction."""

    def __init__(self, sub, quo):
        self.sub = tuple(sorted(sub))
        self.quo = tuple(sorted(quo))

    def __eq__(self, other):
        return (self.sub, self.quo) == (other.sub, other.quo)

    def __repr__(self):
        return "FiltrationMultiset(sub=%r, quo=%r)" % (self.sub, self.quo)

    def all_labels(self):
        return self.sub + self.quo


def restrict_rule(lam, l, nplus1):
    """Filtration labels of the restriction from n+1 to n strands.

    Submodule part: box moves i+1 -> i for 1 <= i <= l-1, the move 1 -> l,
    and plain removal in component 1.  Quotient part: a box added in
    component l-1 (for l = 1: the label itself and a box added in the only
    component).  Labels with invalid vectors at n are dropped.
    """
    lam = tuple(tuple(x) for x in lam)
    if len(lam) != l or not _valid(lam, l, nplus1):
        raise dg.DiagramError("invalid label %r for l=%d, n=%d" % (lam, l, nplus1))
    n = nplus1 - 1
    sub = []
    for i in range(1, l):
        for nu in rem_boxes(lam, i + 1):
            sub.extend(add_boxes(nu, i))
    for nu in rem_boxes(lam, 1):
        sub.extend(add_boxes(nu, l))
    sub.extend(rem_boxes(lam, 1))
    if l == 1:
        quo = [lam] + add_boxes(lam, 1)
    else:
        quo = add_boxes(lam, l - 1)
    sub = [mu for mu in sub if _valid(mu, l, n)]
    quo = [mu for mu in quo if _valid(mu, l, n)]
    return FiltrationMultiset(sub, quo)


def first_vertex_class(profile, l):
    """Part type of top vertex 1: 1 for a propagating singleton, i for a
    class-i part (2 <= i <= l), "lp" for an enlarged class-1 part, 0 for a
    non-propagating part."""
    for block, cls in profile:
        if block[0] == 0:
            if cls == 0:
                return 0
            if cls == 1:
                return 1 if len(block) == 1 else "lp"
            return cls
    raise AssertionError("vertex 1 missing from profile")


def classify_basis(lam, l, nplus1):
    """Cardinalities of the first-vertex classes of the module basis.

    Returns (counts, profile_classes) where counts maps each class to the
    number of basis elements in it (profiles times the tableau factor).
    """
    lam = tuple(tuple(x) for x in lam)
    mod = standard_module(lam, l, nplus1)
    classes = [first_vertex_class(p, l) for p in mod.profiles]
    counts = Counter()
    for c in classes:
        counts[c] += mod.rep.dim
    keys = [1] + list(range(2, l + 1)) + ["lp", 0]
    return {k: counts.get(k, 0) for k in keys}, classes


def classified_dim_checks(lam, l, nplus1):
    """Each first-vertex class carries exactly the dimensions of its labels."""
    lam = tuple(tuple(x) for x in lam)
    n = nplus1 - 1
    counts, _ = classify_basis(lam, l, nplus1)

    def total(labels):
        return sum(standard_dim(mu, l, n) for mu in labels if _valid(mu, l, n))

    checks = {1: total(rem_boxes(lam, 1))}
    for i in range(2, l + 1):
        part = []
        for nu in rem_boxes(lam, i):
            part.extend(add_boxes(nu, i - 1))
        checks[i] = total(part)
    lp = []
    for nu in rem_boxes(lam, 1):
        lp.extend(add_boxes(nu, l))
    checks["lp"] = total(lp)
    if l == 1:
        checks[0] = total([lam]) + total(add_boxes(lam, 1))
    else:
        checks[0] = total(add_boxes(lam, l - 1))
    return all(counts[k] == checks[k] for k in counts), counts, checks


def branching_dim_check(lam, l, nplus1):
    """dim of the big module equals the sum of the filtration label dims."""
    lam = tuple(tuple(x) for x in lam)
    rule = restrict_rule(lam, l, nplus1)
    n = nplus1 - 1
    return standard_dim(lam, l, nplus1) == sum(
        standard_dim(mu, l, n) for mu in rule.all_labels()
    )


def _included_generators(l, nplus1):
    """Generators of the included (n-strand) subalgebra inside n+1 strands."""
    return {
        name: include(d) for name, d in generator_diagrams(l, nplus1 - 1).items()
    }


def _span_closed(mod, class_list, member, gens):
    """Does the span of the profiles with member(class)=True absorb the
    included generators?"""
    r = mod.rep.dim
    inside = [member(c) for c in class_list]
    for gd in gens.values():
        M = mod.action_matrix(gd)
        for pj, flag in enumerate(inside):
            if not flag:
                continue
            for col in range(pj * r, (pj + 1) * r):
                for pi in range(len(class_list)):
                    if inside[pi]:
                        continue
                    for row in range(pi * r, (pi + 1) * r):
                        if not M[row][col].is_zero():
                            return False
    return True


def submodule_closure_check(lam, l, nplus1):
    """Span-closure pattern of the first-vertex classes under the included
    subalgebra: the propagating classes close (individually for 1 and each
    i <= l, jointly for everything away from the non-propagating class)."""
    lam = tuple(tuple(x) for x in lam)
    mod = standard_module(lam, l, nplus1)
    _, classes = classify_basis(lam, l, nplus1)
    gens = _included_generators(l, nplus1)
    report = {
        "B1_closed": _span_closed(mod, classes, lambda c: c == 1, gens),
        "B12_closed": _span_closed(mod, classes, lambda c: c in (1, 2), gens),
        "A_closed": _span_closed(mod, classes, lambda c: c != 0, gens),
    }
    return report


def leak_check(lam, l, nplus1):
    """Does some included generator map the enlarged-class part into the
    propagating-singleton part with a nonzero coefficient?"""
    lam = tuple(tuple(x) for x in lam)
    mod = standard_module(lam, l, nplus1)
    _, classes = classify_basis(lam, l, nplus1)
    r = mod.rep.dim
    for gd in _included_generators(l, nplus1).values():
        M = mod.action_matrix(gd)
        for pj, cj in enumerate(classes):
            if cj != "lp":
                continue
            for pi, ci in enumerate(classes):
                if ci != 1:
                    continue
                for col in range(pj * r, (pj + 1) * r):
                    for row in range(pi * r, (pi + 1) * r):
                        if not M[row][col].is_zero():
                            return True
    return False


def quotient_exactness_check(lam, l, nplus1):
    """The propagating part is a submodule and the non-propagating part spans
    the quotient with the announced label dimensions."""
    lam = tuple(tuple(x) for x in lam)
    rule = restrict_rule(lam, l, nplus1)
    mod = standard_module(lam, l, nplus1)
    counts, classes = classify_basis(lam, l, nplus1)
    gens = _included_generators(l, nplus1)
    if not _span_closed(mod, classes, lambda c: c != 0, gens):
        return False
    n = nplus1 - 1
    sub_dim = sum(standard_dim(mu, l, n) for mu in rule.sub)
    quo_dim = sum(standard_dim(mu, l, n) for mu in rule.quo)
    a_count = sum(v for k, v in counts.items() if k != 0)
    return a_count == sub_dim and counts[0] == quo_dim


class BratteliGraph:
    """Layered restriction graph: nodes are labels with dims, edges carry
    restriction multiplicities."""

    def __init__(self, l, n_max):
        self.l = l
        self.n_max = n_max
        self.layers = []
        for n in range(n_max + 1):
            self.layers.append({mu: standard_dim(mu, l, n) for mu in all_labels(l, n)})
        self.edges = []
        for n in range(n_max, 0, -1):
            for lam in self.layers[n]:
                rule = restrict_rule(lam, l, n)
                mult = Counter(rule.all_labels())
                for mu, k in sorted(mult.items()):
                    self.edges.append((n, lam, mu, k))

    @staticmethod
    def _label(mu):
        return "|".join(",".join(map(str, lam)) if lam else "-" for lam in mu)

    def to_dot(self):
        lines = ["digraph bratteli {", "  rankdir=TB;"]
        for n, layer in enumerate(self.layers):
            lines.append("  { rank=same;")
            for mu, d in sorted(layer.items()):
                lines.append('    "%d:%s" [label="%s (%d)"];' % (n, self._label(mu), self._label(mu), d))
            lines.append("  }")
        for n, lam, mu, k in self.edges:
            attr = ' [label="%d"]' % k if k != 1 else ""
            lines.append(
                '  "%d:%s" -> "%d:%s"%s;' % (n, self._label(lam), n - 1, self._label(mu), attr)
            )
        lines.append("}")
        return "\n".join(lines)

    def to_csv(self):
        lines = ["n,label,dim"]
        for n, layer in enumerate(self.layers):
            for mu, d in sorted(layer.items()):
                lines.append("%d,%s,%d" % (n, self._label(mu), d))
        return "\n".join(lines)

    def to_json(self):
        return {
            "l": self.l,
            "n_max": self.n_max,
            "layers": [
                {self._label(mu): d for mu, d in sorted(layer.items())}
                for layer in self.layers
            ],
            "edges": [
                {"n": n, "from": self._label(lam), "to": self._label(mu), "mult": k}
                for n, lam, mu, k in self.edges
            ],
        }


def bratteli(l, n_max):
    return BratteliGraph(l, n_max)


def layer_dim_identity(l, n):
    """Sum of squared module dims at one layer equals the algebra dimension."""
    return len(enumerate_basis(l, n, n)) == sum(
        standard_dim(mu, l, n) ** 2 for mu in all_labels(l, n)
    )


# ---------------------------------------------------------------------------
# fusion corner of the even-tone algebra


def fusion_corner_basis(n):
    """Diagram basis of the compression of the 2-tone algebra by the product
    of the strand-pair joiners; indexed by all partitions of the pairs."""
    if n % 2 != 0:
        raise dg.DiagramError("even n required")
    half = n // 2
    out = []
    for q in enumerate_basis(1, half, half):
        blocks = []
        for b in q.blocks:
            cb = []
            for v in b:
                if v < half:
                    cb.extend((2 * v, 2 * v + 1))
                else:
                    w = v - half
                    cb.extend((n + 2 * w, n + 2 * w + 1))
            blocks.append(cb)
        out.append(dg.Diagram(n, n, dg._canonical(blocks)))
    return out


def corner_iso_check(n):
    """The compression by the pair joiners is the whole partition algebra on
    half the strands, with matching structure constants and delta powers."""
    if n % 2 != 0:
        raise dg.DiagramError("even n required")
    half = n // 2
    ep = dg.e_pi(n)
    small = list(enumerate_basis(1, half, half))
    lifted = fusion_corner_basis(n)
    for q in lifted:
        k1, r1 = dg.compose(ep, q)
        k2, r2 = dg.compose(r1, ep)
        if (k1 + k2, r2) != (0, q):
            return False
    if len(lifted) != len(small):
        return False
    # independent route: sandwiching the whole even-tone basis spans no more
    sandwiched = set()
    for p in enumerate_basis(2, n, n):
        _, r1 = dg.compose(ep, p)
        _, r2 = dg.compose(r1, ep)
        sandwiched.add(r2)
    if sandwiched != set(lifted):
        return False
    pair = dict(zip(lifted, small))
    for q1 in lifted:
        for q2 in lifted:
            k, r = dg.compose(q1, q2)
            ks, rs = dg.compose(pair[q1], pair[q2])
            if (k, pair[r]) != (ks, rs):
                return False
    return True
