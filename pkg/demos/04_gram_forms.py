"""Contravariant Gram forms: exact entries in Z[delta], determinants, and
rank drops at special parameter values."""

from fractions import Fraction

from tonalg.gram import (
    gram_det,
    gram_matrix,
    generic_rank,
    is_semisimple_at,
    rank_at,
)

print("== the 4x4 Gram matrix of the module ((1),-) at l=2, n=3 ==")
g = gram_matrix(((1,), ()), 2, 3)
for row in g.entries:
    print("  [%s]" % ", ".join("%6s" % str(e) for e in row))
print("determinant:", gram_det(((1,), ()), 2, 3))
print("generic rank:", generic_rank(((1,), ()), 2, 3), "of", g.dim)

print()
print("== specialization at delta = 1 ==")
print("rank of ((1),-):", rank_at(((1,), ()), 2, 3, 1), " (drops: 4 = 1 + 3)")
print("rank of ((1),(1)):", rank_at(((1,), (1,)), 2, 3, 1), " (stays full)")

print()
print("== semisimplicity verdicts ==")
print("at delta = 17/3  :", is_semisimple_at(2, 3, Fraction(17, 3)))
print("at delta = 1     :", is_semisimple_at(2, 3, 1))
print("at delta = 10^6+3:", is_semisimple_at(2, 3, 10 ** 6 + 3))
