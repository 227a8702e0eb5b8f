#!/usr/bin/env python3
# Sequence alignment as a polymorphic fold over match/delete/insert
# moves: swap the semiring to get edit cost, alignment counts, or the
# optimal alignment itself; lift the fold to bound how far the
# sequences may drift out of register.

import semiring_dp as sd

a = "GCATGCG"
b = "GATTACA"
na, nb = len(a), len(b)


def cost(i, j):
    if i and j:
        return 0.0 if a[i - 1] == b[j - 1] else 1.0
    return 1.0  # gap


problem = sd.AlignmentProblem(na, nb, cost)
minplus = sd.minplus_semiring()
print(f"align {a!r} against {b!r}")
print(f"  edit cost (min-plus):        {sd.nw_align(problem, minplus)}")

count = sd.counting_semiring()
unit = sd.AlignmentProblem(na, nb, lambda i, j: 1)
print(f"  number of alignments:        {sd.nw_align(unit, count)}")
print(f"  (the lattice-path count:     {sd.delannoy(na, nb)})")

# witness tupling renders the alignment without backtracking
vit = sd.viterbi_simple_semiring(minplus)
scored = sd.AlignmentProblem(na, nb, lambda i, j: sd.Scored(cost(i, j), ((i, j),)))
best = sd.nw_align(scored, vit)
top, bottom = [], []
for i, j in best.witness:
    top.append(a[i - 1] if i else "-")
    bottom.append(b[j - 1] if j else "-")
print(f"\n  one optimal alignment (cost {best.score}):")
print(f"    {''.join(top)}")
print(f"    {''.join(bottom)}")

# constraining the drift |i - j| prunes biologically meaningless detours
print("\nalignment cost with the summed index drift capped:")
for cap in (0, 2, 4, 8):
    got = sd.nw_align_sum_constrained(problem, cap, minplus)
    print(f"  total drift <= {cap}: cost {got}")

print("\nalignment counts with the maximum index drift capped:")
for cap in (0, 1, 2, max(na, nb)):
    got = sd.nw_align_max_constrained(unit, cap, count)
    print(f"  max drift <= {cap}: {got} alignments")
