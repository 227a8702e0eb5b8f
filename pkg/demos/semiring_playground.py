#!/usr/bin/env python3
# One recurrence, many semirings: the whole point of writing dynamic
# programs against the semiring interface is that the same code counts,
# optimizes, marginalizes or enumerates depending on the algebra you
# hand it.

import semiring_dp as sd

values = [-1.0, 2.0, -3.0, 4.0, 1.5]
n = len(values)
catalog = sd.standard_semirings()

print(f"input values: {values}\n")
print("The subsequence fold f = prod_k (one + w(k)) over all 2^n subsequences:")

count = sd.subsequences(n, catalog["count"], lambda k: 1)
print(f"  counting semiring, unit weights      -> {count} subsequences")

best = sd.subsequences(n, catalog["maxplus"], lambda k: values[k - 1])
print(f"  max-plus, w(k) = x_k                 -> best subsequence sum {best}")

exists = sd.subsequences(n, catalog["bool"], lambda k: values[k - 1] > 0)
print(f"  boolean, w(k) = (x_k > 0)            -> some positive element? {exists}")

print("\nRestricting to exactly 2 chosen elements (the lifted recurrence):")
c2 = sd.combinations(n, 2, catalog["count"], lambda k: 1)
print(f"  counting                             -> {c2} pairs")
m2 = sd.combinations(n, 2, catalog["minplus"], lambda k: values[k - 1])
print(f"  min-plus                             -> cheapest pair sum {m2}")

vit = sd.viterbi_simple_semiring(catalog["maxplus"])
picked = sd.combinations(
    n, 2, vit, lambda k: sd.Scored(values[k - 1], (k,))
)
print(f"  max-plus + witness tupling           -> best pair {list(picked.witness)} "
      f"scoring {picked.score}")

print("\nScore-and-witness tupling replaces backtracking: the witness is")
print("assembled inside the fold itself, so any recurrence gains argmax")
print("recovery just by swapping the semiring.")
