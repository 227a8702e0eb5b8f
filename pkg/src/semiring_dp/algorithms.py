"""Semiring-polymorphic dynamic-programming recurrences.

Every function takes the semiring as an argument and runs unchanged
over any catalog entry, including the exhaustive path-set semiring.
Indices in the public interfaces are 1-based (weight maps receive
1-based positions); internal tables are 0-based.

The constrained variants are the plain recurrences lifted over a
constraint algebra and already simplified: subset counting becomes an
index shift, running-minimum and running-maximum constraints become
three-case products with suffix or prefix folds.  The equivalence of
each simplified form with generate-filter-evaluate is what the oracle
tests check.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .semirings import Scored, Semiring, maxplus_semiring, viterbi_simple_semiring

Weight = Callable[[int], Any]


@dataclass(frozen=True)
class Dag:
    """DAG on nodes 1..N whose numbering is already topological.

    ``parents[v-1]`` lists the parents of node v; node 1 is the unique
    source.  Every parent index must be smaller than its child, which
    is also what guarantees acyclicity.
    """

    parents: tuple

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(tuple(p) for p in self.parents))
        if not self.parents:
            raise ValueError("a DAG needs at least one node")
        if self.parents[0]:
            raise ValueError("node 1 is the source and cannot have parents")
        for v, ps in enumerate(self.parents[1:], start=2):
            if not ps:
                raise ValueError(f"node {v} has no parents; node 1 must be the only source")
            for p in ps:
                if not 1 <= p < v:
                    raise ValueError(f"edge ({p}, {v}) breaks the topological numbering")

    @property
    def node_count(self) -> int:
        return len(self.parents)

    def edges(self):
        for v, ps in enumerate(self.parents, start=1):
            for p in ps:
                yield (p, v)


def dag_bellman(dag: Dag, s: Semiring, w) -> Any:
    """Fold all source-to-sink paths: f[v] = sum over parents p of f[p] * w((p, v)).

    Edge labels are (parent, child) pairs.  Returns f at node N.
    """
    f = [s.one]
    for v in range(2, dag.node_count + 1):
        f.append(s.sum(s.mul(f[p - 1], w((p, v))) for p in dag.parents[v - 1]))
    return f[-1]


def subsequences(n: int, s: Semiring, w: Weight) -> Any:
    """Value over all 2^n index subsequences: product of (one + w(k))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = s.one
    for k in range(1, n + 1):
        acc = s.mul(acc, s.add(s.one, w(k)))
    return acc


def nonempty_subsequences(n: int, s: Semiring, w: Weight) -> Any:
    """Value over the 2^n - 1 non-empty subsequences, O(n) operations."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = s.zero
    for k in range(1, n + 1):
        acc = s.add(s.add(acc, s.mul(acc, w(k))), w(k))
    return acc


def combinations(n: int, k: int, s: Semiring, w: Weight) -> Any:
    """Value over all subsequences of exactly k of n items, O(n*k) operations.

    Row update: f[m] = f[m] + f[m-1] * w(item).  k > n yields zero (no
    such subsequences), reported as an ordinary value.
    """
    if n < 0 or k < 0:
        raise ValueError("sizes must be non-negative")
    if k > n:
        return s.zero
    row = [s.one] + [s.zero] * k
    for item in range(1, n + 1):
        for m in range(min(item, k), 0, -1):
            row[m] = s.add(row[m], s.mul(row[m - 1], w(item)))
    return row[k]


@dataclass(frozen=True)
class SegmentationProblem:
    """A length plus a weight for every interval 1 <= i <= j <= length."""

    length: int
    weight: Callable[[int, int], Any]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be at least 1")


def segment_opt(p: SegmentationProblem, s: Semiring) -> Any:
    """Value over every contiguous cover of 1..N: f[j] = sum_i f[i-1] * w(i, j)."""
    f = [s.one]
    for j in range(1, p.length + 1):
        f.append(s.sum(s.mul(f[i - 1], p.weight(i, j)) for i in range(1, j + 1)))
    return f[p.length]


def segment_fixed_count(
    p: SegmentationProblem, lo: int, hi: int, s: Semiring, accept=None
) -> Any:
    """Value over covers whose segment count lies in [lo, hi].

    Lifting segment counting shifts the table by one segment per piece:
    f[j][m] = sum_i f[i-1][m-1] * w(i, j).  O(N^2 * hi) operations,
    O(N * hi) values stored.  ``accept`` overrides the default range
    acceptance with any predicate over counts 0..hi.
    """
    n = p.length
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"segment count range [{lo}, {hi}] invalid for length {n}")
    rows = [[s.one] + [s.zero] * hi]
    for j in range(1, n + 1):
        row = [s.zero] * (hi + 1)
        for i in range(1, j + 1):
            w_ij = p.weight(i, j)
            prev = rows[i - 1]
            for m in range(1, hi + 1):
                row[m] = s.add(row[m], s.mul(prev[m - 1], w_ij))
        rows.append(row)
    if accept is None:
        accept = lambda m: lo <= m <= hi
    last = rows[n]
    return s.sum(last[m] for m in range(hi + 1) if accept(m))


def segment_min_length(
    p: SegmentationProblem, target: int, s: Semiring, *, at_least: bool = False, accept=None
) -> Any:
    """Value over covers by minimum segment length.

    Lifts the cover recurrence over a running minimum of segment
    lengths (fold identity: the full length N).  Appending a segment of
    length L maps table entry m to m when m < L, folds the suffix
    m..N into entry m when m == L, and kills entries above L; suffix
    folds are carried per column so the whole run stays O(N^3).
    Default acceptance is minimum == target; ``at_least`` switches to
    minimum >= target, and ``accept`` may supply any predicate over
    1..N.
    """
    n = p.length
    if not 1 <= target <= n:
        raise ValueError(f"minimum segment length {target} invalid for length {n}")

    def suffix_of(row):
        suf = [s.zero] * (n + 2)
        for m in range(n, 0, -1):
            suf[m] = s.add(row[m], suf[m + 1])
        return suf

    base_row = [s.zero] * (n + 1)
    base_row[n] = s.one
    rows = [base_row]
    suffixes = [suffix_of(base_row)]
    for j in range(1, n + 1):
        row = [s.zero] * (n + 1)
        for i in range(1, j + 1):
            seg_len = j - i + 1
            w_ij = p.weight(i, j)
            prev = rows[i - 1]
            for m in range(1, seg_len):
                row[m] = s.add(row[m], s.mul(prev[m], w_ij))
            row[seg_len] = s.add(row[seg_len], s.mul(suffixes[i - 1][seg_len], w_ij))
        rows.append(row)
        suffixes.append(suffix_of(row))
    if accept is None:
        accept = (lambda m: m >= target) if at_least else (lambda m: m == target)
    last = rows[n]
    return s.sum(last[m] for m in range(1, n + 1) if accept(m))


@dataclass(frozen=True)
class AlignmentProblem:
    """Two sequence lengths plus a move-cost map.

    weight(i, j) with both indices positive is the cost of pairing
    position i of the first sequence with position j of the second;
    weight(i, 0) is the cost of consuming position i alone (deletion)
    and weight(0, j) of consuming position j alone (insertion).
    """

    rows: int
    cols: int
    weight: Callable[[int, int], Any]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("lengths must be non-negative")


def nw_align(p: AlignmentProblem, s: Semiring) -> Any:
    """Three-branch alignment fold over match / delete / insert moves.

    f[i][j] = f[i-1][j-1]*w(i,j) + f[i-1][j]*w(i,0) + f[i][j-1]*w(0,j),
    computed with two rolling rows; O(rows * cols) operations.
    """
    n, m = p.rows, p.cols
    w = p.weight
    prev = [s.one]
    for j in range(1, m + 1):
        prev.append(s.mul(prev[j - 1], w(0, j)))
    for i in range(1, n + 1):
        cur = [s.mul(prev[0], w(i, 0))]
        for j in range(1, m + 1):
            val = s.mul(prev[j - 1], w(i, j))
            val = s.add(val, s.mul(prev[j], w(i, 0)))
            val = s.add(val, s.mul(cur[j - 1], w(0, j)))
            cur.append(val)
        prev = cur
    return prev[m]


def delannoy(n: int, m: int) -> int:
    """Count of lattice paths with unit right, down and diagonal steps.

    Equals the unit-weight counting run of nw_align; exact at any size
    thanks to arbitrary-precision integers.
    """
    if n < 0 or m < 0:
        raise ValueError("sizes must be non-negative")
    prev = [1] * (m + 1)
    for _ in range(n):
        cur = [1]
        for j in range(1, m + 1):
            cur.append(prev[j - 1] + prev[j] + cur[j - 1])
        prev = cur
    return prev[m]


def _misalignment(i: int, j: int) -> int:
    return abs(i - j)


def nw_align_sum_constrained(
    p: AlignmentProblem, total_cap: int, s: Semiring, accept=None
) -> Any:
    """Alignment value graded by the summed index gap of its moves.

    Each move label (i, j) contributes |i - j| to a running total
    (deletions (i, 0) add i, insertions (0, j) add j), tracked in a
    vector of size total_cap + 1; totals past the cap can never come
    back down and are dropped.  Default acceptance keeps every tracked
    total (<= total_cap); ``accept`` may restrict it further.
    O(rows * cols * total_cap) operations.
    """
    if total_cap < 0:
        raise ValueError("total_cap must be non-negative")
    n, m = p.rows, p.cols
    w = p.weight
    size = total_cap + 1
    zero_vec = (s.zero,) * size

    def shift(vec, d, weight):
        # product with a single lifted edge of grade d: an index shift
        if d >= size:
            return zero_vec
        out = [s.zero] * size
        for t in range(d, size):
            out[t] = s.mul(vec[t - d], weight)
        return tuple(out)

    def vadd(x, y):
        return tuple(s.add(a, b) for a, b in zip(x, y))

    prev = [(s.one,) + (s.zero,) * (size - 1)]
    for j in range(1, m + 1):
        prev.append(shift(prev[j - 1], j, w(0, j)))
    for i in range(1, n + 1):
        cur = [shift(prev[0], i, w(i, 0))]
        for j in range(1, m + 1):
            vec = shift(prev[j - 1], _misalignment(i, j), w(i, j))
            vec = vadd(vec, shift(prev[j], i, w(i, 0)))
            vec = vadd(vec, shift(cur[j - 1], j, w(0, j)))
            cur.append(vec)
        prev = cur
    final = prev[m]
    if accept is None:
        return s.sum(final)
    return s.sum(x for t, x in enumerate(final) if accept(t))


def nw_align_max_constrained(
    p: AlignmentProblem, diff_cap: int, s: Semiring, accept=None
) -> Any:
    """Alignment value graded by the maximum index gap of its moves.

    The running maximum of |i - j| over move labels is tracked in a
    vector of size diff_cap + 1.  Appending a move of gap d keeps
    entries above d, folds the prefix 0..d into entry d, and kills
    entries below d; maxima past the cap are dropped for good.  Default
    acceptance keeps every tracked maximum (<= diff_cap).
    O(rows * cols * diff_cap) operations.
    """
    n, m = p.rows, p.cols
    if not 0 <= diff_cap <= max(n, m, 0):
        raise ValueError(f"diff_cap {diff_cap} invalid for lengths ({n}, {m})")
    w = p.weight
    size = diff_cap + 1
    zero_vec = (s.zero,) * size

    def stretch(vec, d, weight):
        if d >= size:
            return zero_vec
        out = [s.zero] * size
        pre = s.zero
        for t in range(d + 1):
            pre = s.add(pre, vec[t])
        out[d] = s.mul(pre, weight)
        for t in range(d + 1, size):
            out[t] = s.mul(vec[t], weight)
        return tuple(out)

    def vadd(x, y):
        return tuple(s.add(a, b) for a, b in zip(x, y))

    prev = [(s.one,) + (s.zero,) * (size - 1)]
    for j in range(1, m + 1):
        prev.append(stretch(prev[j - 1], j, w(0, j)))
    for i in range(1, n + 1):
        cur = [stretch(prev[0], i, w(i, 0))]
        for j in range(1, m + 1):
            vec = stretch(prev[j - 1], _misalignment(i, j), w(i, j))
            vec = vadd(vec, stretch(prev[j], i, w(i, 0)))
            vec = vadd(vec, stretch(cur[j - 1], j, w(0, j)))
            cur.append(vec)
        prev = cur
    final = prev[m]
    if accept is None:
        return s.sum(final)
    return s.sum(x for t, x in enumerate(final) if accept(t))


def events_m_of_n(pairs: Sequence[tuple], occurrences: int, s: Semiring) -> Any:
    """Value over event sequences with exactly ``occurrences`` of N events.

    ``pairs[k] = (absent, present)`` are the two branch weights of event
    k+1; the row update is f[m] = f[m]*absent + f[m-1]*present, O(N*M)
    operations with one rolling row.  With probability weights
    (1 - p, p) this is the exact Poisson-binomial point mass.  Asking
    for more occurrences than events yields zero.
    """
    n = len(pairs)
    if occurrences < 0:
        raise ValueError("occurrences must be non-negative")
    if occurrences > n:
        return s.zero
    row = [s.one] + [s.zero] * occurrences
    for seen, (absent, present) in enumerate(pairs, start=1):
        for m in range(min(seen, occurrences), 0, -1):
            row[m] = s.add(s.mul(row[m], absent), s.mul(row[m - 1], present))
        row[0] = s.mul(row[0], absent)
    return row[occurrences]


def ordered_subsequences(
    values: Sequence, s: Semiring, w: Weight, relation=operator.lt
) -> Any:
    """Value over non-empty subsequences forming a chain under ``relation``.

    f[m] carries the value of all chains ending at position m, seeded
    with the singleton chain w(m); position k then folds every
    chainable predecessor once.  O(N^2) operations; the result folds
    f over all end positions.
    """
    u = tuple(values)
    n = len(u)
    f = [w(m) for m in range(1, n + 1)]
    for k in range(1, n + 1):
        chain = s.sum(f[i] for i in range(k - 1) if relation(u[i], u[k - 1]))
        f[k - 1] = s.add(f[k - 1], s.mul(chain, w(k)))
    return s.sum(f)


def longest_chain(values: Sequence, relation=operator.lt) -> tuple[int, list]:
    """Longest subsequence chained by ``relation``: (length, one witness).

    Runs the ordered-subsequence recurrence in a score-and-witness
    semiring over max-plus with unit weights, so the witness falls out
    of the fold with no backtracking; ties resolve to the earliest
    positions.  The witness lists the chained values in order.
    """
    u = list(values)
    if not u:
        return 0, []
    vit = viterbi_simple_semiring(maxplus_semiring())
    result = ordered_subsequences(u, vit, lambda k: Scored(1.0, (k,)), relation)
    if result.score == -math.inf:
        return 0, []
    return int(result.score), [u[k - 1] for k in result.witness]


def lis(values: Sequence) -> tuple[int, list]:
    """Longest strictly increasing subsequence: (length, one witness)."""
    return longest_chain(values, operator.lt)
