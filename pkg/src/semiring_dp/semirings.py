"""Semiring primitives and the standard catalog.

A semiring bundles two operations over one value domain: a commutative
``add`` with identity ``zero`` and an ``mul`` with identity ``one``,
where ``mul`` distributes over ``add`` and ``zero`` annihilates
products.  A dynamic-programming recurrence written against this
interface can be re-run with any catalog entry to count solutions,
optimize, marginalize probabilities or enumerate, without touching the
recurrence itself.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Any, Callable, Iterable, NamedTuple

BinOp = Callable[[Any, Any], Any]
EqOp = Callable[[Any, Any], bool]

FLOAT_REL_TOL = 1e-9
FLOAT_ABS_TOL = 1e-12


def exact_eq(a: Any, b: Any) -> bool:
    return a == b


def float_eq(a: float, b: float) -> bool:
    """Equality up to 1e-9 relative error (1e-12 absolute near zero)."""
    if a == b:
        return True
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= max(FLOAT_ABS_TOL, FLOAT_REL_TOL * max(abs(a), abs(b)))


def pair_eq(component_eq: EqOp) -> EqOp:
    def eq(a, b):
        return component_eq(a[0], b[0]) and component_eq(a[1], b[1])

    return eq


@dataclass(frozen=True, repr=False)
class Semiring:
    """First-class bundle of semiring operations.

    ``add`` must be associative and commutative with identity ``zero``;
    ``mul`` associative with identity ``one``, distributing over ``add``
    from both sides; ``zero`` annihilates products.  ``eq`` is the
    equality under which those laws are checked: exact for discrete
    carriers, tolerance-based for floating-point ones.
    """

    name: str
    add: BinOp
    mul: BinOp
    zero: Any
    one: Any
    eq: EqOp = exact_eq

    def sum(self, values: Iterable[Any]) -> Any:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values: Iterable[Any]) -> Any:
        acc = self.one
        for v in values:
            acc = self.mul(acc, v)
        return acc

    def __repr__(self) -> str:
        return f"Semiring({self.name})"


def counting_semiring() -> Semiring:
    """Natural numbers under (+, *, 0, 1).

    The carrier is Python's arbitrary-precision int, so counts that grow
    exponentially (path counts roughly quintuple per size step in the
    alignment problems) stay exact and can never wrap silently.
    """
    return Semiring("count", operator.add, operator.mul, 0, 1)


def boolean_semiring() -> Semiring:
    """Booleans under (or, and); identities False and True."""
    return Semiring("bool", operator.or_, operator.and_, False, True)


def probability_semiring() -> Semiring:
    """Reals under (+, *, 0, 1); sums likelihood over solutions."""
    return Semiring("prob", operator.add, operator.mul, 0.0, 1.0, float_eq)


def minplus_semiring() -> Semiring:
    """Tropical minimum: add=min, mul=+, identities +inf and 0."""
    return Semiring("minplus", min, operator.add, math.inf, 0.0, float_eq)


def maxplus_semiring() -> Semiring:
    """Tropical maximum: add=max, mul=+, identities -inf and 0."""
    return Semiring("maxplus", max, operator.add, -math.inf, 0.0, float_eq)


def max_product_semiring() -> Semiring:
    """Non-negative reals under (max, *, 0, 1); best-probability scoring."""
    return Semiring("maxprod", max, operator.mul, 0.0, 1.0, float_eq)


def _softmin(x: float, y: float) -> float:
    # -ln(e^-x + e^-y), computed as min - log1p(exp(-|x-y|)) so large
    # magnitudes cannot underflow the naive exponentials.
    if x == math.inf:
        return y
    if y == math.inf:
        return x
    if x == -math.inf or y == -math.inf:
        return -math.inf
    return min(x, y) - math.log1p(math.exp(-abs(x - y)))


def softmax_semiring() -> Semiring:
    """Smooth minimum: add=-ln(e^-x + e^-y), mul=+, identities +inf and 0.

    A differentiable stand-in for the tropical minimum; add(x, y) is
    always at or below min(x, y) and approaches it as |x-y| grows.
    """
    return Semiring("softmax", _softmin, operator.add, math.inf, 0.0, float_eq)


def bottleneck_semiring() -> Semiring:
    """Values in [0, 1] under (max, min, 0, 1); fuzzy constraint grades."""
    return Semiring("bottleneck", max, min, 0.0, 1.0, float_eq)


def _expectation_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _expectation_mul(a, b):
    x, p = a
    y, q = b
    return (p * y + q * x, p * q)


def expectation_semiring() -> Semiring:
    """Pairs (value, weight) with mul (x,p)*(y,q) = (p*y + q*x, p*q).

    The multiplicative unit consistent with that product rule is (0, 1):
    it is the only pair u with u*(y, q) == (y, q) == (y, q)*u for every
    pair.  A unit of (1, 0) fails the identity law -- (x, p)*(1, 0)
    collapses to (p, 0) -- which the law tests demonstrate explicitly.
    """
    return Semiring(
        "expectation",
        _expectation_add,
        _expectation_mul,
        (0.0, 0.0),
        (0.0, 1.0),
        pair_eq(float_eq),
    )


def standard_semirings() -> dict[str, Semiring]:
    """The numeric semiring catalog, keyed by the names the CLI accepts."""
    return {
        "count": counting_semiring(),
        "bool": boolean_semiring(),
        "prob": probability_semiring(),
        "minplus": minplus_semiring(),
        "maxplus": maxplus_semiring(),
        "maxprod": max_product_semiring(),
        "softmax": softmax_semiring(),
        "bottleneck": bottleneck_semiring(),
        "expectation": expectation_semiring(),
    }


class Scored(NamedTuple):
    """A semiring score paired with the decision labels that produced it."""

    score: Any
    witness: Any


def viterbi_semiring(base: Semiring) -> Semiring:
    """Tuple ``base`` scores with *sets* of witness label sequences.

    ``add`` keeps the operand whose score wins under ``base.add`` and
    merges the witness sets when scores tie, so every optimum is
    retained; ``mul`` combines scores and cross-concatenates witnesses.
    ``base.add`` must be selective (min- or max-like over totally
    ordered scores).  Witnesses are frozensets of label tuples.
    """

    def add(a, b):
        if base.eq(a.score, b.score):
            return Scored(a.score, a.witness | b.witness)
        if base.eq(base.add(a.score, b.score), a.score):
            return a
        return b

    def mul(a, b):
        return Scored(
            base.mul(a.score, b.score),
            frozenset(x + y for x in a.witness for y in b.witness),
        )

    def eq(a, b):
        return base.eq(a.score, b.score) and a.witness == b.witness

    zero = Scored(base.zero, frozenset())
    one = Scored(base.one, frozenset({()}))
    return Semiring(f"viterbi[{base.name}]", add, mul, zero, one, eq)


def viterbi_simple_semiring(base: Semiring) -> Semiring:
    """Tuple ``base`` scores with a single witness label sequence.

    Ties keep the left operand, which makes the fold deterministic but
    means ``add`` is only commutative when scores are distinct; intended
    for problems whose optimum is effectively unique, or where any one
    optimal witness will do.  A score equal to ``base.zero`` means "no
    solution", so such values are canonicalized and compare equal
    whatever witness they carry.
    """

    zero = Scored(base.zero, ())
    one = Scored(base.one, ())

    def add(a, b):
        if base.eq(base.add(a.score, b.score), a.score):
            return a
        return b

    def mul(a, b):
        score = base.mul(a.score, b.score)
        if score == base.zero:  # exact: tiny-but-live scores keep witnesses
            return zero
        return Scored(score, a.witness + b.witness)

    def eq(a, b):
        if not base.eq(a.score, b.score):
            return False
        return base.eq(a.score, base.zero) or a.witness == b.witness
    return Semiring(f"viterbi-simple[{base.name}]", add, mul, zero, one, eq)


@dataclass
class OpCounts:
    """Mutable tally of semiring operation calls."""

    add: int = 0
    mul: int = 0

    def total(self) -> int:
        return self.add + self.mul

    def reset(self) -> None:
        self.add = 0
        self.mul = 0


def instrumented(s: Semiring) -> tuple[Semiring, OpCounts]:
    """Wrap ``s`` so every add/mul call is tallied.

    Complexity claims about the recurrences are statements about
    operation counts, not wall time; the counters make them testable.
    The wrapper is not thread-safe and is meant for measurement only.
    """
    counts = OpCounts()

    def add(a, b):
        counts.add += 1
        return s.add(a, b)

    def mul(a, b):
        counts.mul += 1
        return s.mul(a, b)

    return Semiring(f"{s.name}#counted", add, mul, s.zero, s.one, s.eq), counts
