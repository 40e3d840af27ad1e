"""Exact arithmetic and sign predicates in the ring Z[sqrt(5)].

Every geometric decision in this package bottoms out in the sign of a
number a + b*sqrt(5) with integer a and b, which is computable with
integer arithmetic alone.  Python integers are unbounded, so the
predicates here are exact at any coordinate scale; nothing can overflow
or wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SQRT5 = math.sqrt(5.0)


def int_sign(n: int) -> int:
    return (n > 0) - (n < 0)


def sign_quad(a: int, b: int) -> int:
    """Sign of a + b*sqrt(5), using integers only.

    Three branches on sign(a)*sign(b): if the terms agree (or one
    vanishes) the answer is immediate; if they compete, comparing a^2
    against 5*b^2 decides which magnitude wins.
    """
    s = int_sign(a) * int_sign(b)
    if s == 1:
        return int_sign(a)
    if s == 0:
        return int_sign(b) if a == 0 else int_sign(a)
    return int_sign(a) * int_sign(a * a - 5 * b * b)


@dataclass(frozen=True, slots=True)
class QuadVal:
    """The real number a + b*sqrt(5), stored as the integer pair (a, b).

    sqrt(5) is irrational, so the representation is unique and the value
    is zero exactly when a = b = 0.
    """

    a: int
    b: int

    def __add__(self, other: QuadVal) -> QuadVal:
        return QuadVal(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadVal) -> QuadVal:
        return QuadVal(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadVal:
        return QuadVal(-self.a, -self.b)

    def __mul__(self, other: QuadVal | int) -> QuadVal:
        if isinstance(other, int):
            return QuadVal(self.a * other, self.b * other)
        return QuadVal(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __rmul__(self, other: int) -> QuadVal:
        return self * other

    def sign(self) -> int:
        return sign_quad(self.a, self.b)

    def __lt__(self, other: QuadVal) -> bool:
        return cmp_quad(self, other) < 0

    def __le__(self, other: QuadVal) -> bool:
        return cmp_quad(self, other) <= 0

    def __gt__(self, other: QuadVal) -> bool:
        return cmp_quad(self, other) > 0

    def __ge__(self, other: QuadVal) -> bool:
        return cmp_quad(self, other) >= 0

    def __float__(self) -> float:
        return eval_float(self)


ZERO_QUAD = QuadVal(0, 0)


def cmp_quad(p: QuadVal, q: QuadVal) -> int:
    """-1, 0 or +1 as p is below, equal to or above q in the real order."""
    return sign_quad(p.a - q.a, p.b - q.b)


def eval_float(p: QuadVal) -> float:
    """Float approximation of a + b*sqrt(5).

    When a and b*sqrt(5) nearly cancel, the naive sum loses relative
    accuracy, so the value is computed as (a^2 - 5 b^2) / (a - b*sqrt(5))
    instead; the denominator has no cancellation there.  Rendering only:
    no predicate ever consumes this.
    """
    if p.a and p.b and (p.a > 0) != (p.b > 0):
        return (p.a * p.a - 5 * p.b * p.b) / (p.a - p.b * SQRT5)
    return p.a + p.b * SQRT5
