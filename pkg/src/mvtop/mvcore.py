"""Exact Łukasiewicz arithmetic on finite chains of [0,1].

Values are reduced rationals (``MVValue``, a constrained ``Fraction``).
Inside a chain Ł_q every value is ``k/q`` and most of the package works
with the integer *level* ``k``; the helpers ``add``, ``mul`` and ``neg``
below are the level-space versions of ⊕, ⊙ and *.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import CheckReport, InputError

_LITERAL = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


class MVValue(Fraction):
    """A rational number in [0, 1].

    Accepts anything ``Fraction`` accepts; construction fails with
    ``InputError`` when the value falls outside the unit interval.
    ``str`` gives the canonical literal ``"0"``, ``"1"`` or ``"n/d"``.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        try:
            self = super().__new__(cls, numerator, denominator)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InputError(f"not a rational value: {numerator!r}") from exc
        if self < 0 or self > 1:
            raise InputError(f"value {self} outside [0,1]")
        return self

    def __repr__(self) -> str:
        return f"MVValue('{self}')"


ZERO = MVValue(0)
ONE = MVValue(1)


def parse_value(text: str | int | Fraction) -> MVValue:
    """Parse a value literal: ``"0"``, ``"1"`` or a reduced ``"n/d"`` with 0 < n < d."""
    if isinstance(text, MVValue):
        return text
    if isinstance(text, Fraction) or (isinstance(text, int) and not isinstance(text, bool)):
        return MVValue(text)
    if not isinstance(text, str):
        raise InputError(f"value literal must be a string, got {text!r}")
    m = _LITERAL.match(text)
    if not m:
        raise InputError(f"malformed value literal {text!r}")
    n = int(m.group(1))
    if m.group(2) is None:
        if n not in (0, 1):
            raise InputError(f"value {text!r} outside [0,1]")
        return MVValue(n)
    d = int(m.group(2))
    if d == 0:
        raise InputError(f"zero denominator in {text!r}")
    if n > d:
        raise InputError(f"value {text!r} outside [0,1]")
    v = MVValue(n, d)
    if v.denominator != d:
        raise InputError(f"literal {text!r} is not in lowest terms (use {v})")
    if n == 0 or n == d:
        raise InputError(f"literal {text!r} must be written as {v}")
    return v


def mv_add(a: Fraction, b: Fraction) -> MVValue:
    """Truncated sum ``min(1, a + b)``."""
    return MVValue(min(Fraction(1), a + b))


def mv_mul(a: Fraction, b: Fraction) -> MVValue:
    """Łukasiewicz product ``max(0, a + b - 1)``, i.e. ``(a* ⊕ b*)*``."""
    return MVValue(max(Fraction(0), a + b - 1))


def mv_neg(a: Fraction) -> MVValue:
    return MVValue(1 - a)


def mv_ominus(a: Fraction, b: Fraction) -> MVValue:
    """Truncated difference ``a ⊙ b* = max(0, a - b)``."""
    return mv_mul(a, mv_neg(b))


def mv_meet(a: Fraction, b: Fraction) -> MVValue:
    return MVValue(min(a, b))


def mv_join(a: Fraction, b: Fraction) -> MVValue:
    return MVValue(max(a, b))


class Chain:
    """The Łukasiewicz chain Ł_q = {0, 1/q, ..., 1}."""

    def __init__(self, q: int):
        if isinstance(q, bool) or not isinstance(q, int) or q < 1:
            raise InputError(f"chain denominator must be a positive integer, got {q!r}")
        self.q = q

    def __repr__(self) -> str:
        return f"Chain({self.q})"

    def __str__(self) -> str:
        return f"L{self.q}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("Chain", self.q))

    def __len__(self) -> int:
        return self.q + 1

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, (Fraction, int)):
            return False
        v = Fraction(v)
        return 0 <= v <= 1 and self.q % v.denominator == 0

    @cached_property
    def values(self) -> tuple[MVValue, ...]:
        return tuple(MVValue(k, self.q) for k in range(self.q + 1))

    def value(self, level: int) -> MVValue:
        return self.values[level]

    def level(self, v: Fraction | int | str) -> int:
        """Integer level ``k`` with ``v == k/q``; ``InputError`` if ``v`` is not in the chain."""
        if isinstance(v, str):
            v = parse_value(v)
        v = Fraction(v)
        if v not in self:
            raise InputError(f"value {v} is not in chain {self}")
        return v.numerator * (self.q // v.denominator)

    # level-space operations
    def add(self, a: int, b: int) -> int:
        return min(self.q, a + b)

    def mul(self, a: int, b: int) -> int:
        return max(0, a + b - self.q)

    def neg(self, a: int) -> int:
        return self.q - a


def check_subquantale(values: Iterable, chain: Chain) -> CheckReport:
    """Exhaustively verify that ``values`` is an integral subquantale of ``chain``.

    Finite suprema reduce to the empty join (0 must be present) and binary
    max; the unit 1 must be present; ⊙ must be closed.  Raises
    ``InputError`` if a value is not in the chain.
    """
    vals = sorted({parse_value(v) if isinstance(v, str) else MVValue(v) for v in values})
    for v in vals:
        if v not in chain:
            raise InputError(f"value {v} is not in chain {chain}")
    rep = CheckReport("subquantale")
    present = set(vals)
    if ONE not in present:
        rep.fail("contains-unit", missing="1")
    if ZERO not in present:
        rep.fail("empty-supremum", missing="0")
    for i, a in enumerate(vals):
        for b in vals[i:]:
            p = mv_mul(a, b)
            if p not in present:
                rep.fail("closed-under-product", a=str(a), b=str(b), result=str(p))
            # binary max of two members is one of them, so join closure is automatic
    return rep


class Subquantale:
    """A validated integral subquantale D of a chain, stored as sorted levels."""

    __slots__ = ("chain", "levels")

    def __init__(self, values: Iterable, chain: Chain):
        values = list(values)
        rep = check_subquantale(values, chain)
        if not rep.passed:
            raise InputError("not a subquantale: " + "; ".join(
                ", ".join(f"{k}={v}" for k, v in cx.items()) for cx in rep.counterexamples))
        self.chain = chain
        self.levels: tuple[int, ...] = tuple(sorted({chain.level(v) for v in values}))

    @classmethod
    def boolean(cls, chain: Chain) -> Subquantale:
        return cls([0, 1], chain)

    @classmethod
    def full(cls, chain: Chain) -> Subquantale:
        return cls(chain.values, chain)

    @property
    def values(self) -> tuple[MVValue, ...]:
        return tuple(self.chain.value(k) for k in self.levels)

    def rebase(self, chain: Chain) -> Subquantale:
        """The same set of values viewed inside another chain."""
        return Subquantale(self.values, chain)

    @property
    def is_boolean(self) -> bool:
        return self.levels == (0, self.chain.q)

    @property
    def is_full(self) -> bool:
        return len(self.levels) == self.chain.q + 1

    def same_values(self, other: Subquantale) -> bool:
        return set(self.values) == set(other.values)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (Fraction, int)) and v in self.chain and \
            self.chain.level(v) in self.levels

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subquantale) and other.chain == self.chain \
            and other.levels == self.levels

    def __hash__(self) -> int:
        return hash((self.chain, self.levels))

    def __repr__(self) -> str:
        return f"Subquantale([{', '.join(map(str, self.values))}], {self.chain!r})"

    def to_json(self):
        if self.is_boolean:
            return "boolean"
        if self.is_full:
            return "chain"
        return [str(v) for v in self.values]
