"""Fuzzy sets over a finite carrier, valued in a Łukasiewicz chain."""

from __future__ import annotations

import operator
from collections.abc import Iterator, Mapping, Sequence
from itertools import product
from typing import Callable

from .errors import DEFAULT_LIMIT, InputError, ResourceError
from .mvcore import Chain, MVValue, parse_value


class Carrier:
    """Ordered, duplicate-free list of point names.

    The order is canonical: every printed vector and every enumeration of
    the fuzzy powerset follows it.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str], allow_empty: bool = False):
        names = tuple(names)
        if not names and not allow_empty:
            raise InputError("carrier must be non-empty")
        for n in names:
            if not isinstance(n, str) or not n:
                raise InputError(f"point names must be non-empty strings, got {n!r}")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate point names in carrier {list(names)}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Carrier) and other.names == self.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Carrier({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown point {name!r}") from None


def powerset_size(carrier: Carrier, chain: Chain) -> int:
    return (chain.q + 1) ** len(carrier)


def check_powerset_limit(carrier: Carrier, chain: Chain, limit: int = DEFAULT_LIMIT) -> int:
    size = powerset_size(carrier, chain)
    if size > limit:
        raise ResourceError(
            f"|V|^|X| = {chain.q + 1}^{len(carrier)} = {size} exceeds limit {limit}")
    return size


class FuzzySet:
    """A total map carrier -> chain, stored as a tuple of integer levels.

    ``levels[i]`` is the numerator over ``chain.q`` of the value at the
    i-th carrier point.  Instances are immutable and hashable.
    """

    __slots__ = ("carrier", "chain", "levels")

    def __init__(self, carrier: Carrier, chain: Chain, levels: Sequence[int]):
        try:
            levels = tuple(operator.index(k) for k in levels)
        except TypeError:
            raise InputError(f"levels must be integers, got {levels!r}") from None
        if len(levels) != len(carrier):
            raise InputError(f"expected {len(carrier)} values, got {len(levels)}")
        for k in levels:
            if not 0 <= k <= chain.q:
                raise InputError(f"level {k!r} outside chain {chain}")
        self.carrier = carrier
        self.chain = chain
        self.levels = levels

    @classmethod
    def from_values(cls, carrier: Carrier, chain: Chain,
                    values: Mapping[str, object] | Sequence[object]) -> FuzzySet:
        """Build from a point->value mapping (keys must cover the carrier exactly) or a sequence."""
        if isinstance(values, Mapping):
            keys = set(values)
            if keys != set(carrier.names):
                missing = sorted(set(carrier.names) - keys)
                extra = sorted(keys - set(carrier.names))
                raise InputError(f"fuzzy set keys do not match carrier (missing {missing}, unknown {extra})")
            seq = [values[n] for n in carrier.names]
        else:
            seq = list(values)
        return cls(carrier, chain, [chain.level(parse_value(v)) for v in seq])

    @classmethod
    def constant(cls, carrier: Carrier, chain: Chain, r: object) -> FuzzySet:
        return cls(carrier, chain, [chain.level(parse_value(r))] * len(carrier))

    @classmethod
    def top(cls, carrier: Carrier, chain: Chain) -> FuzzySet:
        return cls(carrier, chain, [chain.q] * len(carrier))

    @classmethod
    def bottom(cls, carrier: Carrier, chain: Chain) -> FuzzySet:
        return cls(carrier, chain, [0] * len(carrier))

    @property
    def values(self) -> tuple[MVValue, ...]:
        return tuple(self.chain.value(k) for k in self.levels)

    def __getitem__(self, name: str) -> MVValue:
        return self.chain.value(self.levels[self.carrier.index(name)])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FuzzySet) and other.levels == self.levels
                and other.carrier == self.carrier and other.chain == self.chain)

    def __hash__(self) -> int:
        return hash(self.levels)

    def __lt__(self, other: FuzzySet) -> bool:
        # lexicographic by value vector; used only for canonical sorting
        return self.levels < other.levels

    def __repr__(self) -> str:
        return f"FuzzySet({self.compact()})"

    def __str__(self) -> str:
        return "⟨" + ", ".join(map(str, self.values)) + "⟩"

    def compact(self) -> str:
        return ",".join(f"{n}={v}" for n, v in zip(self.carrier.names, self.values))

    def to_json(self) -> dict[str, str]:
        return {n: str(v) for n, v in zip(self.carrier.names, self.values)}

    def index(self) -> int:
        """Position in the canonical (lexicographic) enumeration of V^X."""
        base = self.chain.q + 1
        i = 0
        for k in self.levels:
            i = i * base + k
        return i

    @classmethod
    def from_index(cls, carrier: Carrier, chain: Chain, i: int) -> FuzzySet:
        base = chain.q + 1
        levels = []
        for _ in range(len(carrier)):
            i, k = divmod(i, base)
            levels.append(k)
        return cls(carrier, chain, levels[::-1])

    def _same_space(self, other: FuzzySet) -> None:
        if other.carrier != self.carrier:
            raise InputError("carrier mismatch between fuzzy sets")
        if other.chain != self.chain:
            raise InputError("chain mismatch between fuzzy sets")

    def __le__(self, other: FuzzySet) -> bool:
        return leq(self, other)

    def __and__(self, other: FuzzySet) -> FuzzySet:
        return pointwise("meet", self, other)

    def __or__(self, other: FuzzySet) -> FuzzySet:
        return pointwise("join", self, other)


def parse_fuzzy(carrier: Carrier, chain: Chain, text: str | Mapping[str, object]) -> FuzzySet:
    """Parse ``{"x": "1/2", ...}`` or the compact command-line form ``x=1/2,y=3/5``."""
    if isinstance(text, Mapping):
        return FuzzySet.from_values(carrier, chain, text)
    mapping: dict[str, str] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InputError(f"expected name=value in fuzzy set literal, got {part!r}")
        name, _, val = part.partition("=")
        name = name.strip()
        if name in mapping:
            raise InputError(f"point {name!r} given twice")
        mapping[name] = val.strip()
    return FuzzySet.from_values(carrier, chain, mapping)


_BINARY: dict[str, Callable[[Chain, int, int], int]] = {
    "oplus": lambda c, a, b: c.add(a, b),
    "odot": lambda c, a, b: c.mul(a, b),
    "meet": lambda c, a, b: min(a, b),
    "join": lambda c, a, b: max(a, b),
}
_ALIASES = {"⊕": "oplus", "+": "oplus", "⊙": "odot", ".": "odot", "∧": "meet",
            "∨": "join", "*": "neg", "neg": "neg"}


def pointwise(op: str, alpha: FuzzySet, beta: FuzzySet | None = None) -> FuzzySet:
    """Apply ⊕, ⊙, ∧, ∨ (binary) or * (unary) at every point."""
    op = _ALIASES.get(op, op)
    c = alpha.chain
    if op == "neg":
        if beta is not None:
            raise InputError("negation is unary")
        return FuzzySet(alpha.carrier, c, [c.q - a for a in alpha.levels])
    if op not in _BINARY:
        raise InputError(f"unknown pointwise operation {op!r}")
    if beta is None:
        raise InputError(f"operation {op} needs two operands")
    alpha._same_space(beta)
    f = _BINARY[op]
    return FuzzySet(alpha.carrier, c, [f(c, a, b) for a, b in zip(alpha.levels, beta.levels)])


def leq(alpha: FuzzySet, beta: FuzzySet) -> bool:
    alpha._same_space(beta)
    return all(a <= b for a, b in zip(alpha.levels, beta.levels))


def scalar_mul(r: object, alpha: FuzzySet) -> FuzzySet:
    """The fuzzy set x -> r ⊙ alpha(x)."""
    c = alpha.chain
    k = c.level(parse_value(r))
    return FuzzySet(alpha.carrier, c, [c.mul(k, a) for a in alpha.levels])


def characteristic(carrier: Carrier, chain: Chain, subset) -> FuzzySet:
    members = set(subset)
    for name in members:
        carrier.index(name)
    return FuzzySet(carrier, chain, [chain.q if n in members else 0 for n in carrier.names])


def nfold_add(k: int, alpha: FuzzySet) -> FuzzySet:
    """alpha ⊕ ... ⊕ alpha with k summands."""
    if k < 1:
        raise InputError("nfold_add needs at least one summand")
    c = alpha.chain
    return FuzzySet(alpha.carrier, c, [min(c.q, k * a) for a in alpha.levels])


def powerset(carrier: Carrier, chain: Chain, limit: int = DEFAULT_LIMIT) -> Iterator[FuzzySet]:
    """All of V^X in canonical order, refusing when the size exceeds ``limit``."""
    check_powerset_limit(carrier, chain, limit)
    for levels in product(range(chain.q + 1), repeat=len(carrier)):
        yield FuzzySet(carrier, chain, levels)


_POWERSET_CACHE: dict[tuple[int, int], object] = {}


def powerset_array(n: int, q: int):
    """V^X as a read-only (N, n) int64 array of levels, rows in canonical order."""
    import numpy as np

    key = (n, q)
    arr = _POWERSET_CACHE.get(key)
    if arr is None:
        base = q + 1
        idx = np.arange(base ** n, dtype=np.int64)
        arr = np.empty((base ** n, n), dtype=np.int64)
        for t in range(n - 1, -1, -1):
            idx, arr[:, t] = np.divmod(idx, base)
        arr.setflags(write=False)
        if len(_POWERSET_CACHE) > 16:
            _POWERSET_CACHE.clear()
        _POWERSET_CACHE[key] = arr
    return arr
