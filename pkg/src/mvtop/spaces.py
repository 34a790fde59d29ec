"""D-laminated MV-spaces on finite carriers.

An ``MVSpace`` is a carrier, a value chain, a scalar subquantale D and a
finite family of open fuzzy sets.  The constructor only checks that the
pieces fit together; whether the family really is a topology is the job
of ``check_axioms`` (or is guaranteed by ``generate_topology``).
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Mapping, Sequence
from functools import cached_property

import numpy as np

from . import kernels
from .errors import DEFAULT_LIMIT, CheckReport, InputError, ResourceError, ConsistencyError
from .fuzzy import Carrier, FuzzySet, powerset_array, powerset_size
from .mvcore import Chain, MVValue, Subquantale, check_subquantale


class MVSpace:
    def __init__(self, carrier: Carrier, chain: Chain, D: Subquantale,
                 opens: Iterable[FuzzySet], name: str | None = None):
        if D.chain != chain:
            D = D.rebase(chain)
        opens = set(opens)
        for o in opens:
            if o.carrier != carrier:
                raise InputError(f"open {o!r} is not on carrier {carrier!r}")
            if o.chain != chain:
                raise InputError(f"open {o!r} is not valued in {chain}")
        self.carrier = carrier
        self.chain = chain
        self.D = D
        self.opens: tuple[FuzzySet, ...] = tuple(sorted(opens, key=lambda o: o.levels))
        self._open_levels = frozenset(o.levels for o in self.opens)
        self.name = name
        if len(carrier) == 0:
            warnings.warn("space with empty carrier: 0 and 1 coincide; "
                          "excluded from space-level checks", stacklevel=2)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"<MVSpace {label}|X|={len(self.carrier)}, {self.chain}, |τ|={len(self.opens)}>"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MVSpace) and other.carrier == self.carrier
                and other.chain == self.chain and other.D == self.D
                and other._open_levels == self._open_levels)

    def __hash__(self) -> int:
        return hash((self.carrier, self.chain, self._open_levels))

    @property
    def degenerate(self) -> bool:
        return len(self.carrier) == 0

    def is_open(self, alpha: FuzzySet) -> bool:
        return alpha.levels in self._open_levels

    def top(self) -> FuzzySet:
        return FuzzySet.top(self.carrier, self.chain)

    def bottom(self) -> FuzzySet:
        return FuzzySet.bottom(self.carrier, self.chain)

    def fuzzy(self, values: Mapping[str, object] | Sequence[object] | str) -> FuzzySet:
        """Convenience constructor for a fuzzy set on this space's carrier."""
        from .fuzzy import parse_fuzzy
        if isinstance(values, (str, Mapping)):
            return parse_fuzzy(self.carrier, self.chain, values)
        return FuzzySet.from_values(self.carrier, self.chain, values)

    @cached_property
    def open_array(self) -> np.ndarray:
        arr = np.array([o.levels for o in self.opens], dtype=np.int64).reshape(
            len(self.opens), len(self.carrier))
        arr.setflags(write=False)
        return arr

    def with_opens(self, opens: Iterable[FuzzySet]) -> MVSpace:
        return MVSpace(self.carrier, self.chain, self.D, opens, self.name)


def _cx_fuzzy(alpha: FuzzySet) -> str:
    return alpha.compact()


def check_axioms(S: MVSpace, limit: int = DEFAULT_LIMIT) -> CheckReport:
    """Check the six conditions of a D-laminated MV-topology on a finite family.

    Arbitrary joins reduce to 0̲ plus binary joins because the family is
    finite.  Constants r̲ (r in D) are not checked separately: they are
    r ⊙ 1̲.
    """
    rep = CheckReport("axioms")
    if S.degenerate:
        rep.notes.append("empty carrier: skipped")
        return rep
    rep.merge(check_subquantale(S.D.values, S.chain), prefix="D")
    top, bot = S.top(), S.bottom()
    if not S.is_open(top):
        rep.fail("top-open", missing=_cx_fuzzy(top))
    if not S.is_open(bot):
        rep.fail("empty-join-open", missing=_cx_fuzzy(bot))

    c = S.chain
    names = kernels.OP_NAMES
    if powerset_size(S.carrier, c) <= limit:
        vec = powerset_array(len(S.carrier), c.q)
        members = np.zeros(len(vec), dtype=np.uint8)
        idx = np.array([o.index() for o in S.opens], dtype=np.int64)
        members[idx] = 1
        _, wit = kernels.closure_violations(members, idx, vec, c.q,
                                            np.array(S.D.levels, dtype=np.int64), 50)
        for op, a, b in wit.tolist():
            if op == kernels.OP_SCALAR:
                o = FuzzySet(S.carrier, c, vec[b])
                res = FuzzySet(S.carrier, c, [c.mul(a, k) for k in o.levels])
                rep.fail("closed-under-scalar", r=str(c.value(a)), a=_cx_fuzzy(o),
                         result=_cx_fuzzy(res))
            else:
                fa, fb = FuzzySet(S.carrier, c, vec[a]), FuzzySet(S.carrier, c, vec[b])
                from .fuzzy import pointwise
                res = pointwise(names[op], fa, fb)
                rep.fail(f"closed-under-{names[op]}", a=_cx_fuzzy(fa), b=_cx_fuzzy(fb),
                         result=_cx_fuzzy(res))
    else:
        _closure_check_sets(S, rep)
    if S.D.levels:
        rep.notes.append("constants r for r in D are open as r ⊙ 1 (derived, not checked separately)")
    return rep


def _closure_check_sets(S: MVSpace, rep: CheckReport, cap: int = 50) -> None:
    from .fuzzy import pointwise, scalar_mul
    opens = S.opens
    for i, a in enumerate(opens):
        for b in opens[i:]:
            for op in ("join", "meet", "oplus", "odot"):
                r = pointwise(op, a, b)
                if not S.is_open(r) and len(rep.counterexamples) < cap:
                    rep.fail(f"closed-under-{op}", a=a.compact(), b=b.compact(), result=r.compact())
        for r in S.D.values:
            res = scalar_mul(r, a)
            if not S.is_open(res) and len(rep.counterexamples) < cap:
                rep.fail("closed-under-scalar", r=str(r), a=a.compact(), result=res.compact())


def generate_topology(carrier: Carrier, chain: Chain, D: Subquantale,
                      generators: Iterable[FuzzySet], limit: int = DEFAULT_LIMIT,
                      name: str | None = None) -> MVSpace:
    """Least D-laminated MV-topology containing ``generators``.

    Worklist fixpoint: each element, when taken off the queue, is combined
    with itself, with every element processed before it, and with every
    scalar in D.  Raises ``ResourceError`` once the family outgrows ``limit``.
    """
    if D.chain != chain:
        D = D.rebase(chain)
    q = chain.q
    n = len(carrier)
    family: set[tuple[int, ...]] = {(0,) * n, (q,) * n}
    for g in generators:
        if g.carrier != carrier or g.chain != chain:
            raise InputError(f"generator {g!r} does not live on {carrier!r} / {chain}")
        family.add(g.levels)
    queue = sorted(family)
    done: list[tuple[int, ...]] = []
    dl = D.levels

    def add(v: tuple[int, ...]) -> None:
        if v not in family:
            family.add(v)
            queue.append(v)
            if len(family) > limit:
                raise ResourceError(f"topology closure exceeds limit {limit}")

    while queue:
        a = queue.pop()
        for r in dl:
            add(tuple(max(0, r + x - q) for x in a))
        done.append(a)
        for b in done:
            pairs = tuple(zip(a, b))
            add(tuple(max(x, y) for x, y in pairs))
            add(tuple(min(x, y) for x, y in pairs))
            add(tuple(min(q, x + y) for x, y in pairs))
            add(tuple(max(0, x + y - q) for x, y in pairs))
    return MVSpace(carrier, chain, D, (FuzzySet(carrier, chain, v) for v in family), name)


def interior(S: MVSpace, alpha: FuzzySet) -> FuzzySet:
    """Join of all opens below ``alpha``: the largest open contained in it."""
    if alpha.carrier != S.carrier or alpha.chain != S.chain:
        raise InputError("fuzzy set does not live on the space's carrier/chain")
    acc = [0] * len(S.carrier)
    a = alpha.levels
    for o in S.opens:
        lv = o.levels
        if all(x <= y for x, y in zip(lv, a)):
            acc = [max(x, y) for x, y in zip(acc, lv)]
    return FuzzySet(S.carrier, S.chain, acc)


def interior_table(S: MVSpace, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """Interior of every fuzzy set in V^X (rows in canonical order)."""
    from .fuzzy import check_powerset_limit
    check_powerset_limit(S.carrier, S.chain, limit)
    vec = powerset_array(len(S.carrier), S.chain.q)
    return kernels.interior_rows(vec, S.open_array)


class NbhdSystem:
    """The map u -> interior(u)(x), evaluated lazily; ``table`` materializes it over V^X."""

    def __init__(self, S: MVSpace, x: str):
        self.space = S
        self.point = x
        self._i = S.carrier.index(x)

    def __call__(self, u: FuzzySet) -> MVValue:
        return self.space.chain.value(interior(self.space, u).levels[self._i])

    def table(self, limit: int = DEFAULT_LIMIT) -> dict[FuzzySet, MVValue]:
        S = self.space
        tab = interior_table(S, limit)
        vec = powerset_array(len(S.carrier), S.chain.q)
        col = tab[:, self._i].tolist()
        return {FuzzySet(S.carrier, S.chain, row): S.chain.value(k)
                for row, k in zip(vec.tolist(), col)}


def nbhd_system(S: MVSpace, x: str) -> NbhdSystem:
    return NbhdSystem(S, x)


def neighbourhood_witness(S: MVSpace, u: FuzzySet, x: str) -> FuzzySet | None:
    """An open α ≤ u with α(x) = 1, found by direct search, or None."""
    i = S.carrier.index(x)
    q = S.chain.q
    for o in S.opens:
        if o.levels[i] == q and o <= u:
            return o
    return None


def is_neighbourhood(S: MVSpace, u: FuzzySet, x: str) -> bool:
    """True iff u°(x) = 1; cross-checked against a direct witness search."""
    by_interior = interior(S, u).levels[S.carrier.index(x)] == S.chain.q
    by_witness = neighbourhood_witness(S, u, x) is not None
    if by_interior != by_witness:
        raise ConsistencyError(f"neighbourhood computations disagree for {u!r} at {x}")
    return by_interior


class CrispMap:
    """A total map between two carriers."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Carrier, target: Carrier, mapping: Mapping[str, str] | Sequence[int]):
        if isinstance(mapping, Mapping):
            if set(mapping) != set(source.names):
                raise InputError("map must be total on the source carrier")
            images = tuple(target.index(mapping[n]) for n in source.names)
        else:
            images = tuple(mapping)
            if len(images) != len(source) or not all(0 <= i < len(target) for i in images):
                raise InputError("invalid image indices for crisp map")
        self.source = source
        self.target = target
        self.images = images

    @classmethod
    def identity(cls, carrier: Carrier) -> CrispMap:
        return cls(carrier, carrier, tuple(range(len(carrier))))

    @classmethod
    def parse(cls, source: Carrier, target: Carrier, text: str) -> CrispMap:
        """Parse ``x=y,y=z,z=y``; unmentioned points of a shared carrier map to themselves."""
        mapping: dict[str, str] = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise InputError(f"expected src=dst in map literal, got {part!r}")
            a, _, b = part.partition("=")
            mapping[a.strip()] = b.strip()
        for n in source.names:
            if n not in mapping and n in target:
                mapping[n] = n
        unknown = set(mapping) - set(source.names)
        if unknown:
            raise InputError(f"unknown source points {sorted(unknown)}")
        return cls(source, target, mapping)

    def __call__(self, x: str) -> str:
        return self.target.names[self.images[self.source.index(x)]]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CrispMap) and other.source == self.source
                and other.target == self.target and other.images == self.images)

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return "CrispMap(" + ",".join(f"{n}={self(n)}" for n in self.source.names) + ")"

    def compose(self, first: CrispMap) -> CrispMap:
        """``self ∘ first``."""
        if first.target != self.source:
            raise InputError("maps are not composable")
        return CrispMap(first.source, self.target, tuple(self.images[i] for i in first.images))

    def preimage(self, alpha: FuzzySet) -> FuzzySet:
        """α ∘ f."""
        if alpha.carrier != self.target:
            raise InputError("fuzzy set is not on the map's target carrier")
        return FuzzySet(self.source, alpha.chain, [alpha.levels[i] for i in self.images])


def _compatible(S: MVSpace, T: MVSpace) -> None:
    if S.chain != T.chain:
        raise InputError(f"spaces use different chains ({S.chain} vs {T.chain})")
    if not S.D.same_values(T.D):
        raise InputError("spaces use different scalar subquantales D")


def is_continuous(f: CrispMap, S: MVSpace, T: MVSpace) -> CheckReport:
    """Every open of T pulls back to an open of S."""
    if f.source != S.carrier or f.target != T.carrier:
        raise InputError("map carriers do not match the spaces")
    _compatible(S, T)
    rep = CheckReport("continuity")
    for beta in T.opens:
        pre = f.preimage(beta)
        if not S.is_open(pre):
            rep.fail("preimage-open", open=beta.compact(), preimage=pre.compact())
    return rep


def t0_witness(S: MVSpace, x: str, y: str) -> FuzzySet | None:
    i, j = S.carrier.index(x), S.carrier.index(y)
    for o in S.opens:
        if o.levels[i] != o.levels[j]:
            return o
    return None


def is_T0(S: MVSpace) -> bool:
    names = S.carrier.names
    return all(t0_witness(S, names[i], names[j]) is not None
               for i in range(len(names)) for j in range(i + 1, len(names)))


def hausdorff_witness(S: MVSpace, x: str, y: str) -> tuple[FuzzySet, FuzzySet] | None:
    i, j = S.carrier.index(x), S.carrier.index(y)
    q = S.chain.q
    at_x = [o for o in S.opens if o.levels[i] == q]
    at_y = [o for o in S.opens if o.levels[j] == q]
    for a in at_x:
        for b in at_y:
            if all(min(u, v) == 0 for u, v in zip(a.levels, b.levels)):
                return a, b
    return None


def is_hausdorff(S: MVSpace) -> bool:
    names = S.carrier.names
    return all(hausdorff_witness(S, names[i], names[j]) is not None
               for i in range(len(names)) for j in range(i + 1, len(names)))
