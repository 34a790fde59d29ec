"""MV-interior operators, MV-neighbourhood functions and fuzzy MV-filters.

Operators and neighbourhood functions are stored as full tables over the
fuzzy powerset V^X, rows in canonical order (see ``fuzzy.powerset_array``).
For an interior operator row i holds f(α_i); for a neighbourhood function
row i holds the vector (μ_x(α_i))_x.  The two carry the same data, which is
exactly the correspondence f(α)(x) = μ_x(α).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import DEFAULT_LIMIT, CheckReport, ConsistencyError, InputError
from .frames import DFrame, Point
from .fuzzy import Carrier, FuzzySet, check_powerset_limit, powerset_array
from .mvcore import Chain, MVValue, Subquantale
from .spaces import MVSpace, check_axioms, interior_table

_CAP = 25


def _weights(n: int, q: int) -> np.ndarray:
    return (q + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)


class _Table:
    kind = "table"

    def __init__(self, carrier: Carrier, chain: Chain, table, limit: int = DEFAULT_LIMIT):
        check_powerset_limit(carrier, chain, limit)
        N = (chain.q + 1) ** len(carrier)
        arr = np.array(table, dtype=np.int64)
        if arr.shape != (N, len(carrier)):
            raise InputError(f"{self.kind} table must have {N} rows of {len(carrier)} levels")
        if arr.size and (arr.min() < 0 or arr.max() > chain.q):
            raise InputError(f"{self.kind} table has values outside {chain}")
        arr.setflags(write=False)
        self.carrier = carrier
        self.chain = chain
        self.table = arr

    @property
    def inputs(self) -> np.ndarray:
        return powerset_array(len(self.carrier), self.chain.q)

    @classmethod
    def from_entries(cls, carrier: Carrier, chain: Chain,
                     entries: Iterable[tuple[FuzzySet, Sequence[int]]], limit: int = DEFAULT_LIMIT):
        """Build from (input, output levels) pairs that must cover V^X exactly once."""
        check_powerset_limit(carrier, chain, limit)
        N = (chain.q + 1) ** len(carrier)
        out = np.zeros((N, len(carrier)), dtype=np.int64)
        seen = np.zeros(N, dtype=bool)
        for alpha, levels in entries:
            if alpha.carrier != carrier or alpha.chain != chain:
                raise InputError("table input does not live on the declared carrier/chain")
            i = alpha.index()
            if seen[i]:
                raise InputError(f"input {alpha.compact()} listed twice")
            seen[i] = True
            out[i] = levels
        missing = np.flatnonzero(~seen)
        if missing.size:
            first = FuzzySet.from_index(carrier, chain, int(missing[0]))
            raise InputError(f"{cls.kind} table does not cover V^X: {missing.size} inputs missing, "
                             f"e.g. {first.compact()}")
        return cls(carrier, chain, out, limit)

    def __eq__(self, other: object) -> bool:
        return (type(other) is type(self) and other.carrier == self.carrier
                and other.chain == self.chain and np.array_equal(other.table, self.table))

    __hash__ = None  # type: ignore[assignment]

    def _row(self, alpha: FuzzySet) -> np.ndarray:
        if alpha.carrier != self.carrier or alpha.chain != self.chain:
            raise InputError("fuzzy set does not live on the table's carrier/chain")
        return self.table[alpha.index()]

    def _fs(self, i: int) -> FuzzySet:
        return FuzzySet(self.carrier, self.chain, self.inputs[i])


class InteriorOperator(_Table):
    """A map V^X -> V^X given by its table."""

    kind = "operator"

    def __call__(self, alpha: FuzzySet) -> FuzzySet:
        return FuzzySet(self.carrier, self.chain, self._row(alpha))

    @classmethod
    def from_space(cls, S: MVSpace, limit: int = DEFAULT_LIMIT) -> InteriorOperator:
        return cls(S.carrier, S.chain, interior_table(S, limit), limit)

    @classmethod
    def from_callable(cls, carrier: Carrier, chain: Chain, fn: Callable[[FuzzySet], FuzzySet],
                      limit: int = DEFAULT_LIMIT) -> InteriorOperator:
        check_powerset_limit(carrier, chain, limit)
        vec = powerset_array(len(carrier), chain.q)
        return cls(carrier, chain, [fn(FuzzySet(carrier, chain, row)).levels for row in vec], limit)

    @classmethod
    def identity(cls, carrier: Carrier, chain: Chain) -> InteriorOperator:
        return cls(carrier, chain, powerset_array(len(carrier), chain.q))


class NbhdFunction(_Table):
    """Per-point maps μ_x: V^X -> V; ``table[i, x] = μ_x(α_i)``."""

    kind = "neighbourhood"

    def mu(self, x: str, alpha: FuzzySet) -> MVValue:
        return self.chain.value(int(self._row(alpha)[self.carrier.index(x)]))

    def __call__(self, x: str) -> Callable[[FuzzySet], MVValue]:
        self.carrier.index(x)
        return lambda alpha: self.mu(x, alpha)

    @classmethod
    def from_space(cls, S: MVSpace, limit: int = DEFAULT_LIMIT) -> NbhdFunction:
        return cls(S.carrier, S.chain, interior_table(S, limit), limit)

    @classmethod
    def from_callable(cls, carrier: Carrier, chain: Chain, fn: Callable[[str, FuzzySet], object],
                      limit: int = DEFAULT_LIMIT) -> NbhdFunction:
        """``fn(x, α)`` gives μ_x(α) as a value."""
        check_powerset_limit(carrier, chain, limit)
        vec = powerset_array(len(carrier), chain.q)
        rows = []
        for row in vec:
            a = FuzzySet(carrier, chain, row)
            rows.append([chain.level(fn(x, a)) for x in carrier.names])
        return cls(carrier, chain, rows, limit)


def _pair_report(rep: CheckReport, T: _Table, names: Sequence[str], limit: int) -> None:
    """Run the pairwise kernel and translate its witnesses."""
    counts, wit = kernels.pair_laws(T.table, T.inputs, T.chain.q, limit)
    for law, i, j in wit.tolist():
        a, b = T._fs(i), T._fs(j)
        if law == kernels.LAW_MONO and not a <= b:
            a, b = b, a
        rep.fail(names[law], alpha=a.compact(), beta=b.compact())
    rep.details["violations"] = {names[k]: int(c) for k, c in enumerate(counts.tolist()) if c}


def _idx(rows: np.ndarray, n: int, q: int) -> np.ndarray:
    return rows @ _weights(n, q)


def check_interior_operator(f: InteriorOperator, witness_cap: int = _CAP) -> CheckReport:
    """I1-I6 on all inputs and pairs, plus monotonicity as an independent cross-check."""
    rep = CheckReport("interior-operator")
    vec, tab = f.inputs, f.table
    n, q = len(f.carrier), f.chain.q
    top = len(vec) - 1
    if not (tab[top] == q).all():
        rep.fail("I1-top", image=FuzzySet(f.carrier, f.chain, tab[top]).compact())
    for i in np.flatnonzero((tab > vec).any(axis=1))[:witness_cap]:
        rep.fail("I2-deflationary", alpha=f._fs(i).compact(),
                 image=FuzzySet(f.carrier, f.chain, tab[i]).compact())
    again = tab[_idx(tab, n, q)]
    for i in np.flatnonzero((again != tab).any(axis=1))[:witness_cap]:
        rep.fail("I3-idempotent", alpha=f._fs(i).compact(),
                 image=FuzzySet(f.carrier, f.chain, tab[i]).compact())
    _pair_report(rep, f, ("I4-meet", "I5-oplus", "I6-odot", "monotone"), witness_cap)
    return rep


def check_nbhd_function(U: NbhdFunction, witness_cap: int = _CAP) -> CheckReport:
    """U1-U6; U6 is evaluated as an exhaustive join over β in V^X."""
    rep = CheckReport("nbhd-function")
    vec, tab = U.inputs, U.table
    q = U.chain.q
    names = U.carrier.names
    top = len(vec) - 1
    for t in np.flatnonzero(tab[top] != q):
        rep.fail("U1-top", x=names[t], value=str(U.chain.value(int(tab[top, t]))))
    for i, t in np.argwhere(tab > vec)[:witness_cap]:
        rep.fail("U2-below-value", x=names[t], alpha=U._fs(i).compact(),
                 value=str(U.chain.value(int(tab[i, t]))))
    _pair_report(rep, U, ("U3-meet", "U4-oplus", "U5-odot", "U3'-monotone"), witness_cap)
    joins = kernels.u6_joins(tab, vec)
    for i, t in np.argwhere(joins != tab)[:witness_cap]:
        rep.fail("U6-join", x=names[t], alpha=U._fs(i).compact(),
                 value=str(U.chain.value(int(tab[i, t]))),
                 join=str(U.chain.value(int(joins[i, t]))))
    rep.notes.append("U6 ranges beta over V^X")
    return rep


def _fixpoint_space(carrier: Carrier, chain: Chain, tab: np.ndarray, name: str) -> MVSpace:
    vec = powerset_array(len(carrier), chain.q)
    fixed = np.flatnonzero((tab == vec).all(axis=1))
    opens = [FuzzySet(carrier, chain, vec[i]) for i in fixed]
    fixed_levels = {o.levels for o in opens}
    dvals = [chain.value(k) for k in range(chain.q + 1)
             if (k,) * len(carrier) in fixed_levels]
    try:
        D = Subquantale(dvals, chain)
    except InputError as e:
        raise ConsistencyError(f"extracted scalars {[str(v) for v in dvals]} are not a subquantale: {e}") from None
    S = MVSpace(carrier, chain, D, opens, name=name)
    rep = check_axioms(S)
    if not rep.passed:
        raise ConsistencyError(f"fixpoint family is not a topology: {rep}")
    return S


def topology_from_interior(f: InteriorOperator) -> MVSpace:
    """Opens are the fixpoints of f; D is the set of r whose constant is a fixpoint."""
    S = _fixpoint_space(f.carrier, f.chain, f.table, "fix(f)")
    if not np.array_equal(interior_table(S, len(f.table)), f.table):
        raise ConsistencyError("the interior of the fixpoint topology differs from f")
    return S


def nbhd_from_interior(f: InteriorOperator) -> NbhdFunction:
    """μ_x(α) = f(α)(x)."""
    return NbhdFunction(f.carrier, f.chain, f.table, len(f.table))


def interior_from_nbhd(U: NbhdFunction) -> InteriorOperator:
    """f(α)(y) = μ_y(α)."""
    return InteriorOperator(U.carrier, U.chain, U.table, len(U.table))


def topology_from_nbhd(U: NbhdFunction) -> MVSpace:
    """Opens are the α with μ_y(α) = α(y) at every y."""
    return _fixpoint_space(U.carrier, U.chain, U.table, "fix(U)")


class FuzzyFilter:
    """A map ν from the elements of a D-frame to a chain."""

    __slots__ = ("frame", "chain", "levels")

    def __init__(self, frame: DFrame, chain: Chain, levels: Sequence[int]):
        levels = tuple(int(k) for k in levels)
        if len(levels) != len(frame) or not all(0 <= k <= chain.q for k in levels):
            raise InputError("filter must assign a chain value to every element")
        self.frame = frame
        self.chain = chain
        self.levels = levels

    @classmethod
    def from_point(cls, p: Point) -> FuzzyFilter:
        return cls(p.frame, p.chain, p.levels)

    @classmethod
    def from_values(cls, frame: DFrame, chain: Chain, values: Mapping[str, object]) -> FuzzyFilter:
        p = Point.from_values(frame, chain, values)
        return cls(frame, chain, p.levels)

    def __call__(self, name: str) -> MVValue:
        return self.chain.value(self.levels[self.frame.index(name)])


def check_fuzzy_filter(nu: FuzzyFilter) -> CheckReport:
    """F1-F5 on all pairs of elements."""
    M, V = nu.frame, nu.chain
    q = V.q
    v = np.array(nu.levels, dtype=np.int64)
    rep = CheckReport("fuzzy-filter")
    if v[M.one] != q:
        rep.fail("F1-one", value=str(V.value(int(v[M.one]))))
    if v[M.zero] != 0:
        rep.fail("F2-zero", value=str(V.value(int(v[M.zero]))))
    va, vb = v[:, None], v[None, :]
    meet_ok = np.minimum(va, vb) == v[M.meet]
    odot_ok = np.maximum(0, va + vb - q) <= v[M.times]
    oplus_ok = np.minimum(q, va + vb) <= v[M.plus]
    for law, ok in (("F3-meet", meet_ok), ("F4-odot", odot_ok), ("F5-oplus", oplus_ok)):
        for i, j in np.argwhere(~ok)[:_CAP]:
            rep.fail(law, a=M.elements[i], b=M.elements[j])
    return rep
