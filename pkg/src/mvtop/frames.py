"""Finite D-frames presented by operation tables.

Elements are addressed by index internally and by name at the edges.
Law checking is exhaustive and vectorized with numpy over all pairs and
triples of elements.  Points (homomorphisms into a value chain) are
enumerated by backtracking along a linear extension of the lattice order.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

import numpy as np

from .errors import CheckReport, ConsistencyError, InputError
from .fuzzy import Carrier, FuzzySet
from .mvcore import Chain, MVValue, Subquantale, parse_value
from .spaces import CrispMap, MVSpace, check_axioms, is_continuous

_CAP = 25


def _table(rows, n: int, label: str) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError):
        raise InputError(f"{label} table is not a rectangular integer table") from None
    if arr.shape != (n, n):
        raise InputError(f"{label} table must be {n}x{n}, got shape {arr.shape}")
    if n and (arr.min() < 0 or arr.max() >= n):
        raise InputError(f"{label} table refers to unknown elements")
    arr.setflags(write=False)
    return arr


class DFrame:
    """A finite D-frame given by full operation tables (element indices).

    ``scalar`` maps each r in D to the row ``[r * a for a in elements]``.
    ``chain`` optionally records the default codomain for point enumeration.
    """

    def __init__(self, elements: Sequence[str], join, meet, plus, times,
                 scalar: Mapping[object, Sequence[int]], one: int, zero: int,
                 D: Subquantale, chain: Chain | None = None, name: str | None = None):
        elements = tuple(elements)
        n = len(elements)
        if n == 0:
            raise InputError("a D-frame needs at least one element")
        if len(set(elements)) != n:
            raise InputError("duplicate element names")
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        self.join = _table(join, n, "join")
        self.meet = _table(meet, n, "meet")
        self.plus = _table(plus, n, "plus")
        self.times = _table(times, n, "times")
        if not (0 <= one < n and 0 <= zero < n):
            raise InputError("one/zero must be elements")
        self.one = one
        self.zero = zero
        self.D = D
        sc: dict[MVValue, np.ndarray] = {}
        for r, row in scalar.items():
            r = parse_value(r) if isinstance(r, str) else MVValue(r)
            if r not in D:
                raise InputError(f"scalar {r} is not in D")
            arr = np.array(row, dtype=np.int64)
            if arr.shape != (n,) or arr.min() < 0 or arr.max() >= n:
                raise InputError(f"scalar row for {r} must list {n} elements")
            arr.setflags(write=False)
            sc[r] = arr
        missing = [str(r) for r in D.values if r not in sc]
        if missing:
            raise InputError(f"scalar action missing for D values {missing}")
        self.scalar = sc
        self.chain = chain
        self.name = name

    @classmethod
    def from_names(cls, elements: Sequence[str], join, meet, plus, times,
                   scalar: Mapping[object, Sequence[str]], one: str, zero: str,
                   D: Subquantale, chain: Chain | None = None, name: str | None = None) -> DFrame:
        idx = {e: i for i, e in enumerate(elements)}

        def look(e):
            try:
                return idx[e]
            except (KeyError, TypeError):
                raise InputError(f"unknown element {e!r}") from None

        def conv(rows, label):
            if not isinstance(rows, Sequence) or len(rows) != len(elements):
                raise InputError(f"{label} table must have {len(elements)} rows")
            out = []
            for row in rows:
                if not isinstance(row, Sequence) or isinstance(row, str) or len(row) != len(elements):
                    raise InputError(f"{label} table rows must have {len(elements)} entries")
                out.append([look(e) for e in row])
            return out

        sc = {}
        for r, row in scalar.items():
            if not isinstance(row, Sequence) or isinstance(row, str) or len(row) != len(elements):
                raise InputError(f"scalar row for {r} must list {len(elements)} elements")
            sc[r] = [look(e) for e in row]
        return cls(elements, conv(join, "join"), conv(meet, "meet"), conv(plus, "plus"),
                   conv(times, "times"), sc, look(one), look(zero), D, chain, name)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"<DFrame {label}{len(self)} elements>"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, DFrame) and other.elements == self.elements
                and all(np.array_equal(getattr(self, t), getattr(other, t))
                        for t in ("join", "meet", "plus", "times"))
                and other.one == self.one and other.zero == self.zero
                and self.D.same_values(other.D)
                and set(self.scalar) == set(other.scalar)
                and all(np.array_equal(self.scalar[r], other.scalar[r]) for r in self.scalar))

    __hash__ = None  # type: ignore[assignment]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def leq(self, a: int, b: int) -> bool:
        return int(self.join[a, b]) == b

    def relabel(self, order: Sequence[int], name: str | None = None) -> DFrame:
        """The same frame with elements listed in ``order`` (a permutation of indices)."""
        order = list(order)
        inv = np.empty(len(order), dtype=np.int64)
        inv[order] = np.arange(len(order))
        o = np.array(order)

        def tab(t):
            return inv[t[np.ix_(o, o)]]

        sc = {r: inv[row[o]] for r, row in self.scalar.items()}
        return DFrame([self.elements[i] for i in order], tab(self.join), tab(self.meet),
                      tab(self.plus), tab(self.times), sc, int(inv[self.one]),
                      int(inv[self.zero]), self.D, self.chain, name or self.name)


def _fail_cells(rep: CheckReport, M: DFrame, law: str, bad: np.ndarray, names: str,
                lhs: np.ndarray | None = None, rhs: np.ndarray | None = None,
                scalars: Sequence[MVValue] | None = None) -> None:
    """Turn a boolean violation mask into named counterexamples."""
    for cell in np.argwhere(bad)[:_CAP]:
        cx = {}
        for label, k in zip(names, cell):
            if label in "rs" and scalars is not None:
                cx[label] = str(scalars[k])
            else:
                cx[label] = M.elements[k]
        if lhs is not None:
            cx["lhs"] = M.elements[lhs[tuple(cell)]]
            cx["rhs"] = M.elements[rhs[tuple(cell)]]
        rep.fail(law, **cx)


def check_d_frame(M: DFrame, D: Subquantale | None = None) -> CheckReport:
    """Exhaustively verify the D-frame laws on all pairs and triples of elements.

    Lattice: a bounded distributive lattice with bottom ``zero`` and top
    ``one`` (finite distributive lattices are frames).  Multiplication:
    associative, distributing over binary and empty joins on both sides.
    Addition: commutative monoid with identity ``zero`` distributing over
    meets.  Scalar action: the D-module laws, ``1 * a = a``, and
    compatibility with multiplication.
    """
    if D is not None and not D.same_values(M.D):
        raise InputError("D does not match the frame's scalar action")
    rep = CheckReport("d-frame")
    n = len(M)
    J, Mt, P, T = M.join, M.meet, M.plus, M.times
    a = np.arange(n)
    A2, B2 = np.meshgrid(a, a, indexing="ij")
    A3, B3, C3 = np.meshgrid(a, a, a, indexing="ij")
    z, o = M.zero, M.one

    def pairs(law, lhs, rhs):
        _fail_cells(rep, M, law, lhs != rhs, "ab", lhs, rhs)

    def triples(law, lhs, rhs):
        _fail_cells(rep, M, law, lhs != rhs, "abc", lhs, rhs)

    def singles(law, lhs, rhs):
        _fail_cells(rep, M, law, lhs != rhs, "a", lhs, rhs)

    # lattice
    for nm, t in (("join", J), ("meet", Mt)):
        pairs(f"{nm}-commutative", t[A2, B2], t[B2, A2])
        triples(f"{nm}-associative", t[t[A3, B3], C3], t[A3, t[B3, C3]])
        singles(f"{nm}-idempotent", t[a, a], a)
    pairs("absorption-join", J[A2, Mt[A2, B2]], A2)
    pairs("absorption-meet", Mt[A2, J[A2, B2]], A2)
    singles("zero-is-bottom", J[z, a], a)
    singles("one-is-top", Mt[o, a], a)
    triples("distributive", Mt[A3, J[B3, C3]], J[Mt[A3, B3], Mt[A3, C3]])

    # multiplication
    triples("times-associative", T[T[A3, B3], C3], T[A3, T[B3, C3]])
    triples("times-distributes-left", T[A3, J[B3, C3]], J[T[A3, B3], T[A3, C3]])
    triples("times-distributes-right", T[J[B3, C3], A3], J[T[B3, A3], T[C3, A3]])
    singles("times-zero-right", T[a, z], np.full(n, z))
    singles("times-zero-left", T[z, a], np.full(n, z))
    if not np.array_equal(T, T.T):
        rep.notes.append("times is not commutative")

    # addition
    pairs("plus-commutative", P[A2, B2], P[B2, A2])
    triples("plus-associative", P[P[A3, B3], C3], P[A3, P[B3, C3]])
    singles("plus-identity", P[a, z], a)
    triples("plus-distributes-over-meet", P[A3, Mt[B3, C3]], Mt[P[A3, B3], P[A3, C3]])

    # scalar action
    ds = list(M.D.values)
    S = np.array([M.scalar[r] for r in ds], dtype=np.int64)  # (d, n)
    d = len(ds)
    ridx = np.arange(d)
    pos = {r: i for i, r in enumerate(ds)}
    q = M.D.chain.q
    lv = [M.D.chain.level(r) for r in ds]
    prod = np.array([[pos[M.D.chain.value(max(0, x + y - q))] for y in lv] for x in lv],
                    dtype=np.int64).reshape(d, d)
    sup = np.array([[pos[M.D.chain.value(max(x, y))] for y in lv] for x in lv],
                   dtype=np.int64).reshape(d, d)
    R3, S3, X3 = np.meshgrid(ridx, ridx, a, indexing="ij")
    _fail_cells(rep, M, "scalar-product", S[prod[R3, S3], X3] != S[R3, S[S3, X3]], "rsa",
                S[prod[R3, S3], X3], S[R3, S[S3, X3]], ds)
    _fail_cells(rep, M, "scalar-join-of-scalars", S[sup[R3, S3], X3] != J[S[R3, X3], S[S3, X3]],
                "rsa", S[sup[R3, S3], X3], J[S[R3, X3], S[S3, X3]], ds)
    Rr, Aa, Bb = np.meshgrid(ridx, a, a, indexing="ij")
    lhs, rhs = S[Rr, J[Aa, Bb]], J[S[Rr, Aa], S[Rr, Bb]]
    _fail_cells(rep, M, "scalar-distributes-over-join", lhs != rhs, "rab", lhs, rhs, ds)
    lhs, rhs = S[Rr, T[Aa, Bb]], T[S[Rr, Aa], Bb]
    _fail_cells(rep, M, "scalar-times-left", lhs != rhs, "rab", lhs, rhs, ds)
    lhs, rhs = S[Rr, T[Aa, Bb]], T[Aa, S[Rr, Bb]]
    _fail_cells(rep, M, "scalar-times-right", lhs != rhs, "rab", lhs, rhs, ds)
    zero_r = np.full(d, z)
    _fail_cells(rep, M, "scalar-of-empty-join", S[:, z] != zero_r, "r", S[:, z], zero_r, ds)
    if MVValue(1) in pos:
        _fail_cells(rep, M, "unit-scalar", S[pos[MVValue(1)]] != a, "a", S[pos[MVValue(1)]], a)
    if MVValue(0) in pos:
        zr = np.full(n, z)
        _fail_cells(rep, M, "zero-scalar", S[pos[MVValue(0)]] != zr, "a", S[pos[MVValue(0)]], zr)
    return rep


class FrameHom:
    """A map between the element sets of two D-frames (algebraic direction)."""

    def __init__(self, source: DFrame, target: DFrame, images: Sequence[int] | Mapping[str, str]):
        if isinstance(images, Mapping):
            if set(images) != set(source.elements):
                raise InputError("homomorphism assignment must be total")
            images = [target.index(images[e]) for e in source.elements]
        images = tuple(int(i) for i in images)
        if len(images) != len(source) or not all(0 <= i < len(target) for i in images):
            raise InputError("homomorphism assignment must be total and land in the target")
        self.source = source
        self.target = target
        self.images = images

    @classmethod
    def identity(cls, M: DFrame) -> FrameHom:
        return cls(M, M, range(len(M)))

    def __call__(self, name: str) -> str:
        return self.target.elements[self.images[self.source.index(name)]]

    def compose(self, first: FrameHom) -> FrameHom:
        """``self ∘ first``."""
        if first.target is not self.source and first.target != self.source:
            raise InputError("homomorphisms are not composable")
        return FrameHom(first.source, self.target, [self.images[i] for i in first.images])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FrameHom) and other.images == self.images \
            and other.source == self.source and other.target == self.target

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return "FrameHom(" + ", ".join(f"{e}->{self(e)}" for e in self.source.elements) + ")"


def check_frame_hom(h: FrameHom) -> CheckReport:
    """Preservation of 1, all joins (binary and empty), scalars, ·, + and ∧."""
    rep = CheckReport("frame-hom")
    L, N = h.source, h.target
    if not L.D.same_values(N.D):
        raise InputError("source and target use different D")
    f = np.array(h.images, dtype=np.int64)
    n = len(L)
    a = np.arange(n)
    A, B = np.meshgrid(a, a, indexing="ij")
    if f[L.one] != N.one:
        rep.fail("preserves-one", image=N.elements[f[L.one]])
    if f[L.zero] != N.zero:
        rep.fail("preserves-empty-join", image=N.elements[f[L.zero]])
    for law, tl, tn in (("preserves-join", L.join, N.join), ("preserves-times", L.times, N.times),
                        ("preserves-plus", L.plus, N.plus), ("preserves-meet", L.meet, N.meet)):
        lhs, rhs = f[tl[A, B]], tn[f[A], f[B]]
        for i, j in np.argwhere(lhs != rhs)[:_CAP]:
            rep.fail(law, a=L.elements[i], b=L.elements[j],
                     lhs=N.elements[lhs[i, j]], rhs=N.elements[rhs[i, j]])
    for r in L.D.values:
        lhs, rhs = f[L.scalar[r]], N.scalar[r][f]
        for i in np.flatnonzero(lhs != rhs)[:_CAP]:
            rep.fail("preserves-scalar", r=str(r), a=L.elements[i],
                     lhs=N.elements[lhs[i]], rhs=N.elements[rhs[i]])
    return rep


class Point:
    """An assignment of chain values to frame elements (levels over ``chain.q``)."""

    __slots__ = ("frame", "chain", "levels")

    def __init__(self, frame: DFrame, chain: Chain, levels: Sequence[int]):
        levels = tuple(int(k) for k in levels)
        if len(levels) != len(frame) or not all(0 <= k <= chain.q for k in levels):
            raise InputError("point assignment must be total and chain-valued")
        self.frame = frame
        self.chain = chain
        self.levels = levels

    @classmethod
    def from_values(cls, frame: DFrame, chain: Chain, values: Mapping[str, object]) -> Point:
        if set(values) != set(frame.elements):
            raise InputError("point assignment must be total")
        return cls(frame, chain, [chain.level(parse_value(values[e]) if isinstance(values[e], str)
                                              else values[e]) for e in frame.elements])

    def __call__(self, name: str) -> MVValue:
        return self.chain.value(self.levels[self.frame.index(name)])

    def value_at(self, i: int) -> MVValue:
        return self.chain.value(self.levels[i])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Point) and other.levels == self.levels and other.chain == self.chain

    def __hash__(self) -> int:
        return hash(self.levels)

    def __repr__(self) -> str:
        return "Point(" + ", ".join(f"{e}->{self.chain.value(k)}"
                                    for e, k in zip(self.frame.elements, self.levels)) + ")"

    def to_json(self) -> dict[str, str]:
        return {e: str(self.chain.value(k)) for e, k in zip(self.frame.elements, self.levels)}


def _codomain_D(M: DFrame, V: Chain, D: Subquantale | None) -> Subquantale:
    D = M.D if D is None else D
    if not D.same_values(M.D):
        raise InputError("D does not match the frame's D")
    try:
        return D.rebase(V)
    except InputError:
        raise InputError(f"D is not contained in the codomain chain {V}") from None


def check_point(p: Point, D: Subquantale | None = None) -> CheckReport:
    """Check that ``p`` preserves every D-frame operation into the chain."""
    M, V = p.frame, p.chain
    _codomain_D(M, V, D)
    q = V.q
    v = np.array(p.levels, dtype=np.int64)
    rep = CheckReport("point")
    if v[M.one] != q:
        rep.fail("preserves-one", value=str(V.value(v[M.one])))
    if v[M.zero] != 0:
        rep.fail("preserves-empty-join", value=str(V.value(v[M.zero])))
    va, vb = v[:, None], v[None, :]
    for law, tab, expect in (("preserves-join", M.join, np.maximum(va, vb)),
                             ("preserves-meet", M.meet, np.minimum(va, vb)),
                             ("preserves-times", M.times, np.maximum(0, va + vb - q)),
                             ("preserves-plus", M.plus, np.minimum(q, va + vb))):
        got = v[tab]
        for i, j in np.argwhere(got != expect)[:_CAP]:
            rep.fail(law, a=M.elements[i], b=M.elements[j],
                     lhs=str(V.value(got[i, j])), rhs=str(V.value(expect[i, j])))
    for r in M.D.values:
        k = V.level(r)
        got, expect = v[M.scalar[r]], np.maximum(0, k + v - q)
        for i in np.flatnonzero(got != expect)[:_CAP]:
            rep.fail("preserves-scalar", r=str(r), a=M.elements[i],
                     lhs=str(V.value(got[i])), rhs=str(V.value(expect[i])))
    return rep


def chain_frame(V: Chain, D: Subquantale) -> DFrame:
    """The chain V as a D-frame: ∨ = max, ∧ = min, · = ⊙, + = ⊕, r * a = r ⊙ a."""
    q = V.q
    lv = range(q + 1)
    D = D.rebase(V)
    return DFrame([str(V.value(k)) for k in lv],
                  [[max(a, b) for b in lv] for a in lv],
                  [[min(a, b) for b in lv] for a in lv],
                  [[min(q, a + b) for b in lv] for a in lv],
                  [[max(0, a + b - q) for b in lv] for a in lv],
                  {r: [max(0, V.level(r) + a - q) for a in lv] for r in D.values},
                  q, 0, D, V, name=str(V))


def linear_extension(M: DFrame) -> list[int]:
    """Elements ordered so that a < b in the lattice implies a comes first."""
    le = M.join[np.arange(len(M))[:, None], np.arange(len(M))[None, :]] == np.arange(len(M))[None, :]
    below = le.sum(axis=0)  # number of elements <= b
    return sorted(range(len(M)), key=lambda b: (int(below[b]), b))


def enumerate_points(M: DFrame, V: Chain | None = None, D: Subquantale | None = None) -> list[Point]:
    """All homomorphisms M -> V (V a finite chain), sorted by value vector.

    Backtracking over a linear extension of the order.  Every binary
    constraint (a, b, a op b) and scalar constraint (r, a, r * a) is tested
    as soon as its last element receives a value; candidate values for an
    element start at the largest value already given to an element below it.
    """
    if V is None:
        if M.chain is None:
            raise InputError("no codomain chain given and the frame declares none")
        V = M.chain
    Dv = _codomain_D(M, V, D)
    n, q = len(M), V.q
    order = linear_extension(M)
    pos = {e: i for i, e in enumerate(order)}
    checks: list[list[tuple]] = [[] for _ in range(n)]
    J, Mt, P, T = (t.tolist() for t in (M.join, M.meet, M.plus, M.times))

    def attach(c, *elems):
        checks[max(pos[e] for e in elems)].append(c)

    for x in range(n):
        for y in range(n):
            attach(("T", x, y, T[x][y]), x, y, T[x][y])
            if x <= y:
                attach(("J", x, y, J[x][y]), x, y, J[x][y])
                attach(("M", x, y, Mt[x][y]), x, y, Mt[x][y])
                attach(("P", x, y, P[x][y]), x, y, P[x][y])
    for r in M.D.values:
        k = Dv.chain.level(r)
        row = M.scalar[r].tolist()
        for x in range(n):
            attach(("S", k, x, row[x]), x, row[x])
    # direct "lower cover" lists for monotone pruning
    below = [[y for y in range(n) if y != x and M.leq(y, x)] for x in range(n)]

    val = [-1] * n
    found: list[tuple[int, ...]] = []

    def ok(depth: int) -> bool:
        for kind, a, b, c in checks[depth]:
            if kind == "J":
                want = max(val[a], val[b])
            elif kind == "M":
                want = min(val[a], val[b])
            elif kind == "T":
                want = max(0, val[a] + val[b] - q)
            elif kind == "P":
                want = min(q, val[a] + val[b])
            else:
                want = max(0, a + val[b] - q)
            if val[c] != want:
                return False
        return True

    def search(depth: int) -> None:
        if depth == n:
            found.append(tuple(val))
            return
        e = order[depth]
        if e == M.zero:
            cands = range(0, 1)
        elif e == M.one:
            cands = range(q, q + 1)
        else:
            lo = max((val[y] for y in below[e]), default=0)
            cands = range(lo, q + 1)
        for k in cands:
            val[e] = k
            if ok(depth):
                search(depth + 1)
        val[e] = -1

    search(0)
    return [Point(M, V, lv) for lv in sorted(set(found))]


class Spectrum(MVSpace):
    """The space of points of a frame, with opens â(p) = p(a); carrier names are p0, p1, ..."""

    def __init__(self, M: DFrame, V: Chain, points: Sequence[Point], D: Subquantale):
        self.frame = M
        self.points = tuple(points)
        carrier = Carrier([f"p{i}" for i in range(len(points))], allow_empty=True)
        hats = [FuzzySet(carrier, V, [p.levels[a] for p in points]) for a in range(len(M))]
        self.hat_levels = tuple(h.levels for h in hats)
        super().__init__(carrier, V, D, hats, name=f"pt({M.name or 'M'})")

    def hat(self, a: int | str) -> FuzzySet:
        if isinstance(a, str):
            a = self.frame.index(a)
        return FuzzySet(self.carrier, self.chain, self.hat_levels[a])

    def point_name(self, p: Point) -> str:
        for i, r in enumerate(self.points):
            if r.levels == p.levels:
                return self.carrier.names[i]
        raise InputError(f"{p!r} is not a point of this spectrum")


def spectrum(M: DFrame, V: Chain | None = None, D: Subquantale | None = None) -> Spectrum:
    V = V or M.chain
    if V is None:
        raise InputError("no codomain chain given and the frame declares none")
    pts = enumerate_points(M, V, D)
    S = Spectrum(M, V, pts, _codomain_D(M, V, D))
    if not S.degenerate:
        rep = check_axioms(S)
        if not rep.passed:
            raise ConsistencyError(f"spectrum topology fails the axioms: {rep}")
    return S


def pt_of_hom(h: FrameHom, V: Chain | None = None, D: Subquantale | None = None) -> CrispMap:
    """p -> p ∘ h, from the points of the target frame to the points of the source frame."""
    V = V or h.target.chain or h.source.chain
    src = spectrum(h.target, V, D)
    tgt = spectrum(h.source, V, D)
    lookup = {p.levels: i for i, p in enumerate(tgt.points)}
    images = []
    for p in src.points:
        comp = tuple(p.levels[i] for i in h.images)
        if comp not in lookup:
            raise ConsistencyError(f"{p!r} composed with the homomorphism is not a point")
        images.append(lookup[comp])
    f = CrispMap(src.carrier, tgt.carrier, images)
    if not src.degenerate and not tgt.degenerate:
        rep = is_continuous(f, src, tgt)
        if not rep.passed:
            raise ConsistencyError(f"pt of a homomorphism is not continuous: {rep}")
    return f


def frame_values(M: DFrame, p: Point) -> dict[str, Fraction]:
    return {e: p.value_at(i) for i, e in enumerate(M.elements)}
