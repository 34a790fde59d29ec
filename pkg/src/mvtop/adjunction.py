"""The functors Ω and pt, unit η and counit ε, and the sobriety/spatiality deciders."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CheckReport, ConsistencyError, InputError
from .frames import (DFrame, FrameHom, Point, Spectrum, check_frame_hom, enumerate_points,
                     pt_of_hom, spectrum)
from .fuzzy import FuzzySet
from .mvcore import Chain
from .spaces import CrispMap, MVSpace, check_axioms, is_continuous, nbhd_system


def _qualifier(V: Chain) -> str:
    return f"over-{V}"


def rebase_space(S: MVSpace, V: Chain) -> MVSpace:
    """The same space with opens re-expressed over a finer chain V."""
    if V == S.chain:
        return S
    if V.q % S.chain.q:
        raise InputError(f"chain {S.chain} is not contained in {V}")
    k = V.q // S.chain.q
    opens = [FuzzySet(S.carrier, V, [a * k for a in o.levels]) for o in S.opens]
    return MVSpace(S.carrier, V, S.D.rebase(V), opens, name=S.name)


def _nondegenerate(S: MVSpace) -> None:
    if S.degenerate:
        raise InputError("space-level checks are not defined on the empty-carrier space")


def omega_of_space(S: MVSpace) -> DFrame:
    """The opens of S as a table-presented D-frame; elements named by their compact literal."""
    opens = S.opens
    pos = {o.levels: i for i, o in enumerate(opens)}
    c = S.chain

    def look(levels):
        try:
            return pos[tuple(levels)]
        except KeyError:
            raise InputError(f"{S!r} is not closed under its operations; run check_axioms") from None

    def table(fn):
        return [[look(fn(a.levels, b.levels)) for b in opens] for a in opens]

    join = table(lambda a, b: [max(x, y) for x, y in zip(a, b)])
    meet = table(lambda a, b: [min(x, y) for x, y in zip(a, b)])
    plus = table(lambda a, b: [c.add(x, y) for x, y in zip(a, b)])
    times = table(lambda a, b: [c.mul(x, y) for x, y in zip(a, b)])
    scalar = {r: [look([c.mul(c.level(r), x) for x in o.levels]) for o in opens]
              for r in S.D.values}
    one = look(S.top().levels)
    zero = look(S.bottom().levels)
    names = [o.compact() or "()" for o in opens]
    return DFrame(names, join, meet, plus, times, scalar, one, zero, S.D, c,
                  name=f"Omega({S.name or 'S'})")


def open_of(S: MVSpace, M: DFrame, a: int | str) -> FuzzySet:
    """The open of S that element ``a`` of ``omega_of_space(S)`` stands for."""
    if isinstance(a, str):
        a = M.index(a)
    return S.opens[a]


def omega_of_map(f: CrispMap, S: MVSpace, T: MVSpace) -> FrameHom:
    """Preimage along a continuous f: S -> T, as a homomorphism Ω(T) -> Ω(S)."""
    rep = is_continuous(f, S, T)
    if not rep.passed:
        raise InputError(f"map is not continuous: {rep.counterexamples[0]}")
    pos = {o.levels: i for i, o in enumerate(S.opens)}
    images = [pos[f.preimage(b).levels] for b in T.opens]
    return FrameHom(omega_of_space(T), omega_of_space(S), images)


@dataclass(frozen=True)
class Unit:
    """η_S: each carrier point x goes to its evaluation α -> α(x) on Ω(S)."""

    space: MVSpace
    chain: Chain
    frame: DFrame
    spectrum: Spectrum
    evaluations: tuple[Point, ...]

    def point(self, x: str) -> Point:
        return self.evaluations[self.space.carrier.index(x)]

    def as_map(self) -> CrispMap:
        return CrispMap(self.space.carrier, self.spectrum.carrier,
                        [self.spectrum.points.index(p) for p in self.evaluations])

    def collisions(self) -> list[tuple[str, str]]:
        names = self.space.carrier.names
        out = []
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                if self.evaluations[i] == self.evaluations[j]:
                    out.append((names[i], names[j]))
        return out

    def missed(self) -> list[Point]:
        hit = set(self.evaluations)
        return [p for p in self.spectrum.points if p not in hit]


def unit(S: MVSpace, V: Chain | None = None) -> Unit:
    V = V or S.chain
    _nondegenerate(S)
    S = rebase_space(S, V)
    M = omega_of_space(S)
    P = spectrum(M, V)
    found = set(P.points)
    evs = []
    for i, x in enumerate(S.carrier.names):
        ev = Point(M, V, [o.levels[i] for o in S.opens])
        if ev not in found:
            raise ConsistencyError(f"evaluation at {x} was not found among the enumerated points")
        evs.append(ev)
    return Unit(S, V, M, P, tuple(evs))


@dataclass(frozen=True)
class Counit:
    """ε_M: a -> â, a homomorphism M -> Ω(pt M)."""

    frame: DFrame
    chain: Chain
    spectrum: Spectrum
    hom: FrameHom

    def collisions(self) -> list[tuple[str, str]]:
        el = self.frame.elements
        im = self.hom.images
        return [(el[i], el[j]) for i in range(len(el)) for j in range(i + 1, len(el))
                if im[i] == im[j]]


def counit(M: DFrame, V: Chain | None = None) -> Counit:
    V = V or M.chain
    if V is None:
        raise InputError("no codomain chain given and the frame declares none")
    P = spectrum(M, V)
    target = omega_of_space(P)
    pos = {o.levels: i for i, o in enumerate(P.opens)}
    hom = FrameHom(M, target, [pos[P.hat(a).levels] for a in range(len(M))])
    rep = check_frame_hom(hom)
    if not rep.passed:
        raise ConsistencyError(f"counit is not a homomorphism: {rep}")
    return Counit(M, V, P, hom)


def check_triangles(obj: MVSpace | DFrame, V: Chain | None = None) -> CheckReport:
    """Space form: Ω(η_X) ∘ ε_{Ω(X)} = id.  Frame form: pt(ε_M) ∘ η_{pt M} = id."""
    if isinstance(obj, MVSpace):
        return _triangle_space(obj, V or obj.chain)
    if isinstance(obj, DFrame):
        V = V or obj.chain
        if V is None:
            raise InputError("no codomain chain given and the frame declares none")
        return _triangle_frame(obj, V)
    raise InputError("check_triangles expects a space or a frame")


def _triangle_space(S: MVSpace, V: Chain) -> CheckReport:
    rep = CheckReport("triangle-space", qualifier=_qualifier(V))
    eta = unit(S, V)
    S = eta.space
    eps = counit(eta.frame, V)
    h = omega_of_map(eta.as_map(), S, eta.spectrum)
    comp = h.compose(eps.hom)
    for i, j in enumerate(comp.images):
        if i != j:
            rep.fail("omega-eta-after-epsilon", open=S.opens[i].compact(),
                     image=S.opens[j].compact())
    return rep


def _triangle_frame(M: DFrame, V: Chain) -> CheckReport:
    rep = CheckReport("triangle-frame", qualifier=_qualifier(V))
    eps = counit(M, V)
    P = eps.spectrum
    if P.degenerate:
        rep.notes.append("no points over the codomain; triangle holds vacuously")
        return rep
    eta = unit(P, V)
    # pointwise: ev_p(â) = p(a)
    for p, ev in zip(P.points, eta.evaluations):
        back = tuple(ev.levels[eps.hom.images[a]] for a in range(len(M)))
        if back != p.levels:
            rep.fail("eta-then-epsilon", point=p.to_json())
    # as maps of carriers
    comp = pt_of_hom(eps.hom, V).compose(eta.as_map())
    if comp != CrispMap.identity(P.carrier):
        rep.fail("pt-epsilon-after-eta", map=repr(comp))
    return rep


def is_sober(S: MVSpace, V: Chain | None = None) -> CheckReport:
    """η bijective onto the V-enumerated points.  A positive verdict holds over V only."""
    V = V or S.chain
    eta = unit(S, V)
    rep = CheckReport("sober")
    for x, y in eta.collisions():
        rep.fail("eta-not-injective", pair=[x, y], witness=f"eta({x}) = eta({y})",
                 point=eta.point(x).to_json())
    for p in eta.missed():
        rep.fail("point-not-evaluation", point=p.to_json())
    rep.details = {"points": len(eta.spectrum.points), "carrier": len(S.carrier)}
    if rep.passed:
        rep.qualifier = _qualifier(V)
    return rep


def is_spatial(M: DFrame, V: Chain | None = None) -> CheckReport:
    """ε injective.  A negative verdict holds over V only."""
    eps = counit(M, V)
    rep = CheckReport("spatial")
    for a, b in eps.collisions():
        rep.fail("epsilon-not-injective", a=a, b=b, witness=f"hat({a}) = hat({b})")
    rep.details = {"points": len(eps.spectrum.points), "elements": len(M)}
    if not rep.passed:
        rep.qualifier = _qualifier(eps.chain)
    return rep


def sober_via_nbhd(S: MVSpace, V: Chain | None = None) -> CheckReport:
    """Compare the η-verdict with the neighbourhood characterization.

    The characterization: every enumerated point p equals μ_x on the opens
    for exactly one x, and then p⁻¹[1] is the set of opens with α(x) = 1.
    Counterexamples are disagreements between the two routes.
    """
    V = V or S.chain
    verdict = is_sober(S, V)
    eta = unit(S, V)
    S2 = eta.space
    M = eta.frame
    mus = {x: nbhd_system(S2, x) for x in S2.carrier.names}
    matches = {}
    failures = []
    for k, p in enumerate(eta.spectrum.points):
        xs = [x for x in S2.carrier.names
              if all(mus[x](o) == p.value_at(i) for i, o in enumerate(S2.opens))]
        matches[f"p{k}"] = xs
        if len(xs) != 1:
            failures.append({"point": p.to_json(), "matching": xs})
    characterization = not failures and len(eta.spectrum.points) > 0
    rep = CheckReport("sober-via-nbhd")
    if characterization != verdict.passed:
        rep.fail("routes-disagree", eta_route=verdict.passed, nbhd_route=characterization)
    if characterization:
        for k, p in enumerate(eta.spectrum.points):
            x = matches[f"p{k}"][0]
            xi = S2.carrier.index(x)
            ones = {M.elements[i] for i in range(len(M)) if p.levels[i] == V.q}
            nbhd_ones = {M.elements[i] for i, o in enumerate(S2.opens) if o.levels[xi] == V.q}
            if ones != nbhd_ones:
                rep.fail("filter-core-mismatch", point=p.to_json(), x=x)
    rep.details = {"sober": verdict.passed, "characterization": characterization,
                   "matches": matches, "uniqueness_failures": failures}
    rep.qualifier = verdict.qualifier
    return rep


def check_unit_naturality(f: CrispMap, S: MVSpace, T: MVSpace, V: Chain | None = None) -> CheckReport:
    """pt(Ω(f)) ∘ η_S = η_T ∘ f."""
    V = V or S.chain
    rep = CheckReport("unit-naturality", qualifier=_qualifier(V))
    eS, eT = unit(S, V), unit(T, V)
    f2 = CrispMap(eS.space.carrier, eT.space.carrier, f.images)
    left = pt_of_hom(omega_of_map(f2, eS.space, eT.space), V).compose(eS.as_map())
    right = eT.as_map().compose(f2)
    for x in S.carrier.names:
        if left(x) != right(x):
            rep.fail("naturality", x=x, left=left(x), right=right(x))
    return rep


def check_eta_homeomorphism(S: MVSpace, V: Chain | None = None) -> CheckReport:
    """η bijective, continuous, with continuous inverse."""
    V = V or S.chain
    eta = unit(S, V)
    rep = CheckReport("eta-homeomorphism", qualifier=_qualifier(V))
    if eta.collisions() or eta.missed():
        rep.fail("not-bijective", collisions=eta.collisions(), missed=len(eta.missed()))
        return rep
    fwd = eta.as_map()
    rep.merge(is_continuous(fwd, eta.space, eta.spectrum), prefix="forward")
    inv = CrispMap(eta.spectrum.carrier, eta.space.carrier,
                   [fwd.images.index(k) for k in range(len(eta.spectrum.carrier))])
    rep.merge(is_continuous(inv, eta.spectrum, eta.space), prefix="inverse")
    return rep


def check_duality(S: MVSpace, V: Chain | None = None) -> CheckReport:
    """For sober S with M = Ω(S): pt M ≅ S via η and Ω(pt M) ≅ M via ε."""
    V = V or S.chain
    rep = check_eta_homeomorphism(S, V)
    rep.name = "duality"
    eta = unit(S, V)
    eps = counit(eta.frame, V)
    if len(set(eps.hom.images)) != len(eta.frame) or len(eps.hom.target) != len(eta.frame):
        rep.fail("epsilon-not-bijective")
        return rep
    inv = [0] * len(eta.frame)
    for a, b in enumerate(eps.hom.images):
        inv[b] = a
    rep.merge(check_frame_hom(FrameHom(eps.hom.target, eta.frame, inv)), prefix="epsilon-inverse")
    if check_axioms(eta.spectrum).passed is False:
        rep.fail("spectrum-not-a-space")
    return rep


def points_of_omega(S: MVSpace, V: Chain | None = None) -> list[Point]:
    V = V or S.chain
    S = rebase_space(S, V)
    return enumerate_points(omega_of_space(S), V)
