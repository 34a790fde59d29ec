import numpy as np
import pytest

from mvtop.errors import InputError
from mvtop.frames import (DFrame, FrameHom, Point, chain_frame, check_d_frame, check_frame_hom,
                          check_point, enumerate_points, linear_extension, pt_of_hom, spectrum)
from mvtop.mvcore import Chain, Subquantale
from mvtop.spaces import CrispMap, check_axioms

import oracles
from corpus import all_frames, frame, space

L2, L10 = Chain(2), Chain(10)


@pytest.mark.parametrize("name", all_frames())
def test_corpus_frames_satisfy_laws(name):
    M = frame(name)
    assert check_d_frame(M).passed
    assert oracles.d_frame_law_violations(M) == 0


def test_f4_times_is_idempotent_on_m():
    M = frame("f4")
    m = M.index("m")
    assert int(M.times[m, m]) == m
    assert check_d_frame(M).passed


def _with_times(M, times):
    return DFrame(M.elements, M.join, M.meet, M.plus, times, M.scalar, M.one, M.zero, M.D, M.chain)


def test_injected_fault_in_times_is_reported():
    M = frame("f3")
    bad_times = M.times.copy()
    m, top = M.index("m"), M.index("top")
    bad_times[m, top] = top  # m·1 edited from m to 1
    B = _with_times(M, bad_times)
    rep = check_d_frame(B)
    assert not rep.passed
    assert oracles.d_frame_law_violations(B) > 0
    assoc = [cx for cx in rep.counterexamples if cx["law"] == "times-associative"]
    assert assoc and all({"a", "b", "c"} <= set(cx) for cx in assoc)
    assert {cx["law"] for cx in rep.counterexamples} == {"times-associative"}


def test_non_commutative_times_is_only_noted():
    M = frame("f3")
    t = M.times.copy()
    m = M.index("m")
    t[m, M.one] = M.zero  # breaks both symmetry and unit laws
    rep = check_d_frame(_with_times(M, t))
    assert any("commut" in n for n in rep.notes)
    assert all("commut" not in cx["law"] for cx in rep.counterexamples)


def test_table_shape_errors():
    M = frame("f3")
    with pytest.raises(InputError):
        DFrame(M.elements, M.join[:2], M.meet, M.plus, M.times, M.scalar, M.one, M.zero, M.D)
    with pytest.raises(InputError):
        DFrame.from_names(["a", "a"], [["a"] * 2] * 2, [["a"] * 2] * 2, [["a"] * 2] * 2,
                          [["a"] * 2] * 2, {"0": ["a", "a"], "1": ["a", "a"]}, "a", "a", M.D)


def test_chain_frame_is_a_frame():
    for q in (1, 2, 5):
        V = Chain(q)
        assert check_d_frame(chain_frame(V, Subquantale.full(V))).passed


def test_linear_extension_respects_order():
    for name in all_frames():
        M = frame(name)
        pos = {e: i for i, e in enumerate(linear_extension(M))}
        for a in range(len(M)):
            for b in range(len(M)):
                if a != b and M.leq(a, b):
                    assert pos[a] < pos[b]


def test_frame_hom_identity_and_compose():
    M = frame("Omega:paper3")
    idm = FrameHom.identity(M)
    assert check_frame_hom(idm).passed
    assert idm.compose(idm) == idm


def test_constant_top_hom_fails_empty_join():
    M = frame("f3")
    h = FrameHom(M, M, [M.one] * len(M))
    rep = check_frame_hom(h)
    laws = {cx["law"] for cx in rep.counterexamples}
    assert "preserves-empty-join" in laws and "preserves-one" not in laws


def test_hom_assignment_errors():
    M = frame("f3")
    with pytest.raises(InputError):
        FrameHom(M, M, {"bot": "bot"})
    with pytest.raises(InputError):
        FrameHom(M, M, [0, 1, 7])


@pytest.mark.parametrize("name", all_frames())
def test_enumerate_matches_brute_force(name):
    M = frame(name)
    got = [p.levels for p in enumerate_points(M)]
    assert got == oracles.brute_points(M, M.chain.q)
    for lv in got:
        assert check_point(Point(M, M.chain, lv)).passed


def test_small_frame_points():
    (p,) = enumerate_points(frame("f3"), L2)
    assert p("m") == pytest.approx(0.5) and str(p("m")) == "1/2"
    (p,) = enumerate_points(frame("f3"), L10)
    assert str(p("m")) == "1/2"
    (p,) = enumerate_points(frame("f4"), L10)
    assert p("m") == 1 and p("bot") == 0


def test_f3_has_no_points_over_odd_chain():
    assert enumerate_points(frame("f3"), Chain(3)) == []
    with pytest.warns(UserWarning, match="empty carrier"):
        S = spectrum(frame("f3"), Chain(3))
    assert S.degenerate and len(S.carrier) == 0


def test_paper3_points_are_evaluations():
    S = space("paper3")
    M = frame("Omega:paper3")
    pts = enumerate_points(M, L10)
    assert len(pts) == 2
    evals = {tuple(o.levels[S.carrier.index(x)] for o in S.opens) for x in ("x", "y")}
    assert {p.levels for p in pts} == evals


def test_point_order_independent_of_element_listing():
    M = frame("Omega:paper3")
    rng = np.random.default_rng(7)
    base = {tuple(sorted(p.to_json().items())) for p in enumerate_points(M)}
    for _ in range(3):
        R = M.relabel(rng.permutation(len(M)).tolist())
        assert check_d_frame(R).passed
        assert {tuple(sorted(p.to_json().items())) for p in enumerate_points(R)} == base


def test_codomain_must_contain_D():
    M = frame("Omega:onept")  # D is all of L10
    with pytest.raises(InputError):
        enumerate_points(M, L2)


def test_check_point_reports_bad_assignment():
    M = frame("f3")
    p = Point.from_values(M, L2, {"bot": "0", "m": "1", "top": "1"})
    laws = {cx["law"] for cx in check_point(p).counterexamples}
    assert "preserves-plus" in laws or "preserves-times" in laws
    with pytest.raises(InputError):
        Point.from_values(M, L2, {"bot": "0"})


@pytest.mark.parametrize("name", all_frames())
def test_spectrum_is_a_space(name):
    S = spectrum(frame(name))
    assert S.degenerate or check_axioms(S).passed
    for a, e in enumerate(S.frame.elements):
        assert S.hat(e).levels == tuple(p.levels[a] for p in S.points)


def test_pt_is_a_functor():
    from mvtop.adjunction import omega_of_map
    S = space("paper3")
    swap = CrispMap.parse(S.carrier, S.carrier, "y=z,z=y")
    h = omega_of_map(swap, S, S)
    assert check_frame_hom(h).passed
    M = frame("Omega:paper3")
    ident = pt_of_hom(FrameHom.identity(M))
    assert ident == CrispMap.identity(ident.source)
    f = pt_of_hom(h)
    assert pt_of_hom(h.compose(h)) == f.compose(f)
