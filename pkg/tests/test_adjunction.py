import pytest

from mvtop.adjunction import (check_duality, check_eta_homeomorphism, check_triangles,
                              check_unit_naturality, counit, is_sober, is_spatial, omega_of_map,
                              omega_of_space, open_of, sober_via_nbhd, unit)
from mvtop.errors import InputError
from mvtop.frames import FrameHom, check_d_frame, check_frame_hom, spectrum
from mvtop.mvcore import Chain
from mvtop.spaces import CrispMap, is_T0

from corpus import CONTINUOUS, SPACES, all_frames, crisp, frame, space

L2, L10 = Chain(2), Chain(10)


def test_omega_sizes():
    assert len(omega_of_space(space("paper3"))) == 10
    assert len(omega_of_space(space("indiscrete3"))) == 2
    M = omega_of_space(space("disc2"))
    assert len(M) == 9
    # Ł2 × Ł2: every element is determined by its pair of values
    S = space("disc2")
    pairs = {(open_of(S, M, a)["x"], open_of(S, M, a)["y"]) for a in M.elements}
    assert len(pairs) == 9


def test_omega_elements_are_open_literals():
    S = space("paper3")
    M = omega_of_space(S)
    assert list(M.elements) == [o.compact() for o in S.opens]
    assert M.elements[M.one] == S.top().compact()
    assert M.elements[M.zero] == S.bottom().compact()


@pytest.mark.parametrize("name", SPACES)
def test_omega_is_a_frame(name):
    assert check_d_frame(omega_of_space(space(name))).passed


@pytest.mark.parametrize("src,tgt,lit,_", CONTINUOUS)
def test_omega_of_continuous_map_is_hom(src, tgt, lit, _):
    h = omega_of_map(crisp(src, tgt, lit), space(src), space(tgt))
    assert check_frame_hom(h).passed


def test_omega_functor_laws():
    S = space("paper3")
    ident = CrispMap.identity(S.carrier)
    assert omega_of_map(ident, S, S) == FrameHom.identity(omega_of_space(S))
    swap = crisp("paper3", "paper3", "y=z,z=y")
    assert omega_of_map(swap, S, S) == FrameHom.identity(omega_of_space(S))
    T, U = space("paper3"), space("indiscrete3")
    g = crisp("paper3", "indiscrete3", "")
    lhs = omega_of_map(g.compose(swap), S, U)
    rhs = omega_of_map(swap, S, T).compose(omega_of_map(g, T, U))
    assert lhs == rhs


def test_omega_of_discontinuous_map_rejected():
    S = space("paper3")
    with pytest.raises(InputError, match="not continuous"):
        omega_of_map(crisp("paper3", "paper3", "y=x,z=x"), S, S)


def test_unit_examples():
    eta = unit(space("paper3"), L10)
    assert eta.point("y") == eta.point("z")
    M = eta.frame
    rho = M.index("x=1/2,y=3/5,z=3/5")
    assert eta.point("y").value_at(rho) == eta.point("z").value_at(rho) == pytest.approx(0.6)
    assert eta.collisions() == [("y", "z")]
    one = unit(space("onept"))
    assert len(one.spectrum.points) == 1 and one.as_map()("p") == "p0"
    assert unit(space("disc2")).collisions() == []


def test_counit_examples():
    eps = counit(omega_of_space(space("paper3")), L10)
    assert len(set(eps.hom.images)) == 10
    assert counit(frame("f4"), L10).collisions() == [("m", "top")]
    e3 = counit(frame("f3"), L2)
    assert e3.collisions() == []
    assert [str(v) for v in e3.spectrum.points[0].to_json().values()] == ["0", "1/2", "1"]


@pytest.mark.parametrize("name", SPACES)
def test_space_triangle(name):
    rep = check_triangles(space(name))
    assert rep.passed, rep


@pytest.mark.parametrize("name", all_frames())
def test_frame_triangle(name):
    rep = check_triangles(frame(name))
    assert rep.passed, rep


def test_sober_verdicts():
    rep = is_sober(space("paper3"), L10)
    assert not rep.passed
    cx = rep.counterexamples[0]
    assert cx["law"] == "eta-not-injective" and cx["witness"] == "eta(y) = eta(z)"
    rep = is_sober(space("disc2"), L2)
    assert rep.passed and rep.qualifier == "over-L2" and rep.details["points"] == 2
    assert is_sober(space("onept")).passed


@pytest.mark.parametrize("name", all_frames())
def test_spectrum_is_sober(name):
    S = spectrum(frame(name))
    if S.degenerate:
        pytest.skip("no points")
    assert is_sober(S).passed


def test_spatial_verdicts():
    for name in SPACES:
        assert is_spatial(omega_of_space(space(name))).passed
    rep = is_spatial(frame("f4"), L10)
    assert not rep.passed and rep.qualifier == "over-L10"
    assert (rep.counterexamples[0]["a"], rep.counterexamples[0]["b"]) == ("m", "top")
    assert is_spatial(frame("f3"), L2).passed


def test_sober_via_nbhd():
    rep = sober_via_nbhd(space("disc2"), L2)
    assert rep.passed and rep.details["sober"] and rep.details["characterization"]
    rep = sober_via_nbhd(space("paper3"), L10)
    assert rep.passed  # both routes agree on "not sober"
    assert not rep.details["sober"]
    assert any(f["matching"] == ["y", "z"] for f in rep.details["uniqueness_failures"])
    assert sober_via_nbhd(space("onept")).passed


@pytest.mark.parametrize("name", SPACES)
def test_sober_routes_agree(name):
    assert sober_via_nbhd(space(name)).passed


@pytest.mark.parametrize("src,tgt,lit,_", CONTINUOUS)
def test_unit_naturality(src, tgt, lit, _):
    S, T = space(src), space(tgt)
    V = S.chain if S.chain.q % T.chain.q == 0 else T.chain
    assert check_unit_naturality(crisp(src, tgt, lit), S, T, V).passed


@pytest.mark.parametrize("name", SPACES)
def test_t0_iff_eta_injective(name):
    S = space(name)
    assert is_T0(S) == (unit(S).collisions() == [])


@pytest.mark.parametrize("name", SPACES)
def test_sober_spaces_are_dual(name):
    S = space(name)
    if not is_sober(S).passed:
        assert not check_eta_homeomorphism(S).passed
        return
    assert check_eta_homeomorphism(S).passed
    assert check_duality(S).passed
