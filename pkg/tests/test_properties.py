"""Randomized properties over small chains and carriers."""

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from mvtop.adjunction import is_sober, omega_of_space, unit
from mvtop.frames import check_d_frame, enumerate_points
from mvtop.fuzzy import Carrier, FuzzySet
from mvtop.mvcore import Chain, Subquantale
from mvtop.spaces import check_axioms, generate_topology, interior, is_T0

import oracles
from corpus import SPACES, space

small = st.tuples(st.integers(1, 3), st.sampled_from([1, 2, 3, 4]))


@st.composite
def generated_space(draw):
    n, q = draw(small)
    c = Carrier([f"x{i}" for i in range(n)])
    V = Chain(q)
    gens = draw(st.lists(st.lists(st.integers(0, q), min_size=n, max_size=n), max_size=2))
    D = Subquantale.full(V) if draw(st.booleans()) else Subquantale.boolean(V)
    return generate_topology(c, V, D, [FuzzySet(c, V, g) for g in gens]), gens


@settings(max_examples=60, deadline=None)
@given(generated_space())
def test_generation_matches_naive_closure(sg):
    S, gens = sg
    q = S.chain.q
    want = oracles.naive_closure(len(S.carrier), q, S.D.values,
                                 [tuple(F(k, q) for k in g) for g in gens])
    assert oracles.fractions_of(S) == want
    assert check_axioms(S).passed


@settings(max_examples=30, deadline=None)
@given(generated_space())
def test_small_spaces_satisfy_adjunction_laws(sg):
    S, _ = sg
    M = omega_of_space(S)
    assert check_d_frame(M).passed
    eta = unit(S)
    assert is_T0(S) == (eta.collisions() == [])
    assert all(p in set(enumerate_points(M)) for p in eta.evaluations)
    if not eta.missed() and not eta.collisions():
        assert is_sober(S).passed


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_interior_against_oracle(name, data):
    S = space(name)
    q = S.chain.q
    levels = data.draw(st.lists(st.integers(0, q), min_size=len(S.carrier),
                                max_size=len(S.carrier)))
    a = FuzzySet(S.carrier, S.chain, levels)
    got = interior(S, a)
    assert tuple(got.values) == oracles.naive_interior(oracles.fractions_of(S), tuple(a.values))
    assert interior(S, got) == got and got <= a
