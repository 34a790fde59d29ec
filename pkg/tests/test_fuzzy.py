import pytest
from hypothesis import given, strategies as st

from mvtop.errors import InputError, ResourceError
from mvtop.fuzzy import (Carrier, FuzzySet, characteristic, leq, nfold_add, parse_fuzzy,
                         pointwise, powerset, powerset_array, scalar_mul)
from mvtop.mvcore import Chain, mv_add, mv_meet, mv_mul

L10 = Chain(10)
X = Carrier(["x", "y", "z"])


def fz(*vals):
    return FuzzySet.from_values(X, L10, list(vals))


RHO = fz("1/2", "3/5", "3/5")
TOP = FuzzySet.top(X, L10)


def test_rho_products():
    sq = pointwise("odot", RHO, RHO)
    assert sq == fz("0", "1/5", "1/5")
    assert pointwise("oplus", RHO, sq) == fz("1/2", "4/5", "4/5")
    assert nfold_add(3, sq) == fz("0", "3/5", "3/5")
    assert nfold_add(5, sq) == fz("0", "1", "1")
    assert nfold_add(1, RHO) == RHO
    with pytest.raises(InputError):
        nfold_add(0, RHO)


def test_order():
    assert leq(fz("0", "1/5", "1/5"), RHO)
    assert RHO <= RHO
    assert not leq(RHO, fz("0", "1", "1"))
    assert (RHO & TOP) == RHO
    assert (RHO | FuzzySet.bottom(X, L10)) == RHO


def test_scalar_and_constants():
    assert scalar_mul("1", RHO) == RHO
    assert scalar_mul("0", RHO) == FuzzySet.bottom(X, L10)
    assert scalar_mul("1/2", TOP) == FuzzySet.constant(X, L10, "1/2")
    with pytest.raises(InputError):
        scalar_mul("1/3", RHO)


def test_characteristic():
    assert characteristic(X, L10, []) == FuzzySet.bottom(X, L10)
    assert characteristic(X, L10, "xyz") == TOP
    assert characteristic(X, L10, ["y"]) == fz("0", "1", "0")
    with pytest.raises(InputError):
        characteristic(X, L10, ["w"])


def test_negation_is_unary():
    assert pointwise("*", RHO) == fz("1/2", "2/5", "2/5")
    with pytest.raises(InputError):
        pointwise("neg", RHO, RHO)
    with pytest.raises(InputError):
        pointwise("oplus", RHO)


def test_mismatches_rejected():
    other = FuzzySet.top(Carrier(["x", "y"]), L10)
    with pytest.raises(InputError):
        pointwise("meet", RHO, other)
    with pytest.raises(InputError):
        leq(RHO, FuzzySet.top(X, Chain(5)))
    with pytest.raises(InputError):
        FuzzySet.from_values(X, L10, {"x": "1", "y": "1"})
    with pytest.raises(InputError):
        FuzzySet.from_values(X, L10, {"x": "1", "y": "1", "z": "1", "w": "0"})
    with pytest.raises(InputError):
        Carrier([])
    with pytest.raises(InputError):
        Carrier(["x", "x"])


def test_compact_form_roundtrip():
    assert RHO.compact() == "x=1/2,y=3/5,z=3/5"
    assert parse_fuzzy(X, L10, RHO.compact()) == RHO
    assert parse_fuzzy(X, L10, RHO.to_json()) == RHO
    assert str(RHO) == "⟨1/2, 3/5, 3/5⟩"
    for bad in ("x=1/2,y=3/5", "x=1/2,x=1/2,y=0,z=0", "x:1/2,y=0,z=0", "x=2,y=0,z=0"):
        with pytest.raises(InputError):
            parse_fuzzy(X, L10, bad)


def test_powerset_order_and_limit():
    c2 = Carrier(["a", "b"])
    L2 = Chain(2)
    sets = list(powerset(c2, L2))
    assert len(sets) == 9
    assert [s.levels for s in sets] == sorted(s.levels for s in sets)
    assert [s.index() for s in sets] == list(range(9))
    arr = powerset_array(2, 2)
    assert arr.tolist() == [list(s.levels) for s in sets]
    with pytest.raises(ResourceError):
        list(powerset(X, L10, limit=1000))


levels = st.lists(st.integers(0, 10), min_size=3, max_size=3)


@given(levels, levels)
def test_pointwise_commutes_with_projection(a, b):
    A, B = FuzzySet(X, L10, a), FuzzySet(X, L10, b)
    for name in X:
        assert pointwise("oplus", A, B)[name] == mv_add(A[name], B[name])
        assert pointwise("odot", A, B)[name] == mv_mul(A[name], B[name])
        assert pointwise("meet", A, B)[name] == mv_meet(A[name], B[name])
    assert FuzzySet.from_index(X, L10, A.index()) == A


@given(levels, levels, st.integers(0, 10))
def test_meet_join_are_bounds(a, b, r):
    A, B = FuzzySet(X, L10, a), FuzzySet(X, L10, b)
    m, j = A & B, A | B
    assert m <= A and m <= B and A <= j and B <= j
    rv = L10.value(r)
    assert scalar_mul(rv, A) == pointwise("odot", scalar_mul(rv, TOP), A)
