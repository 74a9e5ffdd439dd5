"""Named constructions and the certified two-vertex presentation of the
endomorphism ring built from the two-loop local algebra."""
import pytest

from quiverhom.catalog import (
    build_named, is_construction_text, klein_endo_algebra, klein_module_pair,
    parse_construction, verify_endo_presentation,
)
from quiverhom.errors import InvalidParameters, ParseError
from quiverhom.homology import mueller_domdim, syzygy
from quiverhom.invariants import (
    algebra_dominant_dimension, gendo_gorenstein_check, gorenstein_dimension,
)
from quiverhom.modules import direct_sum, iso_test, regular_rep
from quiverhom.stratify import (
    characteristic_tilting, classify_stratification, search_orders,
    tilting_conjecture_report, verify_duality_consequences,
)
from quiverhom.values import Dim


@pytest.fixture(scope="module")
def endo():
    return klein_endo_algebra()


def test_presentation_basis(endo):
    assert endo.dim == 10
    assert [endo.quiver.path_str(p) for p in endo.basis] == [
        "e_1", "e_2", "y", "de", "al", "be", "y*al", "de*be", "al*be",
        "y*al*be"]


def test_presentation_certificate(endo):
    assert verify_endo_presentation(endo) == {
        "dim": 10, "hom_dim": 10, "rank": 10, "relations_vanish": True,
        "cartan_symmetric": True}


def test_module_pair_periodicity():
    a, xa = klein_module_pair()
    assert xa.dim_vector() == (2,)
    assert iso_test(syzygy(xa, 2), xa).is_iso
    assert gendo_gorenstein_check(a, xa) == 2
    assert mueller_domdim(a, direct_sum([regular_rep(a), xa])) == Dim.exact(2)


def test_endo_invariants(endo):
    assert algebra_dominant_dimension(endo) == Dim.exact(2)
    right, left, flag = gorenstein_dimension(endo)
    assert (right, left, flag) == (Dim.exact(2), Dim.exact(2), True)


def test_endo_stratification(endo):
    rows = search_orders(endo)
    assert [r["properly_stratified"] for r in rows] == [True, False]
    assert not any(r["quasi_hereditary"] for r in rows)
    st = classify_stratification(endo, (1, 2), duality_asserted=True)
    assert st.properly_stratified and not st.schurian
    t = characteristic_tilting(endo, st)
    assert t.projdim == 1
    assert sorted(s.dim_vector() for s in t.summands) == [(2, 0), (4, 2)]
    st.tilting = t
    out = verify_duality_consequences(endo, st)
    assert (out["m"], out["gordim"]) == (1, 2)
    assert len(out["modules"]) == 13
    conj = tilting_conjecture_report(endo, st)
    assert conj["verdict"] == "conjecture consistent"


def test_build_named_dimensions():
    cases = [
        ("kupisch", (2, 2, 3), 7),
        ("bnlambda", (3, (1,)), 9),
        ("symmetric_chain", (2,), 6),
        ("klein_four", (), 4),
        ("endo-of", ("klein_four", (), (1,)), 7),
    ]
    for name, params, dim in cases:
        assert build_named(name, params).dim == dim
    with pytest.raises(InvalidParameters):
        build_named("group_algebra")
    with pytest.raises(InvalidParameters):
        build_named("klein_four", (3,))


def test_parse_construction_shorthand():
    assert parse_construction("kupisch:2,2,3").dim == 7
    assert parse_construction("bnlambda:3,1").dim == 9
    assert parse_construction("endo-of:symmetric_chain:2@2").dim == 9
    assert is_construction_text("kupisch:4,5,5")
    assert not is_construction_text("some/path.alg")
    for bad in ("unknown:1", "bnlambda", "endo-of:klein_four", "kupisch:a,b"):
        with pytest.raises(ParseError):
            parse_construction(bad)
