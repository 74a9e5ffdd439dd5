"""Stratifications, characteristic tilting modules and the extensional
verifiers, frozen against hand-worked orders on small Nakayama and
two-way chain algebras."""
import pytest

from quiverhom.algebra import (
    bnlambda_family, klein_four_like, nakayama_from_kupisch,
    symmetric_chain_family,
)
from quiverhom.errors import (
    CertificateFailure, NotApplicable, NotStratified, PreconditionFailed,
    TooManyVertices,
)
from quiverhom.homology import ext_dim
from quiverhom.invariants import algebra_dominant_dimension, canonical_test_set
from quiverhom.modules import (
    dualize, iso_test, quotient_by_submodule, radical_rows, regular_rep,
    simple_rep, sub_representation,
)
from quiverhom.stratify import (
    characteristic_cotilting, characteristic_tilting, classify_stratification,
    endo_quiver_construction, filtration_test, same_add_closure, search_orders,
    standard_modules, tilting_conjecture_report, verify_duality_consequences,
    verify_main_equivalences, verify_tilting,
)
from quiverhom.values import Dim


@pytest.fixture(scope="module")
def a223():
    return nakayama_from_kupisch([2, 2, 3])


@pytest.fixture(scope="module")
def st223(a223):
    return classify_stratification(a223, (1, 2, 0))


@pytest.fixture(scope="module")
def b31():
    return bnlambda_family(3, (1,))


@pytest.fixture(scope="module")
def st31(b31):
    return classify_stratification(b31, (1, 2, 3), duality_asserted=True)


def test_standard_modules_223(st223):
    assert {v: st223.delta[v].dim_vector() for v in (0, 1, 2)} == {
        0: (1, 1, 0), 1: (0, 1, 0), 2: (0, 0, 1)}
    assert {v: st223.nablabar[v].dim_vector() for v in (0, 1, 2)} == {
        0: (1, 0, 1), 1: (0, 1, 0), 2: (0, 1, 1)}
    # schurian case: proper and plain standards agree, costandards too
    for v in (0, 1, 2):
        assert iso_test(st223.delta[v], st223.deltabar[v]).is_iso
        assert iso_test(st223.nabla[v], st223.nablabar[v]).is_iso


def test_proper_standard_is_quotient_of_standard(st223, st31):
    for st in (st223, st31):
        for v in st.order:
            d = st.delta[v]
            rows = radical_rows(d)
            if v in rows and rows[v].nrows:
                sub, incl = sub_representation(d, {v: rows[v]}, close=True)
                q, _ = quotient_by_submodule(d, incl)
            else:
                q = d
            assert iso_test(q, st.deltabar[v]).is_iso


def test_classification_flags_223(st223):
    assert st223.flags() == {
        "standardly_stratified": True, "delta_filtered_regular": True,
        "properly_stratified": True, "quasi_hereditary": True,
        "schurian": True}


def test_regular_filtration_multiplicities_223(a223, st223):
    ok, mult = filtration_test(regular_rep(a223), "delta", st223)
    assert ok and mult == {0: 2, 1: 1, 2: 2}
    total = sum(mult[v] * sum(st223.delta[v].dim_vector()) for v in mult)
    assert total == a223.dim


def test_filtration_matches_ext_vanishing_oracle(a223, st223, b31, st31):
    # degree-one orthogonality against the (proper) costandards decides
    # filtration membership; run both pairings over the canonical sets
    for a, st in ((a223, st223), (b31, st31)):
        for _, m in canonical_test_set(a):
            in_fd = filtration_test(m, "delta", st)[0]
            no_ext = all(ext_dim(m, st.nablabar[v], 1) == 0 for v in st.order)
            assert in_fd == no_ext
            in_fdb = filtration_test(m, "deltabar", st)[0]
            no_ext = all(ext_dim(m, st.nabla[v], 1) == 0 for v in st.order)
            assert in_fdb == no_ext


def test_characteristic_tilting_223(a223, st223):
    t = characteristic_tilting(a223, st223)
    assert t.route == "cosyzygy"
    assert t.projdim == 2
    assert sorted(s.dim_vector() for s in t.summands) == [
        (0, 1, 0), (0, 1, 1), (1, 1, 1)]
    c = characteristic_cotilting(a223, st223)
    assert same_add_closure(t.summands, c.summands)


def test_main_equivalences_223(a223, st223):
    out = verify_main_equivalences(a223, st223)
    assert (out["r"], out["i"]) == (3, 2)
    assert out["conditions"] == (True, True, True, True)
    assert out["holds"] and out["agree"]
    assert len(out["modules"]) == 7


def test_tilting_conjecture_223(a223, st223):
    out = tilting_conjecture_report(a223, st223)
    assert out == {"gorenstein": True, "tilting_equals_cotilting": True,
                   "verdict": "conjecture consistent"}


def test_regular_and_coregular_are_tilting_223(a223):
    rep = verify_tilting(a223, regular_rep(a223))
    assert rep["tilting"] and rep["cotilting"]
    assert rep["projdim"] == Dim.exact(0)
    assert rep["injdim"] == Dim.exact(3)
    assert rep["coresolution_length"] == 1
    da = dualize(regular_rep(a223.opposite_algebra()))
    rep = verify_tilting(a223, da)
    assert rep["tilting"] and rep["cotilting"]
    assert rep["projdim"] == Dim.exact(3)
    assert rep["injdim"] == Dim.exact(0)
    assert rep["coresolution_length"] == 4


def test_no_stratifying_order_455():
    rows = search_orders(nakayama_from_kupisch([4, 5, 5]))
    assert len(rows) == 6
    assert not any(r["standardly_stratified"] for r in rows)


def test_no_quasi_hereditary_order_344():
    rows = search_orders(nakayama_from_kupisch([3, 4, 4]))
    assert len(rows) == 6
    assert not any(r["quasi_hereditary"] for r in rows)


def test_classification_flags_b31(st31):
    assert all(st31.flags().values())
    assert st31.duality_asserted


def test_characteristic_tilting_b31(b31, st31):
    t = characteristic_tilting(b31, st31)
    assert t.projdim == 2
    assert sorted(s.dim_vector() for s in t.summands) == [
        (1, 0, 0), (1, 2, 1), (2, 1, 0)]
    simple = [s for s in t.summands if sum(s.dim_vector()) == 1]
    assert len(simple) == 1
    assert iso_test(simple[0], simple_rep(b31, 1)).is_iso
    rep = verify_tilting(b31, t.module)
    assert rep["tilting"] and rep["cotilting"]
    assert rep["projdim"] == Dim.exact(2)
    assert rep["coresolution_length"] == 3


def test_duality_consequences_b31(b31, st31):
    out = verify_duality_consequences(b31, st31)
    assert (out["m"], out["gordim"], out["gldim"]) == (2, 4, 4)
    assert out["agree"]
    assert len(out["modules"]) == 11


def test_endo_extension_dimensions_and_domdim():
    cases = [
        (symmetric_chain_family(2), [2], 9, 4),
        (symmetric_chain_family(3), [3], 13, 6),
        (klein_four_like(), [1], 7, 2),
    ]
    for base, socs, dim, dd in cases:
        out = endo_quiver_construction(base, socs)
        assert out.dim == dim
        assert len(out.quiver.vertices) == len(base.quiver.vertices) + len(socs)
        assert algebra_dominant_dimension(out) == Dim.exact(dd)


def test_endo_extension_quiver_shape():
    out = endo_quiver_construction(symmetric_chain_family(2), [2])
    assert tuple(out.quiver.vertices) == (1, 2, 3)
    assert [(ar.name, ar.source, ar.target) for ar in out.quiver.arrows] == [
        ("a1", 1, 2), ("b1", 2, 1), ("al2", 2, 3), ("be2", 3, 2)]


def test_endo_extension_needs_symmetric_base():
    with pytest.raises(PreconditionFailed):
        endo_quiver_construction(bnlambda_family(3, (1,)), [3])


def test_error_paths(a223):
    with pytest.raises(NotApplicable):
        standard_modules(a223, (0, 1))
    a455 = nakayama_from_kupisch([4, 5, 5])
    bad = classify_stratification(a455, (0, 1, 2))
    assert not bad.standardly_stratified
    with pytest.raises(NotStratified):
        characteristic_tilting(a455, bad)
    with pytest.raises(NotApplicable):
        verify_main_equivalences(a455, bad)
    with pytest.raises(CertificateFailure):
        classify_stratification(a223, (1, 2, 0), duality_asserted=True)
    with pytest.raises(TooManyVertices):
        search_orders(nakayama_from_kupisch([2] * 9))
