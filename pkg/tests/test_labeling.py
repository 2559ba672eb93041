import pytest

from shellab.errors import LabelingError, MissingLabel
from shellab.families import fixture
from shellab.families.lattices import boolean_lattice, max_min_labeling, partition_lattice
from shellab.labeling import (INTEGERS, ChainEdgeLabeling, Comparison, EdgeLabeling, PosetOrder,
                              ascending_chain, descent_positions, descents, is_ascending,
                              is_polygon_strong, is_sn_el, label_sequence, lex_compare,
                              restrict, standardize, validate_labeling)
from shellab.poset import build_poset


def square(labels):
    P = build_poset("0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    return P, EdgeLabeling(dict(zip([("0", "a"), ("a", "1"), ("0", "b"), ("b", "1")], labels)))


def test_label_sequence_and_descents():
    P, lam = square([1, 2, 2, 1])
    assert label_sequence(lam, ("0", "a", "1")) == (1, 2)
    assert descents(lam, ("0", "b", "1")) == {"b"}
    assert is_ascending(lam, ("0", "a", "1"))
    assert descent_positions((3, 1, 2, 0), INTEGERS) == [1, 3]


def test_lex_compare():
    assert lex_compare((1, 2), (1, 3)) is Comparison.LESS
    assert lex_compare((2,), (1, 9)) is Comparison.GREATER
    assert lex_compare((1, 2), (1, 2)) is Comparison.EQUAL
    Lam = PosetOrder(build_poset("xyz", [("x", "y"), ("x", "z")]))
    assert lex_compare(("y",), ("z",), Lam) is Comparison.INCOMPARABLE


def test_validate_square():
    P, good = square([1, 2, 2, 1])
    assert validate_labeling(P, good).valid
    P, bad = square([2, 1, 2, 1])  # both chains descend
    rep = validate_labeling(P, bad)
    assert not rep.valid and rep.failures()[0].ascending_count == 0


def test_missing_label_is_reported():
    P, _ = square([1, 2, 2, 1])
    rep = validate_labeling(P, EdgeLabeling({("0", "a"): 1}))
    assert not rep.valid and "no label" in rep.error
    with pytest.raises(MissingLabel):
        EdgeLabeling({}).label(None, "0", "a")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_families_are_els(n):
    P, lam = boolean_lattice(n)
    assert validate_labeling(P, lam).valid and is_sn_el(P, lam)
    Pi = partition_lattice(n + 1)
    assert validate_labeling(Pi, max_min_labeling(Pi)).valid and is_sn_el(Pi, max_min_labeling(Pi))


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig7", "fig11b", "fig12_maxmin", "fig8_minimal"])
def test_el_fixtures_validate(name):
    P, lam, *_ = fixture(name)
    assert validate_labeling(P, lam, "el").valid


def test_cl_fixture_is_cl_but_not_el():
    P, lam, *_ = fixture("fig5_cl")
    assert validate_labeling(P, lam, "cl").valid
    assert not validate_labeling(P, lam, "el").valid


def test_chain_edge_labeling_prefix_lookup():
    lam = ChainEdgeLabeling({("x", "y"): 1}, {(("0", "a"), "x", "y"): 5})
    assert lam.label(("0", "a", "x"), "x", "y") == 5
    assert lam.label(("0", "b", "x"), "x", "y") == 1
    f = ChainEdgeLabeling(func=lambda root, x, y: len(root))
    assert f.label(("0", "a"), "a", "b") == 2


def test_restrict_rebases_roots():
    P, lam, *_ = fixture("fig5_cl")
    for x in P.elements:
        for root in P.roots(x):
            sub = restrict(P, lam, x, P.top, root)
            for c in P.saturated_chains(x, P.top):
                assert label_sequence(sub, c) == label_sequence(lam, c, root)


def test_ascending_chain_unique_or_error():
    P, lam = square([1, 2, 2, 1])
    assert ascending_chain(P, lam, "0", "1") == ("0", "a", "1")
    P, bad = square([2, 1, 2, 1])
    with pytest.raises(LabelingError):
        ascending_chain(P, bad, "0", "1")


def test_standardize():
    assert standardize((4, 2, 3), {2, 3, 4}) == (3, 1, 2)


def test_sn_el_rejects_repeated_labels():
    P, lam = square([1, 1, 2, 1])
    assert not is_sn_el(P, lam)


def test_polygon_strong_diamond_counterexample():
    P, lam, *_ = fixture("prop_inv_vs_strong")
    ok, bad = is_polygon_strong(P, lam)
    assert not ok and bad is not None
    assert [P.name(x) for x in bad] == ["a", "c", "d"]


def test_polygon_strong_requires_edge_labeling():
    P, lam, *_ = fixture("fig5_cl")
    with pytest.raises(LabelingError):
        is_polygon_strong(P, lam)
