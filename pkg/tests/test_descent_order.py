import pytest

import oracles
from helpers import raw, small_posets
from shellab.descent_order import (PolygonMove, all_polygon_moves, build_mcd, differ_by_polygon,
                                   find_characterization_witness, find_easy_noncover_witness,
                                   inversion_set, is_inversion_ranked, is_polygon_complete,
                                   lex_increases, mcd_rank_report, polygon_predecessor,
                                   prefix_agreement_violations, root_independence_violations,
                                   top_polygon_violations, verify_characterization_witness,
                                   verify_lifting)
from shellab.errors import NotADescent, NotANonCover, NotRanked
from shellab.families import fixture, fixture_names
from shellab.families.lattices import (boolean_lattice, distributive_lattice, max_min_labeling,
                                       partition_lattice)
from shellab.labeling import EdgeLabeling, descents, label_sequence
from shellab.poset import build_poset


def matches_oracle(P, lam):
    chains, moves, covers = oracles.cord(*raw(P, lam))
    mcd = build_mcd(P, lam)
    assert set(mcd.chains) == set(chains)
    assert {(mcd.chains[i], mcd.chains[j]) for i, j in mcd.move_pairs} == moves
    assert {(mcd.chains[i], mcd.chains[j]) for i, j in mcd.covers} == covers


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_cord_matches_oracle(name):
    P, lam, *_ = fixture(name)
    matches_oracle(P, lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boolean_cord_matches_oracle(n):
    matches_oracle(*boolean_lattice(n))


def test_partition_cord_matches_oracle():
    P = partition_lattice(4)
    matches_oracle(P, max_min_labeling(P))


def test_distributive_cords_match_oracle():
    for Q in small_posets(4):
        e = Q.elements
        matches_oracle(*distributive_lattice(Q, e))


def test_b3_has_six_covers():
    # the figure shows the hexagon: 6 chains, 6 covers, every move a cover
    mcd = build_mcd(*boolean_lattice(3))
    assert len(mcd) == 6 and len(mcd.covers) == 6 and len(mcd.moves) == 6


def test_fig6_chain_has_one_descent():
    P, lam, *_ = fixture("fig6_lambda")
    m2 = next(c for c in P.maximal_chains() if "c" in c)
    assert label_sequence(lam, m2) == ("1", "5", "1", "4")
    assert descents(lam, m2) == {"c"}


def test_differ_by_polygon():
    assert differ_by_polygon("0abc1", "0xc1") is not None
    shape = differ_by_polygon("0abc1", "0xc1")
    assert (shape.bottom, shape.top, shape.position, shape.length) == ("0", "c", 1, 2)
    assert differ_by_polygon("0ab1", "0ab1") is None
    assert differ_by_polygon("0ab1", "0ba1") is None  # two new elements
    assert differ_by_polygon("0ab1", "0a1") is None  # too short


def test_polygon_predecessor_inverts_moves():
    P, lam, *_ = fixture("fig7")
    for mv in all_polygon_moves(P, lam):
        assert isinstance(mv, PolygonMove)
        assert polygon_predecessor(P, lam, mv.target, mv.inserted) == mv.source
    asc = build_mcd(P, lam).ascending_chain()
    with pytest.raises(NotADescent):
        polygon_predecessor(P, lam, asc, asc[1])


def test_fig2_non_cover():
    P, lam, *_ = fixture("fig2")
    mcd = build_mcd(P, lam)
    complete, bad = is_polygon_complete(mcd)
    assert not complete
    assert [(mcd.label_string(mv.source), mcd.label_string(mv.target)) for mv in bad] == [("123", "543")]


def test_structure_of_cord():
    for name in fixture_names():
        P, lam, *_ = fixture(name)
        mcd = build_mcd(P, lam)
        assert mcd.minimal() == [mcd.index[mcd.ascending_chain()]]
        assert lex_increases(mcd)
        assert not top_polygon_violations(mcd)
        assert not prefix_agreement_violations(mcd)


@pytest.mark.parametrize("name", ["fig1", "fig12_maxmin", "fig8_minimal"])
def test_root_independence(name):
    P, lam, *_ = fixture(name)
    assert not root_independence_violations(build_mcd(P, lam))


def test_lifting_from_intervals():
    for name in ("fig7", "fig12_maxmin", "fig5_cl"):
        P, lam, *_ = fixture(name)
        mcd = build_mcd(P, lam)
        for x in P.elements:
            for y in P.up_set(x):
                for root in P.roots(x):
                    assert verify_lifting(P, lam, x, y, root, mcd)


def test_mcd_path_follows_moves():
    P, lam, *_ = fixture("fig7")
    mcd = build_mcd(P, lam)
    for a in range(len(mcd)):
        for b in range(len(mcd)):
            if mcd.leq(a, b):
                path = mcd.path(a, b)
                assert path[0] == a and path[-1] == b
                assert all(mcd.is_move(s, t) for s, t in zip(path, path[1:]))


def test_inversion_set():
    _, lam = boolean_lattice(3)
    P, _ = boolean_lattice(3)
    m = next(c for c in P.maximal_chains() if label_sequence(lam, c) == (3, 1, 2))
    inv = inversion_set(lam, m)
    assert inv.positions == {(1, 2), (1, 3)} and len(inv) == 2
    assert inv.label_pairs() == {(3, 1), (3, 2)}


def test_inversion_ranked_verdicts():
    P, lam, *_ = fixture("fig8_minimal")
    ok, bad = is_inversion_ranked(P, lam)
    assert not ok and bad is not None
    P, lam, *_ = fixture("prop_inv_vs_strong")
    assert is_inversion_ranked(P, lam)[0]
    P = build_poset("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    lam = EdgeLabeling({("0", "a"): 1, ("a", "b"): 2, ("b", "1"): 3, ("0", "c"): 2, ("c", "1"): 1})
    with pytest.raises(NotRanked):
        is_inversion_ranked(P, lam)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rank_report_boolean(n):
    rep = mcd_rank_report(build_mcd(*boolean_lattice(n)))
    assert rep.ok and rep.top_rank == n * (n - 1) // 2


def test_pi4_homology_facets():
    # six chains of Π_4 are fully descending under max-min
    P = partition_lattice(4)
    mcd = build_mcd(P, max_min_labeling(P))
    assert len([i for i in range(len(mcd)) if len(mcd.descents(i)) == 2]) == 6
    assert len(mcd.maximal()) == 6


@pytest.mark.parametrize("name", ["fig2", "fig5_cl", "fig7"])
def test_characterization_witness(name):
    P, lam, *_ = fixture(name)
    mcd = build_mcd(P, lam)
    _, bad = is_polygon_complete(mcd)
    for mv in bad:
        w = find_characterization_witness(P, lam, mv, mcd)
        assert verify_characterization_witness(P, lam, w) == (True, "")


def test_fig2_witness_elements():
    P, lam, *_ = fixture("fig2")
    mcd = build_mcd(P, lam)
    w = find_characterization_witness(P, lam, is_polygon_complete(mcd)[1][0], mcd)
    assert w.y == "1" and w.n == 2
    assert set(w.xs) == {"x1", "x2"} and set(w.zs) == {"z1", "z2"}


def test_witness_rejects_covers():
    P, lam, *_ = fixture("fig2")
    mcd = build_mcd(P, lam)
    i, j = sorted(mcd.covers)[0]
    with pytest.raises(NotANonCover):
        find_characterization_witness(P, lam, (mcd.chains[i], mcd.chains[j]), mcd)


def test_tampered_witness_is_rejected():
    P, lam, *_ = fixture("fig2")
    mcd = build_mcd(P, lam)
    w = find_characterization_witness(P, lam, is_polygon_complete(mcd)[1][0], mcd)
    from dataclasses import replace
    ok, reason = verify_characterization_witness(P, lam, replace(w, zs=w.zs[::-1]))
    assert not ok and reason


def test_easy_witness():
    for name in ("fig2", "fig5_cl"):
        P, lam, *_ = fixture(name)
        assert find_easy_noncover_witness(P, lam) is not None
    for n in (3, 4):
        assert find_easy_noncover_witness(*boolean_lattice(n)) is None
