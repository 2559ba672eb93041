import itertools
import random

import pytest

import oracles
from shellab.descent_order import build_mcd
from shellab.families import fixture
from shellab.families.lattices import boolean_lattice, max_min_labeling, partition_lattice
from shellab.poset import linear_extensions
from shellab.shelling import (equivalence_audit, homology_facets, is_shelling_codim1,
                              is_shelling_with_descents, lex_shelling_order, order_complex,
                              restriction_map, shelling_equivalence_check, shelling_report,
                              verify_partition_characterization)


def test_codim1_against_oracle_b3():
    P, _ = boolean_lattice(3)
    cx = order_complex(P)
    for order in itertools.permutations(P.maximal_chains()):
        assert is_shelling_codim1(cx, order) == oracles.is_shelling(order)


def test_restriction_against_oracle():
    P = partition_lattice(4)
    cx = order_complex(P)
    rng = random.Random(0)
    chains = P.maximal_chains()
    for _ in range(30):
        order = chains[:]
        rng.shuffle(order)
        R = restriction_map(cx, order)
        assert [R[frozenset(c)] for c in order] == oracles.restriction_faces(order)


def test_partition_characterization_agrees_with_codim1():
    P, _ = boolean_lattice(3)
    cx = order_complex(P, drop_bounds=True)
    for order in itertools.permutations([c[1:-1] for c in P.maximal_chains()]):
        if is_shelling_codim1(cx, order):
            assert verify_partition_characterization(cx, order, restriction_map(cx, order))


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig5_cl", "fig7", "fig12_maxmin"])
def test_linear_extensions_of_cord_are_shellings(name):
    P, lam, *_ = fixture(name)
    mcd = build_mcd(P, lam)
    for k, ext in enumerate(linear_extensions(mcd.as_poset())):
        if k == 200:
            break
        assert is_shelling_with_descents(P, lam, ext)
        assert shelling_equivalence_check(P, lam, ext, mcd).status == "LinExtAndShelling"


def test_lex_order_is_a_shelling():
    P = partition_lattice(4)
    lam = max_min_labeling(P)
    assert is_shelling_with_descents(P, lam, lex_shelling_order(P, lam))


def test_reversed_order_is_neither():
    P, lam = boolean_lattice(3)
    order = lex_shelling_order(P, lam)[::-1]
    assert shelling_equivalence_check(P, lam, order).status == "Neither"


def test_pi4_has_six_homology_facets():
    P = partition_lattice(4)
    lam = max_min_labeling(P)
    assert len(homology_facets(P, lam)) == 6
    rep = shelling_report(P, lam, lex_shelling_order(P, lam), drop_bounds=True)
    assert sum(rep.homology) == 6
    assert rep.codim1_ok and rep.partition_ok and rep.containment_ok


@pytest.mark.parametrize("name", ["fig2", "fig5_cl"])
def test_audit_exhaustive_small(name):
    P, lam, *_ = fixture(name)
    rep = equivalence_audit(P, lam, seed=1)
    assert rep.exhaustive and rep.ok
    assert rep.orders_checked == 24


def test_audit_sampled_is_seeded():
    P, lam, *_ = fixture("fig7")
    a = equivalence_audit(P, lam, seed=3, samples=50)
    b = equivalence_audit(P, lam, seed=3, samples=50)
    assert a.ok and not a.exhaustive
    assert (a.agree_true, a.agree_false) == (b.agree_true, b.agree_false)
    assert a.linear_extensions_checked == a.linear_extension_count == 32


def test_facet_of_rejects_non_facets():
    P, _ = boolean_lattice(2)
    with pytest.raises(ValueError):
        order_complex(P).facet_of(P.elements[:2])
