import random

import pytest

import oracles
from helpers import small_posets
from shellab.errors import CycleDetected, NotBounded, NotComparable, RedundantCover, UnknownElement
from shellab.poset import (Poset, are_isomorphic, build_poset, closed_interval,
                           count_linear_extensions, is_linear_extension, linear_extensions,
                           random_linear_extension, rank_function, transitive_reduction,
                           verify_map_isomorphism)


def diamond():
    return build_poset("0abc1", [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def test_basic_queries():
    P = diamond()
    assert len(P) == 5 and P.is_bounded()
    assert P.bottom == "0" and P.top == "1"
    assert P.leq("0", "1") and not P.leq("a", "b") and not P.comparable("a", "c")
    assert set(P.upper_covers("0")) == {"a", "b", "c"}
    assert P.is_cover("a", "1") and not P.is_cover("0", "1")
    assert P.height() == 2


def test_maximal_chains_and_roots():
    P = diamond()
    assert sorted(P.maximal_chains()) == [("0", "a", "1"), ("0", "b", "1"), ("0", "c", "1")]
    assert P.roots("a") == [("0", "a")]
    assert len(P.roots("1")) == 3


def test_rejects_cycles_and_redundant_covers():
    with pytest.raises(CycleDetected):
        build_poset("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(RedundantCover):
        build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(UnknownElement):
        build_poset("ab", [("a", "z")])
    with pytest.raises(NotBounded):
        build_poset("abc", [("a", "b"), ("a", "c")], require_bounded=True)


def test_from_relation_reduces():
    P = Poset.from_relation("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert set(P.cover_list()) == {("a", "b"), ("b", "c")}


def test_transitive_reduction_matches_oracle():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 7)
        pairs = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4}
        got = transitive_reduction(pairs, list(range(n)))
        assert got == oracles.reduction(range(n), oracles.closure(range(n), pairs))


def test_interval():
    P = diamond()
    I = closed_interval(P, "a", "1")
    assert set(I.elements) == {"a", "1"}
    with pytest.raises(NotComparable):
        closed_interval(P, "a", "b")


def test_induced_recomputes_covers():
    P = build_poset("0ab1", [("0", "a"), ("a", "b"), ("b", "1")])
    Q = P.induced({"0", "b"})
    assert set(Q.cover_list()) == {("0", "b")}


def test_rank_function():
    assert rank_function(diamond()) == {"0": 0, "a": 1, "b": 1, "c": 1, "1": 2}
    P = build_poset("0ab1", [("0", "a"), ("a", "b"), ("b", "1")])
    assert rank_function(P) == {"0": 0, "a": 1, "b": 2, "1": 3}
    skew = build_poset("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    assert rank_function(skew) is None


@pytest.mark.parametrize("n", range(0, 6))
def test_linear_extensions_against_oracle(n):
    for P in small_posets(n):
        exts = list(linear_extensions(P))
        want = oracles.linear_extensions(list(P.elements), list(P.cover_list()))
        assert sorted(exts) == sorted(want)
        assert len(set(exts)) == len(exts) == count_linear_extensions(P)
        assert all(is_linear_extension(P, e) for e in exts)


def test_random_linear_extension_is_valid():
    rng = random.Random(1)
    for P in small_posets(5):
        for _ in range(5):
            assert is_linear_extension(P, random_linear_extension(P, rng))


def test_small_poset_counts():
    # numbers of unlabeled posets on n points
    assert [len(small_posets(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


def test_isomorphism_against_oracle():
    posets = small_posets(4)
    for P in posets:
        for Q in posets:
            a = (list(P.elements), list(P.cover_list()))
            b = (list(Q.elements), list(Q.cover_list()))
            assert (are_isomorphic(P, Q) is not None) == oracles.is_isomorphic(*a, *b)


def test_isomorphism_of_relabeled_copy():
    rng = random.Random(3)
    for P in small_posets(5):
        perm = list(range(len(P)))
        rng.shuffle(perm)
        f = {x: f"v{perm[i]}" for i, x in enumerate(P.elements)}
        Q = P.relabel(f)
        iso = are_isomorphic(P, Q)
        assert iso is not None and verify_map_isomorphism(P, Q, iso)
        assert verify_map_isomorphism(P, Q, f)


def test_verify_map_isomorphism_rejects_non_maps():
    P = build_poset("ab", [("a", "b")])
    Q = build_poset("xy", [("x", "y")])
    assert not verify_map_isomorphism(P, Q, {"a": "y", "b": "x"})
    assert not verify_map_isomorphism(P, Q, {"a": "x"})
