"""Permutations in one-line notation, weak orders and generalized quotients."""

import itertools

from ..poset import Poset


def perm_name(w):
    return "".join(map(str, w)) if len(w) < 10 else ",".join(map(str, w))


def inversions(w):
    """Value pairs (a, b), a < b, appearing in decreasing order in w."""
    return {(w[j], w[i]) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]}


def position_inversions(w):
    return {(i + 1, j + 1) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]}


def length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def compose(w, v):
    """(wv)(i) = w(v(i))."""
    return tuple(w[v[i] - 1] for i in range(len(v)))


def inverse(w):
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[a - 1] = i + 1
    return tuple(out)


def longest(n):
    return tuple(range(n, 0, -1))


def weak_leq(u, w):
    """Right weak order: containment of inversion sets."""
    return inversions(u) <= inversions(w)


def left_weak_leq(u, w):
    """Left weak order: containment of position inversions."""
    return position_inversions(u) <= position_inversions(w)


def weak_order(n):
    """Right weak order on S_n: transposing an adjacent ascent moves up."""
    elems = list(itertools.permutations(range(1, n + 1)))
    covers = []
    for w in elems:
        for i in range(n - 1):
            if w[i] < w[i + 1]:
                covers.append((w, w[:i] + (w[i + 1], w[i]) + w[i + 2:]))
    return Poset(elems, covers, names={w: perm_name(w) for w in elems}, _checked=True)


def left_weak_order(n):
    """Left weak order on S_n: swapping values i, i+1 with i to the left of i+1 moves up."""
    elems = list(itertools.permutations(range(1, n + 1)))
    covers = []
    for w in elems:
        pos = inverse(w)
        for i in range(1, n):
            if pos[i - 1] < pos[i]:
                covers.append((w, tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)))
    return Poset(elems, covers, names={w: perm_name(w) for w in elems}, _checked=True)


def generalized_quotient_set(n, V):
    V = [tuple(v) for v in V]
    return [w for w in itertools.permutations(range(1, n + 1))
            if all(length(compose(w, v)) == length(w) + length(v) for v in V)]


def generalized_quotient(n, V):
    """W/V = {w : l(wv) = l(w) + l(v) for all v in V} under the restricted left weak order."""
    members = generalized_quotient_set(n, V)
    pairs = [(u, w) for u in members for w in members if u != w and left_weak_leq(u, w)]
    return Poset.from_relation(members, pairs, names={w: perm_name(w) for w in members})


def quotient_dual(n, X):
    """All v with l(wv) = l(w) + l(v) for every w in X (the largest V with X inside W/V)."""
    X = [tuple(w) for w in X]
    return [v for v in itertools.permutations(range(1, n + 1))
            if all(length(compose(w, v)) == length(w) + length(v) for w in X)]


def is_generalized_quotient(n, X):
    """X equals W/V for some V iff it equals W/V* for the dual set V*."""
    return set(generalized_quotient_set(n, quotient_dual(n, X))) == {tuple(w) for w in X}
