"""Decreasing full binary trees and forests indexing maximal chains of Π_{n+1}.

A leaf is an int in 1..n+1.  An internal vertex is ``(label, left, right)`` with
children ordered by root label (smaller first).  A forest is a tuple of trees
sorted by root label.
"""

import itertools

from ..errors import NotFromBottom
from ..poset import Poset
from .lattices import canonical_partition, partition_name


def root_label(t):
    return t if isinstance(t, int) else t[0]


def node(label, a, b):
    a, b = sorted((a, b), key=root_label)
    return (label, a, b)


def leaves(t):
    if isinstance(t, int):
        return frozenset([t])
    return leaves(t[1]) | leaves(t[2])


def canonical(t):
    if isinstance(t, int):
        return t
    return node(t[0], canonical(t[1]), canonical(t[2]))


def canonical_forest(trees):
    return tuple(sorted((canonical(t) for t in trees), key=root_label))


def internal_labels(t):
    if isinstance(t, int):
        return []
    return [t[0]] + internal_labels(t[1]) + internal_labels(t[2])


def forest_size(forest):
    """(n, k): n+1 leaves and k internal vertices."""
    nleaves = sum(len(leaves(t)) for t in forest)
    k = sum(len(internal_labels(t)) for t in forest)
    return nleaves - 1, k


def enumerate_forests(n, k):
    """FPT(n, k): merge two components with label n+2, then n+3, ... (k merges)."""
    level = {tuple(range(1, n + 2))}
    for step in range(k):
        label = n + 2 + step
        nxt = set()
        for forest in level:
            for a, b in itertools.combinations(forest, 2):
                rest = [t for t in forest if t is not a and t is not b]
                nxt.add(canonical_forest(rest + [node(label, a, b)]))
        level = nxt
    return sorted(level, key=_forest_key)


def _tree_key(t):
    if isinstance(t, int):
        return (t,)
    return (t[0], _tree_key(t[1]), _tree_key(t[2]))


def _forest_key(f):
    return tuple(_tree_key(t) for t in f)


def enumerate_trees(n):
    return [f[0] for f in enumerate_forests(n, n)]


def tree_name(t):
    if isinstance(t, int):
        return str(t)
    return f"{t[0]}({tree_name(t[1])},{tree_name(t[2])})"


def _restrict(t, bound):
    """Components obtained by keeping only vertices with label <= bound."""
    if isinstance(t, int) or t[0] <= bound:
        return [t]
    return _restrict(t[1], bound) + _restrict(t[2], bound)


def tree_to_chain(forest):
    """c(F): the i-th element has blocks the leaf sets of F cut to labels <= n+1+i.

    ``forest`` is a tuple of trees; wrap a single tree as ``(t,)``.
    """
    n, k = forest_size(forest)
    chain = []
    for i in range(k + 1):
        comps = [c for t in forest for c in _restrict(t, n + 1 + i)]
        chain.append(canonical_partition(sorted(leaves(c)) for c in comps))
    return tuple(chain)


def chain_to_tree(chain):
    """Inverse of c: merge the two blocks joined at step i under a vertex labelled n+1+i."""
    chain = tuple(chain)
    first = chain[0]
    if any(len(b) != 1 for b in first):
        raise NotFromBottom("chain must start at the partition into singletons")
    n = len(first) - 1
    comps = {b: b[0] for b in first}
    for i, (x, y) in enumerate(zip(chain, chain[1:])):
        moved = [b for b in x if b not in y]
        if len(moved) != 2:
            raise NotFromBottom("consecutive partitions must differ by one merge")
        a, b = moved
        merged = tuple(sorted(a + b))
        comps[merged] = node(n + 2 + i, comps.pop(a), comps.pop(b))
    return canonical_forest(comps.values())


def subtree(t, label):
    if isinstance(t, int):
        return t if t == label else None
    if t[0] == label:
        return t
    return subtree(t[1], label) or subtree(t[2], label)


def tree_label(t, i, n=None):
    """max(min L(T^{n+1+i}_1), min L(T^{n+1+i}_2))."""
    if n is None:
        n = len(leaves(t)) - 1
    s = subtree(t, n + 1 + i)
    return max(min(leaves(s[1])), min(leaves(s[2])))


def _swap_labels(t, a, b):
    if isinstance(t, int):
        return t
    lab = b if t[0] == a else a if t[0] == b else t[0]
    return (lab, _swap_labels(t[1], a, b), _swap_labels(t[2], a, b))


def _replace(t, label, new):
    if isinstance(t, int):
        return t
    if t[0] == label:
        return new
    return (t[0], _replace(t[1], label, new), _replace(t[2], label, new))


def tree_moves(t, n=None):
    """Trees S with T ⇀ S."""
    if n is None:
        n = len(leaves(t)) - 1
    out = []
    for i in range(1, n):
        a, b = n + 1 + i, n + 2 + i
        if not tree_label(t, i, n) < tree_label(t, i + 1, n):
            continue
        sb = subtree(t, b)
        if root_label(sb[1]) == a or root_label(sb[2]) == a:
            sa = sb[1] if root_label(sb[1]) == a else sb[2]
            other = sb[2] if sa is sb[1] else sb[1]
            for keep, give in ((sa[1], sa[2]), (sa[2], sa[1])):
                new_b = (b, (a, keep, other), give)
                out.append(canonical(_replace(t, b, new_b)))
        else:
            out.append(canonical(_swap_labels(t, a, b)))
    return out


def tree_poset(n):
    trees = enumerate_trees(n)
    pairs = [(t, s) for t in trees for s in tree_moves(t, n)]
    return Poset.from_relation(trees, pairs, names={t: tree_name(t) for t in trees})


def chain_name(chain):
    return " < ".join(partition_name(p) for p in chain)
