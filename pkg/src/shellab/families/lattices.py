"""Boolean lattices, partition lattices and distributive lattices with their labelings."""

import itertools

from ..errors import NotALattice, NotALinearExtension
from ..labeling import EdgeLabeling, label_sequence
from ..poset import Poset, _bits, is_linear_extension


def set_name(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def boolean_lattice(n):
    """Subsets of [n] with λ(B, B ∪ {i}) = i."""
    elems = sorted((frozenset(c) for k in range(n + 1)
                    for c in itertools.combinations(range(1, n + 1), k)),
                   key=lambda s: (len(s), sorted(s)))
    covers, labels = [], {}
    for s in elems:
        for i in range(1, n + 1):
            if i not in s:
                t = s | {i}
                covers.append((s, t))
                labels[(s, t)] = i
    P = Poset(elems, covers, names={s: set_name(s) for s in elems}, _checked=True)
    return P, EdgeLabeling(labels)


# partitions are tuples of sorted tuples, blocks ordered by their minimum

def canonical_partition(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def partition_name(p):
    blocks = sorted(p, key=lambda b: (-len(b), b))
    sep = "" if max(max(b) for b in p) < 10 else ","
    return "|".join(sep.join(map(str, b)) for b in blocks)


def set_partitions(items):
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield canonical_partition(((first,),) + p)
        for k in range(len(p)):
            yield canonical_partition(p[:k] + ((first,) + p[k],) + p[k + 1:])


def merge(p, a, b):
    """Merge blocks a and b of partition p."""
    return canonical_partition([x for x in p if x not in (a, b)] + [a + b])


def partition_lattice(n):
    elems = sorted(set(set_partitions(range(1, n + 1))), key=lambda p: (-len(p), p))
    covers = []
    for p in elems:
        for a, b in itertools.combinations(p, 2):
            covers.append((p, merge(p, a, b)))
    return Poset(elems, covers, names={p: partition_name(p) for p in elems}, _checked=True)


def merged_blocks(x, y):
    """The two blocks of x whose union is a block of y (for a cover x < y)."""
    moved = [b for b in x if b not in y]
    if len(moved) != 2:
        raise ValueError("not a cover of set partitions")
    return moved[0], moved[1]


def max_min_labeling(P):
    labels = {}
    for x, y in P.cover_list():
        a, b = merged_blocks(x, y)
        labels[(x, y)] = max(min(a), min(b))
    return EdgeLabeling(labels)


# generic lattice helpers

def is_lattice(P):
    if not P.is_bounded():
        return False
    n = len(P)
    for i in range(n):
        for j in range(i + 1, n):
            common = P._above[i] & P._above[j]
            if not common:
                return False
            mins = [k for k in _bits(common) if P._below[k] & common == 1 << k]
            if len(mins) != 1:
                return False
            common = P._below[i] & P._below[j]
            maxs = [k for k in _bits(common) if P._above[k] & common == 1 << k]
            if len(maxs) != 1:
                return False
    return True


def atoms_below(P, x):
    atoms = P.upper_covers(P.bottom)
    return frozenset(a for a in atoms if P.leq(a, x))


def minimal_labeling(L, atom_order):
    """λ(x, y) = position (1-based) in atom_order of the first atom below y but not x."""
    if not is_lattice(L):
        raise NotALattice("minimal labelings need a lattice")
    atom_order = list(atom_order)
    atoms = set(L.upper_covers(L.bottom))
    if set(atom_order) != atoms or len(atom_order) != len(atoms):
        raise ValueError("atom_order must list every atom once")
    rank = {a: k + 1 for k, a in enumerate(atom_order)}
    A = {x: atoms_below(L, x) for x in L.elements}
    labels = {}
    for x, y in L.cover_list():
        new = A[y] - A[x]
        if not new:
            raise NotALattice(f"no new atom below {y!r}; A(y) must grow along covers")
        labels[(x, y)] = min(rank[a] for a in new)
    return EdgeLabeling(labels)


# distributive lattices

def order_ideals(Q):
    """Down-closed subsets of Q as frozensets, by size then canonical index."""
    n = len(Q)
    below = [Q._below[i] for i in range(n)]
    found = set()
    stack = [0]
    found.add(0)
    while stack:
        mask = stack.pop()
        for i in range(n):
            if not (mask >> i) & 1 and (below[i] & ~(1 << i)) & ~mask == 0:
                nxt = mask | (1 << i)
                if nxt not in found:
                    found.add(nxt)
                    stack.append(nxt)
    masks = sorted(found, key=lambda m: (bin(m).count("1"), [i for i in range(n) if (m >> i) & 1]))
    return [frozenset(Q.elements[i] for i in range(n) if (m >> i) & 1) for m in masks]


def distributive_lattice(Q, e):
    """J(Q) with λ_e(I < I ∪ {x}) = position of x in the linear extension e."""
    e = list(e)
    if not is_linear_extension(Q, e):
        raise NotALinearExtension("e must list Q in a linear extension order")
    pos = {x: k + 1 for k, x in enumerate(e)}
    ideals = order_ideals(Q)
    idset = set(ideals)
    covers, labels = [], {}
    for I in ideals:
        for x in Q.elements:
            if x not in I and I | {x} in idset:
                J = I | {x}
                covers.append((I, J))
                labels[(I, J)] = pos[x]
    names = {I: "{" + ",".join(Q.name(x) for x in Q.elements if x in I) + "}" for I in ideals}
    return Poset(ideals, covers, names=names, _checked=True), EdgeLabeling(labels)


def lin_labels(Q, e):
    J, lam = distributive_lattice(Q, e)
    return {label_sequence(lam, m) for m in J.maximal_chains()}
