"""Finite posets stored by their Hasse diagram.

Elements are arbitrary hashable values kept in a fixed order; that order is the
canonical index used for every deterministic enumeration (chains, extensions,
isomorphism search).  Reachability is cached as one bitmask per element.
"""

import heapq
from functools import lru_cache

from .errors import CycleDetected, NotBounded, NotComparable, RedundantCover, UnknownElement


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _topological_order(n, succ):
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        raise CycleDetected("relation contains a directed cycle")
    return order


def _reach(n, succ, order):
    """Reflexive up-sets as bitmasks, given successor lists and a topological order."""
    above = [0] * n
    for i in reversed(order):
        mask = 1 << i
        for j in succ[i]:
            mask |= above[j]
        above[i] = mask
    return above


class Poset:
    """A finite poset.  Build with :func:`build_poset` or :meth:`Poset.from_relation`."""

    def __init__(self, elements, covers, names=None, _checked=False):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        up = [set() for _ in range(n)]
        down = [set() for _ in range(n)]
        for x, y in covers:
            try:
                i, j = self._index[x], self._index[y]
            except KeyError as exc:
                raise UnknownElement(f"cover references unknown element {exc.args[0]!r}") from None
            if i == j:
                raise CycleDetected(f"self-cover on {x!r}")
            up[i].add(j)
            down[j].add(i)
        self._up = tuple(tuple(sorted(s)) for s in up)
        self._down = tuple(tuple(sorted(s)) for s in down)
        order = _topological_order(n, self._up)
        self._topo = tuple(order)
        self._above = _reach(n, self._up, order)
        below = [0] * n
        for i in order:
            mask = 1 << i
            for j in self._down[i]:
                mask |= below[j]
            below[i] = mask
        self._below = below
        if not _checked:
            for i in range(n):
                for j in self._up[i]:
                    for k in self._up[i]:
                        if k != j and (self._above[k] >> j) & 1:
                            raise RedundantCover(
                                f"cover ({self.elements[i]!r}, {self.elements[j]!r}) is implied "
                                f"through {self.elements[k]!r}")
        self._names = dict(names) if names else {}
        self._chains = None

    @classmethod
    def from_relation(cls, elements, pairs, names=None):
        """Poset generated by an arbitrary acyclic relation (reflexive-transitive closure)."""
        elements = tuple(elements)
        return cls(elements, transitive_reduction(pairs, elements), names=names, _checked=True)

    # basic access

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.covers == other.covers

    def __hash__(self):
        return hash((frozenset(self.elements), self.covers))

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def name(self, x):
        return self._names.get(x, str(x))

    @property
    def names(self):
        return {x: self.name(x) for x in self.elements}

    @property
    def covers(self):
        e = self.elements
        return frozenset((e[i], e[j]) for i in range(len(e)) for j in self._up[i])

    def cover_list(self):
        """Covers in canonical (index) order."""
        e = self.elements
        return [(e[i], e[j]) for i in range(len(e)) for j in self._up[i]]

    # order relation

    def leq(self, x, y):
        return bool((self._above[self.index(x)] >> self.index(y)) & 1)

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def is_cover(self, x, y):
        return self.index(y) in self._up[self.index(x)]

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def upper_covers(self, x):
        return tuple(self.elements[j] for j in self._up[self.index(x)])

    def lower_covers(self, x):
        return tuple(self.elements[j] for j in self._down[self.index(x)])

    def up_set(self, x):
        return [self.elements[j] for j in _bits(self._above[self.index(x)])]

    def down_set(self, x):
        return [self.elements[j] for j in _bits(self._below[self.index(x)])]

    def minimal_elements(self):
        return [self.elements[i] for i in range(len(self)) if not self._down[i]]

    def maximal_elements(self):
        return [self.elements[i] for i in range(len(self)) if not self._up[i]]

    def is_bounded(self):
        return len(self) > 0 and len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    @property
    def bottom(self):
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NotBounded(f"{len(mins)} minimal elements")
        return mins[0]

    @property
    def top(self):
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NotBounded(f"{len(maxs)} maximal elements")
        return maxs[0]

    # chains

    def saturated_chains(self, x, y):
        """All maximal chains of the interval [x, y], in index-lexicographic order."""
        if not self.leq(x, y):
            raise NotComparable(f"{x!r} is not below {y!r}")
        target = self.index(y)
        below_y = self._below[target]
        out = []
        path = [self.index(x)]

        def walk(i):
            if i == target:
                out.append(tuple(self.elements[k] for k in path))
                return
            for j in self._up[i]:
                if (below_y >> j) & 1:
                    path.append(j)
                    walk(j)
                    path.pop()

        walk(path[0])
        return out

    def maximal_chains(self):
        if self._chains is None:
            self._chains = self.saturated_chains(self.bottom, self.top)
        return list(self._chains)

    def roots(self, x):
        """Saturated chains from 0̂ to x."""
        return self.saturated_chains(self.bottom, x)

    def is_saturated_chain(self, chain):
        return all(self.is_cover(a, b) for a, b in zip(chain, chain[1:]))

    def height(self):
        """Length of the longest chain."""
        longest = [0] * len(self)
        for i in self._topo:
            for j in self._up[i]:
                longest[j] = max(longest[j], longest[i] + 1)
        return max(longest, default=0)

    # subposets

    def interval(self, x, y):
        return closed_interval(self, x, y)

    def induced(self, subset):
        """Induced subposet on a subset of elements, in canonical order."""
        keep = set(subset)
        elems = [x for x in self.elements if x in keep]
        pairs = [(a, b) for a in elems for b in elems if a != b and self.leq(a, b)]
        names = {x: self.name(x) for x in elems}
        return Poset.from_relation(elems, pairs, names=names)

    def relabel(self, mapping, names=None):
        """Image of the poset under an injective map on elements."""
        return Poset([mapping[x] for x in self.elements],
                     [(mapping[a], mapping[b]) for a, b in self.cover_list()],
                     names=names, _checked=True)


def build_poset(elements, cover_pairs, require_bounded=False, names=None):
    P = Poset(elements, cover_pairs, names=names)
    if require_bounded and not P.is_bounded():
        raise NotBounded("poset needs a unique minimum and a unique maximum")
    return P


def closed_interval(P, x, y):
    if not P.leq(x, y):
        raise NotComparable(f"{x!r} is not below {y!r}")
    mask = P._above[P.index(x)] & P._below[P.index(y)]
    elems = [P.elements[i] for i in _bits(mask)]
    keep = set(elems)
    covers = [(a, b) for a, b in P.cover_list() if a in keep and b in keep]
    return Poset(elems, covers, names={z: P.name(z) for z in elems}, _checked=True)


def maximal_chains(P):
    return P.maximal_chains()


def transitive_reduction(pairs, elements=None):
    """Covers of the reflexive-transitive closure of an acyclic relation."""
    pairs = list(pairs)
    if elements is None:
        seen = {}
        for a, b in pairs:
            seen.setdefault(a, None)
            seen.setdefault(b, None)
        elements = list(seen)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    succ = [set() for _ in range(n)]
    for a, b in pairs:
        if a == b:
            continue
        succ[index[a]].add(index[b])
    succ = [sorted(s) for s in succ]
    order = _topological_order(n, succ)
    above = _reach(n, succ, order)
    out = set()
    for i in range(n):
        strict = above[i] & ~(1 << i)
        implied = 0
        for j in _bits(strict):
            implied |= above[j] & ~(1 << j)
        for j in _bits(strict & ~implied):
            out.add((elements[i], elements[j]))
    return out


def rank_function(P):
    """The rank function as a dict, or None when P is not ranked."""
    rk = [None] * len(P)
    for i in P._topo:
        below = {rk[j] for j in P._down[i]}
        if not below:
            rk[i] = 0
        elif len(below) == 1:
            rk[i] = below.pop() + 1
        else:
            return None
    return {P.elements[i]: rk[i] for i in range(len(P))}


# linear extensions

def linear_extensions(P):
    """Every linear extension once, in lexicographic order of indices."""
    n = len(P)
    need = [0] * n
    for i in range(n):
        for j in P._down[i]:
            need[i] |= 1 << j
    order = []

    def walk(placed):
        if len(order) == n:
            yield tuple(P.elements[i] for i in order)
            return
        for i in range(n):
            if not (placed >> i) & 1 and need[i] & placed == need[i]:
                order.append(i)
                yield from walk(placed | (1 << i))
                order.pop()

    yield from walk(0)


def count_linear_extensions(P):
    n = len(P)
    need = [0] * n
    for i in range(n):
        for j in P._down[i]:
            need[i] |= 1 << j
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(placed):
        if placed == full:
            return 1
        return sum(count(placed | (1 << i)) for i in range(n)
                   if not (placed >> i) & 1 and need[i] & placed == need[i])

    return count(0)


def random_linear_extension(P, rng):
    """A random topological sort: repeatedly pick a uniformly random available element."""
    n = len(P)
    remaining = [len(P._down[i]) for i in range(n)]
    avail = [i for i in range(n) if remaining[i] == 0]
    out = []
    while avail:
        k = rng.randrange(len(avail))
        avail[k], avail[-1] = avail[-1], avail[k]
        i = avail.pop()
        out.append(P.elements[i])
        for j in P._up[i]:
            remaining[j] -= 1
            if remaining[j] == 0:
                avail.append(j)
    return tuple(out)


def is_linear_extension(P, order):
    order = list(order)
    if len(order) != len(P) or set(order) != set(P.elements):
        return False
    pos = {x: k for k, x in enumerate(order)}
    return all(pos[a] < pos[b] for a, b in P.cover_list())


# isomorphism

def _signatures(P):
    n = len(P)
    depth = [0] * n
    for i in P._topo:
        for j in P._up[i]:
            depth[j] = max(depth[j], depth[i] + 1)
    height = [0] * n
    for i in reversed(P._topo):
        for j in P._up[i]:
            height[i] = max(height[i], height[j] + 1)
    return [(len(P._up[i]), len(P._down[i]), bin(P._above[i]).count("1"),
             bin(P._below[i]).count("1"), depth[i], height[i]) for i in range(n)]


def are_isomorphic(P, Q):
    """An order isomorphism P -> Q as a dict, or None."""
    n = len(P)
    if n != len(Q) or len(P.covers) != len(Q.covers):
        return None
    sp, sq = _signatures(P), _signatures(Q)
    if sorted(sp) != sorted(sq):
        return None
    by_sig = {}
    for j, s in enumerate(sq):
        by_sig.setdefault(s, []).append(j)

    # visit P in an order where each element is adjacent to something earlier when possible
    order, seen = [], set()
    for start in sorted(range(n), key=lambda i: (len(by_sig[sp[i]]), i)):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            i = queue.pop(0)
            order.append(i)
            for j in P._up[i] + P._down[i]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)

    up_q = [set(t) for t in Q._up]
    down_q = [set(t) for t in Q._down]
    fwd, used = {}, set()

    def consistent(i, j):
        for k in P._up[i]:
            if k in fwd and fwd[k] not in up_q[j]:
                return False
        for k in P._down[i]:
            if k in fwd and fwd[k] not in down_q[j]:
                return False
        back_up = sum(1 for k in P._up[i] if k in fwd)
        back_down = sum(1 for k in P._down[i] if k in fwd)
        return (back_up == sum(1 for k in up_q[j] if k in used)
                and back_down == sum(1 for k in down_q[j] if k in used))

    def search(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in by_sig[sp[i]]:
            if j in used or not consistent(i, j):
                continue
            fwd[i] = j
            used.add(j)
            if search(pos + 1):
                return True
            del fwd[i]
            used.discard(j)
        return False

    if not search(0):
        return None
    return {P.elements[i]: Q.elements[j] for i, j in fwd.items()}


def verify_map_isomorphism(P, Q, mapping):
    """True iff mapping is a bijection P -> Q preserving and reflecting the order."""
    try:
        image = [mapping[x] for x in P.elements]
    except (KeyError, TypeError):
        return False
    if len(set(image)) != len(image) or len(image) != len(Q) or not all(y in Q for y in image):
        return False
    idx = [Q.index(y) for y in image]
    for i in range(len(P)):
        target = 0
        for k in _bits(P._above[i]):
            target |= 1 << idx[k]
        if target != Q._above[idx[i]]:
            return False
    return True
