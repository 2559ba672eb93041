"""Polygon moves and the maximal chain descent order Cord(P, λ)."""

from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import CycleDetected, NotADescent, NotANonCover, NotRanked
from .labeling import (Comparison, ascending_chain, ascending_chains, descent_positions,
                       label_sequence, lex_compare, restrict)
from .poset import Poset, _bits, _reach, _topological_order, closed_interval, rank_function


@dataclass(frozen=True)
class PolygonMove:
    """m -> m': m is ascending on [bottom, top], m' is a length-two descent there."""
    source: tuple
    target: tuple
    bottom: object
    top: object
    position: int
    removed: tuple
    inserted: object


@dataclass(frozen=True)
class PolygonShape:
    bottom: object
    top: object
    position: int
    length: int


def differ_by_polygon(m, m2):
    """Where m2 replaces a segment of m by a single new element, or None.

    Follows the definition literally: m has length r, m2 length r' <= r, they
    agree below position i, m2[i+1] = m[i+l] with l >= 1, m2[i] avoids
    m[i..i+l], and the tails agree.
    """
    m, m2 = tuple(m), tuple(m2)
    r, r2 = len(m) - 1, len(m2) - 1
    if m == m2 or r2 > r or r2 < 2 or m[0] != m2[0]:
        return None
    l = r - r2 + 1
    i = next(k for k in range(len(m2)) if m2[k] != m[k])
    if not 1 <= i <= r - 1 or i + l > r:
        return None
    if m2[i + 1:] != m[i + l:]:
        return None
    if m2[i] in m[i:i + l + 1]:
        return None
    return PolygonShape(m[i - 1], m[i + l], i, l)


class _AscCache:
    def __init__(self, P, labeling):
        self.P, self.labeling, self.store = P, labeling, {}

    def __call__(self, w, z, root):
        key = (w, z) if not self.labeling.rooted else (tuple(root), z)
        if key not in self.store:
            self.store[key] = ascending_chain(self.P, self.labeling, w, z, root)
        return self.store[key]


def _move_at(P, labeling, m2, p, asc):
    w, x, z = m2[p - 1], m2[p], m2[p + 1]
    root = m2[:p]
    chain = asc(w, z, root)
    source = m2[:p] + chain[1:-1] + m2[p + 1:]
    return PolygonMove(source, m2, w, z, p, chain[1:-1], x)


def polygon_predecessor(P, labeling, m2, x):
    """The unique m with m -> m2 and m2 minus m = {x}."""
    m2 = tuple(m2)
    labels = label_sequence(labeling, m2)
    if x not in m2[1:-1] or m2.index(x) not in descent_positions(labels, labeling.order):
        raise NotADescent(f"{x!r} is not a descent of the chain")
    return _move_at(P, labeling, m2, m2.index(x), _AscCache(P, labeling)).source


def all_polygon_moves(P, labeling):
    asc = _AscCache(P, labeling)
    moves = []
    for m2 in P.maximal_chains():
        labels = label_sequence(labeling, m2)
        for p in descent_positions(labels, labeling.order):
            moves.append(_move_at(P, labeling, m2, p, asc))
    return moves


class MCDOrder:
    """Cord(P, λ): maximal chains ordered by the closure of polygon moves."""

    def __init__(self, poset, labeling, chains, moves):
        self.poset = poset
        self.labeling = labeling
        self.chains = list(chains)
        self.index = {c: i for i, c in enumerate(self.chains)}
        self.labels = [label_sequence(labeling, c) for c in self.chains]
        self.moves = sorted(moves, key=lambda mv: (self.index[mv.source], self.index[mv.target]))
        n = len(self.chains)
        succ = [set() for _ in range(n)]
        for mv in self.moves:
            succ[self.index[mv.source]].add(self.index[mv.target])
        self._succ = [sorted(s) for s in succ]
        try:
            order = _topological_order(n, self._succ)
        except CycleDetected:
            raise CycleDetected("polygon moves form a cycle; the labeling is not a CL") from None
        self._above = _reach(n, self._succ, order)
        covers = set()
        for i in range(n):
            for j in self._succ[i]:
                if not any(k != j and (self._above[k] >> j) & 1 for k in self._succ[i]):
                    covers.add((i, j))
        self.covers = frozenset(covers)
        self.move_pairs = [(self.index[mv.source], self.index[mv.target]) for mv in self.moves]

    def __len__(self):
        return len(self.chains)

    def _i(self, c):
        return c if isinstance(c, int) else self.index[tuple(c)]

    def leq(self, a, b):
        return bool((self._above[self._i(a)] >> self._i(b)) & 1)

    def lt(self, a, b):
        return self._i(a) != self._i(b) and self.leq(a, b)

    def is_cover(self, a, b):
        return (self._i(a), self._i(b)) in self.covers

    def is_move(self, a, b):
        return (self._i(a), self._i(b)) in set(self.move_pairs)

    def descents(self, c):
        i = self._i(c)
        return descent_positions(self.labels[i], self.labeling.order)

    def label_string(self, c):
        labs = self.labels[self._i(c)]
        parts = [str(v) for v in labs]
        return "".join(parts) if all(len(p) == 1 for p in parts) else ",".join(parts)

    def chain_names(self):
        """Label-sequence names, disambiguated when two chains share a sequence."""
        raw = [self.label_string(i) for i in range(len(self))]
        out = []
        for i, s in enumerate(raw):
            out.append(s if raw.count(s) == 1 else f"{s}#{i}")
        return out

    def minimal(self):
        below = {j for _, j in self.move_pairs}
        return [i for i in range(len(self)) if i not in below]

    def maximal(self):
        return [i for i in range(len(self)) if not self._succ[i]]

    def down_covers(self, c):
        j = self._i(c)
        return sorted(i for i, k in self.covers if k == j)

    def up_covers(self, c):
        i = self._i(c)
        return sorted(k for j, k in self.covers if j == i)

    def as_poset(self):
        """Cord as a Poset whose elements are the chains themselves."""
        names = dict(zip(self.chains, self.chain_names()))
        return Poset(self.chains, [(self.chains[i], self.chains[j]) for i, j in sorted(self.covers)],
                     names=names, _checked=True)

    def ascending_chain(self):
        mins = self.minimal()
        return self.chains[mins[0]] if len(mins) == 1 else None

    def path(self, a, b):
        """A shortest move path from a to b (list of indices), canonical tie-break."""
        a, b = self._i(a), self._i(b)
        prev = {a: None}
        queue = deque([a])
        while queue:
            i = queue.popleft()
            if i == b:
                break
            for j in self._succ[i]:
                if j not in prev and self.leq(j, b):
                    prev[j] = i
                    queue.append(j)
        if b not in prev:
            return None
        out = [b]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]


def build_mcd(P, labeling):
    return MCDOrder(P, labeling, P.maximal_chains(), all_polygon_moves(P, labeling))


def is_polygon_complete(mcd):
    bad = [mv for mv, pair in zip(mcd.moves, mcd.move_pairs) if pair not in mcd.covers]
    return not bad, bad


# inversions

@dataclass(frozen=True)
class InversionSet:
    positions: frozenset
    labels: tuple

    def __len__(self):
        return len(self.positions)

    def label_pairs(self):
        return {(self.labels[i - 1], self.labels[j - 1]) for i, j in self.positions}


def inversion_set(labeling, m, root=None):
    labels = label_sequence(labeling, m, root)
    order = labeling.order
    pos = frozenset((i + 1, j + 1) for i in range(len(labels)) for j in range(i + 1, len(labels))
                    if not order.leq(labels[i], labels[j]))
    return InversionSet(pos, labels)


def is_inversion_ranked(P, labeling, mcd=None):
    """Returns (verdict, first move whose inversion count does not rise by one)."""
    if rank_function(P) is None:
        raise NotRanked("inversion ranked is defined for ranked posets")
    mcd = mcd or build_mcd(P, labeling)
    size = {}
    for c in mcd.chains:
        size[c] = len(inversion_set(labeling, c))
    for mv in mcd.moves:
        if size[mv.target] != size[mv.source] + 1:
            return False, mv
    return True, None


def downward_cover_counts(mcd):
    out = {}
    for i, c in enumerate(mcd.chains):
        out[c] = (len(mcd.down_covers(i)), len(mcd.descents(i)))
    return out


@dataclass
class RankReport:
    inversion_ranked: bool
    counterexample: object = None
    rank: dict = None
    ranked_by_inversions: bool = None
    homology_at_top_rank: bool = None
    top_rank: int = None

    @property
    def ok(self):
        if not self.inversion_ranked:
            return None
        return bool(self.ranked_by_inversions and self.homology_at_top_rank)


def mcd_rank_report(mcd):
    P, lab = mcd.poset, mcd.labeling
    try:
        verdict, bad = is_inversion_ranked(P, lab, mcd)
    except NotRanked:
        return RankReport(False)
    if not verdict:
        return RankReport(False, bad)
    cord = mcd.as_poset()
    rk = rank_function(cord)
    inv = {c: len(inversion_set(lab, c)) for c in mcd.chains}
    n = rank_function(P)[P.top]
    top = comb(n, 2)
    descending = {c for i, c in enumerate(mcd.chains) if len(mcd.descents(i)) == len(c) - 2}
    at_top = {c for c in mcd.chains if inv[c] == top}
    return RankReport(True, None, rk, rk is not None and rk == inv, descending == at_top, top)


# witnesses for non-covers

@dataclass(frozen=True)
class EasyWitness:
    """c ascending from x_1 to x_{k+1}; c' = x_1 < x_2' < x_k a descent; both above ``root``."""
    root: tuple
    c: tuple
    c_prime: tuple


def find_easy_noncover_witness(P, labeling):
    """Search for the simple sufficient pattern for a non-cover move.

    The top label of c is read with the root through x_2' (the chain c' * x_{k+1}),
    which is what makes c' * x_{k+1} fail to be ascending; for edge labelings
    this is the same label either way.
    """
    order = labeling.order
    asc = _AscCache(P, labeling)
    for x1 in P.elements:
        for r in P.roots(x1):
            for x2 in P.upper_covers(x1):
                l1 = labeling.label(r, x1, x2)
                for xk in P.upper_covers(x2):
                    l2 = labeling.label(r + (x2,), x2, xk)
                    if order.leq(l1, l2):
                        continue
                    chain = asc(x1, xk, r)
                    last = labeling.label(r + chain[1:-1], chain[-2], xk)
                    for nxt in P.upper_covers(xk):
                        if not order.leq(last, labeling.label(r + chain[1:], xk, nxt)):
                            continue
                        if order.lt(labeling.label(r + (x2, xk), xk, nxt), l2):
                            return EasyWitness(tuple(r), chain + (nxt,), (x1, x2, xk))
    return None


@dataclass(frozen=True)
class CharacterizationWitness:
    y: object
    xs: tuple
    zs: tuple
    m: tuple
    m_prime: tuple
    ms: tuple
    cs: tuple
    path: tuple

    @property
    def n(self):
        return len(self.xs)


def find_characterization_witness(P, labeling, move, mcd=None):
    """Elements and chains of the non-cover characterization, by replaying a move path."""
    mcd = mcd or build_mcd(P, labeling)
    src, tgt = (move.source, move.target) if isinstance(move, PolygonMove) else move
    i, j = mcd._i(src), mcd._i(tgt)
    if (i, j) not in set(mcd.move_pairs) or (i, j) in mcd.covers:
        raise NotANonCover("not a polygon move that fails to be a cover")
    detour = next(k for k in mcd._succ[i] if k != j and mcd.leq(k, j))
    path = [i] + mcd.path(detour, j)
    chains = [mcd.chains[t] for t in path]

    while True:
        coatoms = [d[-2] for d in chains]
        if all(c == coatoms[0] for c in coatoms):
            chains = [d[:-1] for d in chains]
            continue
        break
    y = chains[0][-1]
    x1 = coatoms[0]
    xs, zs, ms, cs = [x1], [], [], []
    for t in range(len(chains) - 1):
        if coatoms[t] == coatoms[t + 1]:
            continue
        d, e = chains[t], chains[t + 1]
        z = e[-3]
        pos = d.index(z)
        zs.append(z)
        ms.append(d[:pos + 1])
        cs.append(d[pos:])
        xs.append(coatoms[t + 1])
    assert xs[-1] == x1
    return CharacterizationWitness(y, tuple(xs[:-1]), tuple(zs), chains[0][:-1], chains[-1][:-1],
                                   tuple(ms), tuple(cs), tuple(chains))


def _lower_cord(P, labeling, x, cache):
    if x not in cache:
        I = closed_interval(P, P.bottom, x)
        cache[x] = build_mcd(I, restrict(P, labeling, P.bottom, x, (P.bottom,)))
    return cache[x]


def verify_characterization_witness(P, labeling, w):
    """Re-check the descent and chain-relation conditions directly.  Returns (ok, reason)."""
    order = labeling.order
    n = len(w.xs)
    if n < 2 or len(w.zs) != n or len(w.ms) != n or len(w.cs) != n:
        return False, "need n >= 2 with matching lists"
    xs = list(w.xs) + [w.xs[0]]
    for i in range(n):
        z, x_next, m_i, c_i = w.zs[i], xs[i + 1], tuple(w.ms[i]), tuple(w.cs[i])
        if m_i[0] != P.bottom or m_i[-1] != z or not P.is_saturated_chain(m_i):
            return False, f"m_{i + 1} is not a saturated chain from the bottom to z_{i + 1}"
        if not (P.is_cover(z, x_next) and P.is_cover(x_next, w.y)):
            return False, f"z_{i + 1} < x_{i + 2} < y is not saturated"
        l1 = labeling.label(m_i, z, x_next)
        l2 = labeling.label(m_i + (x_next,), x_next, w.y)
        if order.leq(l1, l2):
            return False, f"z_{i + 1} < x_{i + 2} < y is not a descent"
        asc = ascending_chains(P, labeling, z, w.y, m_i)
        if asc != [c_i]:
            return False, f"c_{i + 1} is not the unique ascending chain of [z_{i + 1}, y]"
        if c_i[-2] != w.xs[i]:
            return False, f"x_{i + 1} < y is not on c_{i + 1}"
    cache = {}
    x1 = w.xs[0]
    low = _lower_cord(P, labeling, x1, cache)
    m, m2 = tuple(w.m), tuple(w.m_prime)
    if len(m) < 2 or m not in low.index or m2 not in low.index or not low.is_move(m, m2):
        return False, "m -> m' is not a polygon move in [0, x_1]"

    def upto(c, x):
        return c[:c.index(x) + 1]

    first = tuple(w.ms[0]) + upto(w.cs[0], x1)[1:]
    if not low.leq(m, first):
        return False, "m is not below m_1 * c_1 in [0, x_1]"
    for i in range(n - 1):
        x_next = xs[i + 1]
        cord = _lower_cord(P, labeling, x_next, cache)
        a = tuple(w.ms[i]) + (x_next,)
        b = tuple(w.ms[i + 1]) + upto(w.cs[i + 1], x_next)[1:]
        if not cord.lt(a, b):
            return False, f"chain relation {i + 1} fails"
    last = tuple(w.ms[-1]) + (x1,)
    if not low.leq(last, m2):
        return False, "m_n * z_n * x_1 is not below m'"
    return True, ""


def verify_lifting(P, labeling, x, y, root=None, mcd=None):
    """Relations of the rooted interval's Cord lift to Cord(P) for every extension above y."""
    if root is None:
        root = P.roots(x)[0]
    root = tuple(root)
    mcd = mcd or build_mcd(P, labeling)
    I = closed_interval(P, x, y)
    sub = build_mcd(I, restrict(P, labeling, x, y, root))
    tails = P.saturated_chains(y, P.top)
    for a in range(len(sub)):
        for b in _bits(sub._above[a]):
            for tail in tails:
                ca = root[:-1] + sub.chains[a] + tail[1:]
                cb = root[:-1] + sub.chains[b] + tail[1:]
                if not mcd.leq(ca, cb):
                    return False
    return True


def lex_increases(mcd):
    """Every move strictly increases the label sequence lexicographically."""
    order = mcd.labeling.order
    return all(lex_compare(mcd.labels[i], mcd.labels[j], order) is Comparison.LESS
               for i, j in mcd.move_pairs)


def top_polygon_violations(mcd):
    """Moves whose polygon has top 1̂ but which are not covers (always empty for a CL)."""
    top = mcd.poset.top
    return [mv for mv, pair in zip(mcd.moves, mcd.move_pairs)
            if mv.top == top and pair not in mcd.covers]


def root_independence_violations(mcd):
    """Covers m ⋖ m' whose re-rooted copies c*m_x, c*m'_x are not covers (EL only).

    x is the bottom of the polygon and c ranges over every maximal chain of [0̂, x].
    """
    P = mcd.poset
    bad = []
    for i, j in sorted(mcd.covers):
        m, m2 = mcd.chains[i], mcd.chains[j]
        shape = differ_by_polygon(m, m2)
        if shape is None:
            continue
        x = shape.bottom
        k = m.index(x)
        for c in P.saturated_chains(P.bottom, x):
            a, b = c + m[k + 1:], c + m2[k + 1:]
            if not mcd.is_cover(a, b):
                bad.append((m, m2, c))
    return bad


def prefix_agreement_violations(mcd):
    """Triples a ⪯ c ⪯ b where c does not share the common initial segment of a and b."""
    bad = []
    n = len(mcd)
    for a in range(n):
        for b in _bits(mcd._above[a]):
            if a == b:
                continue
            ca, cb = mcd.chains[a], mcd.chains[b]
            k = 0
            while k < min(len(ca), len(cb)) and ca[k] == cb[k]:
                k += 1
            for c in _bits(mcd._above[a]):
                if mcd.leq(c, b) and mcd.chains[c][:k] != ca[:k]:
                    bad.append((a, c, b))
    return bad
