"""Order complexes, shelling checks, restriction maps and the Cord/shelling equivalence."""

import itertools
import random
from dataclasses import dataclass, field

from .descent_order import build_mcd
from .labeling import Comparison, descents, label_sequence, lex_compare
from .poset import count_linear_extensions, linear_extensions, random_linear_extension


class OrderComplex:
    """Facets are maximal chains (as vertex sets); faces are handled as bitmasks."""

    def __init__(self, vertices, chains):
        self.vertices = tuple(vertices)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self.chains = [tuple(c) for c in chains]
        self.facets = [frozenset(c) for c in self.chains]
        self._mask = {f: self.mask(f) for f in self.facets}

    def mask(self, face):
        out = 0
        for v in face:
            out |= 1 << self._vindex[v]
        return out

    def unmask(self, mask):
        return frozenset(v for i, v in enumerate(self.vertices) if (mask >> i) & 1)

    def facet_of(self, item):
        """Accept a facet (set) or a chain (tuple) and return the facet."""
        f = frozenset(item)
        if f not in self._mask:
            raise ValueError(f"{item!r} is not a facet")
        return f

    def __len__(self):
        return len(self.facets)


def order_complex(P, drop_bounds=False):
    chains = P.maximal_chains()
    if drop_bounds:
        chains = [c[1:-1] for c in chains]
        vertices = [x for x in P.elements if x not in (P.bottom, P.top)]
    else:
        vertices = list(P.elements)
    return OrderComplex(vertices, chains)


def _masks(cx, facet_order):
    return [cx._mask[cx.facet_of(f)] for f in facet_order]


def _popcount(x):
    return bin(x).count("1")


def is_shelling_codim1(cx, facet_order):
    """Each new facet meets the earlier ones in a pure codimension-one subcomplex."""
    ms = _masks(cx, facet_order)
    for j in range(1, len(ms)):
        fj = ms[j]
        size = _popcount(fj)
        inters = [fj & ms[i] for i in range(j)]
        big = [s for s in inters if _popcount(s) == size - 1]
        for s in inters:
            if not any(s & b == s for b in big):
                return False
    return True


def restriction_map(cx, facet_order):
    """R(F_j): vertices x of F_j with F_j minus x inside an earlier facet."""
    ms = _masks(cx, facet_order)
    out = {}
    for j, fj in enumerate(ms):
        r = 0
        for v in range(len(cx.vertices)):
            if (fj >> v) & 1:
                rest = fj & ~(1 << v)
                if any(rest & ms[i] == rest for i in range(j)):
                    r |= 1 << v
        out[cx.facet_of(facet_order[j])] = cx.unmask(r)
    return out


def descent_restriction(P, labeling):
    """Maximal chain -> its set of descents (always interior elements)."""
    return {m: frozenset(descents(labeling, m)) for m in P.maximal_chains()}


def verify_partition_characterization(cx, facet_order, R):
    """Faces split as disjoint intervals [R(F_i), F_i], and R(F_i) in F_j forces i <= j."""
    ms = _masks(cx, facet_order)
    rs = []
    for f in facet_order:
        rs.append(cx.mask(R[cx.facet_of(f)]))
    for r, f in zip(rs, ms):
        if r & f != r:
            return False
    for i, r in enumerate(rs):
        for j in range(i):
            if r & ms[j] == r:
                return False
    faces = set()
    for f in ms:
        bits = [b for b in range(len(cx.vertices)) if (f >> b) & 1]
        for k in range(len(bits) + 1):
            for sub in itertools.combinations(bits, k):
                faces.add(sum(1 << b for b in sub))
    for g in faces:
        hits = sum(1 for r, f in zip(rs, ms) if r & g == r and g & f == g)
        if hits != 1:
            return False
    return True


def is_shelling_with_descents(P, labeling, order, cx=None, dmap=None):
    cx = cx or order_complex(P)
    dmap = dmap or descent_restriction(P, labeling)
    if not is_shelling_codim1(cx, order):
        return False
    R = restriction_map(cx, order)
    return all(R[frozenset(m)] == dmap[tuple(m)] for m in order)


@dataclass
class EquivalenceVerdict:
    linear_extension: bool
    shelling: bool

    @property
    def status(self):
        if self.linear_extension != self.shelling:
            return "Mismatch"
        return "LinExtAndShelling" if self.linear_extension else "Neither"


def _is_linext_of_cord(mcd, order):
    pos = {tuple(c): k for k, c in enumerate(order)}
    if len(pos) != len(mcd) or set(pos) != set(mcd.chains):
        return False
    return all(pos[mcd.chains[i]] < pos[mcd.chains[j]] for i, j in mcd.move_pairs)


def shelling_equivalence_check(P, labeling, order, mcd=None, cx=None, dmap=None):
    order = [tuple(c) for c in order]
    mcd = mcd or build_mcd(P, labeling)
    return EquivalenceVerdict(_is_linext_of_cord(mcd, order),
                              is_shelling_with_descents(P, labeling, order, cx, dmap))


def homology_facets(P, labeling):
    """Chains whose every interior element is a descent."""
    return {m for m in P.maximal_chains() if len(descents(labeling, m)) == len(m) - 2}


def lex_shelling_order(P, labeling):
    """Chains sorted lexicographically by label sequence; ties and incomparables by index."""
    chains = P.maximal_chains()
    seqs = [label_sequence(labeling, c) for c in chains]
    n = len(chains)
    before = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and lex_compare(seqs[i], seqs[j], labeling.order) is Comparison.LESS:
                before[j].add(i)
    out, placed = [], set()
    while len(out) < n:
        k = next(j for j in range(n) if j not in placed and before[j] <= placed)
        out.append(chains[k])
        placed.add(k)
    return out


@dataclass
class ShellingReport:
    order: list
    restriction: list
    codim1_ok: bool
    partition_ok: bool
    containment_ok: bool
    homology: list = field(default_factory=list)
    labels: list = field(default_factory=list)


def shelling_report(P, labeling, order, drop_bounds=False):
    order = [tuple(c) for c in order]
    cx = order_complex(P, drop_bounds)
    view = [c[1:-1] for c in order] if drop_bounds else order
    codim1 = is_shelling_codim1(cx, view)
    R = restriction_map(cx, view)
    rs = [R[frozenset(f)] for f in view]
    partition = verify_partition_characterization(cx, view, R)
    containment = all(not rs[i] <= frozenset(view[j]) for i in range(len(view)) for j in range(i))
    homology = [frozenset(f) == r for f, r in zip(view, rs)]
    labels = [label_sequence(labeling, c) for c in order]
    return ShellingReport(order, rs, codim1, partition, containment, homology, labels)


@dataclass
class AuditReport:
    chains: int
    exhaustive: bool
    orders_checked: int = 0
    linear_extensions_checked: int = 0
    agree_true: int = 0
    agree_false: int = 0
    mismatches: list = field(default_factory=list)
    linear_extension_count: int = None

    @property
    def ok(self):
        return not self.mismatches


def equivalence_audit(P, labeling, seed=0, samples=500, exhaustive_threshold=7,
                      linext_limit=10_000, mcd=None):
    """Compare the two verdicts over many facet orders.

    With at most ``exhaustive_threshold`` chains every order is checked.
    Otherwise ``samples`` seeded random orders are checked, plus every linear
    extension of Cord when there are at most ``linext_limit`` of them (else an
    equal number of random linear extensions).
    """
    mcd = mcd or build_mcd(P, labeling)
    cx = order_complex(P)
    dmap = descent_restriction(P, labeling)
    chains = list(mcd.chains)
    report = AuditReport(len(chains), len(chains) <= exhaustive_threshold)

    def check(order):
        v = shelling_equivalence_check(P, labeling, order, mcd, cx, dmap)
        report.orders_checked += 1
        if v.status == "Mismatch":
            report.mismatches.append((tuple(order), v))
        elif v.linear_extension:
            report.agree_true += 1
        else:
            report.agree_false += 1

    if report.exhaustive:
        for order in itertools.permutations(chains):
            check(order)
        return report
    rng = random.Random(seed)
    for _ in range(samples):
        order = chains[:]
        rng.shuffle(order)
        check(order)
    cord = mcd.as_poset()
    count = count_linear_extensions(cord) if len(cord) <= 24 else None
    report.linear_extension_count = count
    if count is not None and count <= linext_limit:
        for ext in linear_extensions(cord):
            check(ext)
            report.linear_extensions_checked += 1
    else:
        for _ in range(max(samples, 100)):
            check(random_linear_extension(cord, rng))
            report.linear_extensions_checked += 1
    return report
