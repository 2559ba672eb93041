"""Edge and chain-edge labelings, descents, lexicographic comparison, validation.

Every labeling answers ``label(root, x, y)`` where ``root`` is a saturated chain
from 0̂ ending at ``x`` (a tuple of elements).  Edge labelings ignore the root.
"""

import enum
from dataclasses import dataclass, field

from .errors import LabelingError, MissingLabel, NotComparable
from .poset import closed_interval, rank_function


class Comparison(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


# label posets

class NaturalOrder:
    """Labels compared with Python's ``<=`` (integers by default)."""

    name = "integers"

    def leq(self, a, b):
        return a <= b

    def lt(self, a, b):
        return a != b and a <= b

    def is_total(self, values):
        return True

    def __eq__(self, other):
        return isinstance(other, NaturalOrder)

    def __hash__(self):
        return hash("integers")

    def __repr__(self):
        return "NaturalOrder()"


INTEGERS = NaturalOrder()


class PosetOrder:
    """Labels drawn from a finite poset Λ."""

    name = "poset"

    def __init__(self, poset):
        self.poset = poset

    def leq(self, a, b):
        return self.poset.leq(a, b)

    def lt(self, a, b):
        return a != b and self.poset.leq(a, b)

    def is_total(self, values):
        vals = list(values)
        return all(self.poset.comparable(a, b) for a in vals for b in vals)

    def __repr__(self):
        return f"PosetOrder({self.poset!r})"


# labelings

class EdgeLabeling:
    rooted = False

    def __init__(self, labels, order=INTEGERS):
        self.labels = dict(labels)
        self.order = order

    def label(self, root, x, y):
        try:
            return self.labels[(x, y)]
        except KeyError:
            raise MissingLabel(f"no label on cover ({x!r}, {y!r})") from None

    def __call__(self, x, y):
        return self.label(None, x, y)

    def __repr__(self):
        return f"EdgeLabeling({len(self.labels)} edges)"


class ChainEdgeLabeling:
    """Labels that may depend on the root chain below an edge.

    ``base`` gives root-independent defaults.  ``rooted`` maps
    ``(root_prefix, x, y)`` to a label; the longest prefix of the actual root
    wins, so keying on full roots is the exact-chain case.  Alternatively pass
    ``func(root, x, y)``.
    """

    rooted = True

    def __init__(self, base=None, rooted=None, order=INTEGERS, func=None):
        self.base = dict(base or {})
        self.order = order
        self.func = func
        self.overrides = {}
        for (prefix, x, y), lab in (rooted or {}).items():
            self.overrides.setdefault((x, y), []).append((tuple(prefix), lab))
        for entries in self.overrides.values():
            entries.sort(key=lambda e: -len(e[0]))

    def label(self, root, x, y):
        if self.func is not None:
            return self.func(tuple(root), x, y)
        root = tuple(root) if root is not None else ()
        for prefix, lab in self.overrides.get((x, y), ()):
            if root[:len(prefix)] == prefix:
                return lab
        try:
            return self.base[(x, y)]
        except KeyError:
            raise MissingLabel(f"no label on cover ({x!r}, {y!r}) with root {root!r}") from None

    def rooted_entries(self):
        for (x, y), entries in self.overrides.items():
            for prefix, lab in entries:
                yield prefix, x, y, lab

    def __repr__(self):
        return f"ChainEdgeLabeling({len(self.base)} base, {sum(map(len, self.overrides.values()))} rooted)"


class _RebasedLabeling(ChainEdgeLabeling):
    """A CL seen from inside a rooted interval: roots are re-based on ``prefix``."""

    def __init__(self, parent, prefix):
        self.parent = parent
        self.prefix = tuple(prefix[:-1])
        self.order = parent.order
        self.func = None

    def label(self, root, x, y):
        return self.parent.label(self.prefix + tuple(root), x, y)


# sequences

def _root_for(chain, root):
    if root is None or len(root) == 0:
        return (chain[0],)
    root = tuple(root)
    if root[-1] != chain[0]:
        raise ValueError("root must end at the bottom of the chain")
    return root


def label_sequence(labeling, chain, root=None):
    chain = tuple(chain)
    if len(chain) < 2:
        return ()
    prefix = _root_for(chain, root)
    out = []
    for u, v in zip(chain, chain[1:]):
        out.append(labeling.label(prefix, u, v))
        prefix = prefix + (v,)
    return tuple(out)


def descent_positions(labels, order):
    """Indices i (1-based, interior) with labels[i-1] not <= labels[i]."""
    return [i for i in range(1, len(labels)) if not order.leq(labels[i - 1], labels[i])]


def descents(labeling, chain, root=None):
    chain = tuple(chain)
    labels = label_sequence(labeling, chain, root)
    return {chain[i] for i in descent_positions(labels, labeling.order)}


def is_ascending(labeling, chain, root=None):
    labels = label_sequence(labeling, chain, root)
    return not descent_positions(labels, labeling.order)


def lex_compare(a, b, order=INTEGERS):
    for x, y in zip(a, b):
        if x == y:
            continue
        if order.leq(x, y):
            return Comparison.LESS
        if order.leq(y, x):
            return Comparison.GREATER
        return Comparison.INCOMPARABLE
    if len(a) == len(b):
        return Comparison.EQUAL
    return Comparison.LESS if len(a) < len(b) else Comparison.GREATER


def ascending_chains(P, labeling, x, y, root=None):
    """The ascending maximal chains of the rooted interval [x, y]."""
    return [c for c in P.saturated_chains(x, y) if is_ascending(labeling, c, root)]


def ascending_chain(P, labeling, x, y, root=None):
    found = ascending_chains(P, labeling, x, y, root)
    if len(found) != 1:
        raise LabelingError(f"interval [{x!r}, {y!r}] has {len(found)} ascending chains")
    return found[0]


# validation

@dataclass
class IntervalCheck:
    x: object
    y: object
    root: tuple
    ascending_count: int
    precedes_all: bool
    note: str = ""

    @property
    def ok(self):
        return self.ascending_count == 1 and self.precedes_all and not self.note


@dataclass
class ValidationReport:
    kind: str
    entries: list = field(default_factory=list)
    error: str = ""

    @property
    def valid(self):
        return not self.error and all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]

    def __bool__(self):
        return self.valid


def _check_interval(P, labeling, x, y, root):
    chains = P.saturated_chains(x, y)
    seqs = [label_sequence(labeling, c, root) for c in chains]
    asc = [k for k, s in enumerate(seqs) if not descent_positions(s, labeling.order)]
    precedes = False
    if len(asc) == 1:
        a = seqs[asc[0]]
        precedes = all(lex_compare(a, s, labeling.order) is Comparison.LESS
                       for k, s in enumerate(seqs) if k != asc[0])
    return IntervalCheck(x, y, tuple(root), len(asc), precedes)


def validate_labeling(P, labeling, kind="el"):
    """Check the EL (kind='el') or CL (kind='cl') axioms on every (rooted) interval."""
    kind = kind.lower()
    if kind not in ("el", "cl"):
        raise ValueError("kind must be 'el' or 'cl'")
    report = ValidationReport(kind)
    if not P.is_bounded():
        report.error = "poset is not bounded"
        return report
    try:
        pairs = [(x, y) for x in P.elements for y in P.up_set(x) if x != y]
        if kind == "el":
            if labeling.rooted:
                for x in P.elements:
                    roots = P.roots(x)
                    for y in P.upper_covers(x):
                        labs = {labeling.label(r, x, y) for r in roots}
                        if len(labs) > 1:
                            report.entries.append(IntervalCheck(
                                x, y, (), 0, False, note="label depends on the root"))
            first_root = {x: P.roots(x)[0] for x in P.elements}
            for x, y in pairs:
                report.entries.append(_check_interval(P, labeling, x, y, first_root[x]))
        else:
            roots = {x: P.roots(x) for x in P.elements}
            for x, y in pairs:
                for r in roots[x]:
                    report.entries.append(_check_interval(P, labeling, x, y, r))
    except MissingLabel as exc:
        report.error = str(exc)
    return report


def restrict(P, labeling, x, y, root=None):
    """The labeling induced on the rooted interval [x, y]."""
    if not P.leq(x, y):
        raise NotComparable(f"{x!r} is not below {y!r}")
    I = closed_interval(P, x, y)
    if not labeling.rooted:
        return EdgeLabeling({(a, b): labeling.label(None, a, b) for a, b in I.cover_list()},
                            labeling.order)
    if root is None:
        root = P.roots(x)[0]
    root = tuple(root)
    if root[-1] != x:
        raise ValueError("root must end at x")
    return _RebasedLabeling(labeling, root)


def standardize(seq, values):
    """Replace labels by their rank (1-based) within the sorted value set."""
    rank = {v: k + 1 for k, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in seq)


def is_sn_el(P, el):
    """Every maximal chain's label sequence is a permutation of [n], n the rank of P.

    Labels are compared after order-isomorphic standardization, so the max-min
    labeling of a partition lattice (labels 2..n) qualifies.
    """
    if el.rooted or not P.is_bounded():
        return False
    rk = rank_function(P)
    if rk is None:
        return False
    n = rk[P.top]
    seqs = [label_sequence(el, m) for m in P.maximal_chains()]
    values = {v for s in seqs for v in s}
    if len(values) != n or not el.order.is_total(values):
        return False
    if isinstance(el.order, NaturalOrder):
        key = sorted(values)
    else:
        key = sorted(values, key=lambda v: sum(1 for u in values if el.order.leq(u, v)))
    rank = {v: k + 1 for k, v in enumerate(key)}
    target = set(range(1, n + 1))
    return all(len(s) == n and {rank[v] for v in s} == target for s in seqs)


def is_polygon_strong(P, el):
    """Returns (verdict, counterexample (x, y, z) or None)."""
    if el.rooted:
        raise LabelingError("polygon strong is defined for edge labelings")
    order = el.order
    for x in P.elements:
        for y in P.upper_covers(x):
            for z in P.upper_covers(y):
                lxy, lyz = el.label(None, x, y), el.label(None, y, z)
                if order.leq(lxy, lyz):
                    continue
                asc = ascending_chain(P, el, x, z)
                yp = asc[-2]
                if not order.lt(lyz, el.label(None, yp, z)):
                    return False, (x, y, z)
    return True, None
