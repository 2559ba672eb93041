"""Young's lattice intervals, standard tableaux, tableau swaps and Left order."""

from dataclasses import dataclass

from ..errors import ShapeMismatch
from ..labeling import EdgeLabeling
from ..poset import Poset


def _clean(p):
    p = tuple(int(v) for v in p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text):
    text = text.strip().strip("()")
    return _clean(int(v) for v in text.replace(" ", "").split(",") if v) if text else ()


def shape_name(p):
    return "(" + ",".join(map(str, p)) + ")"


@dataclass(frozen=True)
class YoungShape:
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer, inner = _clean(self.outer), _clean(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if any(a < b for a, b in zip(outer, outer[1:])) or any(a < b for a, b in zip(inner, inner[1:])):
            raise ShapeMismatch("partitions must be weakly decreasing")
        if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))):
            raise ShapeMismatch("inner shape must fit inside the outer shape")

    def inner_row(self, i):
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def boxes(self):
        """Boxes (row, col), 0-based, row by row."""
        return [(i, j) for i in range(len(self.outer)) for j in range(self.inner_row(i), self.outer[i])]

    @property
    def size(self):
        return len(self.boxes)


def box_poset(shape):
    """P_{α/μ}: boxes under the product order (up-left is smaller)."""
    boxes = shape.boxes
    bset = set(boxes)
    covers = [((i, j), (i + 1, j)) for i, j in boxes if (i + 1, j) in bset]
    covers += [((i, j), (i, j + 1)) for i, j in boxes if (i, j + 1) in bset]
    return Poset(boxes, covers, names={b: f"{b[0] + 1},{b[1] + 1}" for b in boxes}, _checked=True)


@dataclass(frozen=True)
class StandardTableau:
    shape: YoungShape
    filling: tuple  # ((box, value), ...) sorted by box

    @classmethod
    def from_rows(cls, rows, inner=()):
        rows = [tuple(r) for r in rows]
        inner = _clean(inner)
        outer = tuple((inner[i] if i < len(inner) else 0) + len(r) for i, r in enumerate(rows))
        shape = YoungShape(outer, inner)
        items = {}
        for i, r in enumerate(rows):
            for k, v in enumerate(r):
                items[(i, shape.inner_row(i) + k)] = v
        T = cls(shape, tuple(sorted(items.items())))
        T.check()
        return T

    @classmethod
    def parse(cls, text, inner=()):
        rows = []
        for row in text.strip().split("/"):
            row = row.strip()
            rows.append(tuple(int(v) for v in (row.split(",") if "," in row else row)) if row else ())
        return cls.from_rows(rows, inner)

    def value(self, box):
        return dict(self.filling)[box]

    def box_of(self, v):
        for b, w in self.filling:
            if w == v:
                return b
        raise KeyError(v)

    @property
    def size(self):
        return len(self.filling)

    def rows(self):
        d = dict(self.filling)
        return tuple(tuple(d[(i, j)] for j in range(self.shape.inner_row(i), self.shape.outer[i]))
                     for i in range(len(self.shape.outer)))

    def check(self):
        d = dict(self.filling)
        if set(d) != set(self.shape.boxes):
            raise ShapeMismatch("filling does not match the shape")
        if sorted(d.values()) != list(range(1, len(d) + 1)):
            raise ShapeMismatch("values must be 1..n")
        for (i, j), v in d.items():
            if (i, j + 1) in d and d[(i, j + 1)] <= v:
                raise ShapeMismatch("rows must increase")
            if (i + 1, j) in d and d[(i + 1, j)] <= v:
                raise ShapeMismatch("columns must increase")

    def is_standard(self):
        try:
            self.check()
            return True
        except ShapeMismatch:
            return False

    def __str__(self):
        rows = self.rows()
        sep = "" if self.size < 10 else ","
        return "/".join(sep.join(map(str, r)) for r in rows)


def standard_tableaux(shape):
    """All standard fillings, generated by placing 1, 2, ... at addable boxes."""
    if not isinstance(shape, YoungShape):
        shape = YoungShape(tuple(shape))
    boxes = set(shape.boxes)
    out = []

    def addable(filled):
        for b in sorted(boxes - set(filled)):
            i, j = b
            up = (i - 1, j)
            left = (i, j - 1)
            if (up in boxes and up not in filled) or (left in boxes and left not in filled):
                continue
            yield b

    def walk(filled):
        if len(filled) == len(boxes):
            out.append(StandardTableau(shape, tuple(sorted(filled.items()))))
            return
        for b in list(addable(filled)):
            filled[b] = len(filled) + 1
            walk(filled)
            del filled[b]

    walk({})
    return sorted(out, key=lambda T: T.rows())


def young_interval(alpha, mu=(), T=None):
    """Y(μ, α) with λ_T(ν < ν + box) = T(box)."""
    shape = YoungShape(tuple(alpha), tuple(mu))
    if T is None:
        T = row_tableau(shape)
    if T.shape != shape:
        raise ShapeMismatch("tableau shape differs from α/μ")
    elems = []

    def walk(i, prefix):
        if i == len(shape.outer):
            elems.append(_clean(prefix))
            return
        hi = shape.outer[i] if i == 0 else min(shape.outer[i], prefix[-1])
        for v in range(shape.inner_row(i), hi + 1):
            walk(i + 1, prefix + (v,))

    walk(0, ())
    elems.sort(key=lambda p: (sum(p), p))
    eset = set(elems)
    covers, labels = [], {}
    for p in elems:
        padded = list(p) + [0] * (len(shape.outer) - len(p))
        for i in range(len(shape.outer)):
            q = padded[:]
            q[i] += 1
            qc = _clean(q)
            if qc in eset:
                covers.append((p, qc))
                labels[(p, qc)] = T.value((i, padded[i]))
    P = Poset(elems, covers, names={p: shape_name(p) for p in elems}, _checked=True)
    return P, EdgeLabeling(labels)


def chain_to_tableau(chain, shape):
    """T_m: the box added at step i gets value i."""
    filling = {}
    for k, (p, q) in enumerate(zip(chain, chain[1:])):
        pp = list(p) + [0] * (len(q) - len(p))
        row = next(i for i in range(len(q)) if q[i] != pp[i])
        filling[(row, pp[row])] = k + 1
    return StandardTableau(shape, tuple(sorted(filling.items())))


def tableau_to_chain(Q):
    """m_Q: add the boxes of Q in the order of their values."""
    shape = Q.shape
    cur = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    chain = [_clean(cur)]
    for v in range(1, Q.size + 1):
        i, _ = Q.box_of(v)
        cur[i] += 1
        chain.append(_clean(cur))
    return tuple(chain)


def tableau_swap(Q, i):
    """(i, i+1)Q if it is standard, else None."""
    d = dict(Q.filling)
    swapped = tuple(sorted((b, i + 1 if v == i else i if v == i + 1 else v) for b, v in d.items()))
    R = StandardTableau(Q.shape, swapped)
    return R if R.is_standard() else None


def tableau_swap_poset(shape, T):
    """Closure of Q -> (i, i+1)Q when standard and T(Q^i) < T(Q^{i+1})."""
    if not isinstance(shape, YoungShape):
        shape = YoungShape(tuple(shape))
    tabs = standard_tableaux(shape)
    pairs = []
    for Q in tabs:
        for i in range(1, Q.size):
            R = tableau_swap(Q, i)
            if R is not None and T.value(Q.box_of(i)) < T.value(Q.box_of(i + 1)):
                pairs.append((Q, R))
    return Poset.from_relation(tabs, pairs, names={Q: str(Q) for Q in tabs})


def left_order(shape):
    """Closure of Q -> (i, i+1)Q when i lies in a row strictly above i+1 in Q."""
    if not isinstance(shape, YoungShape):
        shape = YoungShape(tuple(shape))
    tabs = standard_tableaux(shape)
    pairs = []
    for Q in tabs:
        for i in range(1, Q.size):
            R = tableau_swap(Q, i)
            if R is not None and Q.box_of(i)[0] < Q.box_of(i + 1)[0]:
                pairs.append((Q, R))
    return Poset.from_relation(tabs, pairs, names={Q: str(Q) for Q in tabs})


def row_tableau(shape):
    if not isinstance(shape, YoungShape):
        shape = YoungShape(tuple(shape))
    filling = {b: k + 1 for k, b in enumerate(shape.boxes)}
    return StandardTableau(shape, tuple(sorted(filling.items())))


def row_word(T):
    return tuple(v for row in T.rows() for v in row)
