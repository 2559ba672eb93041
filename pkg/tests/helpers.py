"""Shared generators for the test suite."""

import itertools
import random

from shellab.poset import Poset, are_isomorphic


def raw(P, lam):
    """Oracle view of a labeled poset: elements, covers, bottom, top, lab, leq."""
    return (list(P.elements), list(P.cover_list()), P.bottom, P.top,
            lambda root, x, y: lam.label(root, x, y), lam.order.leq)


def small_posets(n):
    """One poset per isomorphism class on n elements (naturally labeled 0..n-1)."""
    pairs = list(itertools.combinations(range(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
            continue
        P = Poset.from_relation(list(range(n)), rel)
        if all(are_isomorphic(P, Q) is None for Q in found):
            found.append(P)
    return found


def partitions_of(n):
    if n == 0:
        yield ()
        return

    def walk(rem, cap):
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for rest in walk(rem - k, k):
                yield (k,) + rest

    yield from walk(n, n)


def sample(items, k, seed=0):
    items = list(items)
    if len(items) <= k:
        return items
    return random.Random(seed).sample(items, k)


# acceptance results, printed by conftest at the end of the run
ACCEPTANCE = {}


def record(number, title, ok, seconds, detail=""):
    ACCEPTANCE[number] = (title, ok, seconds, detail)
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({seconds:.2f}s)"
    return line + (f" -- {detail}" if detail else "")
