"""Figure fixtures shipped as JSON, with their expected maximal chain descent orders."""

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import NamedTuple

from ..errors import UnknownFixture
from ..io import load_document
from ..poset import Poset, are_isomorphic
from .lattices import (boolean_lattice, canonical_partition, max_min_labeling,
                       minimal_labeling, partition_lattice)
from .young import StandardTableau, YoungShape, chain_to_tableau, young_interval


def fixture_names():
    root = resources.files("shellab") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_document(name):
    path = resources.files("shellab") / "fixtures" / f"{name}.json"
    if not path.is_file():
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    return json.loads(path.read_text())


@dataclass
class ExpectedCord:
    key: str  # "labels", "chains" or "tableaux"
    elements: list
    covers: list
    non_cover_moves: list = field(default_factory=list)

    @classmethod
    def from_doc(cls, doc):
        return cls(doc["key"], list(doc["elements"]), [tuple(c) for c in doc["covers"]],
                   [tuple(c) for c in doc.get("non_cover_moves", [])])

    def as_poset(self):
        return Poset(self.elements, self.covers)

    def keys(self, mcd):
        """Per-chain key strings of mcd in this fixture's naming scheme."""
        if self.key == "labels":
            return [mcd.label_string(i) for i in range(len(mcd))]
        if self.key == "chains":
            return [partition_chain_name(c) for c in mcd.chains]
        if self.key == "tableaux":
            shape = YoungShape(mcd.chains[0][-1], mcd.chains[0][0])
            return [str(chain_to_tableau(c, shape)) for c in mcd.chains]
        raise ValueError(f"unknown key mode {self.key!r}")

    def compare(self, mcd):
        """List of discrepancies between mcd and the expected diagram (empty when equal)."""
        keys = self.keys(mcd)
        problems = []
        if len(set(keys)) != len(keys):
            problems.append("chain keys are not unique")
        if sorted(keys) != sorted(self.elements):
            problems.append(f"elements differ: got {sorted(keys)}, expected {sorted(self.elements)}")
            return problems
        got = {(keys[i], keys[j]) for i, j in mcd.covers}
        want = set(self.covers)
        if got != want:
            problems.append(f"covers missing {sorted(want - got)}, unexpected {sorted(got - want)}")
        moves = {(keys[i], keys[j]) for i, j in mcd.move_pairs}
        bad = {m for m in moves if m not in got}
        if bad != set(self.non_cover_moves):
            problems.append(f"non-cover moves {sorted(bad)}, expected {sorted(self.non_cover_moves)}")
        return problems

    def matches(self, mcd):
        return not self.compare(mcd)

    def isomorphic(self, mcd):
        return are_isomorphic(mcd.as_poset(), self.as_poset()) is not None


class Fixture(NamedTuple):
    poset: object
    labeling: object
    expected: ExpectedCord
    name: str = ""
    kind: str = "el"


def partition_chain_name(chain):
    """m_ijkl or m_ij u kl naming of a maximal chain of Π_4, as in the figures."""
    if len(chain) != 4 or len(chain[0]) != 4:
        raise ValueError("names are defined for maximal chains of Π_4 only")
    pair = next(b for b in chain[1] if len(b) == 2)
    blocks = [b for b in chain[2] if len(b) > 1]
    head = "".join(map(str, pair))
    if len(blocks) == 2:
        other = next(b for b in blocks if b != pair)
        return "m" + head + "u" + "".join(map(str, other))
    big = blocks[0]
    k = next(v for v in big if v not in pair)
    last = next(v for v in range(1, 5) if v not in big)
    return f"m{head}{k}{last}"


def atom_from_name(name, n):
    pair = tuple(int(c) for c in name)
    return canonical_partition([pair] + [(v,) for v in range(1, n + 1) if v not in pair])


def _from_family(spec):
    kind = spec["name"]
    if kind == "boolean":
        return boolean_lattice(spec["n"])
    if kind == "partition":
        P = partition_lattice(spec["n"])
        if spec["labeling"] == "maxmin":
            return P, max_min_labeling(P)
        atoms = [atom_from_name(a, spec["n"]) for a in spec["atom_order"]]
        return P, minimal_labeling(P, atoms)
    if kind == "young":
        shape = tuple(spec["shape"])
        T = StandardTableau.parse(spec["tableau"])
        return young_interval(shape, (), T)
    raise ValueError(f"unknown family {kind!r}")


def fixture(name):
    doc = fixture_document(name)
    if "family" in doc:
        P, lam = _from_family(doc["family"])
        kind = "el"
    else:
        P, lam = load_document(doc)
        kind = doc.get("kind", "el")
    return Fixture(P, lam, ExpectedCord.from_doc(doc["expected_cord"]), name, kind)
