"""Decorated graphs of Hamiltonian circle actions and their equivalence.

A graph records one circle action: two fat vertices (the fixed surfaces at the
moment-map extrema, labeled by area and genus) joined through chains of
isolated fixed points.  Moment labels are normalized so the bottom fat vertex
sits at 0 and the top at ``height``; the vertical-translation quotient then
becomes literal equality, and the flip is an explicit involution.

A chain stores the alternating sequence v0, e1, v1, ..., vm of interior vertex
heights and edge labels, read from the bottom.  Edge labels are the isotropy
orders of the gradient spheres; the edges touching a fat vertex always carry
label 1 and are not stored.  Chains are compared lexicographically letter by
letter, either from the start (heights measured from the bottom) or from the
end (heights replaced by their distance from the top); a chain that is a
strict prefix of another sorts first.  Two graphs are equivalent when they
agree node for node in start order, or when one agrees with the other's flip,
which is decided by matching start order against end order under the height
complement.

Distinct chains may contain vertices at equal heights; this really happens,
e.g. after two half-fiber blowups from opposite fat vertices.
"""

from __future__ import annotations

import json
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .vectors import as_q, qstr


def _interleave(heights: tuple[Fraction, ...], labels: tuple[int, ...]) -> tuple:
    out: list = [heights[0]]
    for label, h in zip(labels, heights[1:]):
        out.append(label)
        out.append(h)
    return tuple(out)


@dataclass(frozen=True)
class Chain:
    """Interior fixed points of one edge path between the two fat vertices."""

    heights: tuple[Fraction, ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "heights", tuple(as_q(h) for h in self.heights))
        object.__setattr__(self, "labels", tuple(operator.index(l) for l in self.labels))
        if not self.heights:
            raise ValueError("a chain holds at least one vertex")
        if len(self.labels) != len(self.heights) - 1:
            raise ValueError("a chain alternates vertices and edges: need one label less than vertices")

    def start_key(self) -> tuple:
        """The alternating sequence read from the bottom, as a sort key."""
        return _interleave(self.heights, self.labels)

    def end_key(self, height: Fraction) -> tuple:
        """The sequence read backwards with heights measured from the top."""
        return _interleave(
            tuple(height - h for h in reversed(self.heights)),
            tuple(reversed(self.labels)),
        )

    def flipped(self, height: Fraction) -> "Chain":
        return Chain(
            tuple(height - h for h in reversed(self.heights)),
            tuple(reversed(self.labels)),
        )


def compare_by_start(a: Chain, b: Chain) -> int:
    """Lexicographic order on chains read from the bottom: -1, 0 or 1."""
    ka, kb = a.start_key(), b.start_key()
    return -1 if ka < kb else (1 if ka > kb else 0)


def compare_by_end(a: Chain, b: Chain, height: Fraction) -> int:
    """Lexicographic order on chains read from the top; equals the start order after a flip."""
    ka, kb = a.end_key(height), b.end_key(height)
    return -1 if ka < kb else (1 if ka > kb else 0)


@dataclass(frozen=True)
class FatVertex:
    """A fixed surface at a moment extremum: area label and genus."""

    area: Fraction
    genus: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "area", as_q(self.area))
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(f"genus must be a positive integer, got {self.genus!r}")


class GraphKey(NamedTuple):
    """Dedup key: the larger fat area first, then the smaller, then the chain count."""

    area_big: Fraction
    area_small: Fraction
    chain_count: int


@dataclass(frozen=True)
class DecoratedGraph:
    """Two fat vertices at heights 0 and ``height`` plus the chains between them.

    ``by_start`` and ``by_end`` are the chain indices in the two sort orders;
    they are derived from the chains when not supplied.
    """

    bottom: FatVertex
    top: FatVertex
    height: Fraction
    chains: tuple[Chain, ...] = ()
    by_start: tuple[int, ...] | None = None
    by_end: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "height", as_q(self.height))
        object.__setattr__(self, "chains", tuple(self.chains))
        if self.by_start is None:
            order = sorted(range(len(self.chains)), key=lambda i: self.chains[i].start_key())
            object.__setattr__(self, "by_start", tuple(order))
        else:
            object.__setattr__(self, "by_start", tuple(self.by_start))
        if self.by_end is None:
            order = sorted(range(len(self.chains)), key=lambda i: self.chains[i].end_key(self.height))
            object.__setattr__(self, "by_end", tuple(order))
        else:
            object.__setattr__(self, "by_end", tuple(self.by_end))


def graph_key(g: DecoratedGraph) -> GraphKey:
    hi = max(g.bottom.area, g.top.area)
    lo = min(g.bottom.area, g.top.area)
    return GraphKey(hi, lo, len(g.chains))


@dataclass(frozen=True)
class GraphReport:
    """Validation outcome with the violated invariants named."""

    valid: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def _order_consistent(keys: list, perm: tuple[int, ...]) -> bool:
    if sorted(perm) != list(range(len(keys))):
        return False
    ordered = [keys[i] for i in perm]
    return all(ordered[i] <= ordered[i + 1] for i in range(len(ordered) - 1))


def validate(g: DecoratedGraph) -> GraphReport:
    """Check every structural invariant of a decorated graph.

    Positive height and fat areas, matching genera, labels >= 1, strictly
    increasing chain heights strictly between the fat vertices, coprime
    adjacent labels at every interior vertex (counting the implicit 1s at the
    chain ends), and sort permutations consistent with the chain orders.
    """
    bad: list[str] = []
    if g.height <= 0:
        bad.append("height_positive")
    if g.bottom.area <= 0:
        bad.append("bottom_area_positive")
    if g.top.area <= 0:
        bad.append("top_area_positive")
    if g.bottom.genus != g.top.genus:
        bad.append("genus_match")
    for ci, chain in enumerate(g.chains):
        if any(label < 1 for label in chain.labels):
            bad.append(f"chain_{ci}_labels_positive")
        hs = chain.heights
        if any(hs[i] >= hs[i + 1] for i in range(len(hs) - 1)):
            bad.append(f"chain_{ci}_heights_increasing")
        if hs[0] <= 0:
            bad.append(f"chain_{ci}_above_bottom")
        if hs[-1] >= g.height:
            bad.append(f"chain_{ci}_below_top")
        for vi in range(len(hs)):
            below = chain.labels[vi - 1] if vi > 0 else 1
            above = chain.labels[vi] if vi < len(chain.labels) else 1
            if math.gcd(below, above) != 1:
                bad.append(f"chain_{ci}_vertex_{vi}_labels_coprime")
    start_keys = [c.start_key() for c in g.chains]
    end_keys = [c.end_key(g.height) for c in g.chains]
    if not _order_consistent(start_keys, g.by_start):
        bad.append("by_start_consistent")
    if not _order_consistent(end_keys, g.by_end):
        bad.append("by_end_consistent")
    return GraphReport(not bad, tuple(bad))


def flip(g: DecoratedGraph) -> DecoratedGraph:
    """Swap the fat vertices and send every vertex height v to height - v."""
    report = validate(g)
    if not report:
        raise ValueError("cannot flip an invalid graph: " + ", ".join(report.violations))
    return DecoratedGraph(
        bottom=g.top,
        top=g.bottom,
        height=g.height,
        chains=tuple(c.flipped(g.height) for c in g.chains),
    )


def _require_same_key(g1: DecoratedGraph, g2: DecoratedGraph) -> None:
    k1, k2 = graph_key(g1), graph_key(g2)
    if k1 != k2:
        raise ValueError(f"graphs have different keys: {k1} vs {k2}")


def are_same(g1: DecoratedGraph, g2: DecoratedGraph) -> bool:
    """Node-for-node equality of the start-sorted chains, same orientation."""
    _require_same_key(g1, g2)
    if g1.height != g2.height:
        return False
    if g1.bottom.area != g2.bottom.area or g1.top.area != g2.top.area:
        return False
    return all(g1.chains[i] == g2.chains[j] for i, j in zip(g1.by_start, g2.by_start))


def are_reflection(g1: DecoratedGraph, g2: DecoratedGraph) -> bool:
    """True when g2 is the flip of g1.

    Matches g1 in start order against g2 in end order: labels must agree with
    g2's read backwards, and every height must equal the graph height minus
    the corresponding one.
    """
    _require_same_key(g1, g2)
    if g1.height != g2.height:
        return False
    if g1.bottom.area != g2.top.area or g1.top.area != g2.bottom.area:
        return False
    h = g1.height
    for i, j in zip(g1.by_start, g2.by_end):
        a, b = g1.chains[i], g2.chains[j]
        if a.labels != tuple(reversed(b.labels)):
            return False
        if a.heights != tuple(h - x for x in reversed(b.heights)):
            return False
    return True


def are_equivalent(g1: DecoratedGraph, g2: DecoratedGraph) -> bool:
    """Equality up to vertical translation and flip; total on valid graphs.

    Key or height mismatch simply answers False.  When the fat areas of g1
    coincide, both orientations must be tried; otherwise the bottom areas
    determine which single test can succeed.
    """
    if g1.height != g2.height or graph_key(g1) != graph_key(g2):
        return False
    if g1.bottom.area == g1.top.area:
        return are_same(g1, g2) or are_reflection(g1, g2)
    if g1.bottom.area == g2.bottom.area:
        return are_same(g1, g2)
    return are_reflection(g1, g2)


def canonical_sort_key(g: DecoratedGraph) -> tuple:
    """Deterministic total order on graphs, used for stable output listings."""
    return (
        g.height,
        g.bottom.area,
        g.top.area,
        len(g.chains),
        tuple(g.chains[i].start_key() for i in g.by_start),
    )


# --- canonical JSON form ---------------------------------------------------
#
# Two graphs serialize to the same bytes exactly when are_same holds (and the
# genera agree; the genus travels through serialization but plays no role in
# equivalence).


def to_json_dict(g: DecoratedGraph) -> dict:
    """Canonical JSON object: rationals as strings, chains in start order."""
    chains = []
    for i in g.by_start:
        chain = g.chains[i]
        seq: list = [qstr(chain.heights[0])]
        for label, h in zip(chain.labels, chain.heights[1:]):
            seq.append(label)
            seq.append(qstr(h))
        chains.append(seq)
    return {
        "height": qstr(g.height),
        "genus": g.bottom.genus,
        "bottom_area": qstr(g.bottom.area),
        "top_area": qstr(g.top.area),
        "chains": chains,
    }


def canonical_json(g: DecoratedGraph) -> str:
    return json.dumps(to_json_dict(g), separators=(",", ":"))


def graph_from_json_dict(data: dict) -> DecoratedGraph:
    genus = int(data["genus"])
    chains = []
    for seq in data["chains"]:
        heights = tuple(Fraction(x) for x in seq[0::2])
        labels = tuple(int(x) for x in seq[1::2])
        chains.append(Chain(heights, labels))
    return DecoratedGraph(
        bottom=FatVertex(Fraction(data["bottom_area"]), genus),
        top=FatVertex(Fraction(data["top_area"]), genus),
        height=Fraction(data["height"]),
        chains=tuple(chains),
    )
