"""Equivariant blowup moves on decorated graphs.

A blowup of size delta either carves a ball out of a fat vertex or replaces an
interior fixed point by the two endpoints of the new exceptional sphere.

At a fat vertex the area drops by delta and a fresh one-vertex chain appears
at height delta (from the bottom) or height - delta (from the top).  At an
interior vertex with incident isotropies m below and n above, the exceptional
sphere acquires isotropy m + n; since a sphere of isotropy k and size delta
spans moment length k * delta, and each sphere through the blown-up point
loses area delta, the two new endpoints land at h - m*delta and h + n*delta
with a connecting edge labeled m + n.

Validity is strict everywhere: the new vertices must not reach the
pre-existing vertices of the same chain or the moment extrema, and the fat
areas must stay positive.  Equality would create a zero-area sphere or
coincident fixed points on one chain.  An invalid site yields None rather
than an exception, so enumeration can prune branches cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Union

from .graphs import Chain, DecoratedGraph, FatVertex
from .vectors import Q, as_q


class FatSide(Enum):
    BOTTOM = "bottom"
    TOP = "top"


@dataclass(frozen=True)
class InteriorSite:
    """An interior fixed point, addressed by chain index and vertex position."""

    chain: int
    vertex: int


BlowupSite = Union[FatSide, InteriorSite]


def _check_delta(delta: Fraction) -> Fraction:
    delta = as_q(delta)
    if delta <= 0:
        raise ValueError("blowup size must be positive")
    return delta


def blowup_fat(g: DecoratedGraph, side: FatSide, delta: Fraction) -> DecoratedGraph | None:
    """Blow up at a fat vertex; None when the move would not be valid.

    Valid iff delta is strictly below both the chosen fat area and the graph
    height (the latter keeps the new vertex off the opposite extremum, which
    the area test alone does not guarantee on arbitrary graphs).
    """
    delta = _check_delta(delta)
    area = g.bottom.area if side is FatSide.BOTTOM else g.top.area
    if not (delta < area and delta < g.height):
        return None
    if side is FatSide.BOTTOM:
        bottom = FatVertex(g.bottom.area - delta, g.bottom.genus)
        top = g.top
        new_chain = Chain((delta,))
    else:
        bottom = g.bottom
        top = FatVertex(g.top.area - delta, g.top.genus)
        new_chain = Chain((g.height - delta,))
    return DecoratedGraph(bottom, top, g.height, g.chains + (new_chain,))


def blowup_interior(
    g: DecoratedGraph, chain_index: int, vertex_index: int, delta: Fraction
) -> DecoratedGraph | None:
    """Blow up at an interior fixed point; None when the move would not be valid.

    The vertex at height h with labels m below and n above is replaced by
    vertices at h - m*delta and h + n*delta joined by an edge labeled m + n.
    Valid iff the lower endpoint stays strictly above the vertex below (or 0)
    and the upper endpoint strictly below the vertex above (or the height).
    """
    delta = _check_delta(delta)
    chain = g.chains[chain_index]
    h = chain.heights[vertex_index]
    below = chain.labels[vertex_index - 1] if vertex_index > 0 else 1
    above = chain.labels[vertex_index] if vertex_index < len(chain.labels) else 1
    low = h - below * delta
    high = h + above * delta
    floor = chain.heights[vertex_index - 1] if vertex_index > 0 else Q(0)
    ceiling = chain.heights[vertex_index + 1] if vertex_index + 1 < len(chain.heights) else g.height
    if not (floor < low and high < ceiling):
        return None
    heights = chain.heights[:vertex_index] + (low, high) + chain.heights[vertex_index + 1:]
    labels = chain.labels[:vertex_index] + (below + above,) + chain.labels[vertex_index:]
    chains = g.chains[:chain_index] + (Chain(heights, labels),) + g.chains[chain_index + 1:]
    return DecoratedGraph(g.bottom, g.top, g.height, chains)


def sites(g: DecoratedGraph) -> Iterator[BlowupSite]:
    """All candidate blowup sites: bottom fat, top fat, then interior vertices bottom-up."""
    yield FatSide.BOTTOM
    yield FatSide.TOP
    for ci, chain in enumerate(g.chains):
        for vi in range(len(chain.heights)):
            yield InteriorSite(ci, vi)


def blowup_at(g: DecoratedGraph, site: BlowupSite, delta: Fraction) -> DecoratedGraph | None:
    if isinstance(site, FatSide):
        return blowup_fat(g, site, delta)
    return blowup_interior(g, site.chain, site.vertex, delta)


def all_blowups(g: DecoratedGraph, delta: Fraction) -> list[DecoratedGraph]:
    """Every valid single blowup of size delta, in deterministic site order.

    The list may contain pairwise-equivalent graphs; deduplication is the
    caller's business.
    """
    results = []
    for site in sites(g):
        blown = blowup_at(g, site, delta)
        if blown is not None:
            results.append(blown)
    return results
