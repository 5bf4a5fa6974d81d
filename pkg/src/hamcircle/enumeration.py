"""Staged enumeration of circle actions by equivariant blowups, with dedup.

An action on the k-fold blowup is reached from an action on the underlying
ruled surface by k blowups of the prescribed sizes, largest first.  The
enumeration therefore seeds a store with the ruled-surface graphs (one per
admissible twist), applies one blowup stage per delta, and deduplicates up to
vertical translation and flip after every stage.  Equivalent graphs share the
(larger area, smaller area, chain count) key, so only one bucket is scanned
per insertion.

Inputs with unsorted or defect-positive deltas are first brought to reduced
form: the count only depends on the symplectomorphism class, and the staged
search is only correct for reduced vectors.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .blowups import all_blowups
from .formulas import count_ruled
from .graphs import (
    DecoratedGraph,
    FatVertex,
    GraphKey,
    are_equivalent,
    canonical_sort_key,
    graph_key,
)
from .vectors import (
    BlowupVector,
    BundleType,
    as_q,
    cremona_reduce,
    is_g_reduced,
    require_cone,
)


class GraphStore:
    """A keyed collection of pairwise-inequivalent decorated graphs.

    Iteration is deterministic: buckets in sorted key order, graphs in
    insertion order within a bucket.
    """

    def __init__(self, graphs: Iterable[DecoratedGraph] = ()):
        self._buckets: dict[GraphKey, list[DecoratedGraph]] = {}
        self._count = 0
        for g in graphs:
            self.add_if_new(g)

    def add_if_new(self, graph: DecoratedGraph) -> bool:
        """Insert unless an equivalent graph is already stored; report insertion."""
        bucket = self._buckets.setdefault(graph_key(graph), [])
        for stored in bucket:
            if are_equivalent(stored, graph):
                return False
        bucket.append(graph)
        self._count += 1
        return True

    def __len__(self) -> int:
        return self._count

    def __iter__(self) -> Iterator[DecoratedGraph]:
        for key in sorted(self._buckets):
            yield from self._buckets[key]

    def __contains__(self, graph: DecoratedGraph) -> bool:
        bucket = self._buckets.get(graph_key(graph), [])
        return any(are_equivalent(stored, graph) for stored in bucket)


def initial_twists(lambda_f: Fraction, lambda_b: Fraction, bundle: BundleType) -> list[int]:
    """Admissible twists n for the ruled-surface graphs: even 0 <= n < 2*lambda_b/lambda_f
    on the trivial bundle, odd on the non-trivial one.

    A twist is admissible exactly while the top fat area lambda_b - (n/2)*lambda_f
    stays positive.
    """
    lf, lb = as_q(lambda_f), as_q(lambda_b)
    if lf <= 0 or lb <= 0:
        raise ValueError("lambda_f and lambda_b must be positive")
    twists = []
    n = 0 if bundle is BundleType.TRIVIAL else 1
    while lb - Fraction(n, 2) * lf > 0:
        twists.append(n)
        n += 2
    return twists


def initial_graphs(
    lambda_f: Fraction, lambda_b: Fraction, bundle: BundleType, genus: int
) -> list[DecoratedGraph]:
    """The chainless two-fat-vertex graphs of the ruled surface, one per twist."""
    lf, lb = as_q(lambda_f), as_q(lambda_b)
    return [
        DecoratedGraph(
            bottom=FatVertex(lb + Fraction(n, 2) * lf, genus),
            top=FatVertex(lb - Fraction(n, 2) * lf, genus),
            height=lf,
        )
        for n in initial_twists(lf, lb, bundle)
    ]


def blowup_stage(store: GraphStore, delta: Fraction, jobs: int = 1) -> GraphStore:
    """One stage: every valid blowup of size delta of every stored graph, deduplicated.

    Returns a fresh store; the input is untouched.  With jobs > 1 the blowups
    of the source graphs are computed in parallel while insertions stay
    serialized in source order, so the result is identical to the
    single-threaded run.
    """
    delta = as_q(delta)
    if delta <= 0:
        raise ValueError("blowup size must be positive")
    sources = list(store)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(lambda g: all_blowups(g, delta), sources))
    else:
        batches = [all_blowups(g, delta) for g in sources]
    result = GraphStore()
    for batch in batches:
        for graph in batch:
            result.add_if_new(graph)
    return result


@dataclass(frozen=True)
class CountReport:
    """Result of a staged enumeration.

    ``stage_counts`` has one entry per stage starting with the initial graph
    count, so its length is k + 1 and the final entry is the action count.
    ``initial_twists`` records which ruled-surface graphs seeded the search.
    """

    input_vector: BlowupVector
    reduced_vector: BlowupVector
    auto_reduced: bool
    initial_twists: tuple[int, ...]
    stage_counts: tuple[int, ...]

    @property
    def count(self) -> int:
        return self.stage_counts[-1]


def _prepare(v: BlowupVector) -> tuple[BlowupVector, bool]:
    require_cone(v)
    if v.k >= 2 and not is_g_reduced(v):
        return cremona_reduce(v).vector, True
    return v, False


def count_actions(v: BlowupVector, jobs: int = 1) -> CountReport:
    """Count the circle actions compatible with the blowup form encoded by ``v``.

    Rejects vectors outside the cone.  Non-reduced input (k >= 2) is reduced
    first and flagged; the count is an invariant of the symplectomorphism
    class, so this does not change the answer.  For k = 0 the closed ruled
    count is returned directly, without building graphs.
    """
    reduced, auto = _prepare(v)
    twists = tuple(initial_twists(reduced.lambda_f, reduced.lambda_b, reduced.bundle))
    if reduced.k == 0:
        ruled = count_ruled(reduced.lambda_f, reduced.lambda_b, reduced.bundle)
        return CountReport(v, reduced, auto, twists, (ruled,))
    store = GraphStore(initial_graphs(reduced.lambda_f, reduced.lambda_b, reduced.bundle, reduced.genus))
    counts = [len(store)]
    for delta in reduced.deltas:
        store = blowup_stage(store, delta, jobs=jobs)
        counts.append(len(store))
    return CountReport(v, reduced, auto, twists, tuple(counts))


def enumerate_actions(
    v: BlowupVector, jobs: int = 1
) -> tuple[list[DecoratedGraph], CountReport]:
    """Like ``count_actions`` but returning the graphs in canonical order.

    For k = 0 the ruled-surface graphs themselves are materialized.
    """
    reduced, auto = _prepare(v)
    twists = tuple(initial_twists(reduced.lambda_f, reduced.lambda_b, reduced.bundle))
    store = GraphStore(initial_graphs(reduced.lambda_f, reduced.lambda_b, reduced.bundle, reduced.genus))
    counts = [len(store)]
    for delta in reduced.deltas:
        store = blowup_stage(store, delta, jobs=jobs)
        counts.append(len(store))
    graphs = sorted(store, key=canonical_sort_key)
    return graphs, CountReport(v, reduced, auto, twists, tuple(counts))
