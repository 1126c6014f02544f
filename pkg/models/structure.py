"""
Zero-divisor graph structure for zdg-spectra

Builds the level partition {V_i} and the explicit graph (by the level rule and,
independently, by ring multiplication) and computes the structural invariants
with closed forms cross-checked by brute force.
"""

import itertools
import logging
import threading
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
import numpy as np
from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from config import Config
from models.ring import (
    RingElement, RingParams, enumerate_zero_divisors, format_coefficients,
    mindeg, zero_product_matrix
)

logger = logging.getLogger(__name__)


class StructureError(Exception):
    """Custom exception for structure-related errors"""
    pass


class LevelKind(Enum):
    """Induced subgraph on a level"""
    INDEPENDENT = "independent"
    CLIQUE = "clique"


@dataclass(frozen=True)
class LevelInfo:
    """One part V_i of the level partition"""
    index: int
    size: int
    degree: int
    kind: LevelKind

    def to_dict(self) -> Dict[str, Any]:
        return {'index': self.index, 'size': self.size, 'degree': self.degree, 'kind': self.kind.value}


@dataclass(frozen=True)
class LevelPartition:
    """The equitable partition of Γ(R) by minimal degree"""
    params: RingParams
    levels: Tuple[LevelInfo, ...]

    def level(self, i: int) -> LevelInfo:
        if not 1 <= i <= len(self.levels):
            raise StructureError(f"Level {i} outside 1..{len(self.levels)}")
        return self.levels[i - 1]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(level.size for level in self.levels)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(level.degree for level in self.levels)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        """m = (1/2) sum n_i d_i"""
        return sum(level.size * level.degree for level in self.levels) // 2

    def offsets(self) -> List[int]:
        """First vertex id of each level in the canonical order"""
        return [0] + list(itertools.accumulate(self.sizes))[:-1]

    def to_dict(self) -> Dict[str, Any]:
        return {'params': self.params.to_dict(), 'levels': [level.to_dict() for level in self.levels]}


@dataclass(frozen=True)
class GraphInstance:
    """Explicit zero-divisor graph with vertices 0..n-1 in canonical order"""
    params: RingParams
    graph: nx.Graph
    labels: Tuple[RingElement, ...]
    levels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def m(self) -> int:
        return self.graph.number_of_edges()

    def edge_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.graph.edges())

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edge_set())

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def level_members(self, i: int) -> List[int]:
        return [v for v, level in enumerate(self.levels) if level == i]


@dataclass
class WitnessSets:
    """The clique C and independent set L named by the structure theorems"""
    clique: List[int]
    independent: List[int]
    clique_ok: bool
    independent_ok: bool


@dataclass
class StructureReport:
    """Structural invariants of Γ(R); closed-form values plus brute-force evidence"""
    order: int
    size: int
    clique_number: int
    independence_number: int
    domination_number: int
    diameter: int
    girth: Optional[int]  # None means infinite
    universal_vertex_count: int
    independent_levels_size: int
    levels: List[LevelInfo] = field(default_factory=list)
    brute_force: Dict[str, Any] = field(default_factory=dict)
    skipped: Dict[str, str] = field(default_factory=dict)
    agreement: Dict[str, bool] = field(default_factory=dict)
    generic_disagreements: List[str] = field(default_factory=list)
    derived_fields: List[str] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(self.agreement.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'order': self.order,
            'size': self.size,
            'clique_number': self.clique_number,
            'independence_number': self.independence_number,
            'domination_number': self.domination_number,
            'diameter': self.diameter,
            'girth': format_girth(self.girth),
            'universal_vertex_count': self.universal_vertex_count,
            'independent_levels_size': self.independent_levels_size,
            'levels': [level.to_dict() for level in self.levels],
            'brute_force': {
                key: (format_girth(value) if key == 'girth' else value)
                for key, value in self.brute_force.items()
            },
            'skipped': dict(self.skipped),
            'agreement': dict(self.agreement),
            'all_agree': self.all_agree,
            'generic_disagreements': list(self.generic_disagreements),
            'derived_fields': list(self.derived_fields),
        }


def format_girth(girth: Optional[int]) -> Any:
    return 'infinite' if girth is None else girth


def level_degree(i: int, params: RingParams) -> int:
    """d_i = p^i - 1 on independent levels, p^i - 2 on clique levels"""
    return params.p ** i - 1 - (1 if 2 * i >= params.c else 0)


def level_partition(params: RingParams) -> LevelPartition:
    """
    Build the level partition {V_i} of Γ(Z_p[x]/<x^c>)

    One rule covers both parities: n_i = (p-1) p^(c-1-i), level i is a clique
    iff 2i >= c, and d_i = p^i - 1 - [2i >= c].

    Args:
        params: Ring parameters

    Returns:
        The level partition
    """
    p, c = params.p, params.c
    levels = tuple(
        LevelInfo(
            index=i,
            size=(p - 1) * p ** (c - 1 - i),
            degree=level_degree(i, params),
            kind=LevelKind.CLIQUE if 2 * i >= c else LevelKind.INDEPENDENT,
        )
        for i in params.levels
    )
    return LevelPartition(params=params, levels=levels)


def adjacent_levels(i: int, j: int, params: RingParams) -> bool:
    """
    Whether vertices of V_i and V_j are joined (i == j: distinct vertices)

    Raises:
        StructureError: If either index is outside 1..c-1
    """
    for index in (i, j):
        if not 1 <= index <= params.c - 1:
            raise StructureError(f"Level {index} outside 1..{params.c - 1}")
    return i + j >= params.c


_graph_cache: LRUCache = LRUCache(maxsize=Config.MAX_CACHE_SIZE)
_graph_cache_lock = threading.RLock()


def clear_graph_cache() -> None:
    """Drop every memoised graph"""
    with _graph_cache_lock:
        _graph_cache.clear()


def _new_graph(n: int, labels: List[RingElement], levels: List[int]) -> nx.Graph:
    graph = nx.Graph()
    for v in range(n):
        graph.add_node(v, level=levels[v], label=format_coefficients(labels[v]))
    return graph


@cached(cache=_graph_cache, key=lambda params: hashkey('rule', params), lock=_graph_cache_lock)
def build_graph_by_rule(params: RingParams) -> GraphInstance:
    """
    Build Γ(R) from the level rule alone

    Vertex v receives the level of the block it sits in, so the stored level is
    independent of mindeg and can be checked against it.

    Args:
        params: Ring parameters

    Returns:
        The explicit graph

    Raises:
        EnumerationBudgetError: If the ring is too large to enumerate
    """
    lp = level_partition(params)
    labels = enumerate_zero_divisors(params)
    offsets = lp.offsets()

    levels: List[int] = []
    for info in lp.levels:
        levels.extend([info.index] * info.size)

    graph = _new_graph(len(labels), labels, levels)
    blocks = {
        info.index: range(offset, offset + info.size)
        for info, offset in zip(lp.levels, offsets)
    }

    for i in params.levels:
        for j in range(i, params.c):
            if not adjacent_levels(i, j, params):
                continue
            if i == j:
                graph.add_edges_from(itertools.combinations(blocks[i], 2))
            else:
                graph.add_edges_from(itertools.product(blocks[i], blocks[j]))

    logger.info(f"Built rule graph for p={params.p}, c={params.c}: "
                f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return GraphInstance(params=params, graph=graph, labels=tuple(labels), levels=tuple(levels))


@cached(cache=_graph_cache, key=lambda params: hashkey('ring', params), lock=_graph_cache_lock)
def build_graph_by_ring(params: RingParams) -> GraphInstance:
    """
    Build Γ(R) by multiplying every pair of zero-divisors

    Args:
        params: Ring parameters

    Returns:
        The explicit graph, same vertex order as build_graph_by_rule

    Raises:
        EnumerationBudgetError: If the ring is too large to enumerate
    """
    labels = enumerate_zero_divisors(params)
    levels = [mindeg(label) for label in labels]
    graph = _new_graph(len(labels), labels, levels)

    zero = zero_product_matrix(labels, params)
    rows, cols = np.nonzero(np.triu(zero, k=1))
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))

    logger.info(f"Built ring graph for p={params.p}, c={params.c}: "
                f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return GraphInstance(params=params, graph=graph, labels=tuple(labels), levels=tuple(levels))


def closed_form_clique_number(params: RingParams) -> int:
    s = params.special_level
    return params.p ** s - 1 if params.is_even else params.p ** s


def closed_form_independence_number(params: RingParams) -> int:
    """
    p^(c-1) - p^s, plus one when c is even

    For even c a single vertex of the clique level s has no neighbour in any
    independent level, so it extends the independent set L.
    """
    return params.p ** (params.c - 1) - params.p ** params.special_level + (1 if params.is_even else 0)


def independent_levels_size(params: RingParams) -> int:
    """Size of the independent set L formed by the independent levels"""
    return params.p ** (params.c - 1) - params.p ** params.special_level


def closed_form_diameter(params: RingParams) -> int:
    if params.order == 1:
        return 0
    if params.c == 2:
        return 1
    return 2


def closed_form_girth(params: RingParams) -> Optional[int]:
    """3, except K_1, K_2 (c = 2, p <= 3) and the path for p = 2, c = 3"""
    if params.c == 2:
        return 3 if params.p - 1 >= 3 else None
    if params.c == 3 and params.p == 2:
        return None
    return 3


def closed_form_structure(lp: LevelPartition) -> StructureReport:
    """
    Structural invariants from the closed forms alone

    Args:
        lp: Level partition

    Returns:
        A report with empty brute-force evidence
    """
    params = lp.params
    report = StructureReport(
        order=lp.order,
        size=lp.edge_count,
        clique_number=closed_form_clique_number(params),
        independence_number=closed_form_independence_number(params),
        domination_number=1,
        diameter=closed_form_diameter(params),
        girth=closed_form_girth(params),
        universal_vertex_count=lp.level(params.c - 1).size,
        independent_levels_size=independent_levels_size(params),
        levels=list(lp.levels),
    )

    if report.diameter != 2:
        report.generic_disagreements.append('diameter')
    if report.girth != 3:
        report.generic_disagreements.append('girth')
    if report.independence_number != report.independent_levels_size:
        report.generic_disagreements.append('independence_number')
    if params.is_even:
        report.derived_fields.append('domination_number')

    return report


def graph_girth(graph: nx.Graph) -> Optional[int]:
    """
    Length of the shortest cycle, or None for a forest

    Runs a BFS from every vertex and stops as soon as a triangle is seen.
    """
    best: Optional[int] = None
    for source in graph.nodes():
        distances = {source: 0}
        parents = {source: None}
        queue = deque([source])
        while queue:
            current = queue.popleft()
            if best is not None and 2 * distances[current] >= best:
                break
            for neighbor in graph.neighbors(current):
                if neighbor not in distances:
                    distances[neighbor] = distances[current] + 1
                    parents[neighbor] = current
                    queue.append(neighbor)
                elif parents[current] != neighbor:
                    length = distances[current] + distances[neighbor] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            return 3
    return best


def brute_force_domination_number(graph: nx.Graph) -> int:
    """Smallest k such that some k-subset of vertices dominates the graph"""
    nodes = list(graph.nodes())
    for k in range(1, len(nodes) + 1):
        for subset in itertools.combinations(nodes, k):
            if nx.is_dominating_set(graph, subset):
                return k
    return 0


def witness_sets(g: GraphInstance, lp: LevelPartition) -> WitnessSets:
    """
    The clique C and independent set L of the structure theorems

    C is the union of the clique levels, plus the first vertex of level s when
    c is odd; L is the union of the independent levels.
    """
    params = lp.params
    clique = [v for v, level in enumerate(g.levels) if 2 * level >= params.c]
    if not params.is_even:
        members = g.level_members(params.special_level)
        clique = members[:1] + clique
    independent = [v for v, level in enumerate(g.levels) if 2 * level < params.c]

    clique_ok = all(g.graph.has_edge(u, v) for u, v in itertools.combinations(clique, 2))
    independent_ok = g.graph.subgraph(independent).number_of_edges() == 0

    return WitnessSets(clique=clique, independent=independent,
                       clique_ok=clique_ok, independent_ok=independent_ok)


def structure_report(g: GraphInstance, lp: LevelPartition) -> StructureReport:
    """
    Closed-form structural invariants cross-checked on the explicit graph

    Brute-force values are computed only within the configured budgets; the
    report records the measured value, whether it agrees with the closed form
    and which generic claims (diameter 2, girth 3, independence p^(c-1) - p^s)
    the instance departs from.

    Args:
        g: Explicit graph
        lp: Level partition of the same ring

    Returns:
        The structure report

    Raises:
        StructureError: If g and lp come from different parameters
    """
    if g.params != lp.params:
        raise StructureError(
            f"Graph built for {g.params} does not match partition for {lp.params}"
        )

    report = closed_form_structure(lp)
    graph = g.graph
    n = g.n
    measured: Dict[str, Any] = {
        'order': n,
        'size': g.m,
        'universal_vertex_count': sum(1 for _, degree in graph.degree() if degree == n - 1),
    }

    if n <= Config.CLIQUE_BRUTE_FORCE_BUDGET:
        _, weight = nx.max_weight_clique(graph, weight=None)
        measured['clique_number'] = weight
    else:
        report.skipped['clique_number'] = f"n = {n} exceeds {Config.CLIQUE_BRUTE_FORCE_BUDGET}"

    if n <= Config.INDEPENDENCE_BRUTE_FORCE_BUDGET:
        _, weight = nx.max_weight_clique(nx.complement(graph), weight=None)
        measured['independence_number'] = weight
        measured['domination_number'] = brute_force_domination_number(graph)
    else:
        reason = f"n = {n} exceeds {Config.INDEPENDENCE_BRUTE_FORCE_BUDGET}"
        report.skipped['independence_number'] = reason
        report.skipped['domination_number'] = reason

    if n <= Config.DENSE_BUDGET:
        measured['diameter'] = nx.diameter(graph)
        measured['girth'] = graph_girth(graph)
    else:
        reason = f"n = {n} exceeds {Config.DENSE_BUDGET}"
        report.skipped['diameter'] = reason
        report.skipped['girth'] = reason

    report.brute_force = measured
    for key, value in measured.items():
        agrees = getattr(report, key) == value
        report.agreement[key] = agrees
        if not agrees:
            logger.error(f"{key}: closed form {getattr(report, key)} != brute force {value} "
                         f"for p={lp.params.p}, c={lp.params.c}")

    return report
