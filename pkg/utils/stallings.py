"""
HNN Order Lab - Stallings Folding Module
Folded subgroup graphs for finitely generated subgroups of free groups

Every edge carries a value: a word in the subgroup generator symbols
U1..Uk. Reading a closed path at the base vertex and multiplying the
values gives a coordinate word which, after substituting the original
generators, reduces to the label of the path. Folding keeps that
invariant by re-gauging the vertex that disappears.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import AlphabetError, NotAMemberError, SubgroupGraphError
from .words import Alphabet, Word, multiply, invert, reduce_word, substitute

logger = logging.getLogger(__name__)

BASE = 0


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    gen: int
    value: Word


def _half_edges(edges: Dict[int, Edge], vertex: int) -> List[Tuple[Tuple[int, int], int, int, Word]]:
    """Half-edges leaving vertex: (signed label, edge id, other end, value)"""
    halves = []
    for eid, edge in edges.items():
        if edge.src == vertex:
            halves.append(((edge.gen, 1), eid, edge.dst, edge.value))
        if edge.dst == vertex:
            halves.append(((edge.gen, -1), eid, edge.src, invert(edge.value)))
    return halves


def _regauge(edges: Dict[int, Edge], vertex: int, delta: Word):
    """Multiply values at a non-base vertex by delta (closed-path values are unchanged)"""
    delta_inv = invert(delta)
    for eid, edge in list(edges.items()):
        value = edge.value
        if edge.src == vertex:
            value = multiply(delta, value)
        if edge.dst == vertex:
            value = multiply(value, delta_inv)
        if value is not edge.value:
            edges[eid] = Edge(edge.src, edge.dst, edge.gen, value)


def _find_fold(edges: Dict[int, Edge], vertices: List[int]):
    for vertex in vertices:
        seen = {}
        for half in _half_edges(edges, vertex):
            label = half[0]
            if label in seen and seen[label][1] != half[1]:
                return vertex, seen[label], half
            seen.setdefault(label, half)
    return None


class SubgroupGraph:
    """
    Folded core graph of H = ⟨generators⟩ ≤ F(alphabet)

    Built through build_subgroup_graph; immutable afterwards.
    """

    def __init__(self, alphabet: Alphabet, generators: Sequence[Word], symbols: Alphabet,
                 vertices: Sequence[int], edges: Sequence[Edge]):
        self.alphabet = alphabet
        self.generators = tuple(generators)
        self.symbols = symbols
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._moves: Dict[Tuple[int, int, int], Tuple[int, Word]] = {}
        for edge in self.edges:
            self._moves[(edge.src, edge.gen, 1)] = (edge.dst, edge.value)
            self._moves[(edge.dst, edge.gen, -1)] = (edge.src, invert(edge.value))

    def __repr__(self) -> str:
        return (f"SubgroupGraph(rank={self.rank()}, vertices={len(self.vertices)}, "
                f"edges={len(self.edges)})")

    def rank(self) -> int:
        if not self.edges:
            return 0
        return len(self.edges) - len(self.vertices) + 1

    def _trace(self, w: Word) -> Tuple[Optional[int], Word]:
        if w.alphabet != self.alphabet:
            raise AlphabetError(f"word over {w.alphabet}, graph over {self.alphabet}")
        vertex = BASE
        coords = self.symbols.identity()
        for gen, sign in w.letters():
            move = self._moves.get((vertex, gen, sign))
            if move is None:
                return None, coords
            vertex, value = move
            coords = multiply(coords, value)
        return vertex, coords

    def contains(self, w: Word) -> bool:
        vertex, _ = self._trace(w)
        return vertex == BASE

    def express(self, w: Word) -> Word:
        """Word in U1..Uk evaluating to w; raises NotAMemberError"""
        vertex, coords = self._trace(w)
        if vertex != BASE:
            raise NotAMemberError(f"{w} is not in the subgroup")
        return coords

    def evaluate(self, coords: Word) -> Word:
        """Substitute the original generators for U1..Uk"""
        return substitute(coords, self.generators, multiply, self.alphabet.identity(), invert)

    def coords(self, w: Word) -> Word:
        return self.express(w)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.src, edge.dst, label=self.alphabet.names[edge.gen],
                           value=str(edge.value))
        return graph

    def is_folded(self) -> bool:
        labels = set()
        for edge in self.edges:
            out_key = (edge.src, edge.gen, 1)
            in_key = (edge.dst, edge.gen, -1)
            if out_key in labels or in_key in labels:
                return False
            labels.update((out_key, in_key))
        return True

    def is_connected(self) -> bool:
        return nx.is_weakly_connected(self.to_networkx()) if self.vertices else False


def build_subgroup_graph(generators: Sequence[Word], symbol_prefix: str = "U") -> SubgroupGraph:
    """
    Fold the bouquet of generator petals into the core subgroup graph

    Args:
        generators: nonidentity words over one alphabet
        symbol_prefix: prefix of the coordinate symbols (U -> U1..Uk)

    Returns:
        SubgroupGraph; deterministic for a fixed generator order
    """
    if not generators:
        raise SubgroupGraphError("at least one generator is required")
    alphabet = generators[0].alphabet
    for i, word in enumerate(generators, 1):
        if word.alphabet != alphabet:
            raise AlphabetError(f"generator {i} is over {word.alphabet}, expected {alphabet}")
        if word.is_identity:
            raise SubgroupGraphError(f"generator {i} is the identity")
    symbols = Alphabet(tuple(f"{symbol_prefix}{i}" for i in range(1, len(generators) + 1)))
    unit = symbols.identity()

    vertices = [BASE]
    edges: Dict[int, Edge] = {}
    next_vertex, next_edge = 1, 0
    for i, word in enumerate(generators):
        letters = list(word.letters())
        current = BASE
        for position, (gen, sign) in enumerate(letters):
            if position == len(letters) - 1:
                target = BASE
            else:
                target = next_vertex
                vertices.append(target)
                next_vertex += 1
            value = symbols.generator(symbols.names[i]) if position == 0 else unit
            if sign > 0:
                edges[next_edge] = Edge(current, target, gen, value)
            else:
                edges[next_edge] = Edge(target, current, gen, invert(value))
            next_edge += 1
            current = target

    while True:
        fold = _find_fold(edges, vertices)
        if fold is None:
            break
        vertex, first, second = fold
        _, eid1, end1, value1 = first
        _, eid2, end2, value2 = second
        if end2 == BASE and end1 != BASE:
            eid1, end1, value1, eid2, end2, value2 = eid2, end2, value2, eid1, end1, value1
        if end1 == end2:
            del edges[eid2]
            continue
        # end2 is not the base vertex here
        delta = multiply(invert(value1), value2)
        _regauge(edges, end2, delta)
        del edges[eid2]
        for eid, edge in list(edges.items()):
            if edge.src == end2 or edge.dst == end2:
                edges[eid] = Edge(end1 if edge.src == end2 else edge.src,
                                  end1 if edge.dst == end2 else edge.dst,
                                  edge.gen, edge.value)
        vertices.remove(end2)

    # core: prune hanging non-base vertices
    pruned = True
    while pruned:
        pruned = False
        for vertex in list(vertices):
            if vertex == BASE:
                continue
            incident = [eid for eid, e in edges.items() if e.src == vertex or e.dst == vertex]
            degree = sum(2 if edges[eid].src == edges[eid].dst else 1 for eid in incident)
            if degree <= 1:
                for eid in incident:
                    del edges[eid]
                vertices.remove(vertex)
                pruned = True

    graph = SubgroupGraph(alphabet, generators, symbols, sorted(vertices),
                          [edges[eid] for eid in sorted(edges)])
    logger.debug(f"📊 Folded {len(generators)} generators into {graph}")
    return graph
