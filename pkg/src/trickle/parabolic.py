"""Parabolic subgraphs and the subgroups they generate.

A vertex subset is parabolic when each of its star maps stabilizes the
star inside the subset, in both directions.  The induced graph is then a
valid quadruple in its own right, its group embeds in the ambient one,
and membership is visible on normal forms: an element lies in the
subgroup iff every letter of its normal form is a subset vertex.  The
induced graph keeps the restriction of the ambient vertex ranking, so
normal forms agree letter for letter across the embedding.

Works over lazy ambient graphs too, as long as the subset itself is
finite.  Infinite subsets would need a closure argument we cannot check
by queries, so they are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import GraphError, TrickleGraph
from .pilings import GroupElement


def _subset_stable(graph, X, x) -> bool:
    sub_star = [y for y in X if y == x or graph.edge(x, y)]
    for y in sub_star:
        if graph.phi(x, y) not in X or graph.phi_inv(x, y) not in X:
            return False
    return True


def is_parabolic(graph, X) -> bool:
    """Does every star map of X stabilize its star within X?"""
    X = frozenset(X)
    for x in X:
        if not graph.contains_vertex(x):
            raise GraphError(f"unknown vertex {x!r}")
    return all(_subset_stable(graph, X, x) for x in X)


def downward_closure(graph, X) -> frozenset:
    """Everything at or below X; always spans a parabolic subgraph."""
    if not graph.finite:
        raise GraphError("downward closure needs a finite graph")
    X = set(X)
    return frozenset(v for v in graph.vertices
                     if any(graph.leq(v, x) for x in X))


@dataclass(frozen=True)
class ParabolicSubgraph:
    parent: TrickleGraph
    vertices: frozenset
    _induced: list = field(default_factory=list, compare=False, repr=False)

    def graph(self) -> TrickleGraph:
        """The induced quadruple, ranked by the parent order."""
        if not self._induced:
            self._induced.append(_induce(self.parent, self.vertices))
        return self._induced[0]


def parabolic_subgraph(graph, X) -> ParabolicSubgraph:
    X = frozenset(X)
    if not is_parabolic(graph, X):
        raise GraphError("subset is not parabolic: a star map leaves it")
    return ParabolicSubgraph(graph, X)


def _induce(graph, X):
    order = sorted(X, key=graph.sort_key)
    edges = [(x, y) for i, x in enumerate(order) for y in order[i + 1:]
             if graph.edge(x, y)]
    less = [(x, y) for x in order for y in order if graph.less(x, y)]
    phi = {x: {y: graph.phi(x, y) for y in order if y == x or graph.edge(x, y)}
           for x in order}
    return TrickleGraph.build(order, {x: graph.mu(x) for x in order},
                              edges, less, phi, ranking=order,
                              name=f"{graph.name}|{{{len(order)} vertices}}",
                              parse_vertex=graph.parse_vertex,
                              format_vertex=graph.format_vertex)


def member(g: GroupElement, sub: ParabolicSubgraph) -> bool:
    """Is g in the subgroup generated by the subset vertices?"""
    return all(v in sub.vertices for v, _ in g.nf())


def intersect(p1: ParabolicSubgraph, p2: ParabolicSubgraph) -> ParabolicSubgraph:
    if p1.parent is not p2.parent:
        raise GraphError("parabolic subgraphs of different parents")
    return ParabolicSubgraph(p1.parent, p1.vertices & p2.vertices)
