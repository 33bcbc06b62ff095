"""Vertex-ordered simplicial graphs with star maps.

The central object is a quadruple: a simplicial graph, a strict partial
order on its vertices, a torsion label mu per vertex (an integer >= 2 or
INFINITY), and one automorphism of each vertex star.  A graph whose
quadruple satisfies axioms (a)-(g) below presents a trickle group, and
everything else in this package consumes it through the small query
oracle exposed here: edge, less, mu, phi, phi_inv.

Two flavours exist.  Finite graphs are table-backed (built from explicit
vertex, edge, order and star-map data) and support full validation and
serialization.  Infinite families are "lazy": they supply query callables
instead of tables, must provide both phi and phi_inv, and are checked by
sampling (spot_check) rather than exhaustively.

Axioms, for vertices x, y, z (x || y means incomparable):

  (a) x < y implies {x, y} is an edge.
  (b) {x, y} an edge with x || y and z <= y implies {x, z} is an edge
      with x || z.
  (c) for y, z in star(x): z <= y iff phi_x(z) <= phi_x(y).
  (d) phi_x(y) != y implies y < x.
  (e) if mu(x) is finite, the order of phi_x divides mu(x).
  (f) mu(phi_x(y)) = mu(y).
  (g) for chains z < y < x: phi_x(phi_y(z)) = phi_y'(phi_x(z)) where
      y' = phi_x(y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import inf, lcm

INFINITY = inf


class GraphError(ValueError):
    """Malformed graph data or an out-of-domain query."""


@dataclass(frozen=True)
class Violation:
    axiom: str          # "structure" or one of "a".."g"
    witness: tuple
    detail: str

    def __str__(self):
        what = "structural error" if self.axiom == "structure" else f"axiom ({self.axiom})"
        return f"{what} at {self.witness}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked: int | None = None   # number of samples, for spot checks

    @property
    def ok(self):
        return not self.violations

    def axioms_violated(self):
        return sorted({v.axiom for v in self.violations})

    def describe(self) -> str:
        if self.ok:
            return "valid (vacuous)" if self.checked == 0 else "valid"
        return "\n".join(str(v) for v in self.violations)


def _default_parse(token):
    return token


def _default_format(vertex):
    return vertex if isinstance(vertex, str) else str(vertex)


class TrickleGraph:
    """Query oracle for a vertex-ordered graph with star maps.

    Immutable after construction; all methods are pure queries, so shared
    concurrent reads are safe.  Construct finite graphs with ``build`` and
    infinite ones with ``lazy``.
    """

    def __init__(self):
        raise TypeError("use TrickleGraph.build(...) or TrickleGraph.lazy(...)")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def build(cls, vertices, mu, edges, less=(), phi=None, ranking=None,
              name="graph", parse_vertex=None, format_vertex=None):
        """Finite graph from explicit data.

        ``mu`` is a mapping or a single value applied to every vertex.
        ``less`` lists (lo, hi) pairs meaning lo < hi; any acyclic relation
        is accepted and its transitive closure is taken.  ``phi`` maps a
        vertex to a dict of star images; omitted entries are the identity.
        ``ranking`` fixes the total order used for normal forms and must
        extend the partial order; by default a stable topological sort
        refined by the lexicographic vertex token is used.
        """
        self = object.__new__(cls)
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertices")
        vset = set(verts)

        if callable(mu):
            mu_map = {v: mu(v) for v in verts}
        elif isinstance(mu, dict):
            mu_map = {v: mu[v] for v in verts}
        else:
            mu_map = {v: mu for v in verts}
        for v, m in mu_map.items():
            if m != INFINITY and (not isinstance(m, int) or m < 2):
                raise GraphError(f"mu({v}) = {m!r}: need an integer >= 2 or INFINITY")

        adj = {v: set() for v in verts}
        for a, b in edges:
            if a not in vset or b not in vset:
                raise GraphError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            adj[a].add(b)
            adj[b].add(a)

        # strict order: transitive closure of the input pairs, cycles rejected
        up = {v: set() for v in verts}      # up[v] = everything strictly above v
        direct = {v: set() for v in verts}
        for a, b in less:
            if a not in vset or b not in vset:
                raise GraphError(f"order pair ({a!r}, {b!r}) uses an unknown vertex")
            if a == b:
                raise GraphError(f"reflexive order pair at {a!r}")
            direct[a].add(b)
        for v in verts:
            seen = set()
            stack = list(direct[v])
            while stack:
                w = stack.pop()
                if w in seen:
                    continue
                seen.add(w)
                stack.extend(direct[w])
            if v in seen:
                raise GraphError(f"order relation has a cycle through {v!r}")
            up[v] = seen

        phi = phi or {}
        phi_tab = {}
        inv_tab = {}
        phi_bad = {}
        for x in verts:
            star = adj[x] | {x}
            given = phi.get(x, {})
            for y in given:
                if y not in star:
                    raise GraphError(f"phi[{x!r}] defined at {y!r}, which is not in star({x!r})")
            table = {y: given.get(y, y) for y in star}
            phi_tab[x] = table
            inv = {}
            bad = None
            for y, img in table.items():
                if img not in star:
                    bad = f"phi_{x!r} sends {y!r} to {img!r} outside the star"
                elif img in inv:
                    bad = f"phi_{x!r} is not injective: {inv[img]!r} and {y!r} both map to {img!r}"
                else:
                    inv[img] = y
            phi_bad[x] = bad
            inv_tab[x] = inv

        self._finite = True
        self._mu = mu_map
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self._up = {v: frozenset(s) for v, s in up.items()}
        self._phi = phi_tab
        self._phi_inv_tab = inv_tab
        self._phi_bad = phi_bad
        self._phi_order_cache = {}
        self.name = name
        self.parse_vertex = parse_vertex or (lambda tok: self._parse_token(tok))
        self.format_vertex = format_vertex or _default_format

        if ranking is None:
            ranking = self._topological_ranking(verts)
        else:
            ranking = list(ranking)
            self._check_ranking(ranking, vset)
        self.vertices = tuple(ranking)
        self._rank = {v: i for i, v in enumerate(self.vertices)}
        self._dual = None
        return self

    @classmethod
    def lazy(cls, *, edge, less, mu, phi, phi_inv, name="lazy graph",
             contains=None, parse_vertex=None, format_vertex=None):
        """Infinite graph given by query callables.

        ``less`` must be a total order usable directly as the normal-form
        ranking, ``mu`` may be a callable or a constant, and both ``phi``
        and ``phi_inv`` are required: no generic inversion is attempted on
        infinite stars.
        """
        self = object.__new__(cls)
        self._finite = False
        self.vertices = None
        self._edge_fn = edge
        self._less_fn = less
        self._mu_fn = mu if callable(mu) else (lambda v, _m=mu: _m)
        self._mu_constant = None if callable(mu) else mu
        self._phi_fn = phi
        self._phi_inv_fn = phi_inv
        self._contains = contains or (lambda v: True)
        self.name = name
        self.parse_vertex = parse_vertex or _default_parse
        self.format_vertex = format_vertex or _default_format
        self._dual = None
        return self

    def _check_ranking(self, ranking, vset):
        if set(ranking) != vset or len(ranking) != len(vset):
            raise GraphError("ranking is not a permutation of the vertices")
        pos = {v: i for i, v in enumerate(ranking)}
        for v in ranking:
            for w in self._up[v]:
                if pos[w] < pos[v]:
                    raise GraphError(
                        f"ranking is not a linear extension: {v!r} < {w!r} but "
                        f"{self.format_vertex(w)} is ranked below {self.format_vertex(v)}")

    def _topological_ranking(self, verts):
        # stable Kahn: among minimal remaining vertices pick the least token
        below_count = {v: 0 for v in verts}
        for v in verts:
            for w in self._up[v]:
                below_count[w] += 1
        key = self.format_vertex
        ready = sorted((v for v in verts if below_count[v] == 0), key=key)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            changed = False
            for w in self._up[v]:
                below_count[w] -= 1
                if below_count[w] == 0:
                    ready.append(w)
                    changed = True
            if changed:
                ready.sort(key=key)
        return out

    def _parse_token(self, tok):
        if tok in self._rank:
            return tok
        raise GraphError(f"unknown vertex {tok!r}")

    # ------------------------------------------------------------------
    # queries

    @property
    def finite(self):
        return self._finite

    def contains_vertex(self, v) -> bool:
        if self._finite:
            return v in self._rank
        return self._contains(v)

    def edge(self, x, y) -> bool:
        if self._finite:
            return y in self._adj[x]
        return x != y and self._edge_fn(x, y)

    def less(self, x, y) -> bool:
        """Strict order: x < y."""
        if self._finite:
            return y in self._up[x]
        return x != y and self._less_fn(x, y)

    def leq(self, x, y) -> bool:
        return x == y or self.less(x, y)

    def incomparable(self, x, y) -> bool:
        return x != y and not self.less(x, y) and not self.less(y, x)

    def mu(self, x):
        return self._mu[x] if self._finite else self._mu_fn(x)

    def star(self, x):
        if not self._finite:
            raise GraphError("star enumeration needs a finite graph")
        return self._adj[x] | {x}

    def phi(self, x, y):
        if self._finite:
            try:
                return self._phi[x][y]
            except KeyError:
                raise GraphError(f"{y!r} is not in star({x!r})") from None
        if x == y:
            return y
        if not self._edge_fn(x, y):
            raise GraphError(f"{y!r} is not in star({x!r})")
        return self._phi_fn(x, y)

    def phi_inv(self, x, y):
        if self._finite:
            if self._phi_bad[x]:
                raise GraphError(self._phi_bad[x])
            try:
                return self._phi_inv_tab[x][y]
            except KeyError:
                raise GraphError(f"{y!r} has no phi_{x!r} preimage in the star") from None
        if x == y:
            return y
        if not self._edge_fn(x, y):
            raise GraphError(f"{y!r} is not in star({x!r})")
        return self._phi_inv_fn(x, y)

    def phi_order(self, x) -> int:
        """Order of phi_x as a permutation of the (finite) star."""
        if not self._finite:
            raise GraphError("phi_order needs a finite graph")
        cached = self._phi_order_cache.get(x)
        if cached is not None:
            return cached
        if self._phi_bad[x]:
            raise GraphError(self._phi_bad[x])
        table = self._phi[x]
        seen = set()
        order = 1
        for y in table:
            if y in seen:
                continue
            n = 0
            z = y
            while True:
                z = table[z]
                n += 1
                seen.add(z)
                if z == y:
                    break
            order = lcm(order, n)
        self._phi_order_cache[x] = order
        return order

    def phi_pow(self, x, a, y, _cap=10 ** 6):
        """Apply phi_x a times to y (negative a uses phi_inv)."""
        if a == 0 or x == y:
            return y
        if self._finite:
            a %= self.phi_order(x)
            if a == 0:
                return y
            table = self._phi[x]
            try:
                for _ in range(a):
                    y = table[y]
            except KeyError:
                raise GraphError(f"{y!r} left star({x!r}) under phi") from None
            return y
        if abs(a) > _cap:
            raise GraphError(f"phi power {a} exceeds the iteration cap on a lazy graph")
        fn = self._phi_fn if a > 0 else self._phi_inv_fn
        for _ in range(abs(a)):
            if not self._edge_fn(x, y):
                raise GraphError(f"{y!r} is not in star({x!r})")
            y = fn(x, y)
        return y

    def sort_key(self, v):
        """Key whose descending order is the normal-form order on vertices."""
        if self._finite:
            return self._rank[v]
        return v

    def rank(self, v) -> int:
        if not self._finite:
            raise GraphError("rank needs a finite graph")
        return self._rank[v]

    def prec(self, x, y) -> bool:
        """Strict total order extending less."""
        if self._finite:
            return self._rank[x] < self._rank[y]
        return x != y and self._less_fn(x, y)

    def complete(self) -> bool:
        if not self._finite:
            raise GraphError("completeness check needs a finite graph")
        n = len(self.vertices)
        return all(len(self._adj[v]) == n - 1 for v in self.vertices)

    # ------------------------------------------------------------------
    # derived graphs

    def with_ranking(self, ranking):
        """Same graph with an explicit normal-form ranking."""
        if not self._finite:
            raise GraphError("rankings apply to finite graphs only")
        g = object.__new__(TrickleGraph)
        g.__dict__.update(self.__dict__)
        ranking = list(ranking)
        g._check_ranking(ranking, set(self.vertices))
        g.vertices = tuple(ranking)
        g._rank = {v: i for i, v in enumerate(g.vertices)}
        g._dual = None
        g._phi_order_cache = dict(self._phi_order_cache)
        return g

    def dual(self):
        """Same graph with every star map replaced by its inverse."""
        if self._dual is not None:
            return self._dual
        g = object.__new__(TrickleGraph)
        g.__dict__.update(self.__dict__)
        if self._finite:
            for x in self.vertices:
                if self._phi_bad[x]:
                    raise GraphError(self._phi_bad[x])
            g._phi = {x: dict(self._phi_inv_tab[x]) for x in self.vertices}
            g._phi_inv_tab = {x: dict(self._phi[x]) for x in self.vertices}
            g._phi_bad = {x: None for x in self.vertices}
            g._phi_order_cache = {}
        else:
            g._phi_fn, g._phi_inv_fn = self._phi_inv_fn, self._phi_fn
        g.name = f"dual({self.name})"
        g._dual = self
        self._dual = g
        return g

    def same_structure(self, other) -> bool:
        """Structural equality of finite graphs (tables and ranking)."""
        if not (isinstance(other, TrickleGraph) and self._finite and other._finite):
            return self is other
        return (self.vertices == other.vertices
                and self._mu == other._mu
                and self._adj == other._adj
                and self._up == other._up
                and self._phi == other._phi)

    def __repr__(self):
        if self._finite:
            return f"<TrickleGraph {self.name!r}: {len(self.vertices)} vertices>"
        return f"<TrickleGraph {self.name!r}: lazy>"


def dual_graph(graph: TrickleGraph) -> TrickleGraph:
    return graph.dual()


# ----------------------------------------------------------------------
# validation


def validate(graph: TrickleGraph, max_witnesses_per_axiom=20) -> ValidationReport:
    """Check the axioms on a finite graph, reporting witnesses.

    Structural problems with the star maps (not a bijection of the star,
    or not preserving adjacency) are reported first; axioms (c)-(g) are
    only evaluated on vertices with structurally sound maps.
    """
    if not graph.finite:
        raise GraphError("validate needs a finite graph; use spot_check for lazy graphs")
    report = ValidationReport()
    counts = {}

    def hit(axiom, witness, detail):
        n = counts.get(axiom, 0)
        counts[axiom] = n + 1
        if n < max_witnesses_per_axiom:
            report.violations.append(Violation(axiom, witness, detail))

    verts = graph.vertices
    sound = set()
    for x in verts:
        bad = graph._phi_bad[x]
        if bad:
            hit("structure", (x,), bad)
            continue
        star = graph.star(x)
        ok = True
        for y, z in itertools.combinations(star, 2):
            if graph.edge(y, z) != graph.edge(graph.phi(x, y), graph.phi(x, z)):
                hit("structure", (x, y, z),
                    f"phi_{x!r} does not preserve adjacency on ({y!r}, {z!r})")
                ok = False
        if ok:
            sound.add(x)

    for x in verts:
        for y in verts:
            if graph.less(x, y) and not graph.edge(x, y):
                hit("a", (x, y), "x < y without an edge {x, y}")

    for x in verts:
        for y in graph._adj[x]:
            if not graph.incomparable(x, y):
                continue
            for z in verts:
                if not graph.leq(z, y) or z == y:
                    continue
                if not graph.edge(x, z):
                    hit("b", (x, y, z), "z <= y on an incomparable edge but {x, z} missing")
                elif not graph.incomparable(x, z):
                    hit("b", (x, y, z), "z <= y on an incomparable edge but x, z comparable")

    for x in sorted(sound, key=graph.rank):
        star = sorted(graph.star(x), key=graph.rank)
        for y in star:
            fy = graph.phi(x, y)
            if fy != y and not graph.less(y, x):
                hit("d", (x, y), f"phi_{x!r} moves {y!r}, which is not below {x!r}")
            if graph.mu(fy) != graph.mu(y):
                hit("f", (x, y), f"mu changes along phi_{x!r}: mu({y!r}) != mu({fy!r})")
            for z in star:
                if graph.leq(z, y) != graph.leq(graph.phi(x, z), fy):
                    hit("c", (x, y, z), f"phi_{x!r} does not preserve the order on the star")
        m = graph.mu(x)
        if m != INFINITY and m % graph.phi_order(x) != 0:
            hit("e", (x,), f"phi_{x!r} has order {graph.phi_order(x)}, not a divisor of mu = {m}")

    for x in sorted(sound, key=graph.rank):
        for y in graph._adj[x]:
            if not (graph.less(y, x) and y in sound):
                continue
            for z in verts:
                if not graph.less(z, y):
                    continue
                try:
                    lhs = graph.phi(x, graph.phi(y, z))
                    rhs = graph.phi(graph.phi(x, y), graph.phi(x, z))
                except GraphError as e:
                    hit("g", (z, y, x), f"cannot evaluate the exchange identity: {e}")
                    continue
                if lhs != rhs:
                    hit("g", (z, y, x),
                        f"phi_{x!r} . phi_{y!r} sends {z!r} to {lhs!r}, "
                        f"the exchanged composite to {rhs!r}")
    return report


def spot_check(graph: TrickleGraph, samples) -> ValidationReport:
    """Sampled axiom check for lazy graphs.

    Each sample is a triple of vertices; axioms (a)-(d), (f), (g) and the
    phi/phi_inv round trip are checked on the triple only.  Axiom (e) is
    skipped: it needs the order of phi_x, which is not observable from
    finitely many queries on an infinite star.
    """
    report = ValidationReport(checked=0)

    def hit(axiom, witness, detail):
        report.violations.append(Violation(axiom, witness, detail))

    for triple in samples:
        report.checked += 1
        triple = tuple(triple)
        for x, y in itertools.permutations(triple, 2):
            if graph.less(x, y) and not graph.edge(x, y):
                hit("a", (x, y), "x < y without an edge")
        for x, y in itertools.permutations(triple, 2):
            if x == y or not graph.edge(x, y):
                continue
            fy = graph.phi(x, y)
            if graph.phi_inv(x, fy) != y:
                hit("structure", (x, y), "phi_inv does not undo phi")
            if fy != y and not graph.less(y, x):
                hit("d", (x, y), "phi moves a vertex that is not below its base")
            if graph.mu(fy) != graph.mu(y):
                hit("f", (x, y), "mu changes along phi")
        for x, y, z in itertools.permutations(triple, 3):
            if graph.edge(x, y) and graph.incomparable(x, y) and graph.leq(z, y):
                if not (graph.edge(x, z) and graph.incomparable(x, z)):
                    hit("b", (x, y, z), "downward closure of an incomparable edge fails")
            if graph.edge(x, y) and graph.edge(x, z):
                if graph.leq(z, y) != graph.leq(graph.phi(x, z), graph.phi(x, y)):
                    hit("c", (x, y, z), "phi does not preserve the order on the star")
        for z, y, x in itertools.permutations(triple, 3):
            if graph.less(z, y) and graph.less(y, x):
                lhs = graph.phi(x, graph.phi(y, z))
                rhs = graph.phi(graph.phi(x, y), graph.phi(x, z))
                if lhs != rhs:
                    hit("g", (z, y, x), "exchange identity fails on the chain")
    return report
