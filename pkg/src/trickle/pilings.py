"""The stratum rewriting engine.

Words over the vertex alphabet are rewritten through a two-level
structure.  A *syllable* is a pair (vertex, exponent) with the exponent a
nonzero residue mod mu(vertex) (a nonzero integer when mu is INFINITY).
A *stratum* is a finite set of syllables whose supports are distinct and
pairwise adjacent, stored as a tuple in descending vertex order.  A
*piling* is a tuple of strata.

Rewriting moves a syllable from a stratum down into the previous one:
extract it (conjugating it past the larger syllables of its stratum with
the star maps), and add it to the target stratum, merging or cancelling
exponents when the vertex is already present.  Empty strata are erased.
The system terminates and is confluent, so every piling has a unique
irreducible form; ``normalize`` computes it with a deterministic
left-to-right sweep.  Group elements are held in that canonical form,
which makes equality a tuple comparison and solves the word problem.

Normal-form words depend on the total vertex ranking the graph carries;
the ranking is part of the graph, so one graph yields one normal form
per element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import INFINITY, GraphError, TrickleGraph

Syllable = tuple          # (vertex, exponent)
Stratum = tuple           # syllables, descending vertex order
Piling = tuple            # strata


def canonical_exponent(graph, v, a):
    """Reduce an exponent into the canonical range; 0 means it vanished."""
    m = graph.mu(v)
    if m == INFINITY:
        return a
    return a % m


def make_syllable(graph, v, a) -> Syllable:
    if not graph.contains_vertex(v):
        raise GraphError(f"unknown vertex {v!r}")
    a = canonical_exponent(graph, v, a)
    if a == 0:
        raise GraphError(f"zero exponent at {v!r}: not a syllable")
    return (v, a)


def sort_stratum(graph, syllables) -> Stratum:
    key = graph.sort_key
    return tuple(sorted(syllables, key=lambda s: key(s[0]), reverse=True))


def make_stratum(graph, syllables) -> Stratum:
    """Validated stratum: distinct, pairwise adjacent supports."""
    sylls = [make_syllable(graph, v, a) for v, a in syllables]
    seen = set()
    for v, _ in sylls:
        if v in seen:
            raise GraphError(f"repeated vertex {v!r} in a stratum")
        seen.add(v)
    for i, (v, _) in enumerate(sylls):
        for w, _ in sylls[i + 1:]:
            if not graph.edge(v, w):
                raise GraphError(f"stratum support {v!r}, {w!r} is not an edge")
    return sort_stratum(graph, sylls)


def stratum_remove(U: Stratum, s: Syllable) -> Stratum:
    i = U.index(s)
    return U[:i] + U[i + 1:]


def stratum_extract(graph, U: Stratum, s: Syllable) -> Syllable:
    """Conjugate s past the syllables above it in U."""
    i = U.index(s)
    v = s[0]
    for j in range(i - 1, -1, -1):
        x, a = U[j]
        v = graph.phi_pow(x, a, v)
    return (v, s[1])


def stratum_can_add(graph, U: Stratum, s: Syllable) -> bool:
    y = s[0]
    ok = True
    for x, _ in U:
        if x == y:
            return True
        if ok and not graph.edge(y, x):
            ok = False
    return ok


def stratum_add(graph, U: Stratum, s: Syllable) -> Stratum:
    """Push s into U: fresh vertices join, matching vertices merge or cancel.

    Requires ``stratum_can_add``; every other syllable is pulled back
    through phi so the product of the stratum is unchanged as an element.
    """
    if not stratum_can_add(graph, U, s):
        raise GraphError(f"syllable {s!r} cannot be added to {U!r}")
    y, b = s
    out = []
    merged = False
    for x, a in U:
        if x == y:
            merged = True
            c = canonical_exponent(graph, y, a + b)
            if c != 0:
                out.append((y, c))
        else:
            out.append((graph.phi_pow(y, -b, x), a))
    if not merged:
        out.append(s)
    return sort_stratum(graph, out)


def push_syllable(graph, U: Stratum, V: Stratum, s: Syllable):
    """Move s from V down into U; None when the extracted syllable cannot land."""
    g = stratum_extract(graph, V, s)
    if not stratum_can_add(graph, U, g):
        return None
    return stratum_add(graph, U, g), stratum_remove(V, s)


def normalize(graph, piling) -> Piling:
    """The unique irreducible piling reachable from ``piling``.

    Deterministic strategy: repeated left-to-right sweeps; within a pair
    the mover syllables are tried in descending vertex order; empty
    strata are dropped eagerly.  Confluence makes the result independent
    of these choices.
    """
    strata = [U for U in piling if U]
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(strata):
            U, V = strata[i], strata[i + 1]
            t = None
            for s in V:
                t = push_syllable(graph, U, V, s)
                if t is not None:
                    break
            if t is None:
                i += 1
                continue
            changed = True
            strata[i:i + 2] = [S for S in t if S]
            if i > 0:
                i -= 1
    return tuple(strata)


# ----------------------------------------------------------------------
# group elements


class GroupElement:
    """An element held as its canonical (irreducible) piling."""

    __slots__ = ("graph", "piling")

    def __init__(self, graph: TrickleGraph, piling: Piling):
        self.graph = graph
        self.piling = piling

    @classmethod
    def identity(cls, graph):
        return cls(graph, ())

    @property
    def is_identity(self):
        return not self.piling

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.graph is not other.graph:
            raise GraphError("elements live over different graphs")
        return GroupElement(self.graph, normalize(self.graph, self.piling + other.piling))

    def inverse(self):
        letters = [(v, -e) for v, e in reversed(nf_letters(self.graph, self.piling))]
        return from_syllables(self.graph, letters)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = GroupElement.identity(self.graph)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.graph is other.graph
                and self.piling == other.piling)

    def __hash__(self):
        return hash((id(self.graph), self.piling))

    def nf(self):
        """Normal-form word as a list of (vertex, +1 | -1) letters."""
        return nf_letters(self.graph, self.piling)

    def nf_str(self) -> str:
        return format_word(self.graph, self.nf())

    def __repr__(self):
        return f"<element {self.nf_str() or '1'}>"


def equal(g: GroupElement, h: GroupElement) -> bool:
    if g.graph is not h.graph:
        raise GraphError("elements live over different graphs")
    return g.piling == h.piling


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


def invert(g: GroupElement) -> GroupElement:
    return g.inverse()


def from_syllables(graph, pairs) -> GroupElement:
    """Element of the product of the given (vertex, exponent) powers."""
    strata = []
    for v, k in pairs:
        if not graph.contains_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")
        c = canonical_exponent(graph, v, k)
        if c != 0:
            strata.append(((v, c),))
    return GroupElement(graph, normalize(graph, tuple(strata)))


def from_word(graph, letters) -> GroupElement:
    """Element of a word over the vertices and their inverses."""
    return from_syllables(graph, letters)


def nf_letters(graph, piling):
    out = []
    for U in piling:
        for v, a in U:
            if a < 0:
                out.extend([(v, -1)] * (-a))
            else:
                out.extend([(v, 1)] * a)
    return out


# ----------------------------------------------------------------------
# the word grammar: whitespace-separated tokens  v | v^k  (k nonzero)


def parse_word(graph, text: str):
    """Parse a word into (vertex, exponent) pairs, one per token."""
    out = []
    for tok in text.split():
        name, caret, exp = tok.rpartition("^")
        if caret:
            try:
                k = int(exp)
            except ValueError:
                raise GraphError(f"bad exponent in token {tok!r}") from None
            if k == 0:
                raise GraphError(f"zero exponent in token {tok!r}")
        else:
            name, k = tok, 1
        v = graph.parse_vertex(name)
        if not graph.contains_vertex(v):
            raise GraphError(f"unknown vertex {name!r}")
        out.append((v, k))
    return out


def format_word(graph, letters) -> str:
    """Render letters compactly, merging runs of one vertex and sign."""
    toks = []
    run_v, run_k = None, 0
    for v, e in list(letters) + [(None, 0)]:
        if v == run_v and (e > 0) == (run_k > 0):
            run_k += e
            continue
        if run_v is not None and run_k != 0:
            name = graph.format_vertex(run_v)
            toks.append(name if run_k == 1 else f"{name}^{run_k}")
        run_v, run_k = v, e
    return " ".join(toks)


def element_from_text(graph, text: str) -> GroupElement:
    return from_syllables(graph, parse_word(graph, text))


# ----------------------------------------------------------------------
# finiteness


@dataclass(frozen=True)
class FinitenessAnswer:
    finite: bool
    order: int | None
    reason: str

    def __str__(self):
        return f"finite, order {self.order}" if self.finite else f"infinite ({self.reason})"


def is_finite(graph) -> FinitenessAnswer:
    """Finite iff the graph is finite, complete, and every mu is finite.

    The order of a finite group counts its normal forms: independent
    exponent choices per vertex, so the product of the mu values.
    """
    if not graph.finite:
        return FinitenessAnswer(False, None, "declared lazy, so the vertex set is infinite")
    if not graph.complete():
        missing = next((x, y) for x in graph.vertices for y in graph.vertices
                       if x != y and not graph.edge(x, y))
        return FinitenessAnswer(False, None, f"missing edge {missing!r}")
    infinite = [v for v in graph.vertices if graph.mu(v) == INFINITY]
    if infinite:
        return FinitenessAnswer(False, None, f"mu({infinite[0]!r}) is infinite")
    order = 1
    for v in graph.vertices:
        order *= graph.mu(v)
    return FinitenessAnswer(True, order, "complete with finite labels")
