"""The virtual cactus group as a semidirect product.

Virtual cactus words mix interval generators x[p,q] with simple
transpositions r1, ..., r(n-1).  Killing the interval generators maps
onto the symmetric group; the kernel is generated by the conjugates of
the interval generators by permutations, one generator per tuple of
distinct points, and those tuples form a valid vertex-ordered graph:
contiguous subtuples sit below their hosts, disjoint or nested tuples
are adjacent, and the star map of a tuple reflects a subtuple's position
block through the middle.

An element is therefore a pair (kernel element, permutation); a word is
folded left to right, each interval generator contributing the kernel
generator of its tuple translated by the permutation read so far.  Two
words are equal iff both components agree, which solves the word problem
for the whole group and exhibits the plain cactus group as the parabolic
subgroup on the consecutive tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .graph import GraphError, TrickleGraph
from .pilings import GroupElement, from_syllables

Perm = tuple  # one-line: perm[i - 1] is the image of i


def perm_identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Apply q first, then p."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def transposition(n: int, i: int) -> Perm:
    if not 1 <= i <= n - 1:
        raise GraphError(f"r{i} is out of range for n = {n}")
    img = list(range(1, n + 1))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def perm_apply_tuple(w: Perm, t: tuple) -> tuple:
    return tuple(w[i - 1] for i in t)


# ----------------------------------------------------------------------
# the kernel graph on tuples of distinct points


def _contiguous_sub(a: tuple, b: tuple) -> bool:
    """Is a a contiguous proper subtuple of b?"""
    if len(a) >= len(b):
        return False
    for p in range(len(b) - len(a) + 1):
        if b[p:p + len(a)] == a:
            return True
    return False


def _tuple_token(t: tuple) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _parse_tuple(token: str) -> tuple:
    body = token.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError:
        raise GraphError(f"bad tuple token {token!r}") from None


@lru_cache(maxsize=None)
def kjn_graph(n: int) -> TrickleGraph:
    """Tuples of 2..n distinct points of {1..n}, ordered by contiguous
    inclusion, adjacent when comparable or disjoint, label 2 everywhere,
    the star map reflecting a subtuple's position block."""
    if n < 2:
        raise GraphError("the kernel graph needs n >= 2")
    verts = []
    for length in range(2, n + 1):
        verts.extend(_distinct_tuples(n, length))
    vset = set(verts)

    edges = []
    less = []
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            sub_ab = _contiguous_sub(a, b)
            sub_ba = _contiguous_sub(b, a)
            disjoint = not (set(a) & set(b))
            if sub_ab or sub_ba or disjoint:
                edges.append((a, b))
            if sub_ab:
                less.append((a, b))
            elif sub_ba:
                less.append((b, a))

    phi = {}
    for y in verts:
        ell = len(y)
        table = {}
        for k in range(2, ell):
            for p in range(ell - k + 1):
                sub = y[p:p + k]
                table[sub] = tuple(y[ell - k - p + j] for j in range(k))
        if table:
            phi[y] = table
    assert all(v in vset for t in phi.values() for v in t.values())

    ranking = sorted(verts, key=lambda t: (len(t), t))
    return TrickleGraph.build(verts, 2, edges, less, phi, ranking=ranking,
                              name=f"kj{n}",
                              parse_vertex=_parse_tuple,
                              format_vertex=_tuple_token)


def _distinct_tuples(n, length):
    out = []

    def grow(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for t in range(1, n + 1):
            if t not in prefix:
                prefix.append(t)
                grow(prefix)
                prefix.pop()

    grow([])
    return out


# ----------------------------------------------------------------------
# words and elements


@dataclass(frozen=True)
class VjnElement:
    kernel: GroupElement
    perm: Perm


_TOKEN = re.compile(r"^(?:x\[(\d+),(\d+)\]|r(\d+))$")


def parse_vjn_word(n: int, text: str):
    """Tokens x[p,q] (1 <= p < q <= n) and ri (1 <= i < n)."""
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise GraphError(f"bad token {tok!r}; expected x[p,q] or r<i>")
        if m.group(3) is not None:
            i = int(m.group(3))
            if not 1 <= i <= n - 1:
                raise GraphError(f"{tok!r} is out of range for n = {n}")
            out.append(("r", i))
        else:
            p, q = int(m.group(1)), int(m.group(2))
            if not 1 <= p < q <= n:
                raise GraphError(f"{tok!r} is out of range for n = {n}")
            out.append(("x", p, q))
    return out


def vjn_encode(n: int, word) -> VjnElement:
    """Fold a word left to right into a (kernel, permutation) pair.

    An interval generator contributes the kernel generator of its tuple
    translated by the permutation accumulated so far; a transposition
    multiplies the permutation on the right.
    """
    if isinstance(word, str):
        word = parse_vjn_word(n, word)
    graph = kjn_graph(n)
    kernel = GroupElement.identity(graph)
    perm = perm_identity(n)
    for tok in word:
        if tok[0] == "r":
            perm = perm_mul(perm, transposition(n, tok[1]))
        else:
            _, p, q = tok
            vertex = perm_apply_tuple(perm, tuple(range(p, q + 1)))
            kernel = kernel * from_syllables(graph, [(vertex, 1)])
    return VjnElement(kernel, perm)


def vjn_equal(n: int, w1, w2) -> bool:
    a = vjn_encode(n, w1)
    b = vjn_encode(n, w2)
    return a.perm == b.perm and a.kernel == b.kernel


# ----------------------------------------------------------------------
# the cactus subgroup on consecutive tuples


def consecutive_tuple(p: int, q: int) -> tuple:
    return tuple(range(p, q + 1))


def jn_embedding_check(n: int, samples) -> bool:
    """Sampled agreement between cactus equality and kernel equality.

    Each sample is a pair of words over the interval generators, given as
    sequences of (p, q) pairs.  True iff, on every sample, equality in
    the cactus group matches equality of the encodings.
    """
    from .families import cactus, interval_id

    jn = cactus(n)
    for w1, w2 in samples:
        eq_jn = (from_syllables(jn, [(interval_id(p, q), 1) for p, q in w1])
                 == from_syllables(jn, [(interval_id(p, q), 1) for p, q in w2]))
        eq_vjn = vjn_equal(n,
                           [("x", p, q) for p, q in w1],
                           [("x", p, q) for p, q in w2])
        if eq_jn != eq_vjn:
            return False
    return True
