"""Command-line front end.

Exit codes: 0 for success or a positive answer, 1 for a negative answer
(unequal words, non-member, failed confluence check), 2 for usage,
schema, or validation errors.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import random
import sys

import click

from . import confluence as conf
from . import families, garside, jsonio, parabolic, syllabic, thompson, vjn
from .graph import GraphError, validate as validate_graph
from .pilings import element_from_text, is_finite

NEGATIVE = 1
USAGE = 2


def _split_list(text):
    """Split on top-level commas, leaving bracketed ids like [1,2] intact."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            depth += ch == "["
            depth -= ch == "]"
            cur.append(ch)
    items.append("".join(cur).strip())
    return [item for item in items if item]


def _load(path, order_override=None):
    g = jsonio.load_graph(path)
    if order_override:
        g = g.with_ranking(_split_list(order_override))
    return g


def _fail(message):
    click.echo(f"error: {message}", err=True)
    sys.exit(USAGE)


def _ranking_line(graph):
    return "ranking: " + " ".join(graph.format_vertex(v) for v in graph.vertices)


@click.group()
def main():
    """Word problem, normal forms, and divisibility over trickle graphs."""


@main.command("validate")
@click.argument("graph_path")
def validate_cmd(graph_path):
    """Check the axioms of a graph file, printing witnesses."""
    try:
        g = _load(graph_path)
        report = validate_graph(g)
    except GraphError as e:
        _fail(e)
    click.echo(report.describe())
    sys.exit(0 if report.ok else USAGE)


@main.command("nf")
@click.argument("graph_path")
@click.argument("word")
@click.option("--order-override", default=None,
              help="comma-separated vertex ranking to use for normal forms")
def nf_cmd(graph_path, word, order_override):
    """Normal form of a word."""
    try:
        g = _load(graph_path, order_override)
        elt = element_from_text(g, word)
    except GraphError as e:
        _fail(e)
    click.echo(_ranking_line(g))
    click.echo("nf: " + (elt.nf_str() or "(identity)"))


@main.command("eq")
@click.argument("graph_path")
@click.argument("word1")
@click.argument("word2")
@click.option("--order-override", default=None)
def eq_cmd(graph_path, word1, word2, order_override):
    """Are two words equal in the group?"""
    try:
        g = _load(graph_path, order_override)
        same = element_from_text(g, word1) == element_from_text(g, word2)
    except GraphError as e:
        _fail(e)
    click.echo("equal" if same else "not equal")
    sys.exit(0 if same else NEGATIVE)


@main.command("order")
@click.argument("graph_path")
def order_cmd(graph_path):
    """Group order: finite with its size, or infinite with the reason."""
    try:
        answer = is_finite(_load(graph_path))
    except GraphError as e:
        _fail(e)
    click.echo(str(answer))


@main.command("member")
@click.argument("graph_path")
@click.argument("word")
@click.option("--vertices", required=True, help="comma-separated parabolic subset")
def member_cmd(graph_path, word, vertices):
    """Does the word lie in the standard parabolic subgroup?"""
    try:
        g = _load(graph_path)
        sub = parabolic.parabolic_subgraph(g, _split_list(vertices))
        inside = parabolic.member(element_from_text(g, word), sub)
    except GraphError as e:
        _fail(e)
    click.echo("member" if inside else "not a member")
    sys.exit(0 if inside else NEGATIVE)


@main.command("tits-reduce")
@click.argument("graph_path")
@click.argument("word")
def tits_reduce_cmd(graph_path, word):
    """Shortest syllabic word for the element of a syllabic word."""
    try:
        g = _load(graph_path)
        reduced = syllabic.syllabic_reduce(g, syllabic.parse_syllabic(g, word))
    except GraphError as e:
        _fail(e)
    click.echo(syllabic.format_syllabic(g, reduced) or "(identity)")


@main.command("garside")
@click.argument("graph_path")
def garside_cmd(graph_path):
    """Garside data of a torsion-free graph."""
    try:
        g = _load(graph_path)
        if not garside.is_pregarside(g):
            _fail("the graph has finite labels; no positive-monoid structure")
        if not garside.is_garside(g):
            click.echo("not Garside: the graph is not finite and complete")
            sys.exit(NEGATIVE)
        delta = garside.garside_element(g)
        sf = garside.square_free(g)
    except GraphError as e:
        _fail(e)
    click.echo("Garside")
    click.echo(f"delta: {delta.nf_str()}")
    click.echo(f"square-free elements: {len(sf)}")


@main.command("divisors")
@click.argument("graph_path")
@click.argument("word")
@click.option("--side", type=click.Choice(["left", "right"]), default="left")
def divisors_cmd(graph_path, word, side):
    """Vertices dividing a positive element on the chosen side."""
    try:
        g = _load(graph_path)
        elt = element_from_text(g, word)
        if side == "left":
            divs = garside.atom_left_divisors(elt)
        else:
            divs = garside.atom_right_divisors(elt)
    except GraphError as e:
        _fail(e)
    click.echo(" ".join(sorted(g.format_vertex(v) for v in divs)) or "(none)")


@main.command("lcm")
@click.argument("graph_path")
@click.option("--atoms", required=True, help="comma-separated vertex set")
def lcm_cmd(graph_path, atoms):
    """Least common multiple of a set of vertices (finite complete graphs)."""
    try:
        g = _load(graph_path)
        X = _split_list(atoms)
        for v in X:
            if not g.contains_vertex(v):
                raise GraphError(f"unknown vertex {v!r}")
        elt = garside.lcm_atoms(g, X)
    except GraphError as e:
        _fail(e)
    click.echo(elt.nf_str() or "(identity)")


@main.command("confluence")
@click.argument("graph_path")
@click.option("--max-support", default=3, show_default=True)
@click.option("--max-exp", default=2, show_default=True)
@click.option("--samples", default=200, show_default=True,
              help="random pilings for the strategy-independence check")
@click.option("--seed", default=0, show_default=True)
def confluence_cmd(graph_path, max_support, max_exp, samples, seed):
    """Certify local confluence within bounds; nonzero exit on failure."""
    try:
        g = _load(graph_path)
        report = conf.check_critical_pairs(g, max_support, max_exp)
        sampled = conf.check_strategy_independence(
            g, random.Random(seed), pilings=samples,
            max_support=max_support, max_exp=max_exp)
    except GraphError as e:
        _fail(e)
    report.samples_checked = sampled.samples_checked
    report.sample_failures = sampled.sample_failures
    click.echo(report.describe())
    sys.exit(0 if report.ok else NEGATIVE)


@main.command("example")
@click.argument("family", type=click.Choice(["raag", "racg", "gp", "cactus", "cstar", "gar3", "kjn"]))
@click.option("--n", default=3, show_default=True)
@click.option("--cycle", is_flag=True, help="use a cycle instead of a path (raag/racg)")
@click.option("--graph", "base_path", default=None,
              help="base graph file for gp (vertices, mu, edges only)")
def example_cmd(family, n, cycle, base_path):
    """Emit a stock graph as JSON on stdout."""
    try:
        if family in ("raag", "racg"):
            base = families.cycle_graph(n) if cycle else families.path_graph(n)
            g = (families.raag if family == "raag" else families.racg)(*base)
        elif family == "gp":
            if base_path is None:
                _fail("gp needs --graph with a base file")
            base = jsonio.load_graph(base_path)
            if any(base.less(x, y) for x in base.vertices for y in base.vertices):
                _fail("gp base graph must not carry an order")
            g = families.graph_product(
                base.vertices,
                [(x, y) for i, x in enumerate(base.vertices)
                 for y in base.vertices[i + 1:] if base.edge(x, y)],
                {v: base.mu(v) for v in base.vertices})
        elif family == "cactus":
            g = families.cactus(n)
        elif family == "cstar":
            g = families.dual_cactus_s3()
        elif family == "kjn":
            kj = vjn.kjn_graph(n)
            g = _stringify(kj)
        else:
            g = families.gar3()
    except GraphError as e:
        _fail(e)
    click.echo(jsonio.dump_graph(g), nl=False)


def _stringify(graph):
    """Re-key a finite graph by its vertex tokens so it can serialize."""
    from .graph import TrickleGraph

    fmt = graph.format_vertex
    verts = [fmt(v) for v in graph.vertices]
    back = dict(zip(verts, graph.vertices))
    edges = [(fmt(x), fmt(y)) for i, x in enumerate(graph.vertices)
             for y in graph.vertices[i + 1:] if graph.edge(x, y)]
    less = [(fmt(x), fmt(y)) for x in graph.vertices for y in graph.vertices
            if graph.less(x, y)]
    phi = {fmt(x): {fmt(y): fmt(graph.phi(x, y)) for y in graph.star(x)}
           for x in graph.vertices}
    return TrickleGraph.build(verts, {v: graph.mu(back[v]) for v in verts},
                              edges, less, phi, ranking=verts, name=graph.name)


@main.group("vjn")
def vjn_group():
    """Virtual cactus words."""


@vjn_group.command("eq")
@click.option("--n", required=True, type=int)
@click.argument("word1")
@click.argument("word2")
def vjn_eq_cmd(n, word1, word2):
    """Equality of two virtual cactus words (tokens x[p,q], r<i>)."""
    try:
        same = vjn.vjn_equal(n, word1, word2)
    except GraphError as e:
        _fail(e)
    click.echo("equal" if same else "not equal")
    sys.exit(0 if same else NEGATIVE)


@main.group("f")
def f_group():
    """Words over the dyadic homeomorphism group (tokens inf, k/2^e)."""


@f_group.command("nf")
@click.argument("word")
def f_nf_cmd(word):
    try:
        g = thompson.f_graph()
        elt = element_from_text(g, word)
    except (GraphError, ValueError) as e:
        _fail(e)
    click.echo(elt.nf_str() or "(identity)")


@f_group.command("eq")
@click.argument("word1")
@click.argument("word2")
def f_eq_cmd(word1, word2):
    try:
        g = thompson.f_graph()
        same = element_from_text(g, word1) == element_from_text(g, word2)
    except (GraphError, ValueError) as e:
        _fail(e)
    click.echo("equal" if same else "not equal")
    sys.exit(0 if same else NEGATIVE)


if __name__ == "__main__":
    main()
