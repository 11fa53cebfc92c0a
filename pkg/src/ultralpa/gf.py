"""Finite-graph approximation of a (quotient) Leavitt path algebra.

Given a finite set F of singular vertices and edges, a finite ordinary
graph is built whose vertices are the chosen sinks, the chosen edges, and
the surviving Boolean cells of the chosen edge ranges; the associated
projections and partial isometries inside the ambient algebra form a
Leavitt family for that graph.  Cells whose vertices all emit only chosen
edges are dropped: their projections vanish by the vertex identity.

Loops of the ambient graph whose edges are all chosen correspond to loops
of the approximation, and having an exit is preserved in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EngineError
from .lpa import AlgebraElement, LeavittAlgebra


@dataclass(frozen=True)
class FiniteGraphApprox:
    algebra: LeavittAlgebra
    f0: tuple  # chosen sink vertices
    f1: tuple  # chosen edge ids
    words: tuple  # surviving cells, as 0/1 tuples aligned with f1
    r_word: dict  # cell -> vertex set of the range cell
    big_r: dict  # cell -> range cell minus the chosen sinks
    nodes: tuple  # ('v', label) | ('e', edge) | ('w', word)
    arcs: tuple  # (edge, node) pairs, source edge towards node
    proj: dict  # node -> AlgebraElement
    iso: dict  # arc -> AlgebraElement
    iso_star: dict  # arc -> AlgebraElement

    def node_label(self, node):
        kind, value = node
        if kind == "w":
            return "w" + "".join(str(b) for b in value)
        return str(value)

    def sinks(self):
        with_out = {e for e, _ in self.arcs}
        return tuple(n for n in self.nodes if not (n[0] == "e" and n[1] in with_out))

    def arcs_at(self, node):
        return tuple((e, t) for e, t in self.arcs if e == node[1] and node[0] == "e")


def build_gf(algebra: LeavittAlgebra, vertices=(), edges=()) -> FiniteGraphApprox:
    """Construct the approximation for F = vertices + edges."""
    f0 = tuple(sorted(set(vertices)))
    for v in f0:
        if v not in algebra.vertices:
            raise EngineError(f"unknown vertex {v!r} in F")
        if algebra.edges_at.get(v):
            raise EngineError(f"vertex {v!r} in F is not singular")
    f1 = tuple(sorted(set(edges)))
    for e in f1:
        if e not in algebra.source:
            raise EngineError(f"unknown edge {e!r} in F")

    n = len(f1)
    r_word, big_r = {}, {}
    words = []
    for word in itertools.product((0, 1), repeat=n):
        if not any(word):
            continue
        cell = None
        for bit, e in zip(word, f1):
            rng = algebra.range[e]
            if bit:
                cell = rng if cell is None else (cell & rng)
        for bit, e in zip(word, f1):
            if not bit:
                cell -= algebra.range[e]
        r_word[word] = frozenset(cell)
        big_r[word] = frozenset(cell - set(f0))
        if not big_r[word]:
            continue
        fully_chosen = all(
            algebra.edges_at[u] and set(algebra.edges_at[u]) <= set(f1)
            for u in big_r[word]
        )
        if fully_chosen:
            continue  # the cell projection vanishes by the vertex identity
        words.append(word)
    words = tuple(words)

    nodes = (
        tuple(("v", v) for v in f0)
        + tuple(("e", e) for e in f1)
        + tuple(("w", w) for w in words)
    )
    arcs = []
    for e in f1:
        rng = algebra.range[e]
        for f in f1:
            if algebra.source[f] in rng:
                arcs.append((e, ("e", f)))
        for v in f0:
            if v in rng:
                arcs.append((e, ("v", v)))
        for w in words:
            if w[f1.index(e)]:
                arcs.append((e, ("w", w)))
    arcs = tuple(arcs)

    covered = algebra.zero()
    for e in f1:
        covered = covered + algebra.s(e) * algebra.s_star(e)
    complement = algebra.unit() - covered

    proj = {}
    for v in f0:
        proj[("v", v)] = algebra.p(v) * complement
    for e in f1:
        proj[("e", e)] = algebra.s(e) * algebra.s_star(e)
    for w in words:
        proj[("w", w)] = algebra.p(big_r[w]) * complement

    iso, iso_star = {}, {}
    for arc in arcs:
        e, node = arc
        iso[arc] = algebra.s(e) * proj[node]
        iso_star[arc] = proj[node] * algebra.s_star(e)

    return FiniteGraphApprox(
        algebra, f0, f1, words, r_word, big_r, nodes, arcs, proj, iso, iso_star
    )


def verify_leavitt_family(approx: FiniteGraphApprox):
    """Check the graph-algebra relations for the family; return violations."""
    violations = []
    nodes = approx.nodes
    proj = approx.proj
    zero = approx.algebra.zero()

    for x in nodes:
        if proj[x] == zero:
            violations.append(f"vanishing projection at {approx.node_label(x)}")
    for x in nodes:
        for y in nodes:
            expected = proj[x] if x == y else zero
            if proj[x] * proj[y] != expected:
                violations.append(
                    f"projections not orthogonal: {approx.node_label(x)}, "
                    f"{approx.node_label(y)}"
                )

    for arc in approx.arcs:
        e, node = arc
        s_e, s_e_star = approx.iso[arc], approx.iso_star[arc]
        src, rng = ("e", e), node
        if proj[src] * s_e != s_e or s_e * proj[rng] != s_e:
            violations.append(f"isometry relation fails at arc {e}->{approx.node_label(node)}")
        if proj[rng] * s_e_star != s_e_star or s_e_star * proj[src] != s_e_star:
            violations.append(
                f"adjoint relation fails at arc {e}->{approx.node_label(node)}"
            )

    for a1 in approx.arcs:
        for a2 in approx.arcs:
            expected = proj[a1[1]] if a1 == a2 else zero
            if approx.iso_star[a1] * approx.iso[a2] != expected:
                violations.append(
                    f"star product fails: {a1[0]}->{approx.node_label(a1[1])} vs "
                    f"{a2[0]}->{approx.node_label(a2[1])}"
                )

    sinks = set(approx.sinks())
    for e in approx.f1:
        node = ("e", e)
        if node in sinks:
            continue
        acc = approx.algebra.zero()
        for arc in approx.arcs_at(node):
            acc = acc + approx.iso[arc] * approx.iso_star[arc]
        if acc != proj[node]:
            violations.append(f"vertex identity fails at {e}")
    return violations


# -- loop correspondence ------------------------------------------------------


def loop_has_exit(algebra: LeavittAlgebra, edges) -> bool:
    """Exit test for a loop of the engine graph (plain quotient version)."""
    edges = list(edges)
    n = len(edges)
    for i in range(n):
        e = edges[i]
        nxt = edges[(i + 1) % n]
        if algebra.range[e] != {algebra.source[nxt]}:
            return True
        for f in algebra.edges:
            if f != nxt and algebra.source[f] in algebra.range[e]:
                return True
    return False


def loop_tilde(approx: FiniteGraphApprox, edges):
    """The corresponding loop of the approximation graph, as a list of arcs."""
    edges = list(edges)
    missing = [e for e in edges if e not in approx.f1]
    if missing:
        raise EngineError(f"loop edges not in F: {', '.join(missing)}")
    n = len(edges)
    arcs = []
    for i in range(n):
        arc = (edges[i], ("e", edges[(i + 1) % n]))
        if arc not in approx.arcs:
            raise EngineError(f"arc {arc} missing from the approximation")
        arcs.append(arc)
    return arcs


def gf_loop_has_exit(approx: FiniteGraphApprox, arcs) -> bool:
    """Exit test for a cycle in the (ordinary) approximation graph."""
    cycle = set(arcs)
    on_cycle = {arc[0] for arc in arcs}
    for arc in approx.arcs:
        if arc[0] in on_cycle and arc not in cycle:
            return True
    return False
