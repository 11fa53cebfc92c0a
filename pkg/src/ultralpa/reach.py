"""Reachability order, downward directedness, loops and exits.

The order: A >= B when B is contained in A, or some positive-length path
starts at a named vertex of A and its final range contains B.  Paths are
bundle sequences; one representative edge per bundle is enough because
path existence never depends on multiplicities.

Downward directedness of the complement of an ideal reduces to a finite
check on vertices: any member of the complement contains a vertex outside
the support, and >= transfers downward to that singleton, so the witness
search may be restricted to singletons.  Sinks dominate only themselves,
hence two distinct sinks outside the support (in particular an infinite
family region) settle the answer negatively; what remains is a pairwise
search over the finitely many named vertices and explicit family members
outside the support.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LoopError, TotalIdealError
from .ideals import HSIdeal
from .setalg import FamilyPart, VSet
from .ultragraph import Ultragraph


def reachable_bundles(graph: Ultragraph, vertex):
    """Bundles usable as the last step of a path starting at ``vertex``."""
    frontier = [b for b in graph.bundles if b.source == vertex]
    seen = {b.id for b in frontier}
    out = list(frontier)
    while frontier:
        b = frontier.pop()
        for nxt in graph.bundles:
            if nxt.id not in seen and nxt.source in b.range:
                seen.add(nxt.id)
                out.append(nxt)
                frontier.append(nxt)
    return out


def geq(graph: Ultragraph, a: VSet, b: VSet) -> bool:
    """A >= B: containment, or a path from A whose range covers B."""
    if b.issubset(a):
        return True
    for v in sorted(graph.named):
        if v not in a:
            continue
        for bundle in reachable_bundles(graph, v):
            if b.issubset(bundle.range):
                return True
    return False


def _vertices_outside(graph: Ultragraph, ideal: HSIdeal):
    """(finite vertex list, infinite-region family or None)."""
    support = ideal.support
    out = [v for v in sorted(graph.named) if v not in support]
    for fid in sorted(graph.families):
        inside = support.families.get(fid, FamilyPart.finite())
        outside = FamilyPart.cofinite_excluding().difference(inside)
        if outside.cofinite:
            return out, fid
        out.extend((fid, i) for i in sorted(outside.indices))
    return out, None


def _is_sink(graph: Ultragraph, vertex) -> bool:
    if isinstance(vertex, tuple):
        return True  # family members never emit
    return graph.emission_class(vertex)[0] == "sink"


def _dominates(graph: Ultragraph, reach_map, a, u) -> bool:
    """{a} >= {u} for single vertices."""
    if a == u:
        return True
    if isinstance(a, tuple):
        return False
    return any(u in bundle.range for bundle in reach_map[a])


def directedness_counterexample(graph: Ultragraph, ideal: HSIdeal):
    """None when the complement is downward directed, else a witness pair."""
    if ideal.is_total:
        raise TotalIdealError("the complement of the total ideal is empty")
    vertices, infinite_region = _vertices_outside(graph, ideal)
    if infinite_region is not None:
        # two distinct sinks of the generic region dominate nothing in common
        inside = ideal.support.families.get(infinite_region, FamilyPart.finite())
        taken = set(inside.indices) | set(graph.distinguished(infinite_region))
        fresh = max(taken, default=-1) + 1
        return ((infinite_region, fresh), (infinite_region, fresh + 1))
    sinks = [v for v in vertices if _is_sink(graph, v)]
    if len(sinks) >= 2:
        return (sinks[0], sinks[1])
    reach_map = {
        v: reachable_bundles(graph, v) for v in vertices if not isinstance(v, tuple)
    }
    for a in vertices:
        for b in vertices:
            if not any(
                _dominates(graph, reach_map, a, u) and _dominates(graph, reach_map, b, u)
                for u in vertices
            ):
                return (a, b)
    return None


def downward_directed_complement(graph: Ultragraph, ideal: HSIdeal) -> bool:
    return directedness_counterexample(graph, ideal) is None


def dominates_all_outside(graph: Ultragraph, ideal: HSIdeal, w) -> bool:
    """{a} >= {w} for every vertex a outside the support."""
    vertices, infinite_region = _vertices_outside(graph, ideal)
    if infinite_region is not None:
        return False  # infinitely many sinks, none of which is w
    reach_map = {
        v: reachable_bundles(graph, v) for v in vertices if not isinstance(v, tuple)
    }
    return all(_dominates(graph, reach_map, a, w) for a in vertices)


# -- loops -------------------------------------------------------------------


@dataclass(frozen=True)
class Loop:
    """A simple loop, stored as its lexicographically least rotation."""

    bundles: tuple

    @staticmethod
    def of(bundle_ids):
        ids = tuple(bundle_ids)
        rotations = [ids[i:] + ids[:i] for i in range(len(ids))]
        return Loop(min(rotations))

    def __len__(self):
        return len(self.bundles)

    def render(self):
        return ".".join(self.bundles)


def base_vertex(graph: Ultragraph, loop: Loop):
    return graph.bundle(loop.bundles[0]).source


def _all_simple_loops(graph: Ultragraph):
    bundles = sorted(graph.bundles, key=lambda b: b.id)
    found = set()

    def extend(path, sources):
        last = path[-1]
        first = path[0]
        if first.source in last.range:
            found.add(Loop.of(tuple(b.id for b in path)))
        for nxt in bundles:
            if nxt.source in last.range and nxt.source not in sources:
                extend(path + [nxt], sources | {nxt.source})

    for b in bundles:
        extend([b], {b.source})
    return sorted(found, key=lambda l: l.bundles)


def loops_in_complement(graph: Ultragraph, ideal: HSIdeal):
    """Simple loops whose final range survives the ideal."""
    out = []
    for loop in _all_simple_loops(graph):
        last = graph.bundle(loop.bundles[-1])
        if not last.range.issubset(ideal.support):
            out.append(loop)
    return out


def has_exit_in_complement(graph: Ultragraph, ideal: HSIdeal, loop: Loop) -> bool:
    """An exit survives: a residual range, or a distinct surviving edge."""
    if loop not in loops_in_complement(graph, ideal):
        raise LoopError(f"{loop.render()} is not a loop of the complement")
    steps = [graph.bundle(bid) for bid in loop.bundles]
    n = len(steps)
    for i in range(n):
        nxt = steps[(i + 1) % n]
        residual = steps[i].range - VSet.of(nxt.source)
        if not residual.is_empty and not residual.issubset(ideal.support):
            return True
        # a second parallel edge of the next bundle is an exit of its own
        if (nxt.is_omega or nxt.multiplicity >= 2) and not nxt.range.issubset(ideal.support):
            return True
        for other in graph.bundles:
            if other.id == nxt.id:
                continue
            if other.source in steps[i].range and not other.range.issubset(ideal.support):
                return True
    return False


def loops_without_exits(graph: Ultragraph, ideal: HSIdeal):
    return [
        loop
        for loop in loops_in_complement(graph, ideal)
        if not has_exit_in_complement(graph, ideal, loop)
    ]


def condition_L_complement(graph: Ultragraph, ideal: HSIdeal) -> bool:
    """Every loop surviving the ideal has a surviving exit."""
    return not loops_without_exits(graph, ideal)


@dataclass(frozen=True)
class ConditionKResult:
    holds: bool
    completeness: str

    def __bool__(self):
        return self.holds


def condition_K(graph: Ultragraph) -> ConditionKResult:
    """No enumerated ideal leaves a loop without exits in its complement."""
    from .ideals import enumerate_hs

    enum = enumerate_hs(graph)
    holds = all(condition_L_complement(graph, ideal) for ideal in enum)
    return ConditionKResult(holds, enum.completeness)
