"""Exact vertex-set arithmetic over named vertices and countable sink families.

A vertex set holds a finite set of labels (named vertices, plus primed
labels in quotient contexts) together with one part per sink family.  A
family part is either a finite set of member indices or a cofinite one,
i.e. the whole family minus a finite exclusion list.  Boolean operations
act componentwise and the representation is kept normalized (empty finite
parts are dropped), so structural equality coincides with extensional
equality of the underlying, possibly infinite, point sets.

Membership in the algebra generated by the singletons and the bundle
ranges only depends on the pattern of families in which a set is cofinite:
finite adjustments are free because every singleton is a generator, and
the three set operations act on cofiniteness patterns exactly like union,
intersection and difference on subsets of the (finite) family index set.
``in_g0`` therefore decides membership by closing the generator patterns
under those operations.

``generated_algebra`` provides the independent, finitely truncated oracle
for the same question: it materializes the closure of the generators under
the set operations after restricting every family to its distinguished
indices plus a chosen number of generic members.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextError


@dataclass(frozen=True)
class FamilyPart:
    """One family's contribution to a vertex set.

    ``indices`` are the members when finite, the exclusions when cofinite.
    """

    cofinite: bool
    indices: frozenset

    @staticmethod
    def finite(indices=()):
        return FamilyPart(False, frozenset(int(i) for i in indices))

    @staticmethod
    def cofinite_excluding(indices=()):
        return FamilyPart(True, frozenset(int(i) for i in indices))

    @property
    def is_empty(self):
        return not self.cofinite and not self.indices

    def contains(self, index):
        if self.cofinite:
            return index not in self.indices
        return index in self.indices

    def union(self, other):
        if self.cofinite and other.cofinite:
            return FamilyPart(True, self.indices & other.indices)
        if self.cofinite:
            return FamilyPart(True, self.indices - other.indices)
        if other.cofinite:
            return FamilyPart(True, other.indices - self.indices)
        return FamilyPart(False, self.indices | other.indices)

    def intersect(self, other):
        if self.cofinite and other.cofinite:
            return FamilyPart(True, self.indices | other.indices)
        if self.cofinite:
            return FamilyPart(False, other.indices - self.indices)
        if other.cofinite:
            return FamilyPart(False, self.indices - other.indices)
        return FamilyPart(False, self.indices & other.indices)

    def difference(self, other):
        if self.cofinite and other.cofinite:
            return FamilyPart(False, other.indices - self.indices)
        if self.cofinite:
            return FamilyPart(True, self.indices | other.indices)
        if other.cofinite:
            return FamilyPart(False, self.indices & other.indices)
        return FamilyPart(False, self.indices - other.indices)

    def issubset(self, other):
        if self.cofinite and not other.cofinite:
            return False  # an infinite part never fits in a finite one
        if self.cofinite:
            return other.indices <= self.indices
        if other.cofinite:
            return not (self.indices & other.indices)
        return self.indices <= other.indices

    def render(self, fid):
        if self.cofinite:
            if self.indices:
                return fid + "\\{" + ",".join(str(i) for i in sorted(self.indices)) + "}"
            return fid
        return ", ".join(f"{fid}[{i}]" for i in sorted(self.indices))


class VSet:
    """An element of the representable class of vertex sets."""

    __slots__ = ("named", "families")

    def __init__(self, named=(), families=None):
        object.__setattr__(self, "named", frozenset(named))
        parts = {}
        for fid, part in (families or {}).items():
            if not part.is_empty:
                parts[fid] = part
        object.__setattr__(self, "families", parts)

    def __setattr__(self, *_):
        raise AttributeError("VSet is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def empty():
        return VSet()

    @staticmethod
    def of(*labels):
        return VSet(named=labels)

    @staticmethod
    def member(fid, index):
        return VSet(families={fid: FamilyPart.finite([index])})

    @staticmethod
    def family(fid, part=None):
        return VSet(families={fid: part or FamilyPart.cofinite_excluding()})

    @staticmethod
    def singleton(vertex):
        if isinstance(vertex, tuple):
            return VSet.member(*vertex)
        return VSet.of(vertex)

    # -- boolean arithmetic ------------------------------------------------

    def _zip(self, other, op):
        fids = set(self.families) | set(other.families)
        empty = FamilyPart.finite()
        parts = {}
        for fid in fids:
            a = self.families.get(fid, empty)
            b = other.families.get(fid, empty)
            parts[fid] = op(a, b)
        return parts

    def __or__(self, other):
        return VSet(self.named | other.named, self._zip(other, FamilyPart.union))

    def __and__(self, other):
        return VSet(self.named & other.named, self._zip(other, FamilyPart.intersect))

    def __sub__(self, other):
        return VSet(self.named - other.named, self._zip(other, FamilyPart.difference))

    # -- relations ---------------------------------------------------------

    @property
    def is_empty(self):
        return not self.named and not self.families

    def issubset(self, other):
        if not self.named <= other.named:
            return False
        empty = FamilyPart.finite()
        for fid, part in self.families.items():
            if not part.issubset(other.families.get(fid, empty)):
                return False
        return True

    def isdisjoint(self, other):
        return (self & other).is_empty

    def __contains__(self, vertex):
        if isinstance(vertex, tuple):
            fid, index = vertex
            part = self.families.get(fid)
            return part is not None and part.contains(index)
        return vertex in self.named

    def __eq__(self, other):
        return (
            isinstance(other, VSet)
            and other.named == self.named
            and other.families == self.families
        )

    def __hash__(self):
        return hash((self.named, tuple(sorted(self.families.items(), key=lambda kv: kv[0]))))

    # -- structure ---------------------------------------------------------

    @property
    def cofinite_families(self):
        return frozenset(fid for fid, part in self.families.items() if part.cofinite)

    def strip_primes(self):
        return VSet({v for v in self.named if not v.endswith("'")}, self.families)

    def primed_named(self):
        return frozenset(v for v in self.named if v.endswith("'"))

    def sort_key(self):
        fams = tuple(
            (fid, part.cofinite, tuple(sorted(part.indices)))
            for fid, part in sorted(self.families.items())
        )
        return (tuple(sorted(self.named)), fams)

    def render(self):
        tokens = sorted(self.named)
        for fid, part in sorted(self.families.items()):
            tokens.append(part.render(fid))
        return "{" + ", ".join(tokens) + "}"

    def to_json(self):
        out = {}
        if self.named:
            out["named"] = sorted(self.named)
        if self.families:
            fams = {}
            for fid, part in sorted(self.families.items()):
                if part.cofinite:
                    fams[fid] = {"cofinite_excluding": sorted(part.indices)}
                else:
                    fams[fid] = {"finite": sorted(part.indices)}
            out["families"] = fams
        return out

    @staticmethod
    def from_json(data):
        named = data.get("named", [])
        families = {}
        for fid, part in data.get("families", {}).items():
            if "finite" in part:
                families[fid] = FamilyPart.finite(part["finite"])
            elif "cofinite_excluding" in part:
                families[fid] = FamilyPart.cofinite_excluding(part["cofinite_excluding"])
            else:
                raise ValueError(f"family part for {fid!r} needs 'finite' or 'cofinite_excluding'")
        return VSet(named, families)

    def __repr__(self):
        return f"VSet{self.render()}"


@dataclass(frozen=True)
class SetContext:
    """The label/family universe a vertex set is allowed to mention."""

    named: frozenset
    families: frozenset

    def check(self, vset: VSet) -> VSet:
        unknown = vset.named - self.named
        if unknown:
            raise ContextError(f"unknown vertices: {', '.join(sorted(unknown))}")
        bad = set(vset.families) - set(self.families)
        if bad:
            raise ContextError(f"unknown families: {', '.join(sorted(bad))}")
        return vset


def combine(ctx: SetContext, a: VSet, op: str, b: VSet) -> VSet:
    """Boolean combination of two vertex sets over a common context."""
    ctx.check(a)
    ctx.check(b)
    if op == "union":
        return a | b
    if op == "intersect":
        return a & b
    if op == "difference":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def relate(ctx: SetContext, a: VSet, rel: str, b: VSet = None, vertex=None) -> bool:
    """Decide a relation between vertex sets over a common context."""
    ctx.check(a)
    if rel == "is_empty":
        return a.is_empty
    if rel == "contains":
        return vertex in a
    ctx.check(b)
    if rel == "subset":
        return a.issubset(b)
    if rel == "equal":
        return a == b
    if rel == "disjoint":
        return a.isdisjoint(b)
    raise ValueError(f"unknown relation {rel!r}")


# -- membership in the generated algebra -----------------------------------


def _pattern_ring(patterns):
    """Close a family of index-set patterns under union/intersection/difference."""
    ring = {frozenset()}
    frontier = {frozenset(p) for p in patterns}
    ring |= frontier
    changed = True
    while changed:
        changed = False
        current = list(ring)
        for a in current:
            for b in current:
                for c in (a | b, a & b, a - b):
                    if c not in ring:
                        ring.add(c)
                        changed = True
    return ring


def cofinite_pattern_ring(graph):
    """All cofiniteness patterns realized by the algebra generated from ``graph``."""
    return _pattern_ring(b.range.cofinite_families for b in graph.bundles)


def in_g0(graph, vset: VSet) -> bool:
    """True when ``vset`` lies in the algebra generated by singletons and ranges.

    Named parts and finite family parts are unconstrained; only the pattern
    of cofinite families must be producible from the ranges' patterns.
    """
    graph.context().check(vset.strip_primes())
    return vset.cofinite_families in cofinite_pattern_ring(graph)


def range_atoms(graph):
    """Atoms of the finite algebra generated by ranges and named singletons.

    Each named vertex contributes its singleton; each family contributes a
    singleton per distinguished index and one generic cofinite region.
    """
    atoms = [VSet.of(v) for v in sorted(graph.named)]
    for fid in sorted(graph.families):
        distinguished = graph.distinguished(fid)
        for i in sorted(distinguished):
            atoms.append(VSet.member(fid, i))
        atoms.append(VSet.family(fid, FamilyPart.cofinite_excluding(distinguished)))
    return atoms


# -- truncation oracle -------------------------------------------------------


def truncated_universe(graph, resolution=2):
    """Concrete vertex list: named plus distinguished and generic family members."""
    universe = sorted(graph.named)
    for fid in sorted(graph.families):
        distinguished = sorted(graph.distinguished(fid))
        fresh = max(distinguished, default=-1) + 1
        for i in distinguished + list(range(fresh, fresh + resolution)):
            universe.append((fid, i))
    return universe


def points(vset: VSet, universe):
    """The members of ``vset`` within a truncated universe."""
    return frozenset(v for v in universe if v in vset)


def generated_algebra(graph, resolution=2, max_size=100_000):
    """Materialize the generated algebra on a truncated universe.

    Returns the closure, as a set of VSets, of the bundle ranges and the
    singletons of the truncated universe under union, intersection and
    difference.  Exact for every set whose explicit indices stay within
    the truncation.
    """
    universe = truncated_universe(graph, resolution)
    gens = {VSet.singleton(v) for v in universe}
    gens |= {b.range for b in graph.bundles}
    gens.add(VSet.empty())
    closure = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for b in closure:
                for c in (a | b, a & b, a - b, b - a):
                    if c not in closure and c not in new:
                        new.add(c)
        if len(closure) + len(new) > max_size:
            raise MemoryError("truncated algebra closure exceeds the size cap")
        closure |= new
        frontier = new
    return closure


def in_g0_oracle(graph, vset: VSet, resolution=2) -> bool:
    """Brute-force counterpart of ``in_g0`` on the truncated algebra."""
    return vset in generated_algebra(graph, resolution)
