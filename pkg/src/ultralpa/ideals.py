"""Saturated hereditary closures, admissible pairs and quotient ultragraphs.

An ideal is represented by its support set U: membership means lying in the
generated algebra and being contained in U.  The closure of finitely many
generators is always of this principal shape, because the closure rules
only ever adjoin ranges and singletons, so the support stays a finite
union of algebra elements.

Enumeration walks the unions of range atoms: every principal support is
such a union, and a union qualifies exactly when it lies in the generated
algebra and is closed under the two vertex-level laws (edge flow out of a
contained source; saturation at regular vertices).  With families present,
members of the generic region are not enumerated individually; the listing
is complete up to that symmetry and only relative to principal supports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import AdmissibilityError, EnumerationError, NotInAlgebraError
from .setalg import FamilyPart, VSet, in_g0, range_atoms
from .ultragraph import OMEGA, Ultragraph

MAX_ATOMS = 20

COMPLETE = "complete"
COMPLETE_UP_TO_SYMMETRY = "complete-up-to-symmetry"


@dataclass(frozen=True)
class HSIdeal:
    """A principal saturated hereditary subcollection, given by its support."""

    graph: Ultragraph = field(compare=False, repr=False)
    support: VSet
    generators: tuple = field(default=(), compare=False, repr=False)

    def contains(self, vset: VSet) -> bool:
        return in_g0(self.graph, vset) and vset.issubset(self.support)

    def contains_vertex(self, vertex) -> bool:
        return vertex in self.support

    @property
    def is_total(self) -> bool:
        g = self.graph
        if not g.named <= self.support.named:
            return False
        full = FamilyPart.cofinite_excluding()
        return all(self.support.families.get(fid) == full for fid in g.families)

    @property
    def is_proper(self) -> bool:
        return not self.is_total

    def sort_key(self):
        return self.support.sort_key()

    def __repr__(self):
        return f"HSIdeal({self.support.render()})"


def hs_contains(ideal: HSIdeal, vset: VSet) -> bool:
    return ideal.contains(vset)


def hs_closure(graph: Ultragraph, generators) -> HSIdeal:
    """Least saturated hereditary support containing the generators.

    Fixpoint: adjoin r(b) whenever the source of b is contained, and adjoin
    a regular vertex when all of its bundle ranges are contained.  Each rule
    can only fire once per bundle/vertex, so this terminates.
    """
    gens = tuple(generators)
    for g in gens:
        if not in_g0(graph, g):
            raise NotInAlgebraError(f"generator {g.render()} is not in the generated algebra")
    support = VSet.empty()
    for g in gens:
        support = support | g
    changed = True
    while changed:
        changed = False
        for b in graph.bundles:
            if b.source in support and not b.range.issubset(support):
                support = support | b.range
                changed = True
        for v in graph.named:
            if v in support or not graph.is_regular(v):
                continue
            if all(b.range.issubset(support) for b in graph.bundles_at(v)):
                support = support | VSet.of(v)
                changed = True
    return HSIdeal(graph, support, gens)


def _support_is_closed(graph: Ultragraph, support: VSet) -> bool:
    for b in graph.bundles:
        if b.source in support and not b.range.issubset(support):
            return False
    for v in graph.named:
        if v in support or not graph.is_regular(v):
            continue
        if all(b.range.issubset(support) for b in graph.bundles_at(v)):
            return False
    return True


def breaking_vertices(ideal: HSIdeal) -> frozenset:
    """Infinite emitters whose surviving edge count is finite and positive."""
    g = ideal.graph
    out = set()
    for v in sorted(g.named):
        if g.emission_class(v)[0] != "infinite":
            continue
        at = g.bundles_at(v)
        surviving = [b for b in at if not b.range.issubset(ideal.support)]
        if not surviving:
            continue
        if any(b.is_omega for b in surviving):
            continue
        out.add(v)
    return frozenset(out)


class HSEnumeration(tuple):
    """The enumerated ideals together with the completeness flag."""

    completeness = COMPLETE

    def __new__(cls, ideals, completeness):
        self = super().__new__(cls, ideals)
        self.completeness = completeness
        return self


def enumerate_hs(graph: Ultragraph) -> HSEnumeration:
    """All principal saturated hereditary ideals with atom-union support."""
    atoms = range_atoms(graph)
    if len(atoms) > MAX_ATOMS:
        raise EnumerationError(
            f"{len(atoms)} atoms exceed the supported enumeration size ({MAX_ATOMS})"
        )
    found = []
    for mask in itertools.product((False, True), repeat=len(atoms)):
        support = VSet.empty()
        for take, atom in zip(mask, atoms):
            if take:
                support = support | atom
        if not in_g0(graph, support):
            continue
        if not _support_is_closed(graph, support):
            continue
        found.append(HSIdeal(graph, support))
    seen = set()
    ideals = []
    for ideal in sorted(found, key=HSIdeal.sort_key):
        if ideal.support not in seen:
            seen.add(ideal.support)
            ideals.append(ideal)
    completeness = COMPLETE if not graph.families else COMPLETE_UP_TO_SYMMETRY
    return HSEnumeration(ideals, completeness)


@dataclass(frozen=True)
class AdmissiblePair:
    ideal: HSIdeal
    s: frozenset

    def __post_init__(self):
        extra = self.s - breaking_vertices(self.ideal)
        if extra:
            raise AdmissibilityError(
                f"S contains non-breaking vertices: {', '.join(sorted(extra))}"
            )

    @property
    def unresolved(self) -> frozenset:
        """Breaking vertices left out of S; these acquire primed sinks."""
        return breaking_vertices(self.ideal) - self.s

    def sort_key(self):
        return (self.ideal.sort_key(), tuple(sorted(self.s)))


def admissible(graph: Ultragraph, generators, s=()) -> AdmissiblePair:
    return AdmissiblePair(hs_closure(graph, generators), frozenset(s))


def bar_extension(pair: AdmissiblePair, vset: VSet) -> VSet:
    """Adjoin the primed twin of every unresolved breaking vertex in the set."""
    primed = [w + "'" for w in pair.unresolved if w in vset]
    if not primed:
        return vset
    return vset | VSet.of(*primed)


@dataclass(frozen=True)
class QClass:
    """Canonical representative of an equivalence class modulo the ideal."""

    representative: VSet

    @property
    def is_zero(self):
        return self.representative.is_empty

    def render(self):
        return "[" + self.representative.render() + "]"


def canonical_class(pair: AdmissiblePair, vset: VSet) -> QClass:
    """The class of a set: its bar extension minus the ideal support.

    Two sets get equal representatives exactly when each difference lies in
    the ideal, because the support is closed under subsets and the primed
    twins sit outside it.
    """
    if not in_g0(pair.ideal.graph, vset.strip_primes()):
        raise NotInAlgebraError(f"{vset.render()} is not representable in the algebra")
    return QClass(bar_extension(pair, vset) - pair.ideal.support)


@dataclass(frozen=True)
class QuotientBundle:
    id: str
    source: str  # class [source]
    range: QClass
    multiplicity: object

    @property
    def is_omega(self):
        return self.multiplicity is OMEGA


@dataclass(frozen=True)
class QuotientUltragraph:
    base: Ultragraph
    pair: AdmissiblePair
    named_classes: tuple  # [v] for named v outside the support
    primed: tuple  # [w'] sinks for unresolved breaking vertices
    family_regions: dict  # per family, the part outside the support
    bundles: tuple  # surviving bundles, ranges canonicalized

    def vertex_labels(self):
        return tuple(sorted(self.named_classes)) + tuple(sorted(self.primed))

    @property
    def is_fully_finite(self) -> bool:
        return not self.family_regions and not any(b.is_omega for b in self.bundles)

    def to_ultragraph(self) -> Ultragraph:
        """Reinterpret the quotient as a plain ultragraph on class labels.

        Primed labels become ordinary sink vertices of the new graph.
        """
        from .errors import EngineError
        from .ultragraph import EdgeBundle

        if self.family_regions:
            raise EngineError("quotient still carries family regions")
        edges = [
            EdgeBundle(b.id, b.source, b.range.representative, b.multiplicity)
            for b in self.bundles
        ]
        return Ultragraph(self.vertex_labels(), (), edges)


def build_quotient(graph: Ultragraph, pair: AdmissiblePair) -> QuotientUltragraph:
    """Quotient ultragraph: drop absorbed vertices and edges, prime the rest."""
    support = pair.ideal.support
    named_classes = tuple(sorted(v for v in graph.named if v not in support))
    primed = tuple(sorted(w + "'" for w in pair.unresolved))
    regions = {}
    full = FamilyPart.cofinite_excluding()
    for fid in sorted(graph.families):
        inside = support.families.get(fid, FamilyPart.finite())
        outside = full.difference(inside)
        if not outside.is_empty:
            regions[fid] = outside
    bundles = []
    for b in graph.bundles:
        if b.range.issubset(support):
            continue
        bundles.append(
            QuotientBundle(b.id, b.source, canonical_class(pair, b.range), b.multiplicity)
        )
    return QuotientUltragraph(graph, pair, named_classes, primed, regions, tuple(bundles))
