"""Prime and primitive ideal spectra of the Leavitt path algebra.

Graded prime ideals come in two shapes: pairs (H, B_H) whose complement is
downward directed, and pairs (H, B_H minus one vertex w) where w is a
breaking vertex dominated by every vertex outside the support.  Graded
primitive ideals are the second shape unchanged, plus the first shape
restricted to ideals whose complement leaves no loop without exits.

A non-graded prime ideal exists exactly over an ideal with downward
directed complement containing a loop without exits; it is parameterized
by an irreducible, non-unit Laurent polynomial over the coefficient field,
and every such ideal is primitive.  Families are emitted symbolically and
can be instantiated with a concrete parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import LoopError, ParameterError
from .fields import QQ, Field
from .ideals import AdmissiblePair, HSEnumeration, HSIdeal, breaking_vertices, enumerate_hs
from .laurent import LaurentPoly, is_irreducible
from .reach import (
    Loop,
    condition_L_complement,
    directedness_counterexample,
    dominates_all_outside,
    loops_in_complement,
    loops_without_exits,
)
from .ultragraph import Ultragraph

ROUTE_DIRECTED = "X1"
ROUTE_BREAKING = "X2"


@dataclass(frozen=True)
class GradedIdealDescriptor:
    pair: AdmissiblePair
    route: str
    witness: str = None  # the removed breaking vertex on the X2 route
    condition_L: bool = True

    @property
    def ideal(self) -> HSIdeal:
        return self.pair.ideal

    def key(self):
        return (self.ideal.support.sort_key(), tuple(sorted(self.pair.s)))

    def render(self):
        s = ", ".join(sorted(self.pair.s))
        return f"({self.ideal.support.render()}, {{{s}}})"


@dataclass(frozen=True)
class NonGradedFamily:
    ideal: HSIdeal  # S = B_H is implied
    loop: Loop
    field_tag: Field = QQ
    parameter: LaurentPoly = None  # None means symbolic

    def key(self):
        return (self.ideal.support.sort_key(), self.loop.bundles)

    def render(self):
        param = "f" if self.parameter is None else repr(self.parameter)
        return f"<{self.ideal.support.render()}, B_H, {param}(s_{self.loop.render()})>"


class DescriptorList(list):
    """A descriptor list carrying the enumeration completeness flag."""

    def __init__(self, items, completeness):
        super().__init__(items)
        self.completeness = completeness


def _proper_ideals(graph) -> HSEnumeration:
    enum = enumerate_hs(graph)
    return HSEnumeration([h for h in enum if h.is_proper], enum.completeness)


def graded_prime_ideals(graph: Ultragraph) -> DescriptorList:
    """Both routes to a graded prime, over every enumerated proper ideal."""
    enum = _proper_ideals(graph)
    out = []
    for ideal in enum:
        b = breaking_vertices(ideal)
        if directedness_counterexample(graph, ideal) is None:
            out.append(
                GradedIdealDescriptor(
                    AdmissiblePair(ideal, b),
                    ROUTE_DIRECTED,
                    condition_L=condition_L_complement(graph, ideal),
                )
            )
        for w in sorted(b):
            if dominates_all_outside(graph, ideal, w):
                out.append(
                    GradedIdealDescriptor(
                        AdmissiblePair(ideal, b - {w}),
                        ROUTE_BREAKING,
                        witness=w,
                        condition_L=condition_L_complement(graph, ideal),
                    )
                )
    out.sort(key=GradedIdealDescriptor.key)
    return DescriptorList(out, enum.completeness)


def graded_primitive_ideals(graph: Ultragraph) -> DescriptorList:
    """Directed-route descriptors filtered by Condition (L); breaking route kept."""
    primes = graded_prime_ideals(graph)
    out = [d for d in primes if d.route == ROUTE_BREAKING or d.condition_L]
    return DescriptorList(out, primes.completeness)


def nongraded_prime_families(graph: Ultragraph, field_tag: Field = QQ) -> DescriptorList:
    """One symbolic family per (ideal, no-exit loop) with directed complement."""
    enum = _proper_ideals(graph)
    out = []
    for ideal in enum:
        if directedness_counterexample(graph, ideal) is not None:
            continue
        bare = loops_without_exits(graph, ideal)
        # downward directedness forces uniqueness of the loop up to rotation
        assert len(bare) <= 1, f"multiple no-exit loops over {ideal.support.render()}"
        for loop in bare:
            out.append(NonGradedFamily(ideal, loop, field_tag))
    out.sort(key=NonGradedFamily.key)
    return DescriptorList(out, enum.completeness)


def instantiate(family: NonGradedFamily, parameter: LaurentPoly) -> NonGradedFamily:
    """Attach a concrete irreducible, non-unit Laurent parameter."""
    if parameter.field != family.field_tag:
        raise ParameterError(
            f"parameter over {parameter.field!r}, family over {family.field_tag!r}"
        )
    if parameter.is_zero:
        raise ParameterError("zero parameter")
    if parameter.is_unit:
        raise ParameterError("unit parameter (a monomial c*x^k)")
    if not is_irreducible(parameter):
        raise ParameterError(f"reducible parameter {parameter!r}")
    return replace(family, parameter=parameter)


# -- the assembled report ----------------------------------------------------


@dataclass(frozen=True)
class IdealDiagnostic:
    ideal: HSIdeal
    breaking: tuple
    directed: bool
    counterexample: object  # witness pair when not directed
    loops: tuple
    no_exit_loops: tuple
    condition_L: bool


@dataclass(frozen=True)
class Report:
    graph: Ultragraph
    field_tag: Field
    completeness: str
    principal_only: bool
    diagnostics: tuple  # one IdealDiagnostic per enumerated proper ideal
    primes_graded: tuple
    primes_families: tuple
    primitives_graded: tuple
    primitives_families: tuple

    @property
    def primes(self):
        return self.primes_graded + self.primes_families

    @property
    def primitives(self):
        return self.primitives_graded + self.primitives_families


def spectrum_report(graph: Ultragraph, field_tag: Field = QQ) -> Report:
    """Classify every enumerated ideal and assemble both spectra."""
    enum = _proper_ideals(graph)
    diagnostics = []
    for ideal in enum:
        cex = directedness_counterexample(graph, ideal)
        loops = tuple(loops_in_complement(graph, ideal))
        bare = tuple(loops_without_exits(graph, ideal))
        diagnostics.append(
            IdealDiagnostic(
                ideal=ideal,
                breaking=tuple(sorted(breaking_vertices(ideal))),
                directed=cex is None,
                counterexample=cex,
                loops=loops,
                no_exit_loops=bare,
                condition_L=not bare,
            )
        )
    primes = graded_prime_ideals(graph)
    prims = graded_primitive_ideals(graph)
    families = nongraded_prime_families(graph, field_tag)
    return Report(
        graph=graph,
        field_tag=field_tag,
        completeness=enum.completeness,
        principal_only=bool(graph.families),
        diagnostics=tuple(diagnostics),
        primes_graded=tuple(primes),
        primes_families=tuple(families),
        primitives_graded=tuple(prims),
        primitives_families=tuple(families),
    )
