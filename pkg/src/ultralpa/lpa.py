"""Symbolic Leavitt path algebra arithmetic for fully finite ultragraphs.

Elements are finite linear combinations of monomials t_alpha q_v t_beta*
with alpha, beta edge paths and v a single vertex: projections split into
vertex atoms because every vertex set is finite here.  Bundles with finite
multiplicity m expand into m parallel edges named ``<bundle>.<k>`` (or just
``<bundle>`` when m is 1).

Products of monomials reduce by path prefix matching: t_beta* t_gamma
collapses edge by edge, each collapse either killing the term or splicing
the leftover path onto one side.  The only remaining linear dependency is
the vertex identity q_v = sum of t_e t_e* over the edges at a regular
vertex.  It is oriented as a rewrite: whenever both paths of a monomial
end with the designated edge of its source (the least edge id) and the
middle vertex is the designated vertex of that edge's range (the least
member), the monomial is replaced by its strictly shorter expansion.  All
other monomials are normal, so normal forms exist, the rewrite terminates,
and reduction order cannot matter for the result.
"""

from __future__ import annotations

from .errors import EngineError
from .fields import QQ, Field
from .setalg import VSet
from .ultragraph import Ultragraph


class LeavittAlgebra:
    """Arithmetic context for one fully finite ultragraph over one field."""

    def __init__(self, graph: Ultragraph, field: Field = QQ):
        if graph.families:
            raise EngineError("the engine requires a graph without sink families")
        if any(b.is_omega for b in graph.bundles):
            raise EngineError("the engine requires finite multiplicities")
        self.graph = graph
        self.field = field
        self.vertices = tuple(sorted(graph.named))
        source = {}
        erange = {}
        self.bundle_edges = {}
        for b in sorted(graph.bundles, key=lambda b: b.id):
            ids = [b.id] if b.multiplicity == 1 else [
                f"{b.id}.{k}" for k in range(b.multiplicity)
            ]
            self.bundle_edges[b.id] = tuple(ids)
            for eid in ids:
                source[eid] = b.source
                erange[eid] = frozenset(b.range.named)
        self.source = source
        self.range = erange
        self.edges = tuple(sorted(source))
        self.edges_at = {
            v: tuple(e for e in self.edges if source[e] == v) for v in self.vertices
        }
        # every emitter is regular here, so the vertex identity applies to all
        self.designated_edge = {
            v: es[0] for v, es in self.edges_at.items() if es
        }
        self.designated_vertex = {e: min(erange[e]) for e in self.edges}

    # -- element constructors ------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def p(self, vertices):
        """Projection onto a vertex set (a label, an iterable, or a VSet)."""
        if isinstance(vertices, VSet):
            if vertices.families:
                raise EngineError("projection onto a family-bearing set")
            labels = vertices.named
        elif isinstance(vertices, str):
            labels = {vertices}
        else:
            labels = set(vertices)
        unknown = labels - set(self.vertices)
        if unknown:
            raise EngineError(f"unknown vertices: {', '.join(sorted(unknown))}")
        return AlgebraElement(self, {((), v, ()): self.field.one for v in labels})

    q = p

    def unit(self):
        return self.p(self.vertices)

    def _edge(self, eid):
        if eid not in self.source:
            if eid in self.bundle_edges:
                raise EngineError(
                    f"bundle {eid!r} has parallel edges {self.bundle_edges[eid]}"
                )
            raise EngineError(f"unknown edge {eid!r}")
        return eid

    def s(self, eid):
        eid = self._edge(eid)
        one = self.field.one
        return AlgebraElement(
            self, {((eid,), u, ()): one for u in self.range[eid]}
        )

    def s_star(self, eid):
        eid = self._edge(eid)
        one = self.field.one
        return AlgebraElement(
            self, {((), u, (eid,)): one for u in self.range[eid]}
        )

    def pwh(self, vertex, ideal):
        """p_v minus the surviving edge projections at v, relative to an ideal."""
        out = self.p(vertex)
        for b in self.graph.bundles_at(vertex):
            if b.range.issubset(ideal.support):
                continue
            for eid in self.bundle_edges[b.id]:
                out = out - self.s(eid) * self.s_star(eid)
        return out

    def scalar(self, value):
        return AlgebraElement(
            self, {((), v, ()): self.field.of(value) for v in self.vertices}
        )

    # -- monomial arithmetic ---------------------------------------------------

    def _mul_mono(self, m1, m2):
        """Product of two monomials: None, or a single monomial."""
        alpha, u, beta = m1
        gamma, w, delta = m2
        if len(beta) <= len(gamma):
            if gamma[: len(beta)] != beta:
                return None
            mu = gamma[len(beta):]
            if mu:
                if self.source[mu[0]] != u:
                    return None
                return (alpha + mu, w, delta)
            if u != w:
                return None
            return (alpha, u, delta)
        if beta[: len(gamma)] != gamma:
            return None
        nu = beta[len(gamma):]
        if self.source[nu[0]] != w:
            return None
        return (alpha, u, delta + nu)

    def _reducible(self, mono):
        alpha, u, beta = mono
        if not alpha or not beta or alpha[-1] != beta[-1]:
            return False
        f = alpha[-1]
        return (
            self.designated_edge[self.source[f]] == f
            and self.designated_vertex[f] == u
        )

    def _expand(self, mono):
        """Rewrite a reducible monomial via the vertex identity at its source."""
        alpha, _, beta = mono
        f = alpha[-1]
        v = self.source[f]
        head, tail = alpha[:-1], beta[:-1]
        out = [((head, v, tail), 1)]
        for e in self.edges_at[v]:
            if e == f:
                continue
            for z in self.range[e]:
                out.append(((head + (e,), z, tail + (e,)), -1))
        u0 = self.designated_vertex[f]
        for u in self.range[f]:
            if u != u0:
                out.append(((alpha, u, beta), -1))
        return out

    def _normalize(self, terms, rng=None):
        pending = list(terms.items())
        if rng is not None:
            rng.shuffle(pending)
        zero = self.field.zero
        out = {}
        while pending:
            mono, coeff = pending.pop()
            if coeff == zero:
                continue
            if self._reducible(mono):
                for m2, sign in self._expand(mono):
                    pending.append((m2, coeff if sign > 0 else self.field.neg(coeff)))
                if rng is not None:
                    rng.shuffle(pending)
            else:
                acc = self.field.add(out.get(mono, zero), coeff)
                if acc == zero:
                    out.pop(mono, None)
                else:
                    out[mono] = acc
        return out

    def element(self, terms, rng=None):
        return AlgebraElement(self, self._normalize(dict(terms), rng))


def render_monomial(mono):
    alpha, v, beta = mono
    parts = [f"t({e})" for e in alpha]
    parts.append(f"q({v})")
    parts.extend(f"t*({e})" for e in reversed(beta))
    return " ".join(parts)


class AlgebraElement:
    """A normal-form linear combination of monomials over one context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = dict(terms)

    @property
    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.ctx is not self.ctx:
                raise EngineError("elements from different contexts")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        field = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = field.add(out.get(m, field.zero), c)
            if acc == field.zero:
                out.pop(m, None)
            else:
                out[m] = acc
        return AlgebraElement(self.ctx, out)

    def __neg__(self):
        field = self.ctx.field
        return AlgebraElement(self.ctx, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        other = self._coerce(other)
        field = self.ctx.field
        raw = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = self.ctx._mul_mono(m1, m2)
                if m is None:
                    continue
                c = field.mul(c1, c2)
                acc = field.add(raw.get(m, field.zero), c)
                if acc == field.zero:
                    raw.pop(m, None)
                else:
                    raw[m] = acc
        return AlgebraElement(self.ctx, self.ctx._normalize(raw))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        field = self.ctx.field
        c0 = field.of(value)
        if c0 == field.zero:
            return self.ctx.zero()
        return AlgebraElement(self.ctx, {m: field.mul(c0, c) for m, c in self.terms.items()})

    def star(self):
        # reducibility is symmetric in the two paths, so normality survives
        return AlgebraElement(
            self.ctx, {(b, v, a): c for (a, v, b), c in self.terms.items()}
        )

    def graded_component(self, n):
        return AlgebraElement(
            self.ctx,
            {m: c for m, c in self.terms.items() if len(m[0]) - len(m[2]) == n},
        )

    def degrees(self):
        return sorted({len(a) - len(b) for (a, _, b) in self.terms})

    @property
    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.ctx is self.ctx
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))

    def render(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            prefix = "" if c == self.ctx.field.one else f"{c}*"
            bits.append(prefix + render_monomial(mono))
        return " + ".join(bits)

    def __repr__(self):
        return self.render()


def normal_form(element: AlgebraElement, rng=None) -> AlgebraElement:
    """Re-reduce an element; idempotent, and independent of reduction order."""
    return element.ctx.element(element.terms, rng)


def graded_component(element: AlgebraElement, n: int) -> AlgebraElement:
    return element.graded_component(n)
