"""The ultragraph model: named vertices, sink families, edge bundles.

Only named vertices emit edges; family vertices are sinks.  Parallel edges
with a common source and range are stored once as a bundle with a finite
multiplicity or ``OMEGA`` (countably many).  That is enough for everything
downstream: emission classes, breaking vertices, exit detection and the
finite engine only ever need multiplicity counts, never edge identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .setalg import FamilyPart, SetContext, VSet


class _Omega:
    __slots__ = ()

    def __repr__(self):
        return "omega"


OMEGA = _Omega()


@dataclass(frozen=True)
class EdgeBundle:
    id: str
    source: str
    range: VSet
    multiplicity: object = 1  # positive int or OMEGA

    @property
    def is_omega(self):
        return self.multiplicity is OMEGA


class Ultragraph:
    """A validated, immutable ultragraph."""

    __slots__ = ("named", "families", "bundles", "_declared")

    def __init__(self, named, families, bundles, declared_distinguished=None):
        object.__setattr__(self, "named", frozenset(named))
        object.__setattr__(self, "families", frozenset(families))
        object.__setattr__(self, "bundles", tuple(bundles))
        declared = {fid: frozenset() for fid in self.families}
        for fid, idx in (declared_distinguished or {}).items():
            declared[fid] = frozenset(int(i) for i in idx)
        object.__setattr__(self, "_declared", declared)

    def __setattr__(self, *_):
        raise AttributeError("Ultragraph is immutable")

    def context(self) -> SetContext:
        return SetContext(self.named, self.families)

    def bundle(self, bundle_id) -> EdgeBundle:
        for b in self.bundles:
            if b.id == bundle_id:
                return b
        raise KeyError(f"no bundle {bundle_id!r}")

    def bundles_at(self, vertex):
        return [b for b in self.bundles if b.source == vertex]

    def emission_class(self, vertex):
        """('sink',) | ('regular', n) | ('infinite',) for a named vertex."""
        if vertex not in self.named:
            raise KeyError(f"unknown vertex {vertex!r}")
        at = self.bundles_at(vertex)
        if any(b.is_omega for b in at):
            return ("infinite",)
        n = sum(b.multiplicity for b in at)
        if n:
            return ("regular", n)
        return ("sink",)

    def is_regular(self, vertex):
        return self.emission_class(vertex)[0] == "regular"

    def distinguished(self, fid):
        """Indices of ``fid`` that are explicit: declared or mentioned by a range."""
        out = set(self._declared.get(fid, ()))
        for b in self.bundles:
            part = b.range.families.get(fid)
            if part is not None:
                out |= part.indices
        return frozenset(out)

    def all_vertices_set(self) -> VSet:
        return VSet(self.named, {fid: FamilyPart.cofinite_excluding() for fid in self.families})

    def declared_distinguished(self):
        return {fid: self._declared[fid] for fid in self.families}

    def __repr__(self):
        return (
            f"Ultragraph({len(self.named)} vertices, "
            f"{len(self.families)} families, {len(self.bundles)} bundles)"
        )


def validate(data: dict) -> Ultragraph:
    """Check a raw description and build the model, or raise ValidationError.

    The description mirrors the file format: ``vertices`` (names),
    ``families`` (id plus optional distinguished indices) and ``edges``
    (id, source, range, multiplicity).
    """
    violations = []
    named = []
    for v in data.get("vertices", []):
        if not isinstance(v, str) or not v or v.endswith("'"):
            violations.append(f"bad-vertex-name: {v!r} (primed names are reserved)")
        elif v in named:
            violations.append(f"duplicate-vertex: {v}")
        else:
            named.append(v)

    families = {}
    for fam in data.get("families", []):
        fid = fam.get("id")
        if not isinstance(fid, str) or not fid:
            violations.append(f"bad-family-id: {fid!r}")
            continue
        if fid in families or fid in named:
            violations.append(f"duplicate-id: family {fid}")
            continue
        idx = fam.get("distinguished", [])
        if not all(isinstance(i, int) and i >= 0 for i in idx):
            violations.append(f"bad-distinguished-indices: family {fid}")
            continue
        families[fid] = frozenset(idx)

    bundles = []
    seen = set()
    for edge in data.get("edges", []):
        eid = edge.get("id")
        if not isinstance(eid, str) or not eid:
            violations.append(f"bad-edge-id: {eid!r}")
            continue
        if eid in seen:
            violations.append(f"duplicate-id: {eid}")
            continue
        seen.add(eid)
        source = edge.get("source")
        if source in families:
            violations.append(f"family-source: {eid} (families are sinks)")
            continue
        if source not in named:
            violations.append(f"unknown-source: {eid} sourced at {source!r}")
            continue
        try:
            rng = VSet.from_json(edge.get("range", {}))
        except (ValueError, TypeError, AttributeError) as exc:
            violations.append(f"bad-range: {eid} ({exc})")
            continue
        unknown = rng.named - set(named)
        if unknown:
            violations.append(
                f"unknown-vertex-in-range: {eid} mentions {', '.join(sorted(unknown))}"
            )
            continue
        bad_fams = set(rng.families) - set(families)
        if bad_fams:
            violations.append(
                f"unknown-vertex-in-range: {eid} mentions families "
                + ", ".join(sorted(bad_fams))
            )
            continue
        if rng.is_empty:
            violations.append(f"empty-range: {eid}")
            continue
        mult = edge.get("multiplicity", 1)
        if mult == "omega":
            mult = OMEGA
        if mult is not OMEGA and not (isinstance(mult, int) and mult >= 1):
            violations.append(f"bad-multiplicity: {eid} ({edge.get('multiplicity')!r})")
            continue
        bundles.append(EdgeBundle(eid, source, rng, mult))

    if violations:
        raise ValidationError(violations)
    return Ultragraph(named, families, bundles, families)


def serialize(graph: Ultragraph) -> dict:
    """Inverse of ``validate`` up to ordering."""
    mult = lambda b: "omega" if b.is_omega else b.multiplicity
    return {
        "vertices": sorted(graph.named),
        "families": [
            {"id": fid, "distinguished": sorted(graph.declared_distinguished()[fid])}
            for fid in sorted(graph.families)
        ],
        "edges": [
            {
                "id": b.id,
                "source": b.source,
                "range": b.range.to_json(),
                "multiplicity": mult(b),
            }
            for b in graph.bundles
        ],
    }
