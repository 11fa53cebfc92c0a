"""Loading and saving ultragraph descriptions, and small textual parsers.

The file format is JSON: ``vertices`` (a list of names), ``families``
(objects with ``id`` and optional ``distinguished`` indices) and ``edges``
(objects with ``id``, ``source``, ``range`` and ``multiplicity``, where a
range lists named vertices and family parts and the multiplicity is a
positive integer or the string ``"omega"``).

Command-line set arguments accept either the same JSON shape as a range,
or a brace literal of vertex tokens: ``v`` (a named or primed vertex),
``F[3]`` (a family member), ``F`` (a whole family) and ``F\\{1,2}`` (a
family minus finitely many members).
"""

from __future__ import annotations

import json

from .errors import UltraLPAError
from .setalg import FamilyPart, VSet
from .ultragraph import Ultragraph, serialize, validate


class SyntaxProblem(UltraLPAError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


def load_graph(path) -> Ultragraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SyntaxProblem(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise SyntaxProblem("the top-level value must be an object")
    return validate(data)


def dump_graph(graph: Ultragraph, path=None) -> str:
    text = json.dumps(serialize(graph), indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def parse_vertex_token(graph, token):
    """A vertex reference: a name, a primed name, or ``F[i]``."""
    token = token.strip()
    if token.endswith("]") and "[" in token:
        fid, _, idx = token[:-1].partition("[")
        if fid not in graph.families:
            raise SyntaxProblem(f"unknown family {fid!r}")
        if not idx.isdigit():
            raise SyntaxProblem(f"bad family index {idx!r}")
        return (fid, int(idx))
    base = token[:-1] if token.endswith("'") else token
    if base not in graph.named:
        raise SyntaxProblem(f"unknown vertex {base!r}")
    return token


def parse_set(graph, text) -> VSet:
    """Parse a set literal (brace tokens or range-shaped JSON)."""
    text = text.strip()
    if text.startswith('{"') or text.startswith("{}"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SyntaxProblem(exc.msg, exc.lineno, exc.colno) from exc
        vset = VSet.from_json(data)
        graph.context().check(vset.strip_primes())
        return vset
    if not (text.startswith("{") and text.endswith("}")):
        raise SyntaxProblem("a set literal must be enclosed in braces")
    body = text[1:-1].strip()
    named = set()
    families = {}

    def add_part(fid, part):
        families[fid] = families.get(fid, FamilyPart.finite()).union(part)

    for raw in _split_tokens(body):
        token = raw.strip()
        if not token:
            continue
        if "\\" in token:
            fid, _, rest = token.partition("\\")
            fid = fid.strip()
            rest = rest.strip()
            if fid not in graph.families:
                raise SyntaxProblem(f"unknown family {fid!r}")
            if not (rest.startswith("{") and rest.endswith("}")):
                raise SyntaxProblem(f"bad exclusion list in {raw!r}")
            try:
                excluded = [int(t) for t in rest[1:-1].split(",") if t.strip()]
            except ValueError as exc:
                raise SyntaxProblem(f"bad exclusion list in {raw!r}") from exc
            add_part(fid, FamilyPart.cofinite_excluding(excluded))
        elif token in graph.families:
            add_part(token, FamilyPart.cofinite_excluding())
        else:
            ref = parse_vertex_token(graph, token)
            if isinstance(ref, tuple):
                add_part(ref[0], FamilyPart.finite([ref[1]]))
            else:
                named.add(ref)
    return VSet(named, families)


def _split_tokens(body):
    """Split on commas that are not inside an exclusion brace."""
    tokens, depth, current = [], 0, []
    for ch in body:
        if ch == "{":
            depth += 1
            current.append(ch)
        elif ch == "}":
            depth -= 1
            current.append(ch)
        elif ch == "," and depth == 0:
            tokens.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current:
        tokens.append("".join(current))
    return tokens


def parse_set_list(graph, text):
    """Semicolon-separated set literals."""
    return [parse_set(graph, part) for part in text.split(";") if part.strip()]
