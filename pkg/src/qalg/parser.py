"""Reader and printer for the line-oriented ``.qalg`` format.

    algebra <name>
    vertices <id> <id> ...          # may repeat
    arrow <id> <source> <target>
    rel <arrow-id> <arrow-id> ...   # left-to-right composition

Blank lines and ``#`` comments are ignored.  Identifiers are
``[A-Za-z_][A-Za-z0-9_]*`` or bare integers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .paths import Arrow, Quiver

__all__ = ["AlgebraSpec", "parse_spec", "print_spec", "load_spec"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+")
_KEYWORDS = ("algebra", "vertices", "arrow", "rel")


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    quiver: Quiver
    relations: tuple[tuple[str, ...], ...]


def _tokens(line: str):
    """Yield (column, token) pairs; column is 1-based."""
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def parse_spec(text: str) -> AlgebraSpec:
    name = None
    vertices: list[tuple[str, int, int]] = []
    arrows: list[tuple[str, str, str, int, list[tuple[int, str]]]] = []
    relations: list[tuple[int, list[tuple[int, str]]]] = []
    last_line = 1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        for col, tok in toks:
            if not _IDENT.fullmatch(tok):
                raise ParseError("lexical", f"invalid token {tok!r}", lineno, col)
        (kcol, kw), args = toks[0], toks[1:]
        if kw not in _KEYWORDS:
            raise ParseError("syntax", f"unknown keyword {kw!r}", lineno, kcol)
        if name is None and kw != "algebra":
            raise ParseError("missing-header", "file must start with 'algebra <name>'", lineno, kcol)
        if kw == "algebra":
            if name is not None:
                raise ParseError("syntax", "duplicate 'algebra' header", lineno, kcol)
            if len(args) != 1:
                raise ParseError("syntax", "expected 'algebra <name>'", lineno, kcol)
            name = args[0][1]
        elif kw == "vertices":
            if not args:
                raise ParseError("no-vertices", "at least one vertex required", lineno, kcol)
            vertices.extend((tok, lineno, col) for col, tok in args)
        elif kw == "arrow":
            if len(args) != 3:
                raise ParseError("syntax", "expected 'arrow <id> <source> <target>'", lineno, kcol)
            (c0, a), (c1, s), (c2, t) = args
            arrows.append((a, s, t, lineno, [(c0, a), (c1, s), (c2, t)]))
        else:
            relations.append((lineno, args))

    if name is None:
        raise ParseError("missing-header", "file must start with 'algebra <name>'", 1, 1)
    if not vertices:
        raise ParseError("no-vertices", "at least one vertex required", last_line, 1)

    seen: dict[str, str] = {}
    for v, ln, col in vertices:
        if v in seen:
            raise ParseError("duplicate-name", f"vertex {v!r} declared twice", ln, col)
        seen[v] = "vertex"
    vset = {v for v, _, _ in vertices}
    for a, s, t, ln, cols in arrows:
        if a in seen:
            raise ParseError("duplicate-name", f"name {a!r} already used for a {seen[a]}", ln, cols[0][0])
        seen[a] = "arrow"
        for col, v in cols[1:]:
            if v not in vset:
                raise ParseError("unknown-vertex", f"unknown vertex {v!r}", ln, col)
    quiver = Quiver([v for v, _, _ in vertices], [Arrow(a, s, t) for a, s, t, _, _ in arrows])

    rels: list[tuple[str, ...]] = []
    for ln, args in relations:
        if len(args) < 2:
            col = args[0][0] if args else 1
            raise ParseError("short-relation", "relations must have length at least 2", ln, col)
        for col, a in args:
            if a not in quiver.arrow_index:
                raise ParseError("unknown-arrow", f"unknown arrow {a!r}", ln, col)
        for j in range(1, len(args)):
            a, b = args[j - 1][1], args[j][1]
            if quiver.tgt[quiver.arrow_index[a]] != quiver.src[quiver.arrow_index[b]]:
                raise ParseError(
                    "non-composable",
                    f"junction {j}: {a} ends at {quiver.arrows[quiver.arrow_index[a]].target} "
                    f"but {b} starts at {quiver.arrows[quiver.arrow_index[b]].source}",
                    ln,
                    args[j][0],
                )
        rel = tuple(a for _, a in args)
        if rel in rels:
            raise ParseError("duplicate-relation", f"relation {' '.join(rel)} repeated", ln, args[0][0])
        rels.append(rel)

    return AlgebraSpec(name, quiver, tuple(rels))


def print_spec(spec: AlgebraSpec) -> str:
    lines = [f"algebra {spec.name}", "vertices " + " ".join(spec.quiver.vertices)]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in spec.quiver.arrows]
    lines += ["rel " + " ".join(r) for r in spec.relations]
    return "\n".join(lines) + "\n"


def load_spec(path) -> AlgebraSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
