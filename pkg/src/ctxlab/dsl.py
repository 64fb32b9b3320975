"""Line-oriented text format for logics.

::

    # comment (also allowed after a directive)
    dim 3
    vertex z1 [1 0 0]
    vertex h0 [1 1 1]
    context z1 z2 z3
    cycle 1 3 5 7 9

Vertices used in a ``context`` line without a ``vertex`` declaration are
declared implicitly without a ray, unless parsing in strict mode. Vertex
indices follow first appearance in the context lines. Ray entries are
integers or fractions ``p/q``. Every error carries a 1-based line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    DuplicateDeclaration,
    LogicSyntaxError,
    UnknownDirective,
    ZeroVector,
)
from .hypergraph import LogicBundle, _NAME_RE, build_hypergraph
from .realization import Realization, canonical_ray

_TOKEN = re.compile(r"\[|\]|[^\s\[\]]+")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
DIRECTIVES = ("dim", "vertex", "context", "cycle")


@dataclass
class _Tok:
    text: str
    col: int


def _tokens(line: str) -> list[_Tok]:
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return [_Tok(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_rational(text: str, line: int = 0, col: int = 0) -> Fraction:
    if not _RATIONAL.match(text):
        raise LogicSyntaxError(f"expected an integer or p/q, got {text!r}", line, col)
    _, _, den = text.partition("/")
    if den and int(den) == 0:
        raise LogicSyntaxError(f"zero denominator in {text!r}", line, col)
    return Fraction(text)


def _name(tok: _Tok, lineno: int) -> str:
    if not _NAME_RE.match(tok.text) or not tok.text.isprintable():
        raise LogicSyntaxError(f"invalid vertex name {tok.text!r}", lineno, tok.col)
    return tok.text


def parse_logic(text: str, name: str = "", strict: bool = False) -> LogicBundle:
    """Parse a logic document into a bundle (rays may cover only some vertices)."""
    dim: int | None = None
    dim_pos: tuple[int, int] | None = None
    declared: dict[str, tuple[int, int]] = {}
    rays: dict[str, tuple[tuple[Fraction, ...], int, int]] = {}
    contexts: list[tuple[list[str], int, list[_Tok]]] = []
    cycle: tuple[list[str], int, int] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        if head.text not in DIRECTIVES:
            if _NAME_RE.match(head.text):
                raise UnknownDirective(f"unknown directive {head.text!r}", lineno, head.col)
            raise LogicSyntaxError(f"unexpected {head.text!r}", lineno, head.col)
        if head.text == "dim":
            if dim is not None:
                raise DuplicateDeclaration("dimension declared twice", lineno, head.col)
            if len(args) != 1:
                col = args[1].col if len(args) > 1 else head.col + len(head.text)
                raise LogicSyntaxError("dim takes exactly one integer", lineno, col)
            if not re.fullmatch(r"\d+", args[0].text) or int(args[0].text) < 1:
                raise LogicSyntaxError(
                    f"dimension must be a positive integer, got {args[0].text!r}",
                    lineno,
                    args[0].col,
                )
            dim = int(args[0].text)
            dim_pos = (lineno, args[0].col)
            for coords, _, _ in rays.values():
                if len(coords) != dim:
                    raise DimensionMismatch(
                        f"dim {dim} differs from the {len(coords)}-entry rays above",
                        *dim_pos,
                    )
                break
        elif head.text == "vertex":
            if not args:
                raise LogicSyntaxError("vertex needs a name", lineno, head.col + len(head.text))
            vname = _name(args[0], lineno)
            if vname in declared:
                raise DuplicateDeclaration(f"vertex {vname!r} declared twice", lineno, args[0].col)
            declared[vname] = (lineno, args[0].col)
            rest = args[1:]
            if rest:
                if rest[0].text != "[":
                    raise LogicSyntaxError(f"expected '[', got {rest[0].text!r}", lineno, rest[0].col)
                if rest[-1].text != "]":
                    raise LogicSyntaxError("missing closing ']'", lineno, rest[-1].col + len(rest[-1].text))
                inner = rest[1:-1]
                for t in inner:
                    if t.text in "[]":
                        raise LogicSyntaxError(f"unexpected {t.text!r}", lineno, t.col)
                coords = tuple(parse_rational(t.text, lineno, t.col) for t in inner)
                if not coords:
                    raise LogicSyntaxError("empty ray", lineno, rest[0].col)
                if not any(coords):
                    raise LogicSyntaxError("zero vector spans no ray", lineno, rest[0].col)
                if dim is not None and len(coords) != dim:
                    raise DimensionMismatch(
                        f"ray of {vname!r} has {len(coords)} entries, dim is {dim}",
                        lineno,
                        rest[0].col,
                    )
                for other, _, _ in rays.values():
                    if len(other) != len(coords):
                        raise DimensionMismatch(
                            f"ray of {vname!r} has {len(coords)} entries, "
                            f"earlier rays have {len(other)}",
                            lineno,
                            rest[0].col,
                        )
                    break
                rays[vname] = (coords, lineno, rest[0].col)
        elif head.text == "context":
            names = [_name(t, lineno) for t in args]
            if len(names) < 2:
                raise LogicSyntaxError("a context needs at least two vertices", lineno, head.col)
            seen = set()
            for t in args:
                if t.text in seen:
                    raise LogicSyntaxError(f"vertex {t.text!r} repeated in context", lineno, t.col)
                seen.add(t.text)
            contexts.append((names, lineno, args))
        else:
            if cycle is not None:
                raise DuplicateDeclaration("cycle declared twice", lineno, head.col)
            if not args:
                raise LogicSyntaxError("cycle needs at least one vertex", lineno, head.col)
            cycle = ([_name(t, lineno) for t in args], lineno, head.col)

    used: dict[str, int] = {}
    context_sets: dict[frozenset, int] = {}
    for names, lineno, toks in contexts:
        key = frozenset(names)
        if key in context_sets:
            raise DuplicateDeclaration(
                f"context duplicates the one on line {context_sets[key]}", lineno, toks[0].col
            )
        context_sets[key] = lineno
        for n, t in zip(names, toks):
            if strict and n not in declared:
                raise LogicSyntaxError(f"vertex {n!r} used before declaration", lineno, t.col)
            used.setdefault(n, lineno)
    for vname, (lineno, col) in declared.items():
        if vname not in used:
            raise LogicSyntaxError(f"vertex {vname!r} belongs to no context", lineno, col)

    H = build_hypergraph([names for names, _, _ in contexts])

    lengths = {len(c) for c in H.contexts}
    ray_dim = None
    for vname, (coords, lineno, col) in rays.items():
        ray_dim = len(coords)
        if dim is None and len(lengths) == 1 and ray_dim != next(iter(lengths)):
            raise DimensionMismatch(
                f"ray of {vname!r} has {ray_dim} entries for contexts of size "
                f"{next(iter(lengths))}",
                lineno,
                col,
            )
    if dim is not None and len(lengths) == 1 and dim != next(iter(lengths)):
        raise DimensionMismatch(
            f"dim {dim} differs from the context size {next(iter(lengths))}", *dim_pos
        )

    realization = None
    if rays:
        try:
            canon = {v: canonical_ray(rays[v][0]) for v in H.names if v in rays}
        except ZeroVector as exc:  # pragma: no cover - rejected above
            raise LogicSyntaxError(str(exc)) from None
        realization = Realization(dim if dim is not None else ray_dim, canon)

    cyc = None
    if cycle is not None:
        cnames, lineno, col = cycle
        for n in cnames:
            if n not in used:
                raise LogicSyntaxError(f"cycle names unknown vertex {n!r}", lineno, col)
        cyc = tuple(cnames)
    return LogicBundle(H, realization=realization, name=name, cycle=cyc)


def _fmt(x) -> str:
    return str(Fraction(x))


def serialize_logic(bundle: LogicBundle) -> str:
    """Canonical text: name comment, dim, rays, contexts, cycle."""
    H = bundle.hypergraph
    lines = []
    if bundle.name:
        lines.append(f"# {bundle.name}")
    lengths = {len(c) for c in H.contexts}
    if bundle.realization is not None:
        lines.append(f"dim {bundle.realization.dimension}")
    elif len(lengths) == 1:
        lines.append(f"dim {next(iter(lengths))}")
    if bundle.realization is not None:
        for n in H.names:
            if n in bundle.realization.rays:
                coords = " ".join(_fmt(x) for x in bundle.realization.rays[n])
                lines.append(f"vertex {n} [{coords}]")
    for ci in range(H.n_contexts):
        lines.append("context " + " ".join(H.context_names(ci)))
    if bundle.cycle is not None:
        lines.append("cycle " + " ".join(bundle.cycle))
    return "\n".join(lines) + "\n"


def same_logic(a: LogicBundle, b: LogicBundle) -> bool:
    """Structural equality, ignoring name, aliases and notes."""
    ra = dict(a.realization.rays) if a.realization else {}
    rb = dict(b.realization.rays) if b.realization else {}
    return a.hypergraph == b.hypergraph and ra == rb and a.cycle == b.cycle


def parse_values(text: str) -> dict[str, Fraction]:
    """Read ``name value`` lines (values exact, ``p/q`` allowed), '#' comments."""
    out: dict[str, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if len(toks) != 2:
            raise LogicSyntaxError("expected 'name value'", lineno, toks[0].col)
        vname = _name(toks[0], lineno)
        if vname in out:
            raise DuplicateDeclaration(f"value for {vname!r} given twice", lineno, toks[0].col)
        out[vname] = parse_rational(toks[1].text, lineno, toks[1].col)
    return out
