"""Text formats: matroid instances, SPA-ST instances, sets and matchings.

Instance format (``#`` starts a comment, blank lines are ignored)::

    superstable-instance 1
    elements 4
    matroid D partition
    block 1 : 0 1
    block 1 : 2 3
    end
    matroid H uniform
    rank 2
    end
    order D 0:1 1:1 2:2 3:3
    order H 0:1 1:2 2:1 3:2

Matroid kinds and their body lines:

* ``uniform``: ``rank K``
* ``partition``: ``block CAP : e1 e2 ...`` (blocks disjoint)
* ``laminar``: ``set CAP : e1 e2 ...`` (sets pairwise disjoint or nested)
* ``graphic``: ``vertices V`` then one ``edge U W`` per element, in id order
* ``linear``: ``prime P``, ``columns N``, then ``row a1 ... aN`` lines

SPA-ST format (students, lecturers, projects numbered from 1)::

    3 2 3            # n students, m lecturers, q projects
    1 1 (2 3)        # student 1: project 1, then 2 and 3 tied
    2 (1 2)
    3 3
    1 1 1            # project 1: capacity 1, lecturer 1
    2 1 1
    3 1 2
    1 2 (1 2) 3      # lecturer 1: capacity 2, then its student list
    2 1 (1 3)

Parenthesised groups are ties.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import InputError, ParseError
from .matroids import (GraphicMatroid, LaminarMatroid, LinearMatroid, Matroid,
                       PartitionMatroid, UniformMatroid)
from .preferences import WeakOrder
from .spa import SpaInstance
from .stability import Instance

__all__ = [
    "FORMAT_HEADER",
    "parse_instance",
    "format_instance",
    "parse_spa",
    "format_spa",
    "parse_element_set",
    "parse_matching",
    "format_matching",
]

FORMAT_HEADER = "superstable-instance 1"

_TOKEN = re.compile(r"\S+")


def _lines(text: str):
    """Yield ``(lineno, [(column, token), ...])`` for non-empty lines."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if tokens:
            yield lineno, tokens


def _int(token: tuple[int, str], lineno: int, what: str) -> int:
    col, text = token
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {text!r}", lineno, col) from None


def _capacity_line(tokens, lineno, keyword):
    # "<keyword> CAP : e1 e2 ..."
    if len(tokens) < 3 or tokens[2][1] != ":":
        raise ParseError(f"expected '{keyword} CAP : ELEMENTS'", lineno, tokens[0][0])
    cap = _int(tokens[1], lineno, "capacity")
    members = tuple(_int(t, lineno, "element id") for t in tokens[3:])
    return cap, members


def _build_matroid(kind, size, body, start_line) -> Matroid:
    def only(keyword):
        hits = [(ln, toks) for ln, toks in body if toks[0][1] == keyword]
        if len(hits) != 1:
            raise ParseError(f"{kind} matroid needs exactly one '{keyword}' line", start_line)
        ln, toks = hits[0]
        if len(toks) != 2:
            raise ParseError(f"'{keyword}' takes one integer", ln, toks[0][0])
        return _int(toks[1], ln, keyword)

    allowed = {"uniform": {"rank"}, "partition": {"block"}, "laminar": {"set"},
               "graphic": {"vertices", "edge"}, "linear": {"prime", "columns", "row"}}
    if kind not in allowed:
        raise ParseError(f"unknown matroid kind {kind!r}", start_line)
    for ln, toks in body:
        if toks[0][1] not in allowed[kind]:
            raise ParseError(f"unexpected {toks[0][1]!r} in {kind} matroid", ln, toks[0][0])

    try:
        if kind == "uniform":
            return UniformMatroid(size, only("rank"))
        if kind in ("partition", "laminar"):
            parsed = [_capacity_line(toks, ln, toks[0][1]) for ln, toks in body]
            caps = tuple(c for c, _ in parsed)
            groups = tuple(g for _, g in parsed)
            cls = PartitionMatroid if kind == "partition" else LaminarMatroid
            return cls(size, groups, caps)
        if kind == "graphic":
            vertices = only("vertices")
            edges = []
            for ln, toks in body:
                if toks[0][1] == "edge":
                    if len(toks) != 3:
                        raise ParseError("'edge' takes two vertices", ln, toks[0][0])
                    edges.append((_int(toks[1], ln, "vertex"), _int(toks[2], ln, "vertex")))
            m = GraphicMatroid(vertices, tuple(edges))
        else:
            prime, columns = only("prime"), only("columns")
            rows = [tuple(_int(t, ln, "matrix entry") for t in toks[1:])
                    for ln, toks in body if toks[0][1] == "row"]
            m = LinearMatroid(tuple(rows), prime, columns)
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(str(exc), start_line) from None
    if m.size != size:
        raise ParseError(f"{kind} matroid has {m.size} elements, expected {size}", start_line)
    return m


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance document.

    Raises :class:`ParseError` (with line/column) on syntax errors and on
    semantic ones such as crossing laminar sets or loop elements.
    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty document")
    lineno, toks = lines[0]
    if " ".join(t for _, t in toks) != FORMAT_HEADER:
        raise ParseError(f"expected header {FORMAT_HEADER!r}", lineno, toks[0][0])

    size = None
    matroids: dict[str, Matroid] = {}
    orders: dict[str, WeakOrder] = {}
    pos = 1
    while pos < len(lines):
        lineno, toks = lines[pos]
        head = toks[0][1]
        if head == "elements":
            if size is not None or len(toks) != 2:
                raise ParseError("expected a single 'elements N' line", lineno, toks[0][0])
            size = _int(toks[1], lineno, "element count")
            if size < 0:
                raise ParseError("element count must be non-negative", lineno, toks[1][0])
            pos += 1
        elif head == "matroid":
            if size is None:
                raise ParseError("'elements' must come before matroids", lineno, toks[0][0])
            if len(toks) != 3 or toks[1][1] not in ("D", "H"):
                raise ParseError("expected 'matroid D|H KIND'", lineno, toks[0][0])
            side, kind = toks[1][1], toks[2][1]
            if side in matroids:
                raise ParseError(f"matroid {side} given twice", lineno, toks[1][0])
            body = []
            pos += 1
            while pos < len(lines) and lines[pos][1][0][1] != "end":
                body.append(lines[pos])
                pos += 1
            if pos == len(lines):
                raise ParseError(f"matroid {side} block is missing 'end'", lineno)
            pos += 1
            matroids[side] = _build_matroid(kind, size, body, lineno)
        elif head == "order":
            if size is None:
                raise ParseError("'elements' must come before orders", lineno, toks[0][0])
            if len(toks) < 2 or toks[1][1] not in ("D", "H"):
                raise ParseError("expected 'order D|H e:r ...'", lineno, toks[0][0])
            side = toks[1][1]
            if side in orders:
                raise ParseError(f"order {side} given twice", lineno, toks[1][0])
            pairs = []
            for col, tok in toks[2:]:
                e, sep, r = tok.partition(":")
                if not sep:
                    raise ParseError(f"expected ELEMENT:RANK, got {tok!r}", lineno, col)
                pairs.append((_int((col, e), lineno, "element id"),
                              _int((col, r), lineno, "rank")))
            try:
                orders[side] = WeakOrder.from_pairs(size, pairs, side)
            except InputError as exc:
                raise ParseError(str(exc), lineno) from None
            pos += 1
        else:
            raise ParseError(f"unexpected keyword {head!r}", lineno, toks[0][0])

    if size is None:
        raise ParseError("missing 'elements' line")
    for side in ("D", "H"):
        if side not in matroids:
            raise ParseError(f"missing matroid {side}")
        if side not in orders:
            raise ParseError(f"missing order {side}")
    try:
        return Instance(size, matroids["D"], matroids["H"], orders["D"], orders["H"])
    except InputError as exc:
        raise ParseError(str(exc)) from None


def _format_matroid(side: str, m: Matroid) -> list[str]:
    if isinstance(m, UniformMatroid):
        return [f"matroid {side} uniform", f"rank {m.k}", "end"]
    if isinstance(m, (PartitionMatroid, LaminarMatroid)):
        kind, word, groups = (("partition", "block", m.blocks) if isinstance(m, PartitionMatroid)
                              else ("laminar", "set", m.sets))
        body = [f"{word} {cap} : {' '.join(map(str, g))}".rstrip()
                for g, cap in zip(groups, m.capacities)]
        return [f"matroid {side} {kind}", *body, "end"]
    if isinstance(m, GraphicMatroid):
        return [f"matroid {side} graphic", f"vertices {m.num_vertices}",
                *(f"edge {u} {v}" for u, v in m.edges), "end"]
    if isinstance(m, LinearMatroid):
        return [f"matroid {side} linear", f"prime {m.prime}", f"columns {m.num_columns}",
                *(f"row {' '.join(map(str, row))}" for row in m.matrix), "end"]
    raise InputError(f"cannot serialize matroid of type {type(m).__name__}")


def format_instance(inst: Instance) -> str:
    out = [FORMAT_HEADER, f"elements {inst.size}"]
    out += _format_matroid("D", inst.m_d)
    out += _format_matroid("H", inst.m_h)
    for side in ("D", "H"):
        ranks = inst.order(side).ranks
        out.append(" ".join([f"order {side}", *(f"{e}:{r}" for e, r in enumerate(ranks))]))
    return "\n".join(out) + "\n"


def _tie_groups(tokens, lineno) -> tuple[tuple[int, ...], ...]:
    """Parse ``1 (2 3) 4`` style lists into tie groups."""
    groups: list[tuple[int, ...]] = []
    current: list[int] | None = None
    for col, tok in tokens:
        for piece in re.findall(r"\(|\)|[^()]+", tok):
            if piece == "(":
                if current is not None:
                    raise ParseError("nested '('", lineno, col)
                current = []
            elif piece == ")":
                if current is None:
                    raise ParseError("unmatched ')'", lineno, col)
                if not current:
                    raise ParseError("empty tie group", lineno, col)
                groups.append(tuple(current))
                current = None
            else:
                value = _int((col, piece), lineno, "id")
                if current is None:
                    groups.append((value,))
                else:
                    current.append(value)
    if current is not None:
        raise ParseError("unclosed '('", lineno)
    return tuple(groups)


def parse_spa(text: str) -> SpaInstance:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty SPA document")
    lineno, toks = lines[0]
    if len(toks) != 3:
        raise ParseError("expected header 'n m q' (students lecturers projects)", lineno)
    n, m, q = (_int(t, lineno, "count") for t in toks)
    if min(n, m, q) < 0:
        raise ParseError("counts must be non-negative", lineno)
    if len(lines) != 1 + n + q + m:
        raise ParseError(f"expected {n} student, {q} project and {m} lecturer lines, "
                         f"found {len(lines) - 1} lines")
    body = lines[1:]

    def indexed(chunk, count, what):
        seen = {}
        for ln, tk in chunk:
            idx = _int(tk[0], ln, f"{what} id")
            if not 1 <= idx <= count:
                raise ParseError(f"{what} id {idx} out of range 1..{count}", ln, tk[0][0])
            if idx in seen:
                raise ParseError(f"{what} {idx} declared twice", ln, tk[0][0])
            seen[idx] = (ln, tk)
        return [seen[i] for i in range(1, count + 1)]

    students = indexed(body[:n], n, "student")
    projects = indexed(body[n:n + q], q, "project")
    lecturers = indexed(body[n + q:], m, "lecturer")

    student_prefs = [_tie_groups(tk[1:], ln) for ln, tk in students]
    project_caps, project_lecturer = [], []
    for ln, tk in projects:
        if len(tk) != 3:
            raise ParseError("project line must be 'p capacity lecturer'", ln, tk[0][0])
        project_caps.append(_int(tk[1], ln, "capacity"))
        project_lecturer.append(_int(tk[2], ln, "lecturer id"))
    lecturer_caps, lecturer_prefs = [], []
    for ln, tk in lecturers:
        if len(tk) < 2:
            raise ParseError("lecturer line must be 'l capacity students...'", ln, tk[0][0])
        lecturer_caps.append(_int(tk[1], ln, "capacity"))
        lecturer_prefs.append(_tie_groups(tk[2:], ln))
    try:
        return SpaInstance(tuple(student_prefs), tuple(lecturer_prefs), tuple(project_lecturer),
                           tuple(project_caps), tuple(lecturer_caps))
    except InputError as exc:
        raise ParseError(str(exc)) from None


def _format_groups(groups) -> str:
    return " ".join(str(g[0]) if len(g) == 1 else "(" + " ".join(map(str, g)) + ")"
                    for g in groups)


def format_spa(spa: SpaInstance) -> str:
    out = [f"{spa.n_students} {spa.n_lecturers} {spa.n_projects}"]
    for s, groups in enumerate(spa.student_prefs, 1):
        out.append(f"{s} {_format_groups(groups)}".rstrip())
    for p in range(1, spa.n_projects + 1):
        out.append(f"{p} {spa.project_caps[p - 1]} {spa.project_lecturer[p - 1]}")
    for l, groups in enumerate(spa.lecturer_prefs, 1):
        out.append(f"{l} {spa.lecturer_caps[l - 1]} {_format_groups(groups)}".rstrip())
    return "\n".join(out) + "\n"


def parse_element_set(text: str) -> frozenset:
    """Parse ``"{0, 2, 5}"``, ``"0,2,5"``, ``"0 2 5"`` or ``"{}"``."""
    body = text.strip().removeprefix("{").removesuffix("}")
    items = [t for t in re.split(r"[,\s]+", body) if t]
    try:
        return frozenset(int(t) for t in items)
    except ValueError:
        raise InputError(f"cannot parse element set {text!r}") from None


def parse_matching(text: str) -> frozenset:
    """Parse ``s p`` pairs, one per line (or ``s:p`` tokens separated by commas)."""
    pairs = []
    for lineno, toks in _lines(text.replace(",", "\n")):
        words = [t for _, t in toks]
        if len(words) == 1 and ":" in words[0]:
            words = words[0].split(":")
        if len(words) != 2:
            raise ParseError("expected a 'student project' pair", lineno, toks[0][0])
        pairs.append((_int((toks[0][0], words[0]), lineno, "student id"),
                      _int((toks[0][0], words[1]), lineno, "project id")))
    return frozenset(pairs)


def format_matching(pairs: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{s} {p}\n" for s, p in sorted(pairs))
