"""Reader and writer for LPT, a line-oriented LP text format.

    # comment
    max                      (or: min)
    obj  c1 c2 ... cn
    row  a1 a2 ... an  <=  b (relation may also be = or >=)

``min`` problems are stored with a negated objective and ``minimize=True``.
``>=`` rows are negated into ``<=`` rows and ``=`` rows become the pair
``a.x <= b``, ``-a.x <= -b``.
"""
from __future__ import annotations

import math
import re

from .errors import DimensionError, LPTSyntaxError
from .model import LinearProgram

_TOKEN = re.compile(r"\S+")
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_NON_FINITE = re.compile(r"[+-]?(?:inf|infinity|nan)", re.IGNORECASE)
_RELATIONS = ("<=", "=", ">=")


def _literal(token: str, line: int, column: int) -> float:
    if _NON_FINITE.fullmatch(token):
        raise LPTSyntaxError(f"non-finite literal {token!r}", line, column)
    if not _NUMBER.fullmatch(token):
        raise LPTSyntaxError(f"expected a number, got {token!r}", line, column)
    value = float(token)
    if not math.isfinite(value):
        raise LPTSyntaxError(f"literal {token!r} overflows to infinity", line, column)
    return value


def _tokens(text: str):
    """Yield (line_number, [(column, token), ...]) for every non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if toks:
            yield lineno, toks


def parse_lp_text(text: str | bytes, name: str = "") -> LinearProgram:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LPTSyntaxError(f"input is not UTF-8 ({exc.reason})", 1) from None

    lines = _tokens(text)
    header = next(lines, None)
    if header is None:
        raise LPTSyntaxError("empty input: expected 'max' or 'min'", 1)
    lineno, toks = header
    sense = toks[0][1].lower()
    if sense not in ("max", "min") or len(toks) != 1:
        raise LPTSyntaxError("first line must be exactly 'max' or 'min'", lineno, toks[0][0])
    minimize = sense == "min"

    objective = next(lines, None)
    if objective is None:
        raise LPTSyntaxError("missing 'obj' line", lineno + 1)
    lineno, toks = objective
    if toks[0][1] != "obj":
        raise LPTSyntaxError(f"expected 'obj', got {toks[0][1]!r}", lineno, toks[0][0])
    if len(toks) == 1:
        raise LPTSyntaxError("objective needs at least one coefficient", lineno, toks[0][0])
    c = [_literal(t, lineno, col) for col, t in toks[1:]]
    if minimize:
        c = [-v for v in c]
    n = len(c)

    A, b = [], []
    for lineno, toks in lines:
        col, head = toks[0]
        if head != "row":
            raise LPTSyntaxError(f"expected 'row', got {head!r}", lineno, col)
        if len(toks) != n + 3:
            raise DimensionError(
                f"line {lineno}: row has {len(toks) - 3} coefficients, objective has {n}")
        coeffs = [_literal(t, lineno, col) for col, t in toks[1:n + 1]]
        rel_col, relation = toks[n + 1]
        if relation not in _RELATIONS:
            raise LPTSyntaxError(
                f"expected one of {', '.join(_RELATIONS)}, got {relation!r}", lineno, rel_col)
        rhs = _literal(toks[n + 2][1], lineno, toks[n + 2][0])

        if relation in ("<=", "="):
            A.append(coeffs)
            b.append(rhs)
        if relation in (">=", "="):
            A.append([-v for v in coeffs])
            b.append(-rhs)

    return LinearProgram(c, A if A else [[]], b, name=name, minimize=minimize)


def render_lp_text(lp: LinearProgram, comment: str | None = None) -> str:
    """LPT text for ``lp``; parsing it back yields the same structure."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append("min" if lp.minimize else "max")
    c = -lp.c if lp.minimize else lp.c
    out.append(" ".join(["obj", *(repr(float(v)) for v in c)]))
    for row, rhs in zip(lp.A, lp.b):
        out.append(" ".join(["row", *(repr(float(v)) for v in row), "<=", repr(float(rhs))]))
    return "\n".join(out) + "\n"
