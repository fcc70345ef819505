"""Job file reader.

Example::

    # comments start with '#'
    ring: x, y
      char 0
      mod [y^2 - x^3]
    ideal I: [x^10, x^4*y^5, y^9]
    seed: 42

Keys are ``ring``, ``char``, ``mod``, ``ideal <name>`` and the run options
``seed``, ``samples``, ``nmax``, ``mc``, ``n``, ``degree-cap``.  ``char`` and
``mod`` may be written on their own lines, indented under ``ring`` or not,
with or without a colon.  Bracketed lists may span several lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..ideals import Ideal, RingDescriptor
from ..polyring import PolySyntaxError

OPTION_KEYS = {"seed": int, "samples": int, "nmax": int, "mc": int, "n": int, "degree-cap": int}


class JobSyntaxError(ValueError):
    code = "ParseError"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}" if line is not None else "job file"
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}")


@dataclass
class JobSpec:
    ring: RingDescriptor
    ideals: dict[str, Ideal]
    sources: dict[str, list[str]]
    options: dict[str, int] = field(default_factory=dict)


def _split_list(body: str, line: int) -> list[str]:
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise JobSyntaxError("expected a bracketed list [a, b, ...]", line)
    inner = body[1:-1]
    out, depth, cur = [], 0, []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    last = "".join(cur).strip()
    if last or out:
        out.append(last)
    if any(not s for s in out):
        raise JobSyntaxError("empty entry in list", line)
    return out


def _logical_lines(text: str):
    """Yield (line number, content) joining bracketed continuations."""
    buf, start, depth = "", 0, 0
    for no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip() and not buf:
            continue
        if not buf:
            start = no
        buf += " " + content
        depth += content.count("[") - content.count("]")
        if depth <= 0:
            yield start, buf.strip()
            buf, depth = "", 0
    if buf:
        raise JobSyntaxError("unclosed '['", start)


_KEY = re.compile(r"^(ring|char|mod|ideal\s+[A-Za-z_][A-Za-z_0-9]*|[a-z][a-z-]*)\s*:?\s*(.*)$")


def parse_job(text: str) -> JobSpec:
    names = None
    char = 0
    mods: list[str] = []
    mod_line = None
    ideal_src: dict[str, tuple[int, list[str]]] = {}
    options: dict[str, int] = {}
    for no, line in _logical_lines(text):
        m = _KEY.match(line)
        if not m:
            raise JobSyntaxError(f"cannot read {line!r}", no)
        key, rest = m.group(1), m.group(2).strip()
        if key == "ring":
            vs = [v.strip() for v in re.split(r"[,\s]+", rest) if v.strip()]
            if not vs:
                raise JobSyntaxError("ring needs at least one variable", no)
            for v in vs:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                    raise JobSyntaxError(f"bad variable name {v!r}", no)
            if len(set(vs)) != len(vs):
                raise JobSyntaxError("repeated variable name", no)
            names = vs
        elif key == "char":
            try:
                char = int(rest)
            except ValueError:
                raise JobSyntaxError(f"characteristic must be an integer, got {rest!r}", no) from None
        elif key == "mod":
            mods, mod_line = _split_list(rest, no), no
        elif key.startswith("ideal"):
            name = key.split()[1]
            if name in ideal_src:
                raise JobSyntaxError(f"ideal {name} defined twice", no)
            ideal_src[name] = (no, _split_list(rest, no))
        elif key in OPTION_KEYS:
            try:
                options[key] = OPTION_KEYS[key](rest)
            except ValueError:
                raise JobSyntaxError(f"option {key} needs an integer", no) from None
        else:
            raise JobSyntaxError(f"unknown key {key!r}", no)
    if names is None:
        raise JobSyntaxError("missing 'ring:' section")
    if not ideal_src:
        raise JobSyntaxError("no ideal defined")
    try:
        try:
            ring = RingDescriptor(names, char, mods, complete_intersection=True if mods else None)
        except ValueError as exc:
            if isinstance(exc, PolySyntaxError) or "regular sequence" not in str(exc):
                raise
            ring = RingDescriptor(names, char, mods, complete_intersection=False)
    except PolySyntaxError as exc:
        raise JobSyntaxError(exc.message, mod_line, exc.pos + 1) from None
    except ValueError as exc:
        raise JobSyntaxError(str(exc), mod_line) from None
    ideals = {}
    for name, (no, gens) in ideal_src.items():
        polys = []
        for g in gens:
            try:
                polys.append(ring.poly(g))
            except PolySyntaxError as exc:
                raise JobSyntaxError(f"in {g!r}: {exc.message}", no, exc.pos + 1) from None
        ideals[name] = Ideal(ring, polys)
    return JobSpec(ring, ideals, {k: v[1] for k, v in ideal_src.items()}, options)
