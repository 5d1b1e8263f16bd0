"""Text and JSON formats for triangulations, elements and machine records.

Element text form (round-trips through ``parse_surface_elem`` /
``parse_handlebody_elem``)::

    q^-1 * C([2],[1]) + (1*q^3 + 1*q^0) * S([1]) + C([0],[0])

A coefficient of exactly 1 is omitted, ``q^k`` is written bare and anything
else is parenthesised.

Machine records are one line of ``key=value`` pairs.  Values containing
whitespace, quotes or ``=`` are JSON-quoted.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Mapping

from .graded import GradedHandlebodyElem, GradedSurfaceElem
from .qring import Coeff, RingCtx
from .surface import PRESETS, DTCoord, Triangulation, preset


class FormatError(ValueError):
    """Malformed input text or file."""


# ---------------------------------------------------------------------------
# element text


def _coeff_prefix(c: Coeff) -> str:
    items = c.items()
    if len(items) == 1:
        e, k = items[0]
        if k == 1:
            return "" if e == 0 else f"q^{e} * "
    return f"({c}) * "


def format_surface_elem(x: GradedSurfaceElem) -> str:
    if not x.terms:
        return "0"
    return " + ".join(_coeff_prefix(c) + str(k) for k, c in x.terms.items())


def format_handlebody_elem(v: GradedHandlebodyElem) -> str:
    if not v.terms:
        return "0"
    return " + ".join(_coeff_prefix(c) + f"S({list(m)})".replace(" ", "") for m, c in v.terms.items())


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


_ELEM_TERM = re.compile(
    r"""^(?:(?P<coef>q\^-?\d+|\((?P<poly>[^()]*)\))\s*\*\s*)?
         (?:C\(\[(?P<n>[-\d,\s]*)\],\s*\[(?P<t>[-\d,\s]*)\]\)|S\(\[(?P<m>[-\d,\s]*)\]\))$""",
    re.VERBOSE,
)


def _ints(s: str) -> tuple[int, ...]:
    s = s.strip()
    return tuple(int(x) for x in s.split(",")) if s else ()


def _parse_terms(text: str, ctx: RingCtx, want: str) -> list[tuple[Any, Coeff]]:
    text = text.strip()
    if text == "0":
        return []
    out = []
    for part in _split_top(text):
        m = _ELEM_TERM.match(part)
        if m is None:
            raise FormatError(f"cannot parse element term {part!r}")
        if m.group("poly") is not None:
            coeff = ctx.parse_coeff(m.group("poly"))
        elif m.group("coef") is not None:
            coeff = ctx.parse_coeff(m.group("coef"))
        else:
            coeff = ctx.one()
        if want == "C":
            if m.group("n") is None:
                raise FormatError(f"expected a C(n,t) term, got {part!r}")
            out.append((DTCoord(_ints(m.group("n")), _ints(m.group("t"))), coeff))
        else:
            if m.group("m") is None:
                raise FormatError(f"expected an S(m) term, got {part!r}")
            out.append((_ints(m.group("m")), coeff))
    return out


def _sum_into(pairs, ctx):
    terms: dict = {}
    for k, c in pairs:
        terms[k] = terms[k] + c if k in terms else c
    return terms


def parse_surface_elem(text: str, tri: Triangulation, ctx: RingCtx | None = None) -> GradedSurfaceElem:
    ctx = ctx or RingCtx.generic()
    return GradedSurfaceElem(tri, ctx, _sum_into(_parse_terms(text, ctx, "C"), ctx))


def parse_handlebody_elem(text: str, tri: Triangulation, ctx: RingCtx | None = None) -> GradedHandlebodyElem:
    ctx = ctx or RingCtx.generic()
    return GradedHandlebodyElem(tri, ctx, _sum_into(_parse_terms(text, ctx, "S"), ctx))


# ---------------------------------------------------------------------------
# coordinate strings


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return _ints(text)
    except ValueError:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from None


def parse_dt(text: str) -> DTCoord:
    """``"n1,n2;t1,t2"`` or ``"n1,n2,t1,t2"`` (first half n, second half t)."""
    if ";" in text:
        n, t = text.split(";", 1)
        return DTCoord(parse_vector(n), parse_vector(t))
    v = parse_vector(text)
    if len(v) % 2:
        raise FormatError(f"DT coordinate {text!r} needs an even number of entries or an explicit ';'")
    h = len(v) // 2
    return DTCoord(v[:h], v[h:])


# ---------------------------------------------------------------------------
# JSON files


def load_triangulation(source: str | Path) -> Triangulation:
    """A preset name (``torus``, ``genus2``, ``genus2-pants``) or a JSON file path."""
    if str(source) in PRESETS:
        return preset(str(source))
    path = Path(source)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise FormatError(f"no such triangulation file or preset: {source}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON ({exc})") from None
    return Triangulation.from_json(data)


def ring_to_json(ctx: RingCtx) -> dict:
    return {"mode": "generic"} if ctx.is_generic else {"mode": "root", "N": ctx.order}


def ring_from_json(data: Mapping | None) -> RingCtx:
    if not data or data.get("mode", "generic") == "generic":
        return RingCtx.generic()
    if data["mode"] == "root":
        return RingCtx.root(int(data["N"]))
    raise FormatError(f"unknown ring mode {data['mode']!r}")


def element_to_json(x: GradedSurfaceElem | GradedHandlebodyElem) -> dict:
    terms = []
    for k, c in x.terms.items():
        if isinstance(x, GradedSurfaceElem):
            terms.append({"coeff": str(c), "n": list(k.n), "t": list(k.t)})
        else:
            terms.append({"coeff": str(c), "n": list(k)})
    return {"ring": ring_to_json(x.ctx), "terms": terms}


def element_from_json(data: Mapping, tri: Triangulation,
                      ctx: RingCtx | None = None) -> GradedSurfaceElem | GradedHandlebodyElem:
    """Surface element if every term has ``t``, handlebody element if none do.

    ``ctx`` overrides the ring recorded in the file.
    """
    ctx = ctx or ring_from_json(data.get("ring"))
    raw = data.get("terms")
    if raw is None:
        raise FormatError("element JSON needs a 'terms' list")
    has_t = {("t" in term) for term in raw}
    if len(has_t) > 1:
        raise FormatError("element mixes surface terms (with t) and handlebody terms (without t)")
    pairs = []
    for term in raw:
        try:
            coeff = ctx.parse_coeff(str(term["coeff"]))
            n = tuple(int(v) for v in term["n"])
        except KeyError as exc:
            raise FormatError(f"element term missing {exc.args[0]!r}") from None
        key = DTCoord(n, tuple(int(v) for v in term["t"])) if "t" in term else n
        pairs.append((key, coeff))
    terms = _sum_into(pairs, ctx)
    if has_t == {False}:
        return GradedHandlebodyElem(tri, ctx, terms)
    return GradedSurfaceElem(tri, ctx, terms)


def load_element(path: str | Path, tri: Triangulation, ctx: RingCtx | None = None):
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise FormatError(f"no such element file: {path}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    return element_from_json(data, tri, ctx)


# ---------------------------------------------------------------------------
# machine records


_PLAIN = re.compile(r'^[^\s"=]+$')


def format_record(fields: Mapping[str, Any]) -> str:
    out = []
    for key, val in fields.items():
        if isinstance(val, bool):
            val = "true" if val else "false"
        elif isinstance(val, (list, tuple)):
            val = json.dumps(list(val), separators=(",", ":"))
        else:
            val = str(val)
        out.append(f"{key}={val}" if _PLAIN.match(val) else f"{key}={json.dumps(val)}")
    return " ".join(out)


def parse_record(line: str) -> dict[str, str]:
    """Inverse of ``format_record`` (values come back as strings)."""
    out: dict[str, str] = {}
    pos, s = 0, line.strip()
    while pos < len(s):
        eq = s.index("=", pos)
        key = s[pos:eq]
        pos = eq + 1
        if s[pos] == '"':
            val, end = json.JSONDecoder().raw_decode(s, pos)
            pos = end
        else:
            end = s.find(" ", pos)
            end = len(s) if end < 0 else end
            val, pos = s[pos:end], end
        out[key] = val
        while pos < len(s) and s[pos] == " ":
            pos += 1
    return out

