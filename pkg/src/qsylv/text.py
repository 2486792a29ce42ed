"""Quaternion literals and JSON encoding.

Two textual forms are accepted:

* term form, e.g. ``1-2i+0.5k``, ``-k``, ``3e-2 + j``
* positional form ``(w, x, y, z)``

Whitespace between tokens is ignored.  Each unit (and the scalar term) may
appear at most once.
"""

from __future__ import annotations

import math
import re as _re

from qsylv.quat import Quaternion, QuaternionError

__all__ = [
    "ParseError",
    "parse_quaternion",
    "format_quaternion",
    "quaternion_to_json",
    "quaternion_from_json",
]

_NUMBER = _re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_UNITS = {"i": "x", "j": "y", "k": "z"}


class ParseError(QuaternionError, ValueError):
    def __init__(self, text: str, pos: int, expected: str, found: str | None = None):
        self.text = text
        self.pos = pos
        self.expected = expected
        if found is None:
            found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def number(self) -> float | None:
        self.skip_ws()
        m = _NUMBER.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return float(m.group())

    def signed_number(self, expected: str) -> float:
        sign = 1.0
        if self.peek() in "+-":
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
        v = self.number()
        if v is None:
            raise ParseError(self.text, self.pos, expected)
        return sign * v


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal; raises :class:`ParseError` with a position."""
    s = _Scanner(text)
    if s.at_end():
        raise ParseError(text, s.pos, "a quaternion literal")
    if s.peek() == "(":
        return _parse_positional(s)
    return _parse_terms(s)


def _parse_positional(s: _Scanner) -> Quaternion:
    s.pos += 1
    comps = []
    for idx in range(4):
        comps.append(s.signed_number("a number"))
        want = "," if idx < 3 else ")"
        if s.peek() != want:
            raise ParseError(s.text, s.pos, f"'{want}'")
        s.pos += 1
    if not s.at_end():
        raise ParseError(s.text, s.pos, "end of input")
    return _build(s, dict(zip(("w", "x", "y", "z"), comps)))


def _parse_terms(s: _Scanner) -> Quaternion:
    comps: dict[str, float] = {}
    first = True
    while not s.at_end():
        start = s.pos
        sign = 1.0
        c = s.peek()
        if c in "+-":
            sign = -1.0 if c == "-" else 1.0
            s.pos += 1
        elif not first:
            raise ParseError(s.text, s.pos, "'+' or '-'")
        coef = s.number()
        unit = s.peek()
        if unit in _UNITS:
            s.pos += 1
            key = _UNITS[unit]
        elif coef is None:
            raise ParseError(s.text, s.pos, "a number or one of i, j, k")
        else:
            key = "w"
        if key in comps:
            name = "real part" if key == "w" else f"unit {unit}"
            raise ParseError(s.text, start, "a term for an unused component", f"duplicate {name}")
        comps[key] = sign * (1.0 if coef is None else coef)
        first = False
    return _build(s, comps)


def _build(s: _Scanner, comps: dict[str, float]) -> Quaternion:
    for v in comps.values():
        if not math.isfinite(v):
            raise ParseError(s.text, 0, "finite components", "a value that overflows")
    return Quaternion(**comps)


def _fmt(v: float, digits: int | None, unit: str) -> str:
    if digits is None:
        return repr(v)
    text = format(v + 0.0, f".{digits}g")
    if unit and text in ("1", "-1"):
        text = text[:-1]
    return text


def format_quaternion(q: Quaternion, digits: int | None = None) -> str:
    """Render ``q`` in term form.

    With ``digits=None`` the shortest round-trip representation of every
    component is used, so ``parse_quaternion(format_quaternion(q)) == q``
    bit for bit.  Components equal to +0.0 are omitted (except a lone
    scalar).  With ``digits`` set, the output is for people: signed zeros
    are dropped and unit coefficients are elided (``i`` rather than ``1i``).
    """
    parts = []
    for comp, unit in ((q.w, ""), (q.x, "i"), (q.y, "j"), (q.z, "k")):
        if digits is not None:
            comp = comp + 0.0
        positive_zero = comp == 0.0 and math.copysign(1.0, comp) > 0
        if unit and positive_zero:
            continue
        if not unit and positive_zero and (q.x or q.y or q.z):
            continue
        text = _fmt(comp, digits, unit)
        if parts and not text.startswith("-"):
            text = "+" + text
        parts.append(text + unit)
    return "".join(parts)


def quaternion_to_json(q: Quaternion) -> dict:
    return {"w": q.w, "x": q.x, "y": q.y, "z": q.z}


def quaternion_from_json(obj) -> Quaternion:
    """Accept either a ``{"w","x","y","z"}`` object or a literal string."""
    if isinstance(obj, str):
        return parse_quaternion(obj)
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return Quaternion(float(obj))
    if isinstance(obj, dict):
        extra = set(obj) - {"w", "x", "y", "z"}
        if extra:
            raise ValueError(f"unexpected quaternion keys: {sorted(extra)}")
        return Quaternion(*(float(obj.get(k, 0.0)) for k in ("w", "x", "y", "z")))
    raise ValueError(f"cannot read a quaternion from {obj!r}")
