"""Group and element literals: ``Z/4 x Z/2`` and ``(3,1)``."""

from __future__ import annotations

import re

from .groups import Element, FinAbGroup

_WS = re.compile(r"\s*")
_INT = re.compile(r"[+-]?\d+")


class LiteralError(ValueError):
    pass


def _fail(text: str, pos: int, msg: str):
    token = text[pos:].split()[0] if text[pos:].strip() else "<end of input>"
    raise LiteralError(f"{msg} at position {pos} (near {token!r}) in {text!r}")


def parse_group(text: str) -> FinAbGroup:
    """Parse ``Z/m1 x Z/m2 x ...``; whitespace and the case of ``Z``/``x`` are free.

    The bare literal ``0`` is the trivial group.
    """
    if not text or not text.strip():
        raise LiteralError("empty group literal")
    if text.strip() == "0":
        return FinAbGroup(())
    pos = 0
    moduli = []
    while True:
        pos = _WS.match(text, pos).end()
        if pos >= len(text) or text[pos] not in "zZ":
            _fail(text, pos, "expected 'Z'")
        pos = _WS.match(text, pos + 1).end()
        if pos >= len(text) or text[pos] != "/":
            _fail(text, pos, "expected '/'")
        pos = _WS.match(text, pos + 1).end()
        m = re.compile(r"\d+").match(text, pos)
        if not m:
            _fail(text, pos, "expected a decimal modulus")
        modulus = int(m.group())
        if modulus < 2:
            _fail(text, pos, f"modulus must be >= 2, got {modulus}")
        moduli.append(modulus)
        pos = _WS.match(text, m.end()).end()
        if pos == len(text):
            return FinAbGroup(tuple(moduli))
        if text[pos] not in "xX":
            _fail(text, pos, "expected 'x' between factors")
        pos += 1


def parse_element(text: str, G: FinAbGroup) -> Element:
    """Parse ``(a1,...,ak)`` (or a bare integer when k = 1), reducing mod each modulus."""
    s = text.strip()
    if not s:
        raise LiteralError("empty element literal")
    if s.startswith("("):
        if not s.endswith(")"):
            _fail(text, len(text.rstrip()), "expected ')'")
        inner = s[1:-1]
        parts = inner.split(",") if inner.strip() else []
    else:
        parts = [s]
    coords = []
    offset = text.index(s) + (1 if s.startswith("(") else 0)
    for part in parts:
        if not _INT.fullmatch(part.strip()):
            _fail(text, offset + len(part) - len(part.lstrip()), "expected an integer coordinate")
        coords.append(int(part))
        offset += len(part) + 1
    if len(coords) != G.rank:
        raise LiteralError(f"element {text!r} has {len(coords)} coordinates but {G} has rank {G.rank}")
    return G.element(coords)
