"""Text rendering of spinor vectors, e.g. ``x1 y + (q^-2/(q^2+1+q^-2)) x2 y^3``."""

from __future__ import annotations

from qhowe.qarith import RatQ
from qhowe.spinor.vector import SpinorVector


def format_key(a: int, b: int, c: int) -> str:
    parts = []
    for name, e in (("x1", a), ("x2", b), ("y", c)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def _coefficient_text(c: RatQ) -> str:
    text = str(c)
    body = text[1:] if text.startswith("-") else text
    if " " in body or "/" in body:
        return f"({text})"
    return text


def format_spinor(v: SpinorVector) -> str:
    """Terms in descending ``(a, b, c)`` order joined by `` + `` / `` - ``."""
    if v.is_zero():
        return "0"
    pieces = []
    for i, ((a, b, c), coeff) in enumerate(v):
        ctext = _coefficient_text(coeff)
        neg = ctext.startswith("-")
        if neg:
            ctext = ctext[1:]
        mono = format_key(a, b, c)
        if mono == "1":
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext} {mono}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)
