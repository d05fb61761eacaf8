"""Text, LaTeX and JSON renderings of exact values and command output."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .exact_arith import GammaPiExpr

# JSON layout of one command's output
OUTPUT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["command", "inputs", "exact", "numeric", "report"],
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "exact": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["gamma_exp", "pi_exp_times2", "coeff"],
                "properties": {
                    "gamma_exp": {"type": "integer"},
                    "pi_exp_times2": {"type": "integer"},
                    "coeff": {
                        "type": "object",
                        "required": ["num", "den"],
                        "properties": {
                            "num": {"type": "string", "pattern": "^-?[0-9]+$"},
                            "den": {"type": "string", "pattern": "^[1-9][0-9]*$"},
                        },
                    },
                },
            },
        },
        "exact_latex": {"type": ["string", "null"]},
        "numeric": {"type": ["string", "null"]},
        "report": {
            "type": ["object", "null"],
            "required": ["oracle", "abs_error", "digits", "passed"],
            "properties": {
                "oracle": {"type": ["string", "null"]},
                "abs_error": {"type": ["string", "null"]},
                "digits": {"type": "integer"},
                "passed": {"type": "boolean"},
            },
        },
    },
}


def _power_of_two(n: int) -> Optional[int]:
    # small denominators read better as plain integers
    if n >= 64 and n & (n - 1) == 0:
        return n.bit_length() - 1
    return None


def _sup(base: str, exp) -> str:
    if exp == 1:
        return base
    text = str(exp)
    return f"{base}^{text}" if len(text) == 1 else f"{base}^{{{text}}}"


def _latex_int(n: int) -> str:
    k = _power_of_two(n)
    return _sup("2", k) if k is not None else str(n)


def latex_monomial(coeff: Fraction, g: int, h: Fraction) -> str:
    """Unsigned LaTeX for ``|coeff| * Gamma**g * pi**h``."""
    num_parts: List[str] = []
    den_parts: List[str] = []
    a, b = abs(coeff.numerator), coeff.denominator
    if g > 0:
        num_parts.append(_sup(r"\Gamma", g))
    elif g < 0:
        den_parts.append(_sup(r"\Gamma", -g))
    if h > 0:
        num_parts.append(_sup(r"\pi", h))
    elif h < 0:
        den_parts.append(_sup(r"\pi", -h))
    if a != 1 or not num_parts:
        num_parts.insert(0, str(a))
    if b != 1:
        den_parts.insert(0, _latex_int(b))
    num = "".join(num_parts)
    if not den_parts:
        return num
    return rf"\frac{{{num}}}{{{''.join(den_parts)}}}"


def to_latex(e: GammaPiExpr) -> str:
    """LaTeX with terms by descending Gamma exponent, then descending pi exponent."""
    if e.is_zero():
        return "0"
    out = []
    for g, h, c in sorted(e.monomials(), key=lambda t: (-t[0], -t[1])):
        body = latex_monomial(c, g, h)
        if c < 0:
            out.append("-" + body)
        else:
            out.append(("+" if out else "") + body)
    return "".join(out)


def expr_to_json(e: Optional[GammaPiExpr]) -> List[dict]:
    if e is None:
        return []
    return [
        {"gamma_exp": g, "pi_exp_times2": h2, "coeff": {"num": str(c.numerator), "den": str(c.denominator)}}
        for (g, h2), c in e.items()
    ]


def expr_from_json(items: List[dict]) -> GammaPiExpr:
    return GammaPiExpr({
        (int(t["gamma_exp"]), int(t["pi_exp_times2"])): Fraction(int(t["coeff"]["num"]), int(t["coeff"]["den"]))
        for t in items
    })


def fraction_text(q: Optional[Fraction]) -> str:
    return "-" if q is None else str(q)


def fraction_json(q: Optional[Fraction]) -> Optional[dict]:
    return None if q is None else {"num": str(q.numerator), "den": str(q.denominator)}


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
