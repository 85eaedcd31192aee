"""Exact Baker-Campbell-Hausdorff computations.

Coefficients come back as :class:`fractions.Fraction`. Series in two
commuting variables are dicts ``{(i, j): c}`` for ``c x^i y^j``; Lie series
are dicts keyed by Lyndon words; metabelian elements carry the ``X`` and
``Y`` coefficients and a table ``{(k, l): c}`` for ``c [X^k Y^l X Y]``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _core
from ._core import InexactDivision

__all__ = [
    "InexactDivision",
    "bch",
    "bernoulli",
    "deeper",
    "goldberg",
    "h_series",
    "kv_solve",
    "metabelian",
    "run_cli",
    "verify",
    "zassenhaus",
]


def _bi(doc: dict) -> dict[tuple[int, int], Fraction]:
    return {(t["i"], t["j"]): Fraction(t["c"]) for t in doc["terms"]}


def _lie(doc: dict) -> dict[str, Fraction]:
    return {t["word"]: Fraction(t["c"]) for t in doc["terms"]}


def _meta(doc: dict) -> dict:
    return {
        "X": Fraction(doc["X"]),
        "Y": Fraction(doc["Y"]),
        "table": {(t["k"], t["l"]): Fraction(t["c"]) for t in doc["terms"]},
    }


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    return Fraction(_core.bernoulli(n))


def bch(degree: int, method: str = "recursive") -> dict[str, Fraction]:
    """ln(e^X e^Y) through ``degree`` in Lyndon coordinates."""
    return _lie(json.loads(_core.bch(degree, method)))


def h_series(degree: int) -> dict[tuple[int, int], Fraction]:
    return _bi(json.loads(_core.h_series(degree)))


def metabelian(degree: int) -> dict:
    """Metabelian image X + Y + h(x,y)[XY]."""
    return _meta(json.loads(_core.metabelian(degree)))


def goldberg(degree: int) -> dict[tuple[int, int], Fraction]:
    """Coefficients c_rs of X^r Y^s in ln(e^X e^Y), r, s >= 1."""
    return _bi(json.loads(_core.goldberg(degree)))


def zassenhaus(degree: int) -> dict:
    doc = json.loads(_core.zassenhaus(degree))
    return {
        "operator": _bi(doc["operator"]),
        "sum": _meta(doc["sum"]),
        "components": {c["degree"]: _meta(c["element"]) for c in doc["components"]},
    }


def kv_solve(degree: int, a: Fraction | int | str = 0, g: dict[tuple[int, int], Fraction] | None = None) -> dict:
    """F = aX + Y/4 + f(x,y)[XY]; ``g`` must satisfy g(-y,-x) = -g(x,y)."""
    g_doc = ""
    if g:
        trunc = max(i + j for i, j in g)
        terms = [{"i": i, "j": j, "c": f"{Fraction(c).numerator}/{Fraction(c).denominator}"} for (i, j), c in g.items()]
        g_doc = json.dumps({"truncation": trunc, "terms": terms})
    a = Fraction(a)
    doc = json.loads(_core.kv_solve(degree, f"{a.numerator}/{a.denominator}", g_doc))
    return {"F": _meta(doc["F"]), "verified": doc["verified"]}


def deeper(degree: int) -> dict:
    doc = json.loads(_core.deeper(degree))
    return {
        "X": Fraction(doc["X"]),
        "Y": Fraction(doc["Y"]),
        "linear": {(t["m"], t["n"]): Fraction(t["c"]) for t in doc["linear"]},
        "quadratic": {((t["k"], t["l"]), (t["m"], t["n"])): Fraction(t["c"]) for t in doc["quadratic"]},
    }


def verify(suite: str = "all", degree: int = 8) -> list[tuple[str, bool, str]]:
    return _core.verify(suite, degree)


def run_cli(*args: str) -> tuple[int, str, str]:
    """Runs the ``mbch`` command line in-process; returns (code, stdout, stderr)."""
    return _core.run_cli(list(args))
