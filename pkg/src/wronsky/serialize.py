"""JSON encodings.  Rationals are always strings, never floats."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cells import CellIndex, Partition
from .errors import DimensionError, FormatError
from .exact import Matrix, MultiPoly, RatFn, UniPoly, as_rat


def rat_to_str(value: Any) -> str:
    q = as_rat(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rat_from_json(value: Any) -> Fraction:
    if isinstance(value, float):
        raise FormatError(f"floats are not accepted: {value!r}")
    try:
        return as_rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational: {value!r}") from exc


def poly_to_json(f: UniPoly, factorial: bool = False) -> dict:
    out = {"monomial": [rat_to_str(c) for c in f.coeffs]}
    if factorial:
        out["factorial"] = [rat_to_str(a) for a in f.factorial_coeffs()]
    return out


def poly_from_json(obj: Any) -> UniPoly:
    if not isinstance(obj, dict) or not ({"monomial", "factorial"} & obj.keys()):
        raise FormatError("polynomial must be an object with 'monomial' or 'factorial'")
    if "monomial" in obj:
        f = UniPoly(rat_from_json(c) for c in obj["monomial"])
        if "factorial" in obj and UniPoly.from_factorial(rat_from_json(a) for a in obj["factorial"]) != f:
            raise FormatError("monomial and factorial views disagree")
        return f
    return UniPoly.from_factorial(rat_from_json(a) for a in obj["factorial"])


def multipoly_to_json(p: MultiPoly) -> dict:
    """``{"vars": K, "terms": [...]}`` in ascending graded-lex order."""
    return {
        "vars": p.nvars,
        "terms": [{"exp": list(e), "coef": rat_to_str(c)} for e, c in p.sorted_terms()],
    }


def multipoly_from_json(obj: Any) -> MultiPoly:
    try:
        K = int(obj["vars"])
        terms = {tuple(int(x) for x in t["exp"]): rat_from_json(t["coef"]) for t in obj["terms"]}
        return MultiPoly(K, terms)
    except (KeyError, TypeError, DimensionError) as exc:
        raise FormatError(f"bad multivariate polynomial: {exc}") from exc


def cell_to_json(I: CellIndex) -> str:
    return I.bits


def cell_from_json(value: Any, n: int | None = None) -> CellIndex:
    try:
        return CellIndex.parse(value, n)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from exc


def matrix_to_json(M: Matrix) -> dict:
    return {"n": M.rows, "m": M.cols, "rows": [[rat_to_str(e) for e in r] for r in M.to_rows()]}


def matrix_from_json(obj: Any) -> Matrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise FormatError("matrix file must be an object with 'rows'")
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError("'rows' must be a nonempty array of arrays")
    n = obj.get("n", len(rows))
    m = obj.get("m", len(rows[0]))
    if n != len(rows):
        raise FormatError(f"n={n} but {len(rows)} rows given")
    if m < 1 or any(len(r) != m for r in rows):
        raise FormatError(f"every row must have m={m} entries")
    return Matrix.from_rows([[rat_from_json(e) for e in r] for r in rows])


def to_json_value(obj: Any, factorial: bool = False) -> Any:
    """Recursively convert library values into JSON-ready data."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, Fraction)):
        return rat_to_str(obj)
    if isinstance(obj, UniPoly):
        return poly_to_json(obj, factorial)
    if isinstance(obj, MultiPoly):
        return multipoly_to_json(obj)
    if isinstance(obj, RatFn):
        return {"num": poly_to_json(obj.num), "den": poly_to_json(obj.den)}
    if isinstance(obj, CellIndex):
        return cell_to_json(obj)
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_json_value(v, factorial) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json_value(v, factorial) for v in obj]
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


def dumps(obj: Any, pretty: bool = False) -> str:
    return json.dumps(obj, indent=2 if pretty else None, ensure_ascii=False)
