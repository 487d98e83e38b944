"""Shared JSON schema: configurations, Gale data, period matrices, exact numbers.

Indices on the wire are 1-based. Integers whose magnitude reaches 2^53
travel as decimal strings; rationals as {"num", "den"}; Gaussian
rationals as {"re", "im"}.
"""

import json
from fractions import Fraction

from .config import make_configuration
from .errors import InvalidPeriod, MalformedInput
from .gale import gale_from_columns, period_matrix, standard_period
from .intlin import GaussRat

SAFE_INT = 2 ** 53


def parse_int(x, what="value"):
    if isinstance(x, bool):
        raise MalformedInput(f"{what} must be an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise MalformedInput(f"{what} must be an integer", got=str(x))


def parse_rational(x):
    if isinstance(x, dict) and set(x) == {"num", "den"}:
        den = parse_int(x["den"], "den")
        if den == 0:
            raise MalformedInput("zero denominator")
        return Fraction(parse_int(x["num"], "num"), den)
    if isinstance(x, str) and "/" in x:
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise MalformedInput("bad rational", got=x) from None
    return Fraction(parse_int(x, "rational"))


def parse_gauss(x):
    if isinstance(x, dict) and ("re" in x or "im" in x):
        return GaussRat(parse_rational(x.get("re", 0)), parse_rational(x.get("im", 0)))
    return GaussRat(parse_rational(x))


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput("input is not valid JSON", reason=str(exc)) from None


def parse_configuration(doc):
    if not isinstance(doc, dict):
        raise MalformedInput("configuration must be a JSON object")
    for key in ("dim", "vectors"):
        if key not in doc:
            raise MalformedInput(f"missing key {key!r}")
    dim = parse_int(doc["dim"], "dim")
    vectors = doc["vectors"]
    if not isinstance(vectors, list):
        raise MalformedInput("vectors must be a list")
    if not vectors:
        raise MalformedInput("empty vector list")
    vecs = []
    for v in vectors:
        if not isinstance(v, list):
            raise MalformedInput("each vector must be a list")
        vecs.append([parse_int(x, "vector entry") for x in v])
    ghosts = parse_int(doc.get("ghosts", 0), "ghosts")
    raw = doc.get("maximal_simplices", [[]] if dim == 0 else None)
    if not isinstance(raw, list):
        raise MalformedInput("maximal_simplices must be a list")
    simplices = []
    for s in raw:
        if not isinstance(s, list):
            raise MalformedInput("each simplex must be a list")
        simplices.append([parse_int(i, "simplex index") - 1 for i in s])
    return make_configuration(dim, vecs, ghosts, simplices)


def parse_gale(doc):
    """Accept a bare list of columns or an object with a "gale" key."""
    if isinstance(doc, dict):
        doc = doc.get("gale", doc.get("columns"))
    if not isinstance(doc, list) or not doc or not all(isinstance(c, list) for c in doc):
        raise MalformedInput("Gale datum must be a non-empty list of columns")
    return gale_from_columns([[parse_int(x, "Gale entry") for x in c] for c in doc])


def parse_period(spec, m):
    if spec is None or spec == "std":
        return standard_period(m)
    doc = load_json(spec) if isinstance(spec, str) else spec
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise InvalidPeriod("period matrix must be a list of rows")
    return period_matrix([[parse_gauss(x) for x in r] for r in doc])


def configuration_to_json(cfg, gale=None):
    out = {
        "dim": cfg.dim,
        "ghosts": cfg.ghosts,
        "vectors": [list(v) for v in cfg.vectors],
        "maximal_simplices": [[i + 1 for i in s] for s in cfg.simplices],
    }
    if gale is not None:
        out["gale"] = [list(c) for c in gale.columns]
    return out


def to_wire(obj):
    """Recursively convert exact values to their JSON representation."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        return {"num": to_wire(obj.numerator), "den": to_wire(obj.denominator)}
    if isinstance(obj, GaussRat):
        return {"re": to_wire(obj.re), "im": to_wire(obj.im)}
    if isinstance(obj, dict):
        return {str(k): to_wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_wire(x) for x in obj]
    if hasattr(obj, "to_json"):
        return to_wire(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, pretty=False):
    if pretty:
        return json.dumps(to_wire(obj), sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(to_wire(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
