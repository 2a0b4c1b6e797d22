import re

from ..constructions import ConstructionSpec
from ..errors import FieldConstructionError, ParseError
from ..fields import field_from_order, make_field, parse_element
from ..linalg import TridiagonalSpec, parse_polynomial

KEYS = ("q", "modulus", "kind", "n", "a", "b", "c", "inner", "f", "k")
_TOKEN_PATTERN = re.compile(r"\S+")


def tokenize(text):
    """Split a construction line into {key: (value, value_position)}."""
    tokens = {}
    for match in _TOKEN_PATTERN.finditer(text):
        token = match.group(0)
        if "=" not in token:
            raise ParseError(f"Expected key=value, got '{token}'", match.start())
        key, value = token.split("=", 1)
        if key not in KEYS:
            raise ParseError(f"Unknown key '{key}'", match.start())
        if key in tokens:
            raise ParseError(f"Duplicate key '{key}'", match.start())
        if not value:
            raise ParseError(f"Empty value for '{key}'", match.start())
        tokens[key] = (value, match.start() + len(key) + 1)
    return tokens


def _parse_int(tokens, key, minimum=0):
    value, position = tokens[key]
    if not value.isdigit() or int(value) < minimum:
        raise ParseError(f"'{key}' must be an integer >= {minimum}, got '{value}'", position)
    return int(value)


def _require(tokens, key):
    if key not in tokens:
        raise ParseError(f"Missing required key '{key}'", 0)


def parse_field(tokens):
    _require(tokens, "q")
    q = _parse_int(tokens, "q", minimum=2)
    modulus = None
    try:
        if "modulus" in tokens:
            text, position = tokens["modulus"]
            p = field_from_order(q).p
            modulus = parse_polynomial(text, make_field(p), position)
        return field_from_order(q, modulus=modulus)
    except FieldConstructionError as exc:
        raise ParseError(str(exc), tokens["q"][1]) from exc


def parse_tridiagonal(tokens, field):
    for key in ("n", "a", "b"):
        _require(tokens, key)
    kind = tokens.get("kind", ("T", 0))[0]
    if kind not in ("T", "T'"):
        raise ParseError(f"Unsupported matrix kind: {kind}", tokens["kind"][1])
    inner = tokens.get("inner", ("E", 0))[0]
    if inner not in ("E", "H"):
        raise ParseError(f"Unsupported inner product: {inner}", tokens["inner"][1])
    n = _parse_int(tokens, "n", minimum=1)
    a = parse_element(tokens["a"][0], field, tokens["a"][1])
    b = parse_element(tokens["b"][0], field, tokens["b"][1])
    if "c" in tokens:
        c = parse_element(tokens["c"][0], field, tokens["c"][1])
    elif inner == "H":
        if field.quadratic_base is None:
            raise ParseError(f"inner=H needs a field of square order, got q={field.order}", tokens["inner"][1])
        c = b**field.quadratic_base
    else:
        c = b
    return TridiagonalSpec(field=field, kind=kind, n=n, a=a, b=b, c=c), inner


def parse_construction(text, require_payload=True):
    """Parse a construction line into a ConstructionSpec.

    With `require_payload=False` a line without `f` or `k` is accepted and yields a spec
    with neither (used by `eig`, which only needs the matrix).
    """
    tokens = tokenize(text)
    field = parse_field(tokens)
    tridiag, inner = parse_tridiagonal(tokens, field)
    if "f" in tokens and "k" in tokens:
        raise ParseError("Give either f or k, not both", tokens["k"][1])
    if "k" in tokens:
        return ConstructionSpec(tridiag=tridiag, inner=inner, exponent=_parse_int(tokens, "k", minimum=1))
    if "f" in tokens:
        text, position = tokens["f"]
        polynomials = []
        for part in text.split(";"):
            polynomials.append(parse_polynomial(part, field, position))
            position += len(part) + 1
        return ConstructionSpec(tridiag=tridiag, inner=inner, polynomials=tuple(polynomials))
    if require_payload:
        raise ParseError("Missing payload: give f=<poly>[;<poly>...] or k=<int>", len(text))
    return ConstructionSpec(tridiag=tridiag, inner=inner)
