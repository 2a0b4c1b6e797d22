import re

import galois

from ..errors import FieldMismatchError, ParseError, ShapeError
from ..fields import conjugate, format_element, parse_element

_TERM_PATTERN = re.compile(r"^(?:(?P<coef>[^*x]+?)\*?)?(?P<x>x(?:\^(?P<exp>\d+))?)?$")


def parse_polynomial(text, field, offset=0):
    """Parse terms `[coef*]x[^e]` joined by `+` into a galois.Poly over `field`.

    Integer coefficients may also be written directly in front of x (`2x^5`).
    """
    if not text.strip():
        raise ParseError("Empty polynomial", offset)
    coefficients = {}
    position = offset
    for raw_term in text.split("+"):
        term = raw_term.strip()
        match = _TERM_PATTERN.match(term.replace(" ", "")) if term else None
        if match is None or not (match.group("coef") or match.group("x")):
            raise ParseError(f"Invalid polynomial term '{raw_term.strip()}'", position)
        if match.group("x"):
            exponent = int(match.group("exp")) if match.group("exp") else 1
        else:
            exponent = 0
        coef = field.one
        if match.group("coef"):
            coef = parse_element(match.group("coef"), field, position)
        coefficients[exponent] = coefficients.get(exponent, field.zero) + coef
        position += len(raw_term) + 1

    coeffs = field.GF.Zeros(max(coefficients) + 1)
    for exponent, coef in coefficients.items():
        coeffs[exponent] = coef
    return galois.Poly(coeffs, order="asc")


def format_polynomial(f):
    terms = []
    coeffs = f.nonzero_coeffs
    for index, degree in enumerate(f.nonzero_degrees):
        degree, coef = int(degree), coeffs[index]
        if degree == 0:
            terms.append(format_element(coef))
            continue
        x_part = "x" if degree == 1 else f"x^{degree}"
        terms.append(x_part if coef == 1 else f"{format_element(coef)}*{x_part}")
    return "+".join(terms) if terms else "0"


def conjugate_poly(f):
    """Polynomial with every coefficient conjugated."""
    return galois.Poly(conjugate(f.coeffs))


def poly_eval_matrix(f, A):
    """Horner evaluation of f at the square matrix A."""
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"Expected a square matrix, got shape {A.shape}")
    GF = type(A)
    if f.field is not GF:
        raise FieldMismatchError("Polynomial and matrix live in different fields")
    identity = GF.Identity(A.shape[0])
    result = GF.Zeros(A.shape)
    coeffs = f.coeffs
    for index in range(coeffs.size):
        result = result @ A + coeffs[index] * identity
    return result


def dickson_eval(n, x, alpha):
    """Second-kind Dickson polynomial E_n(x, alpha) via E_n = x E_{n-1} - alpha E_{n-2}."""
    if type(x) is not type(alpha):
        raise FieldMismatchError("Dickson arguments live in different fields")
    previous, current = type(x)(1), x
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, x * current - alpha * previous
    return current
