import re

from ..errors import ParseError
from .field import descriptor_of

_GENERATOR_PATTERN = re.compile(r"^w(?:\^(-?\d+))?$")
_INTEGER_PATTERN = re.compile(r"^-?\d+$")


def parse_element(text, field, offset=0):
    """Parse `0`, `1`, `w`, `w^e` or an integer literal into an element of `field`.

    Args:
        text: The element text.
        field: Target FieldDescriptor.
        offset: Position of `text` inside a larger input, used in error reports.
    """
    token = text.strip()
    match = _GENERATOR_PATTERN.match(token)
    if match:
        exponent = int(match.group(1)) if match.group(1) else 1
        return field.generator**exponent
    if _INTEGER_PATTERN.match(token):
        return field.element(int(token))
    raise ParseError(f"Invalid field element '{text}'", offset)


def format_element(x):
    descriptor = descriptor_of(x)
    value = int(x)
    if value < descriptor.p:
        return str(value)
    exponent = descriptor.log(x)
    return "w" if exponent == 1 else f"w^{exponent}"


def format_elements(values):
    return "{" + ", ".join(format_element(v) for v in values) + "}"


def format_matrix(matrix):
    rows = []
    for i in range(matrix.shape[0]):
        rows.append(" ".join(format_element(matrix[i, j]) for j in range(matrix.shape[1])))
    return "\n".join(rows)
