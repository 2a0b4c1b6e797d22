from .field import (
    FieldDescriptor,
    FieldEmbedding,
    UnityContext,
    add,
    conjugate,
    descriptor_of,
    embed,
    field_embedding,
    field_from_order,
    inverse,
    make_field,
    multiply,
    power,
    require_field,
    sqrt,
    subtract,
    unity_context,
)
from .field_utils import format_element, format_elements, format_matrix, parse_element
