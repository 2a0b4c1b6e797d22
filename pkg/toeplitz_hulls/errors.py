"""Error types. All derive from ValueError so callers can catch them uniformly."""


class FieldConstructionError(ValueError):
    pass


class FieldSizeError(FieldConstructionError):
    def __init__(self, order, limit):
        super().__init__(f"Field of order {order} exceeds the size limit {limit}")
        self.order = order
        self.limit = limit


class FieldMismatchError(ValueError):
    pass


class QuadraticStructureError(ValueError):
    pass


class ShapeError(ValueError):
    pass


class DegenerateSpectrumError(ValueError):
    pass


class EnumerationBudgetExceeded(ValueError):
    def __init__(self, required, budget):
        super().__init__(f"Enumeration of {required} codewords exceeds budget {budget}")
        self.required = required
        self.budget = budget


class SearchSpaceTooLarge(ValueError):
    def __init__(self, size, limit):
        super().__init__(f"Search space of {size} candidates exceeds limit {limit}")
        self.size = size
        self.limit = limit


class ParseError(ValueError):
    def __init__(self, message, position=0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
