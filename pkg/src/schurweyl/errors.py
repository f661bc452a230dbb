class SchurWeylError(ValueError):
    pass


class InvalidSymbolError(SchurWeylError):
    pass


class InvalidCornerError(SchurWeylError):
    pass


class TableauKindError(SchurWeylError):
    pass


class ShapeError(SchurWeylError):
    pass


class ContainmentError(SchurWeylError):
    pass


class ScheduleError(SchurWeylError):
    pass


class ParseError(SchurWeylError):
    pass


class EnumerationLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its size guard."""
