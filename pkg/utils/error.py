import logging

from utils.config import STAGE


class messageError(Exception):
    def __init__(self, message):
        if STAGE != 'production':
            logging.debug(message)
        super().__init__(message)


class InvalidArgument(messageError):
    pass


class CellError(messageError):
    """Error tied to one cell of a tableau. ``cell`` is 1-based (row, column)."""

    def __init__(self, message, cell):
        self.cell = cell
        super().__init__(f"{message} at {cell}")


class RowNotWeaklyIncreasing(CellError):
    pass


class ColumnNotStrictlyIncreasing(CellError):
    pass


class BadShape(CellError):
    pass


class ShapeMismatch(messageError):
    pass


class QNotStandard(messageError):
    pass


class NotAnInnerCorner(messageError):
    pass


class BoundExceeded(messageError):
    pass


class BudgetExceeded(messageError):
    pass


class MaxEntryExceedsM(messageError):
    pass


class UnsupportedFamily(messageError):
    pass


class ValidationFailed(messageError):
    pass


class NotAPoset(messageError):
    pass
