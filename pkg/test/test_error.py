"""
Pruebas para el archivo error.py
"""
from utils.error import (
    BadShape,
    BudgetExceeded,
    CellError,
    ColumnNotStrictlyIncreasing,
    InvalidArgument,
    NotAPoset,
    RowNotWeaklyIncreasing,
    messageError,
)
import pytest
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


def test_message_error_creation():
    """Verifica que se puede crear una excepción messageError"""
    error = messageError("Test error message")
    assert str(error) == "Test error message"


def test_message_error_is_exception():
    """Verifica que messageError es una Exception"""
    assert issubclass(messageError, Exception)


def test_domain_errors_are_message_errors():
    """Verifica que todos los errores del dominio heredan de messageError"""
    for error in (InvalidArgument, BudgetExceeded, NotAPoset, BadShape):
        assert issubclass(error, messageError)


def test_cell_error_carries_cell():
    """Verifica que los errores de celda guardan la celda y la nombran en el mensaje"""
    error = ColumnNotStrictlyIncreasing("Column does not strictly increase", (2, 1))
    assert error.cell == (2, 1)
    assert "(2, 1)" in str(error)
    assert isinstance(error, CellError)


def test_cell_error_can_be_caught_as_message_error():
    """Verifica que un error de celda se captura como messageError"""
    with pytest.raises(messageError) as exc_info:
        raise RowNotWeaklyIncreasing("Row decreases", (1, 2))
    assert exc_info.value.cell == (1, 2)
