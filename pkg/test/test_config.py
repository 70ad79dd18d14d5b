"""
Pruebas para el archivo config.py
"""
from utils.config import (
    CROSS_CHECK_BOUND,
    DEFAULT_BUDGET,
    KNUTH_CLASS_BOUND,
    LOG_FILE_DELETION_DAYS,
    POSET_BOUND,
    default_workers,
    get_budget,
)
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


def test_log_file_deletion_days_is_30():
    """Verifica que la variable LOG_FILE_DELETION_DAYS está configurada a 30 días"""
    assert LOG_FILE_DELETION_DAYS == 30


def test_default_budget_is_ten_to_the_eighth():
    """Verifica que el presupuesto por defecto es 10^8 palabras"""
    assert DEFAULT_BUDGET == 10 ** 8


def test_get_budget_default(monkeypatch):
    """Verifica que sin PLACTIC_BUDGET se usa el presupuesto por defecto"""
    monkeypatch.delenv("PLACTIC_BUDGET", raising=False)
    assert get_budget() == DEFAULT_BUDGET


def test_get_budget_reads_environment_on_each_call(monkeypatch):
    """Verifica que PLACTIC_BUDGET se lee en cada llamada"""
    monkeypatch.setenv("PLACTIC_BUDGET", "1234")
    assert get_budget() == 1234
    monkeypatch.setenv("PLACTIC_BUDGET", "99")
    assert get_budget() == 99


def test_default_workers_from_environment(monkeypatch):
    """Verifica que PLACTIC_WORKERS fija el número de procesos"""
    monkeypatch.setenv("PLACTIC_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("PLACTIC_WORKERS", "0")
    assert default_workers() == 1


def test_default_workers_uses_physical_cores(monkeypatch):
    """Verifica que sin PLACTIC_WORKERS se usan los núcleos físicos (al menos 1)"""
    monkeypatch.delenv("PLACTIC_WORKERS", raising=False)
    assert default_workers() >= 1


def test_enumeration_bounds_are_positive():
    """Verifica que los límites de enumeración son positivos"""
    assert KNUTH_CLASS_BOUND > 0
    assert POSET_BOUND > 0
    assert CROSS_CHECK_BOUND > 0
