"""
Pruebas para el archivo file_manager.py
"""
from utils.file_manager import clean_filename, create_report_directory, write_report
import json
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


def test_clean_filename_removes_invalid_characters():
    """Verifica que se eliminan los caracteres no válidos"""
    assert clean_filename("maxri/report?.json") == "maxrireportjson"
    assert clean_filename("stability-report 1") == "stability-report 1"


def test_create_report_directory_is_idempotent(tmp_path, monkeypatch):
    """Verifica que crear el directorio dos veces no falla y devuelve ruta absoluta"""
    monkeypatch.chdir(tmp_path)
    first = create_report_directory("reports")
    second = create_report_directory("reports")
    assert first == second
    assert os.path.isabs(first)
    assert os.path.isdir(first)


def test_write_report(tmp_path):
    """Verifica que el informe se escribe como <nombre>.json"""
    text = json.dumps({"verdict": "holds"}, sort_keys=True, indent=2)
    path = write_report(text, str(tmp_path / "out"), "maxri-report")
    assert path.endswith("maxri-report.json")
    with open(path, encoding="utf-8") as report_file:
        assert json.loads(report_file.read()) == {"verdict": "holds"}
