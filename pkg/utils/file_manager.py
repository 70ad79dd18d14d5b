import logging
import os
import re


def create_report_directory(directory_name):
    """
    Crea (si no existe) el directorio de informes y devuelve su ruta absoluta.

    Las rutas relativas se resuelven contra el directorio de trabajo actual.
    """
    report_dir = os.path.join(os.getcwd(), directory_name)
    os.makedirs(report_dir, exist_ok=True)
    return report_dir


def clean_filename(filename):
    # Anything that is not a letter, digit, underscore, space or hyphen goes
    invalid_chars_regex = r'[^\w\s-]'
    return re.sub(invalid_chars_regex, '', filename)


def write_report(report_text, directory, name):
    """Escribe ``<name>.json`` en ``directory`` y devuelve la ruta del fichero."""
    report_dir = create_report_directory(directory)
    file_name = clean_filename(name) or "report"
    file_path = os.path.join(report_dir, f"{file_name}.json")
    with open(file_path, "w", encoding="utf-8") as report_file:
        report_file.write(report_text)
        if not report_text.endswith("\n"):
            report_file.write("\n")
    logging.info(f"Report written: {file_path}")
    return file_path
