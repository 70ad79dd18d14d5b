import os
import re
import logging
from datetime import datetime
from utils.config import AUTO_DELETE_LOGS, STAGE, LOG_FILE_DELETION_DAYS, LOGS_DIR
from utils.error import messageError

LOG_NAME_PATTERN = re.compile(r"(\d{4}-\d{2}-\d{2}_\d{2}-\d{2}-\d{2})\.log")
LOG_NAME_FORMAT = "%Y-%m-%d_%H-%M-%S"

# Global variable to track the current log file path
_current_log_file = None


def logs_directory():
    base_directory = '/app' if os.environ.get('DOCKERIZED', False) else ''
    return os.path.join(base_directory, LOGS_DIR)


def configure_logger():
    global _current_log_file
    if _current_log_file is not None:
        return _current_log_file
    try:
        directory = logs_directory()
        os.makedirs(directory, exist_ok=True)

        # One file per process start, named after the current date and time
        current_datetime = datetime.now().strftime(LOG_NAME_FORMAT)
        log_filepath = os.path.join(directory, f"{current_datetime}.log")
        _current_log_file = log_filepath

        logging.basicConfig(filename=log_filepath, level=logging.INFO,
                            format='%(asctime)s - %(levelname)s - %(message)s')

        logging.info("Initiating log")
        logging.info(f"Stage: {STAGE}")

        if AUTO_DELETE_LOGS:
            delete_old_logs(directory, datetime.now())

        return log_filepath

    except Exception as e:
        raise messageError(f"Error setting up logging: {e}")


def delete_old_logs(directory, current_datetime):
    """
    Borra los ficheros de log con más de LOG_FILE_DELETION_DAYS días.

    La edad se lee del nombre del fichero (YYYY-MM-DD_HH-MM-SS.log); los ficheros
    con otro nombre se ignoran. Devuelve la lista de ficheros borrados.
    """
    deleted = []
    for file in sorted(os.listdir(directory)):
        match = LOG_NAME_PATTERN.fullmatch(file)
        if not match:
            logging.warning(f"Skipping file with invalid format: {file}")
            continue
        file_datetime = datetime.strptime(match.group(1), LOG_NAME_FORMAT)
        if (current_datetime - file_datetime).days > LOG_FILE_DELETION_DAYS:
            file_path = os.path.join(directory, file)
            if file_path == _current_log_file:
                continue
            os.remove(file_path)
            deleted.append(file)
            logging.info(f"Deleted old log file: {file}")
    return deleted
