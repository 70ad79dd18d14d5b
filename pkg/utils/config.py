import os
from dotenv import load_dotenv
import psutil

# Carga el .env desde la ruta absoluta
load_dotenv(dotenv_path=os.path.join(os.path.dirname(__file__), '..', '.env'))

# Global variables
STAGE = os.getenv("STAGE") or 'staging'
VALID_TOKEN = os.getenv("VALID_TOKEN") or 'sample'
AUTO_DELETE_LOGS = (os.getenv("AUTO_DELETE_LOGS") or 'True') != 'False'
PORT = int(os.getenv("PORT", 3000))
LOGS_DIR = os.getenv("LOGS_DIR") or 'logs'
REPORTS_DIR = os.getenv("REPORTS_DIR") or 'reports'
LOG_FILE_DELETION_DAYS = 30

# Limits for the exhaustive enumerations
DEFAULT_BUDGET = 10 ** 8
KNUTH_CLASS_BOUND = int(os.getenv("KNUTH_CLASS_BOUND", 10))
POSET_BOUND = int(os.getenv("POSET_BOUND", 10))
# Largest m^n for which expand_binomial re-counts one sample by brute force
CROSS_CHECK_BOUND = int(os.getenv("CROSS_CHECK_BOUND", 10 ** 4))


def get_budget():
    # Words examined per sweep. Read on every call so PLACTIC_BUDGET can be changed at runtime
    value = os.getenv("PLACTIC_BUDGET")
    if not value:
        return DEFAULT_BUDGET
    return int(value)


def default_workers():
    value = os.getenv("PLACTIC_WORKERS")
    if value:
        return max(1, int(value))
    # Physical cores only, hyperthreads do not help the pure-python loops
    cores = psutil.cpu_count(logical=False)
    return cores or 1
