import os

from dotenv import load_dotenv


load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes")


LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_TO_FILE = _flag("LOG_TO_FILE", "1")
LOG_RETENTION_DAYS = int(os.getenv("LOG_RETENTION_DAYS", "30"))

# допуски численных проверок
ENTRY_TOLERANCE = float(os.getenv("ENTRY_TOLERANCE", "1e-12"))
ROWSUM_TOLERANCE = float(os.getenv("ROWSUM_TOLERANCE", "1e-10"))
EIGEN_TOLERANCE = float(os.getenv("EIGEN_TOLERANCE", "1e-12"))
EIGEN_MAX_SWEEPS = int(os.getenv("EIGEN_MAX_SWEEPS", "30"))
ROUNDTRIP_TOLERANCE = float(os.getenv("ROUNDTRIP_TOLERANCE", "1e-8"))

DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
SEARCH_WORKERS = int(os.getenv("SEARCH_WORKERS", "1"))

API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))
