"""
API Utilities - environment lookups shared by the kernels and Managers.
"""
import os

from dotenv import load_dotenv


def get_worker_count() -> int:
    """
    Get the Monte Carlo worker pool size from MW_THREADS or use the CPU count.

    Returns:
        Number of worker threads (at least 1)
    """
    load_dotenv()
    default = os.cpu_count() or 1
    try:
        value = int(os.getenv('MW_THREADS', str(default)))
    except ValueError:
        return default
    return value if value >= 1 else default
