"""
Configuration file for the list homomorphism solver.
Every setting can be overridden with an environment variable or a local .env file.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Base directory
BASE_DIR = Path(__file__).parent

# Application settings
APP_NAME = "listhom"
APP_VERSION = "1.0.0"

# Logging settings
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Oracle settings
BRUTE_MAX_N = int(os.getenv("LISTHOM_BRUTE_MAX_N", "20"))

# Fuzz / generator settings
FUZZ_MAX_N = int(os.getenv("LISTHOM_FUZZ_MAX_N", "10"))
FUZZ_DENSITIES = (0.4, 0.7, 1.0)

# Configuration graph export
EXPORT_NODE_CAP = int(os.getenv("LISTHOM_EXPORT_NODE_CAP", "100000"))

# File paths
OUTPUT_DIR = Path(os.getenv("LISTHOM_OUTPUT_DIR", str(BASE_DIR / "output")))

# Benchmark settings
BENCHMARK_SIZES = tuple(
    int(size) for size in os.getenv("LISTHOM_BENCHMARK_SIZES", "50,100,200").split(",") if size.strip()
)
BENCHMARK_SEED = int(os.getenv("LISTHOM_BENCHMARK_SEED", "7"))
BENCHMARK_TIME_LIMIT = 60.0  # seconds per size

# Acceptance suite scale (1.0 runs the full trial counts)
ACCEPTANCE_SCALE = float(os.getenv("LISTHOM_ACCEPTANCE_SCALE", "1.0"))

# API settings
API_HOST = os.getenv("LISTHOM_API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("LISTHOM_API_PORT", "8000"))


# Validation functions
def validate_settings():
    """Validate that numeric settings are in range."""
    problems = []

    if BRUTE_MAX_N < 1:
        problems.append("LISTHOM_BRUTE_MAX_N must be positive")
    if not 1 <= FUZZ_MAX_N <= BRUTE_MAX_N:
        problems.append("LISTHOM_FUZZ_MAX_N must lie between 1 and LISTHOM_BRUTE_MAX_N")
    if EXPORT_NODE_CAP < 2:
        problems.append("LISTHOM_EXPORT_NODE_CAP must be at least 2")
    if ACCEPTANCE_SCALE <= 0:
        problems.append("LISTHOM_ACCEPTANCE_SCALE must be positive")
    if not BENCHMARK_SIZES:
        problems.append("LISTHOM_BENCHMARK_SIZES is empty")

    if problems:
        print(f"Warning: Invalid settings: {'; '.join(problems)}")
        return False

    return True


# Initialize validation
if __name__ == "__main__":
    validate_settings()
