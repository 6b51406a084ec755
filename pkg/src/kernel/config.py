# src/kernel/config.py
import os

from .errors import InvalidInput

# --- Reproducibility ---
SEED_DEFAULT = 12345
MAX_DENOMINATOR = 1000          # random rationals never need a larger denominator

# --- Verification ---
SAMPLE_POINTS = 200             # sample-mode points per adjacent pair
RANDOM_TEST_POINTS = 100        # random points for involution / inverse checks
RANDOM_TEST_EXPONENTS = 1000    # random exponents for straightening checks
DEFAULT_DEGREE = 4              # exponent degree bound for flip = theta sweeps
EXACT_MODE_MAX_M = 5            # above this, `verify` defaults to sample mode

# --- Resource guard ---
MAX_M_DEFAULT = 7
MAX_M_ENV = "WALLCROSS_MAX_M"

# --- Straightening ---
STRAIGHTEN_MAX_STEPS = 100_000

# --- Reports ---
JSON_INDENT = 2
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def max_m() -> int:
    """Largest leaf count the CLI accepts, overridable through the environment."""
    raw = os.environ.get(MAX_M_ENV, "").strip()
    if not raw:
        return MAX_M_DEFAULT
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"{MAX_M_ENV} must be an integer, got {raw!r}")
