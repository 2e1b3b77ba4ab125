# config.py
import os
from dotenv import load_dotenv

load_dotenv()
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Truncation orders (exponent of q kept is K, i.e. comparisons mod q^{K+1})
DEFAULT_K = int(os.getenv("DEFAULT_K", 20))
HEADLINE_K = int(os.getenv("HEADLINE_K", 30))

# Guards for exponential enumerations
ENUM_GUARD = int(os.getenv("ENUM_GUARD", 25))  # max poset size for Young book enumeration
SSYT_MAX_SIZE = int(os.getenv("SSYT_MAX_SIZE", 8))
SSYT_MAX_POINTS = int(os.getenv("SSYT_MAX_POINTS", 5))
DET_BERKOWITZ_MAX = int(os.getenv("DET_BERKOWITZ_MAX", 6))  # larger determinants use Bareiss elimination

# Integrand contract spot checks
CONTRACT_SEED = int(os.getenv("CONTRACT_SEED", 2024))
CONTRACT_SPOT_CHECKS = int(os.getenv("CONTRACT_SPOT_CHECKS", 4))

# Output
OUTPUT_FORMAT = os.getenv("OUTPUT_FORMAT", "json")  # 'json' or 'table'
REPORT_DIR = os.getenv("REPORT_DIR", "data/logs")
DEFAULT_GRID_SPEC = os.getenv("DEFAULT_GRID_SPEC", "data/grids/default.json")
