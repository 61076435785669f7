# This File Contains IO Paths for Fixtures

from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent

FIXTURES_DIR = PROJECT_ROOT / "fixtures"
AR_FIXTURES_DIR = FIXTURES_DIR / "ar_quivers"
CLASSIFIER_TABLE_PATH = FIXTURES_DIR / "classifier_truth_table.json"
