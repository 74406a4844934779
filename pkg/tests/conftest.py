import pathlib
import sys

# make scripts/run_acceptance.py importable from the test modules
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "scripts"))
