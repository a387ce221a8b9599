import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from hypothesis import settings

settings.register_profile("fixed", derandomize=True, max_examples=60)
settings.load_profile("fixed")
