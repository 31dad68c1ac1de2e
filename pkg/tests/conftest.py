import pathlib
import sys

from hypothesis import settings

SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")
