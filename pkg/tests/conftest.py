import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dftladder.precision import BINARY64, PrecisionConfig  # noqa: E402


@pytest.fixture
def b64():
    return BINARY64


@pytest.fixture(scope="session")
def ext30():
    return PrecisionConfig.parse("extended:30")


@pytest.fixture(params=["binary64", "extended:30"])
def config(request):
    return PrecisionConfig.parse(request.param)
