import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ghwcodes import _kernels  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    # JIT compilation happens once here, outside any timed section
    _kernels.warmup()
