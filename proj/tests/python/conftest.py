import os
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def _cli():
    env = os.environ.get("GENTLE_CLI")
    if env:
        return env
    for candidate in (ROOT / "build" / "gentle", shutil.which("gentle")):
        if candidate and Path(candidate).exists():
            return str(candidate)
    return None


_extra = os.environ.get("GENTLE_PYTHONPATH", str(ROOT / "build"))
if _extra not in sys.path:
    sys.path.insert(0, _extra)


@pytest.fixture(scope="session")
def gentle():
    path = _cli()
    if path is None:
        pytest.skip("gentle executable not built")

    def run(*args):
        return subprocess.run([path, *args], capture_output=True, text=True, timeout=60)

    return run
