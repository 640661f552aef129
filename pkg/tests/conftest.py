import re
from pathlib import Path

import pytest

from meshcrypt import parse_keyfile, parse_obj, parse_ppm

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def bundled_model():
    return parse_obj((DATA_DIR / "model.obj").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def bundled_texture():
    return parse_ppm((DATA_DIR / "texture.ppm").read_bytes())


@pytest.fixture(scope="session")
def bundled_keys():
    return parse_keyfile((DATA_DIR / "keys.txt").read_text(encoding="utf-8"))


# Collect acceptance outcomes and print one line per criterion at the end.
_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")

    def criterion_number(nodeid: str) -> int:
        m = re.search(r"criterion_(\d+)", nodeid)
        return int(m.group(1)) if m else 0

    for nodeid in sorted(_acceptance_outcomes, key=criterion_number):
        num = criterion_number(nodeid)
        outcome = _acceptance_outcomes[nodeid].upper()
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"criterion {num}: {outcome}  ({name})")
