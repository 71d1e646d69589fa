import json
from pathlib import Path

import pytest

FIXTURE_PATH = Path(__file__).parent / "fixtures" / "oracle_cases.json"


def pytest_addoption(parser):
    parser.addoption(
        "--regen-oracle",
        action="store_true",
        default=False,
        help="rebuild tests/fixtures/oracle_cases.json from the dense reference route",
    )


def pytest_configure(config):
    if config.getoption("--regen-oracle"):
        import _oracle_regen

        reports = _oracle_regen.write_fixture(FIXTURE_PATH)
        worst = max(r.discrepancy for r in reports)
        print(f"\nregenerated {len(reports)} oracle cases (worst discrepancy {worst:.3e})")


@pytest.fixture(scope="session")
def oracle_cases():
    if not FIXTURE_PATH.exists():
        pytest.fail("oracle fixture missing; run `pytest --regen-oracle` once to create it")
    data = json.loads(FIXTURE_PATH.read_text(encoding="utf-8"))
    return {case["case_id"]: case for case in data["cases"]}
