from pathlib import Path

import pytest

from breakmin import parse_ha, parse_octmap, parse_timetable

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session")
def tt4():
    return parse_timetable(fixture_text("tt4.csv"))


@pytest.fixture(scope="session")
def tt4_ha():
    return parse_ha(fixture_text("tt4_ha.csv"))


@pytest.fixture(scope="session")
def tt4_ha_partial():
    return parse_ha(fixture_text("tt4_ha_partial.csv"))


@pytest.fixture(scope="session")
def tt4_map():
    return parse_octmap(fixture_text("tt4_map.csv"))


@pytest.fixture(scope="session")
def tt4_map_bad():
    return parse_octmap(fixture_text("tt4_map_bad.csv"))


@pytest.fixture(scope="session")
def tt4_ha_from_bad():
    return parse_ha(fixture_text("tt4_ha_from_bad.csv"))


@pytest.fixture(scope="session")
def tt8():
    return parse_timetable(fixture_text("tt8.csv"))


@pytest.fixture(scope="session")
def tt8_map():
    return parse_octmap(fixture_text("tt8_map.csv"))


@pytest.fixture(scope="session")
def tt8_map_repaired():
    return parse_octmap(fixture_text("tt8_map_repaired.csv"))


@pytest.fixture(scope="session")
def tt8_ha():
    return parse_ha(fixture_text("tt8_ha.csv"))
