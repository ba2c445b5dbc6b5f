import os
import shutil

import pytest

from nilift import config
from nilift.balacarter.orbits import find_orbit
from nilift.rootdata.cartan import parse_cartan_type
from nilift.rootdata.root_system import build_root_system


@pytest.fixture
def e6():
    return build_root_system(parse_cartan_type("E6"))


@pytest.fixture
def e6_d4a1(e6):
    return find_orbit(e6, "D4(a1)")


@pytest.fixture
def data_directory(tmp_path):
    """A scratch data directory holding the shipped name table; tests write golden files."""
    previous = config.DATA_DIRECTORY
    shutil.copy(os.path.join(previous, config.NAME_TABLE_FILE), tmp_path)
    config.set_data_directory(str(tmp_path))
    yield tmp_path
    config.set_data_directory(previous)
