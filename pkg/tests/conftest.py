import pytest
from dotenv import load_dotenv

from catalog.behaviors import pm_quantum_behavior, pr_box_behavior
from catalog.scenarios import bell_scenario, n_cycle_scenario, path_scenario, peres_mermin_scenario
from config import Limits


@pytest.fixture(autouse=True)
def load_env():
    load_dotenv()


@pytest.fixture
def cycle4():
    return n_cycle_scenario(4)


@pytest.fixture
def pr_box4():
    return pr_box_behavior(4)


@pytest.fixture
def bell3():
    return bell_scenario(3)


@pytest.fixture
def path3():
    return path_scenario(3)


@pytest.fixture
def square():
    return peres_mermin_scenario()


@pytest.fixture
def pm_quantum():
    return pm_quantum_behavior()


@pytest.fixture
def limits():
    """Defaults, independent of whatever the environment sets."""
    return Limits()
