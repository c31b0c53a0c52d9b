# catalog/scenarios.py

from exceptions import SelectorError
from scenario.scenario import BINARY_OUTCOMES, Scenario

PM_ROWS = (("A1", "A2", "A3"), ("A4", "A5", "A6"), ("A7", "A8", "A9"))
PM_COLUMNS = (("A1", "A4", "A7"), ("A2", "A5", "A8"), ("A3", "A6", "A9"))


def n_cycle_scenario(n: int) -> Scenario:
    """Measurements 1..n, measurement i compatible with i+1 (mod n)."""
    if n < 3:
        raise SelectorError(f"An n-cycle scenario needs n >= 3, got {n}")
    measurements = tuple(str(i) for i in range(1, n + 1))
    contexts = [(str(i), str(i + 1)) for i in range(1, n)] + [(str(1), str(n))]
    return Scenario(measurements=measurements, contexts=contexts, outcomes=BINARY_OUTCOMES)


def bell_scenario(n: int) -> Scenario:
    """
    Two parties with n binary measurements each. Context (A_i, B_j) has
    1-based index (i - 1) * n + j.
    """
    if n < 2:
        raise SelectorError(f"A Bell scenario needs n >= 2 measurements per party, got {n}")
    a = tuple(f"A{i}" for i in range(1, n + 1))
    b = tuple(f"B{j}" for j in range(1, n + 1))
    contexts = [(x, y) for x in a for y in b]
    return Scenario(measurements=a + b, contexts=contexts, outcomes=BINARY_OUTCOMES)


def peres_mermin_scenario() -> Scenario:
    """The 3x3 square: three row contexts followed by three column contexts."""
    measurements = tuple(f"A{i}" for i in range(1, 10))
    return Scenario(
        measurements=measurements,
        contexts=PM_ROWS + PM_COLUMNS,
        outcomes=BINARY_OUTCOMES,
    )


def path_scenario(n: int) -> Scenario:
    """Measurements 1..n in a chain; a tree, so every behavior glues."""
    if n < 2:
        raise SelectorError(f"A path scenario needs n >= 2, got {n}")
    measurements = tuple(str(i) for i in range(1, n + 1))
    contexts = [(str(i), str(i + 1)) for i in range(1, n)]
    return Scenario(measurements=measurements, contexts=contexts, outcomes=BINARY_OUTCOMES)
