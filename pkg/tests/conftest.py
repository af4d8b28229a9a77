import hypothesis
import pytest

hypothesis.settings.register_profile(
    "default", deadline=None, max_examples=50
)
hypothesis.settings.register_profile(
    "thorough", deadline=None, max_examples=300
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def oracle():
    """Exhaustive BFS distance tables (built once per test run)."""
    from pocketpipes import enumeration

    enumeration.distance_to_solved()
    enumeration.distance_to_phase1()
    return enumeration


@pytest.fixture(scope="session")
def warm_solver():
    from pocketpipes import solver

    solver.pruning_tables()
    return solver
