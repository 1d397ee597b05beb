import pytest

from idealis import run_default_checks


@pytest.fixture(scope="session")
def default_checks():
    """One shared run of every structural check over the default corpus.

    Building the corpus and running the full battery takes several
    seconds, so the result is computed once per session.
    """
    return run_default_checks()
