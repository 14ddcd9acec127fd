import pytest

from gamedim import build_eu_game, nonseparable_family


@pytest.fixture(scope="session")
def eu_game():
    return build_eu_game()


@pytest.fixture(scope="session")
def family(eu_game):
    return nonseparable_family(eu_game)


@pytest.fixture(scope="session")
def council_h(family):
    return family.hypergraph
