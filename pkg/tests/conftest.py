import pytest

from starperm import GeneratorFamily, Params, build_graph, sigma_total_coloring


@pytest.fixture(scope="session")
def st22():
    return build_graph(Params(2, 2))


@pytest.fixture(scope="session")
def st23():
    return build_graph(Params(2, 3))


@pytest.fixture(scope="session")
def st32():
    return build_graph(Params(3, 2))


@pytest.fixture(scope="session")
def st42():
    return build_graph(Params(4, 2))


@pytest.fixture(scope="session")
def pc22():
    return build_graph(Params(2, 2), GeneratorFamily.pancake())


@pytest.fixture(scope="session")
def pc32():
    return build_graph(Params(3, 2), GeneratorFamily.pancake())


@pytest.fixture(scope="session")
def tc22(st22):
    return sigma_total_coloring(st22)


@pytest.fixture(scope="session")
def tc32(st32):
    return sigma_total_coloring(st32)


@pytest.fixture(scope="session")
def tc42(st42):
    return sigma_total_coloring(st42)
