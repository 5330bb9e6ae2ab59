import pytest

from lcg.field import make_field

SMALL_Q = (2, 3, 4, 5)


def field_of(q):
    from lcg.field import prime_power

    return make_field(*prime_power(q))


@pytest.fixture(params=[2, 3, 4, 5, 7, 8, 9], ids=lambda q: f"GF{q}")
def field(request):
    return field_of(request.param)


@pytest.fixture
def gf2():
    return make_field(2)


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(2, 2)


@pytest.fixture
def gf5():
    return make_field(5)
