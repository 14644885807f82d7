import pytest

from python_schubert.rootdata import CartanMatrix, builtin_cartan


@pytest.fixture
def a1():
    return builtin_cartan('A', 1)


@pytest.fixture
def a2():
    return builtin_cartan('A', 2)


@pytest.fixture
def b2():
    return builtin_cartan('B', 2)


@pytest.fixture
def g2():
    return builtin_cartan('G', 2)


@pytest.fixture
def a1xa1():
    return CartanMatrix([[2, 0], [0, 2]], name='A1xA1')


@pytest.fixture
def affine_a1():
    return CartanMatrix([[2, -2], [-2, 2]], name='A1~')
