import numpy as np
import pytest

from centralizers import FieldSpec, Matrix

F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)
F13 = FieldSpec.prime(13)
QQ = FieldSpec.rational()

ALL_FIELDS = [F2, F5, F13, QQ]


@pytest.fixture(params=ALL_FIELDS, ids=str)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def mat(field, rows):
    return Matrix(field, rows)
