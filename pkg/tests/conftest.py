import pytest

from partcap.geometry import BoundingBox, Detection


@pytest.fixture
def box():
    def make(x0, y0, x1, y1):
        return BoundingBox(x0, y0, x1, y1)

    return make


@pytest.fixture
def det():
    def make(x0, y0, x1, y1, label, attribute=None, confidence=0.9):
        return Detection(BoundingBox(x0, y0, x1, y1), label, attribute, confidence)

    return make
