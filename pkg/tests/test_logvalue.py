import math

import pytest
from hypothesis import given, strategies as st

from bsgrowth.logvalue import LogValue

pos = st.floats(1e-300, 1e300)


@given(pos, pos)
def test_arithmetic_matches_floats(x, y):
    a, b = LogValue.from_float(x), LogValue.from_float(y)
    assert (a * b).ln == pytest.approx(math.log(x) + math.log(y), abs=1e-9)
    assert (a / b).ln == pytest.approx(math.log(x) - math.log(y), abs=1e-9)
    assert (a + b).ln == pytest.approx(math.log(x + y), abs=1e-9) if math.isfinite(x + y) else True
    assert (a < b) == (x < y) or math.isclose(x, y)


def test_sum_does_not_overflow():
    big = LogValue(5000.0)
    assert (big + big).ln == pytest.approx(5000 + math.log(2))
    assert float(big) == math.inf


def test_zero():
    z = LogValue.zero()
    one = LogValue(0.0)
    assert z < one
    assert z + one == one
    assert (z * one).is_zero
    assert float(z) == 0.0
    assert LogValue.from_int(0) == z
    with pytest.raises(ZeroDivisionError):
        one / z
    with pytest.raises(ValueError):
        LogValue.from_float(-1.0)


def test_big_int():
    x = 10**5000
    assert LogValue.from_int(x).log10 == pytest.approx(5000)
    assert LogValue(1.5).to_json() == {"ln": 1.5}
