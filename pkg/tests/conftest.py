import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st

from qsylv.quat import Quaternion

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=2000, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# bounded magnitudes keep products well inside double range
component = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


@st.composite
def quaternions(draw, min_norm=0.0):
    q = Quaternion(draw(component), draw(component), draw(component), draw(component))
    hypothesis.assume(sum(v * v for v in q) ** 0.5 >= min_norm)
    return q


@st.composite
def pure_quaternions(draw, min_norm=0.0):
    q = Quaternion(0.0, draw(component), draw(component), draw(component))
    hypothesis.assume(sum(v * v for v in q) ** 0.5 >= min_norm)
    return q


def qclose(p, q, atol):
    return max(abs(u - v) for u, v in zip(p, q)) <= atol


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)
