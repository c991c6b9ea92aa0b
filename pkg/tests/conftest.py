import hypothesis
import numpy as np
import pytest
from prefect.testing.utilities import prefect_test_harness

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("fast")


@pytest.fixture(autouse=True, scope="session")
def prefect_backend():
    """Flows run against a throwaway Prefect backend."""
    with prefect_test_harness():
        yield
