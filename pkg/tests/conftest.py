import pytest

from sl2jsr.fixtures import SAMPLE_PAIRS


@pytest.fixture(params=sorted(SAMPLE_PAIRS))
def sample(request):
    return request.param, SAMPLE_PAIRS[request.param]
