import pytest

from genus0._kernels import backends


@pytest.fixture(params=sorted(backends()))
def kernel(request):
    return backends()[request.param]
