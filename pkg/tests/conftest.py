import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def mul_shift_reduce(a: int, b: int, modulus: int, q: int) -> int:
    """Reference GF(2^m) product: shift-and-add with modular reduction."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & q:
            a ^= modulus
    return r


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the numba kernels once so per-test timings are meaningful
    from swld.gf import get_field
    from swld.listdecode import GsConfig, gs_list_decode
    from swld.rs import RsCode

    code = RsCode(get_field(4), 5)
    gs_list_decode(np.zeros(15, dtype=np.int32), code, GsConfig(multiplicity=2))
    yield


@pytest.fixture(scope="session")
def rs15_3():
    from swld.rs import get_rs_code

    return get_rs_code(4, 3)


@pytest.fixture(scope="session")
def rs15_5():
    from swld.rs import get_rs_code

    return get_rs_code(4, 5)


@pytest.fixture(scope="session")
def rs15_7():
    from swld.rs import get_rs_code

    return get_rs_code(4, 7)
