from hypothesis import given
from hypothesis import strategies as st

from facehit.rng import SplitMix64


def test_reference_vector():
    # published SplitMix64 outputs for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


@given(st.integers(0, 2**64 - 1), st.integers(1, 10**6))
def test_below_in_range(seed, k):
    r = SplitMix64(seed)
    assert all(0 <= r.below(k) < k for _ in range(20))


@given(st.integers(0, 2**64 - 1))
def test_shuffle_is_permutation_and_deterministic(seed):
    a, b = list(range(30)), list(range(30))
    SplitMix64(seed).shuffle(a)
    SplitMix64(seed).shuffle(b)
    assert a == b and sorted(a) == list(range(30))
