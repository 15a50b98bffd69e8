import pytest
from hypothesis import given, strategies as st

from macdetect.detect import (
    CubeClass,
    classify_cube,
    integer_cube_root,
    is_prime,
    is_prime_in_ap,
    prime_factors,
    probe_lemmas,
    scan_ap,
    scan_cube,
)
from macdetect.quasimodular import a_coeff

LIMIT = 20000


def sieve(n):
    flags = [False, False] + [True] * (n - 1)
    for p in range(2, int(n**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return flags


PRIMES = sieve(LIMIT)


def test_is_prime_against_sieve():
    assert all(is_prime(n) == PRIMES[n] for n in range(LIMIT + 1))


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**19 - 1))
    with pytest.raises(ValueError):
        is_prime((2**31 - 1) * (2**61 - 1))
    # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3215031751)


@given(st.integers(0, 10**30))
def test_cube_root_brackets(n):
    p = integer_cube_root(n)
    assert p**3 <= n < (p + 1) ** 3


@given(st.integers(2, 10**6))
def test_prime_factors_reconstruct(n):
    ps = prime_factors(n)
    assert ps == sorted(set(ps)) and all(is_prime(p) for p in ps)
    m = n
    for p in ps:
        while m % p == 0:
            m //= p
    assert m == 1


def test_classify_examples():
    assert classify_cube(8) is CubeClass.PRIME_CUBE
    assert classify_cube(16) is CubeClass.EXCEEDS_CUBE
    assert classify_cube(6) is CubeClass.BELOW_ALL_CUBES
    assert classify_cube(64) is CubeClass.EXCEEDS_CUBE
    with pytest.raises(ValueError):
        classify_cube(1)


def classify_oracle(n):
    ps = [p for p in range(2, n + 1) if PRIMES[p] and n % p == 0]
    if len(ps) == 1 and ps[0] ** 3 == n:
        return CubeClass.PRIME_CUBE
    if any(p**3 < n for p in ps):
        return CubeClass.EXCEEDS_CUBE
    return CubeClass.BELOW_ALL_CUBES


def test_classify_is_a_partition():
    seen = {c: 0 for c in CubeClass}
    for n in range(2, 3001):
        c = classify_cube(n)
        assert c == classify_oracle(n)
        seen[c] += 1
    assert sum(seen.values()) == 2999
    assert seen[CubeClass.PRIME_CUBE] == 6  # up to 13**3


def test_expected_signs():
    assert [c.expected_sign for c in CubeClass] == [0, 1, -1]


def test_prime_in_ap_examples():
    assert is_prime_in_ap(7, 1, 3)
    assert not is_prime_in_ap(3, 1, 3)
    assert not is_prime_in_ap(25, 1, 3)
    with pytest.raises(ValueError):
        is_prime_in_ap(7, 3, 3)


@pytest.mark.parametrize("k, l", [(1, 3), (1, 5)])
def test_scan_cube_examples(k, l):
    rep = scan_cube(k, l, 500, workers=1)
    assert rep.zero_set == [8, 27, 125, 343]
    assert rep.ok and rep.mismatches == []


def test_scan_cube_small_window():
    assert scan_cube(1, 3, 7, workers=1).zero_set == []


def test_scan_cube_rejects_even_k():
    with pytest.raises(ValueError):
        scan_cube(2, 3, 50)


def test_scan_ap_examples():
    rep = scan_ap(1, 3, 1, 3, 500, workers=1)
    assert rep.value_at_one == 0
    assert rep.negatives == []
    assert rep.zero_set[:4] == [7, 13, 19, 31]
    assert rep.ok
    rep = scan_ap(1, 3, 3, 4, 500, workers=1)
    assert rep.zero_set == [n for n in range(2, 501) if PRIMES[n] and n % 4 == 3]
    assert rep.missing == [] and rep.spurious == []


def test_probe_examples():
    assert a_coeff(1, 3, 6, 6) < 0
    a = a_coeff(1, 3, 6, 2)
    assert 0 < a < 6**9 * 2**3 * (1 + 1 / (6**3 - 1))
    rep = probe_lemmas(1, 3, 500, workers=1)
    assert rep.ok
    assert rep.pairs_checked == sum(sum(1 for d in range(1, n + 1) if n % d == 0) for n in range(2, 501))


def test_parallel_matches_serial():
    serial = scan_cube(1, 3, 1500, workers=1)
    parallel = scan_cube(1, 3, 1500, workers=3)
    assert serial == parallel
    assert scan_ap(1, 3, 2, 3, 1500, workers=1) == scan_ap(1, 3, 2, 3, 1500, workers=4)
    assert probe_lemmas(1, 5, 800, workers=1) == probe_lemmas(1, 5, 800, workers=2)
