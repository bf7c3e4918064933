"""Test realizing systems"""
import random

import pytest

from periodicorbits import arith
from periodicorbits import generators
from periodicorbits import transforms


SMALL_PRIMES = arith.primes_up_to(23)


def random_unimodular(rand, size):
    """Product of random elementary matrices, determinant +-1"""
    mat = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(rand.randint(1, 6)):
        src, dst = rand.sample(range(size), 2)
        mult = rand.choice([-2, -1, 1, 2])
        for row in mat:
            row[dst] += mult * row[src]
    if rand.random() < 0.5:
        mat[0], mat[1] = mat[1], mat[0]
    return mat


def test_matrix_spec():
    """Test matrix validation"""
    spec = generators.MatrixSpec([[1, 1], [1, 0]])
    assert spec.dimension == 2
    assert spec.kind == generators.NONNEG
    assert repr(spec) == "MatrixSpec([[1, 1], [1, 0]], 'nonneg')"
    with pytest.raises(ValueError):
        generators.MatrixSpec([[1, 1]])
    with pytest.raises(ValueError):
        generators.MatrixSpec([])
    with pytest.raises(ValueError):
        generators.MatrixSpec([[1, -1], [1, 0]])
    with pytest.raises(ValueError):
        generators.MatrixSpec([[2, 0], [0, 1]], generators.INVERTIBLE)
    with pytest.raises(ValueError):
        generators.MatrixSpec([[1]], 'other')


def test_golden_mean_shift():
    """Test the golden mean shift counts the Lucas numbers"""
    spec = generators.MatrixSpec([[1, 1], [1, 0]])
    assert generators.gen_sft_trace(spec, 6) == (1, 3, 4, 7, 11, 18)
    full = generators.MatrixSpec([[2]])
    assert generators.gen_sft_trace(full, 8) == tuple(
        2 ** n for n in range(1, 9))
    with pytest.raises(ValueError):
        generators.gen_sft_trace(generators.MatrixSpec(
            [[2, 1], [1, 1]], generators.INVERTIBLE), 3)


def test_toral():
    """Test toral automorphism counts"""
    spec = generators.MatrixSpec([[2, 1], [1, 1]], generators.INVERTIBLE)
    per = generators.gen_toral_det(spec, 24)
    assert per[:5] == (1, 5, 16, 45, 121)
    assert transforms.check_er(per).passed
    assert generators.toral_determinants(spec, 2) == [-1, -5]
    with pytest.raises(ValueError):
        generators.gen_toral_det(generators.MatrixSpec([[1, 1], [1, 0]]), 3)


def test_toral_degenerate():
    """Test roots of unity are reported at the first bad index"""
    rotation = generators.MatrixSpec([[0, 1], [-1, 0]], generators.INVERTIBLE)
    with pytest.raises(generators.DegenerateSystemError) as exc:
        generators.gen_toral_det(rotation, 6)
    assert exc.value.index == 4
    shear = generators.MatrixSpec([[1, 1], [0, 1]], generators.INVERTIBLE)
    with pytest.raises(generators.DegenerateSystemError) as exc:
        generators.gen_toral_det(shear, 2)
    assert exc.value.index == 1


def test_trace_congruence():
    """Test traces of prime powers are congruent to the trace"""
    rand = random.Random(1)
    for _ in range(500):
        size = rand.randint(1, 3)
        spec = generators.MatrixSpec([[rand.randrange(5) for _ in range(size)]
                                      for _ in range(size)])
        traces = generators.gen_sft_trace(spec, SMALL_PRIMES[-1])
        for prime in SMALL_PRIMES:
            assert (traces[prime - 1] - traces[0]) % prime == 0
    spec = generators.MatrixSpec([[3, 2], [1, 4]])
    assert all(generators.trace_congruence(spec, p) == 0
               for p in SMALL_PRIMES)


def test_det_congruence():
    """Test determinants of prime powers are congruent"""
    rand = random.Random(2)
    for _ in range(200):
        spec = generators.MatrixSpec(random_unimodular(rand, rand.randint(2, 3)),
                                     generators.INVERTIBLE)
        dets = generators.toral_determinants(spec, SMALL_PRIMES[-1])
        for prime in SMALL_PRIMES:
            assert (dets[prime - 1] - dets[0]) % prime == 0
    spec = generators.MatrixSpec([[2, 1], [1, 1]], generators.INVERTIBLE)
    assert all(generators.det_congruence(spec, p) == 0
               for p in SMALL_PRIMES)


def test_binomial():
    """Test binomial sequences are realizable"""
    assert generators.gen_binomial(generators.BinomialSpec(2, 1), 5) == (
        2, 6, 20, 70, 252)
    for k in range(2, 6):
        for j in range(1, k):
            per = generators.gen_binomial(generators.BinomialSpec(k, j), 24)
            assert transforms.check_er(per).passed
    with pytest.raises(ValueError):
        generators.BinomialSpec(2, 2)
    with pytest.raises(ValueError):
        generators.BinomialSpec(3, 0)


def test_s_integer():
    """Test connected S-integer systems"""
    spec = generators.SIntegerSpec(2, [2, 3, 5, 7])
    assert generators.gen_s_integer_connected(spec, 15) == (
        1, 1, 1, 1, 31, 1, 127, 17, 73, 341, 2047, 13, 8191, 5461, 4681)
    spec = generators.SIntegerSpec('3/2', [2])
    per = generators.gen_s_integer_connected(spec, 24)
    assert per[:3] == (1, 5, 19)
    assert transforms.check_er(per).passed
    assert generators.gen_s_integer_connected(
        generators.SIntegerSpec(-2), 4) == (3, 3, 9, 15)


def test_s_integer_errors():
    """Test inadmissible S-integer data"""
    with pytest.raises(ValueError):
        generators.SIntegerSpec(1)
    with pytest.raises(ValueError):
        generators.SIntegerSpec(-1)
    with pytest.raises(ValueError):
        generators.SIntegerSpec(0)
    with pytest.raises(ValueError, match='inadmissible'):
        generators.SIntegerSpec('1/2')
    with pytest.raises(ValueError):
        generators.SIntegerSpec(2, [4])


def test_zero_dimensional():
    """Test the zero dimensional example"""
    per = generators.gen_s_integer_zero_dim_example(24)
    assert per[:6] == (1, 1, 4, 1, 16, 16)
    assert transforms.check_er(per).passed


def test_r_product():
    """Test the product of the a^(k) and its printed values"""
    computed = [generators.r_product_term(n) for n in range(1, 7)]
    assert computed == [1, 3, 16, 175, 1296, 41160]
    for n, printed in generators.R_PRODUCT_PRINTED.items():
        if n in generators.R_PRODUCT_ERRATA:
            assert computed[n - 1] != printed
            assert str(computed[n - 1]) in generators.R_PRODUCT_ERRATA[n]
        else:
            assert computed[n - 1] == printed
    assert set(generators.R_PRODUCT_ERRATA) == {4}
    assert generators.gen_named('r_product', None, 6) == tuple(computed)
    assert transforms.check_er(generators.gen_named('r_product', None,
                                                    12)).passed


def test_r_orbits():
    """Test r^(k) has one fixed point and orbits of every length above k"""
    assert generators.r_orbits(2, 5) == (1, 0, 1, 1, 1)
    assert generators.gen_named('r_k', 2, 4) == (1, 1, 4, 5)


def test_named():
    """Test named sequences are realizable"""
    for name in generators.NAMED_SEQUENCES:
        assert transforms.check_er(generators.gen_named(name, None, 30)).passed
    assert generators.gen_named('constant', 4, 3) == (4, 4, 4)
    assert generators.gen_named('power', 3, 3) == (3, 9, 27)
    assert generators.gen_named('alt_prime', None, 4) == (1, 3, 1, 3)
    assert generators.gen_named('alt_prime', 7, 4) == (1, 7, 1, 7)
    assert generators.gen_named('nonprime_divisor_sum', None, 6) == (
        1, 1, 1, 5, 1, 7)


def test_named_errors():
    """Test bad names and parameters"""
    with pytest.raises(ValueError, match='unknown'):
        generators.gen_named('fibonacci', None, 3)
    with pytest.raises(ValueError):
        generators.gen_named('r_product', 2, 3)
    with pytest.raises(ValueError):
        generators.gen_named('alt_prime', 4, 3)
    with pytest.raises(ValueError):
        generators.gen_named('constant', -1, 3)
    with pytest.raises(ValueError):
        generators.gen_named('constant', None, 0)


def test_prime_power_cofactor():
    """Test the factorization of the powers of a prime"""
    cofactor = generators.prime_power_cofactor(3, 12)
    assert cofactor[:4] == (3, 3, 27, 27)
    assert transforms.check_er(cofactor).passed
    for prime in (3, 5, 7):
        alt = generators.gen_named('alt_prime', prime, 12)
        cofactor = generators.prime_power_cofactor(prime, 12)
        assert tuple(a * b for a, b in zip(alt, cofactor)) == tuple(
            prime ** n for n in range(1, 13))
