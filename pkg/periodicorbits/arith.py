"""Number theoretic primitives over arbitrary precision integers

Everything here is exact. Factorization is deterministic trial division, so
the congruence checks built on top of it never depend on a probabilistic
primality test. Prime enumeration is delegated to sympy.
"""
import itertools
import math
import operator

import sympy


# Increments of the mod 30 wheel starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def _positive(n, name='n'):
    """Coerce to int and check that it's at least one"""
    n = operator.index(n)
    if n < 1:
        raise ValueError('{} must be a positive integer, got {:d}'.format(
            name, n))
    return n


def factorize(n):
    """Prime factorization of a positive integer

    Parameters
    ----------
    n : int
        The integer to factor, at least one.

    Returns
    -------
    factors : [(int, int)]
        Pairs of prime and multiplicity in increasing prime order. The empty
        list for one.
    """
    n = _positive(n)
    factors = []
    for prime in (2, 3, 5):
        if n % prime == 0:
            mult = 0
            while n % prime == 0:
                n //= prime
                mult += 1
            factors.append((prime, mult))
    prime = 7
    for inc in itertools.cycle(_WHEEL):
        if prime * prime > n:
            break
        if n % prime == 0:
            mult = 0
            while n % prime == 0:
                n //= prime
                mult += 1
            factors.append((prime, mult))
        prime += inc
    if n > 1:
        factors.append((n, 1))
    return factors


def divisors(n):
    """All positive divisors of n in increasing order"""
    divs = [1]
    for prime, mult in factorize(n):
        divs = [d * prime ** e for d in divs for e in range(mult + 1)]
    return sorted(divs)


def moebius(n):
    """The Moebius function of a positive integer"""
    factors = factorize(n)
    if any(mult > 1 for _, mult in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def mobius_table(num):
    """Moebius function for every index up to num

    Linear sieve, index zero is set to zero so that `table[n]` is mu(n)."""
    num = operator.index(num)
    table = [1] * (num + 1)
    table[0] = 0
    composite = bytearray(num + 1)
    primes = []
    for i in range(2, num + 1):
        if not composite[i]:
            primes.append(i)
            table[i] = -1
        for prime in primes:
            if i * prime > num:
                break
            composite[i * prime] = 1
            if i % prime == 0:
                table[i * prime] = 0
                break
            table[i * prime] = -table[i]
    return table


def divisor_sigma(n, power=1):
    """Sum of the `power`-th powers of the divisors of n"""
    total = 1
    for prime, mult in factorize(n):
        total *= sum(prime ** (power * e) for e in range(mult + 1))
    return total


def is_prime(n):
    """Primality test

    Deterministic below 2**64 and a strong BPSW test above it. Only used for
    enumerating and tagging primes, never inside a congruence test."""
    return bool(sympy.isprime(operator.index(n)))


def primes():
    """Infinite increasing iterator over the primes"""
    prime = 2
    while True:
        yield prime
        prime = int(sympy.nextprime(prime))


def primes_up_to(limit):
    """List of the primes at most limit"""
    return [int(p) for p in sympy.primerange(2, operator.index(limit) + 1)]


def padic_valuation(n, prime):
    """The exponent of the largest power of prime dividing n

    Parameters
    ----------
    n : int
        Nonzero integer, the sign is ignored.
    prime : int
        A prime.
    """
    n = operator.index(n)
    prime = operator.index(prime)
    if n == 0:
        raise ValueError('valuation of zero is infinite')
    if not is_prime(prime):
        raise ValueError('{:d} is not a prime'.format(prime))
    val = 0
    while n % prime == 0:
        n //= prime
        val += 1
    return val


def jacobi(num, mod):
    """The Jacobi symbol (num / mod)

    For prime `mod` this is the Legendre symbol: 0 if mod divides num, 1 if
    num is a nonzero square modulo mod, and -1 otherwise.

    Parameters
    ----------
    num : int
        Any integer.
    mod : int
        An odd positive integer.
    """
    num = operator.index(num)
    mod = operator.index(mod)
    if mod < 1 or not mod & 1:
        raise ValueError(
            'jacobi symbol needs an odd positive modulus, got {:d}'.format(
                mod))
    acc = 1
    while True:
        num %= mod
        if num == 0:
            return 0 if mod > 1 else acc
        while not num & 1:
            num >>= 1
            if mod & 7 in {3, 5}:
                acc = -acc
        if num == 1:
            return acc
        if num & 3 == 3 and mod & 3 == 3:
            acc = -acc
        num, mod = mod, num


def integer_root(n, k):
    """The largest r with r**k <= n"""
    n = operator.index(n)
    k = _positive(k, 'k')
    if n < 0:
        raise ValueError('root of negative integer {:d}'.format(n))
    root, _ = sympy.integer_nthroot(n, k)
    return int(root)


def is_square(n):
    """True if n is the square of an integer"""
    n = operator.index(n)
    return n >= 0 and math.isqrt(n) ** 2 == n
