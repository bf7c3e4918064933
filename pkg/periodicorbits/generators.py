"""Periodic point counts of concrete realizing systems

Every generator returns a `transforms.Sequence` computed in exact integer
arithmetic. Matrix powers and determinants go through sympy's exact integer
matrices; nothing here touches eigenvalues.
"""
import collections
import fractions
import logging
import math
import operator

import sympy

from periodicorbits import arith
from periodicorbits import transforms


NONNEG = 'nonneg'
INVERTIBLE = 'invertible'

# Published values of the infinite product of the a^(k), index 4 is wrong
R_PRODUCT_PRINTED = {2: 3, 3: 16, 4: 245, 5: 1296, 6: 41160}
R_PRODUCT_ERRATA = {
    4: ('printed as 245, but the definition of r^(k) gives '
        'a^(1)_4 * a^(2)_4 * a^(3)_4 = 7 * 5 * 5 = 175'),
}


class DegenerateSystemError(ValueError):
    """The counting formula of a system degenerates at some index

    The offending index is available as `index`."""

    def __init__(self, index, message):
        super().__init__('degenerate at n={:d}: {}'.format(index, message))
        self.index = index


def _length(num):
    """Validate a requested number of terms"""
    num = operator.index(num)
    if num < 1:
        raise ValueError('number of terms must be positive, got {:d}'.format(
            num))
    return num


class MatrixSpec(object):
    """A square integer matrix with its dynamical interpretation

    Parameters
    ----------
    entries : [[int]]
        The rows of a non-empty square matrix.
    kind : str
        `nonneg` for the adjacency matrix of a subshift of finite type, all
        entries non-negative. `invertible` for a toral automorphism, which
        needs determinant plus or minus one.
    """

    def __init__(self, entries, kind=NONNEG):
        self.entries = tuple(tuple(operator.index(e) for e in row)
                             for row in entries)
        self.kind = kind
        size = len(self.entries)
        if not size or any(len(row) != size for row in self.entries):
            raise ValueError('matrix must be square and non-empty, got {}'
                             .format(self.entries))
        if kind == NONNEG:
            if any(e < 0 for row in self.entries for e in row):
                raise ValueError(
                    'subshift matrix must have non-negative entries')
        elif kind == INVERTIBLE:
            det = self.matrix().det(method='bareiss')
            if abs(det) != 1:
                raise ValueError(
                    'toral matrix must have determinant +-1, got {}'.format(
                        det))
        else:
            raise ValueError('unknown matrix kind {!r}'.format(kind))

    @property
    def dimension(self):
        """Number of rows"""
        return len(self.entries)

    def matrix(self):
        """A fresh sympy matrix of the entries"""
        return sympy.Matrix(self.entries)

    def __repr__(self):
        return 'MatrixSpec({}, {!r})'.format(
            [list(row) for row in self.entries], self.kind)


class SIntegerSpec(collections.namedtuple('SIntegerSpec', ['xi', 'primes'])):
    """A rational `xi` and a finite set of primes `S`

    Every prime at which `xi` has absolute value bigger than one, that is
    every prime dividing the denominator, must be in `S`."""
    __slots__ = ()

    def __new__(cls, xi, primes=()):
        xi = fractions.Fraction(xi)
        primes = frozenset(operator.index(p) for p in primes)
        if xi == 0 or abs(xi) == 1:
            raise ValueError('xi must be nonzero and not +-1, got {}'.format(
                xi))
        for prime in primes:
            if not arith.is_prime(prime):
                raise ValueError('{:d} in S is not a prime'.format(prime))
        missing = [p for p, _ in arith.factorize(xi.denominator)
                   if p not in primes]
        if missing:
            raise ValueError(
                'inadmissible: |xi|_p > 1 for primes {} not in S'.format(
                    missing))
        return super().__new__(cls, xi, primes)


class BinomialSpec(collections.namedtuple('BinomialSpec', ['k', 'j'])):
    """Parameters of the binomial sequence `C(kn, jn)`, `1 <= j < k`"""
    __slots__ = ()

    def __new__(cls, k, j):
        k = operator.index(k)
        j = operator.index(j)
        if not 1 <= j < k:
            raise ValueError('need 1 <= j < k, got k={:d} j={:d}'.format(
                k, j))
        return super().__new__(cls, k, j)


def matrix_powers(spec, num):
    """Iterator over `A, A^2, ..., A^num` as sympy matrices"""
    mat = spec.matrix()
    power = sympy.eye(spec.dimension)
    for _ in range(_length(num)):
        power = power * mat
        yield power


def gen_sft_trace(spec, num):
    """Periodic points of a subshift of finite type, `trace(B^n)`"""
    if spec.kind != NONNEG:
        raise ValueError('subshift needs a nonneg matrix, got {}'.format(
            spec.kind))
    return transforms.Sequence(int(power.trace())
                               for power in matrix_powers(spec, num))


def toral_determinants(spec, num):
    """Signed determinants `det(A^n - I)` for n up to num"""
    ident = sympy.eye(spec.dimension)
    return [int((power - ident).det(method='bareiss'))
            for power in matrix_powers(spec, num)]


def gen_toral_det(spec, num):
    """Periodic points of a toral automorphism, `|det(A^n - I)|`

    Raises
    ------
    DegenerateSystemError
        If some `A^n - I` is singular, meaning `A` has a root of unity as an
        eigenvalue and the torus map has infinitely many periodic points.
    """
    if spec.kind != INVERTIBLE:
        raise ValueError('toral map needs an invertible matrix, got {}'
                         .format(spec.kind))
    dets = toral_determinants(spec, num)
    for index, det in enumerate(dets, 1):
        if det == 0:
            raise DegenerateSystemError(
                index, 'A^n - I is singular for {!r}'.format(spec))
    return transforms.Sequence(abs(det) for det in dets)


def trace_congruence(spec, prime):
    """Residue of `trace(B^p) - trace(B)` modulo p, zero for every prime"""
    mat = spec.matrix()
    return int((mat ** prime).trace() - mat.trace()) % prime


def det_congruence(spec, prime):
    """Residue of `det(A^p - I) - det(A - I)` modulo p on signed values"""
    mat = spec.matrix()
    ident = sympy.eye(spec.dimension)
    diff = ((mat ** prime - ident).det(method='bareiss') -
            (mat - ident).det(method='bareiss'))
    return int(diff) % prime


def gen_binomial(spec, num):
    """Binomial coefficients `C(kn, jn)`"""
    return transforms.Sequence(math.comb(spec.k * n, spec.j * n)
                               for n in range(1, _length(num) + 1))


def gen_s_integer_connected(spec, num):
    """Periodic points of a connected S-integer system

    The n-th term is the product of `|xi^n - 1|_p` over the primes in S and
    the usual absolute value. For `xi = a/b` in lowest terms this is
    `|a^n - b^n| / b^n` with every prime of S removed from numerator and
    denominator.
    """
    terms = []
    for n in range(1, _length(num) + 1):
        value = spec.xi ** n - 1
        if value == 0:
            raise DegenerateSystemError(n, 'xi^n = 1')
        top = abs(value.numerator)
        bottom = value.denominator
        for prime in spec.primes:
            while top % prime == 0:
                top //= prime
            while bottom % prime == 0:
                bottom //= prime
        if bottom != 1:
            raise ValueError(
                'inadmissible S-integer data: term {:d} is {}/{}'.format(
                    n, top, bottom))
        terms.append(top)
    return transforms.Sequence(terms)


def gen_s_integer_zero_dim_example(num):
    """The zero dimensional example `2^(n - 2^ord_2(n))`"""
    return transforms.Sequence(
        2 ** (n - 2 ** arith.padic_valuation(n, 2))
        for n in range(1, _length(num) + 1))


def r_orbits(k, num):
    """Orbit counts r^(k): one fixed point and one orbit of each length > k"""
    return transforms.Sequence(1 if d == 1 or d > k else 0
                               for d in range(1, num + 1))


def r_product_term(n):
    """The n-th term of the product of every a^(k)

    Only `k < n` contribute, since `a^(k)_n = 1` once `k >= n`."""
    divs = arith.divisors(n)
    prod = 1
    for k in range(1, n):
        prod *= 1 + sum(d for d in divs if d > k)
    return prod


def prime_power_cofactor(prime, num):
    """The sequence `p, p, p^3, p^3, ...`

    Termwise times `(1, p, 1, p, ...)` this is `(p^n)`."""
    return transforms.Sequence(prime ** (n if n % 2 else n - 1)
                               for n in range(1, _length(num) + 1))


def _constant(param, num):
    value = 1 if param is None else param
    if value < 0:
        raise ValueError('constant must be non-negative, got {:d}'.format(
            value))
    return transforms.Sequence([value] * num)


def _power(param, num):
    base = 2 if param is None else param
    if base < 0:
        raise ValueError('power base must be non-negative, got {:d}'.format(
            base))
    return transforms.Sequence(base ** n for n in range(1, num + 1))


def _r_k(param, num):
    k = 1 if param is None else param
    if k < 1:
        raise ValueError('k must be positive, got {:d}'.format(k))
    return transforms.per_transform(r_orbits(k, num))


def _r_product(param, num):
    if param is not None:
        raise ValueError('r_product takes no parameter')
    return transforms.Sequence(r_product_term(n) for n in range(1, num + 1))


def _alt_prime(param, num):
    odd = 3 if param is None else param
    if odd < 1 or not odd % 2:
        raise ValueError('alt_prime needs an odd positive parameter, got {:d}'
                         .format(odd))
    return transforms.Sequence(odd if n % 2 == 0 else 1
                               for n in range(1, num + 1))


def _nonprime_divisor_sum(param, num):
    if param is not None:
        raise ValueError('nonprime_divisor_sum takes no parameter')
    return transforms.per_transform(
        0 if arith.is_prime(d) else 1 for d in range(1, num + 1))


_NAMED = {
    'constant': _constant,
    'power': _power,
    'r_k': _r_k,
    'r_product': _r_product,
    'alt_prime': _alt_prime,
    'nonprime_divisor_sum': _nonprime_divisor_sum,
}
NAMED_SEQUENCES = tuple(_NAMED)


def gen_named(name, param, num):
    """Named sequences used in building the algebra of realizable sequences

    Parameters
    ----------
    name : str
        One of `constant` (param c, default 1), `power` (`c^n`, default 2),
        `r_k` (divisor sums of `r^(k)`, default k=1), `r_product` (the product
        of every `a^(k)`), `alt_prime` (`1, p, 1, p, ...` for odd p, default
        3) or `nonprime_divisor_sum` (one orbit of every non-prime length).
    param : int or None
        The parameter, None for the default.
    num : int
        Number of terms.
    """
    try:
        func = _NAMED[name]
    except KeyError:
        raise ValueError('unknown named sequence {!r}, expected one of {}'
                         .format(name, ', '.join(NAMED_SEQUENCES)))
    if param is not None:
        param = operator.index(param)
    logging.debug('generating %s(%s) with %d terms', name, param, num)
    return func(param, _length(num))
