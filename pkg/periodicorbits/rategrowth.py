"""Realization in rate and growth diagnostics

A sequence is realizable in rate when some map has periodic point counts
asymptotic to it. `rr_construct_power` and `rr_construct_geometric` build
such maps for `floor(n^alpha)` with alpha > 1 and `floor(beta^n)` with
beta >= 1. The rest of the module computes finite scale statistics comparing
the growth of periodic points with the growth of points of least period.

Powers with a non-integral rational exponent are irrational, so they are
handled through exact rational enclosures that are refined until the
decision they feed is certain.
"""
import collections
import fractions
import itertools
import logging
import math
import operator

from periodicorbits import arith
from periodicorbits import transforms


DECIMAL_PLACES = 6
POWER = 'power'
GEOMETRIC = 'geometric'

_START_BITS = 64
_MAX_BITS = 1 << 14


def _rational(value, name):
    """Coerce to a positive fraction"""
    value = fractions.Fraction(value)
    if value <= 0:
        raise ValueError('{} must be positive, got {}'.format(name, value))
    return value


def _terms(num):
    num = operator.index(num)
    if num < 1:
        raise ValueError('number of terms must be positive, got {:d}'.format(
            num))
    return num


def _root_bounds(value, k, bits):
    """Fractions lo <= value^(1/k) <= hi with hi - lo <= 2^-bits"""
    scaled = value << (k * bits)
    root = arith.integer_root(scaled, k)
    lo = fractions.Fraction(root, 1 << bits)
    if root ** k == scaled:
        return lo, lo
    return lo, fractions.Fraction(root + 1, 1 << bits)


def power_bounds(n, alpha, bits=_START_BITS):
    """Rational enclosure of `n^alpha`, exact when alpha is an integer"""
    alpha = _rational(alpha, 'alpha')
    if alpha.denominator == 1:
        value = fractions.Fraction(n ** alpha.numerator)
        return value, value
    return _root_bounds(n ** alpha.numerator, alpha.denominator, bits)


class RateTarget(collections.namedtuple('RateTarget', ['kind', 'exponent'])):
    """`floor(n^alpha)` or `floor(beta^n)` for a positive rational"""
    __slots__ = ()

    def __new__(cls, kind, exponent):
        if kind not in (POWER, GEOMETRIC):
            raise ValueError('unknown target kind {!r}'.format(kind))
        return super().__new__(cls, kind, _rational(exponent, 'exponent'))

    def value(self, n):
        """The exact n-th target term"""
        num, den = self.exponent.numerator, self.exponent.denominator
        if self.kind == POWER:
            return arith.integer_root(n ** num, den)
        return num ** n // den ** n

    def terms(self, num):
        """The first num target terms"""
        return transforms.Sequence(self.value(n) for n in range(1, num + 1))


def jordan_totient(n, k):
    """`n^k prod_{p|n} (1 - p^-k)` for a positive integer k"""
    result = 1
    for prime, mult in arith.factorize(n):
        result *= prime ** (k * mult) - prime ** (k * (mult - 1))
    return result


def _orbit_ceiling(n, alpha):
    """`ceil(n^(alpha-1) prod_{p|n} (1 - p^-alpha))` decided exactly"""
    factors = arith.factorize(n)
    if alpha.denominator == 1:
        return -(-jordan_totient(n, alpha.numerator) // n)
    if not factors:
        return 1
    num, den = alpha.numerator, alpha.denominator
    bits = _START_BITS
    while bits <= _MAX_BITS:
        # n^((num-den)/den) times each (1 - 1/p^(num/den))
        lo, hi = _root_bounds(n ** (num - den), den, bits)
        for prime, _ in factors:
            plo, phi = _root_bounds(prime ** num, den, bits)
            lo *= 1 - 1 / plo
            hi *= 1 - 1 / phi
        if math.ceil(lo) == math.ceil(hi):
            return math.ceil(lo)
        bits *= 2
    raise ValueError('could not decide the orbit count at n={:d} for alpha={}'
                     .format(n, alpha))


def rr_construct_power(alpha, num):
    """A map whose periodic points are asymptotic to `floor(n^alpha)`

    The orbit counts are `ceil(J(n) / n)` where `J(n) = n^alpha prod_{p|n}
    (1 - p^-alpha)`. Since the `J(d)` for `d | n` sum to `n^alpha`, the
    periodic point counts satisfy `0 <= f_n - floor(n^alpha) <= sigma(n)`.

    Returns
    -------
    orbits, per : Sequence, Sequence
    """
    num = _terms(num)
    alpha = _rational(alpha, 'alpha')
    if alpha <= 1:
        raise ValueError('floor(n^alpha) is not realizable in rate for '
                         'alpha={} <= 1'.format(alpha))
    logging.debug('constructing %d orbit counts for alpha=%s', num, alpha)
    orbits = transforms.Sequence(_orbit_ceiling(n, alpha)
                                 for n in range(1, num + 1))
    return orbits, transforms.per_transform(orbits)


def rr_construct_geometric(beta, num):
    """A map whose periodic points are asymptotic to `floor(beta^n)`

    Greedy: each orbit count is the least non-negative value that brings the
    periodic point count up to the target. Whenever the shorter orbits don't
    already overshoot, `t_n <= f_n < t_n + n`.

    Returns
    -------
    orbits, per : Sequence, Sequence
    """
    num = _terms(num)
    beta = _rational(beta, 'beta')
    if beta < 1:
        raise ValueError('floor(beta^n) is eventually zero for beta={} < 1'
                         .format(beta))
    target = RateTarget(GEOMETRIC, beta)
    orbits = [0] * (num + 1)
    partial = [0] * (num + 1)
    for n in range(1, num + 1):
        short = partial[n]
        orbits[n] = max(0, -(-(target.value(n) - short) // n))
        weight = n * orbits[n]
        if weight:
            for mult in range(n, num + 1, n):
                partial[mult] += weight
    orbits = transforms.Sequence(orbits[1:])
    return orbits, transforms.Sequence(partial[1:])


SlowGrowthDiagnosis = collections.namedtuple('SlowGrowthDiagnosis', [
    'obstructed', 'forced_zero', 'increasing', 'length'])
SlowGrowthDiagnosis.__doc__ = """Finite scale report on slowly growing targets

`forced_zero` is whether every index n in the second half of the prefix has
`2 phi_n < n`, so that any map with `f_n <= 2 phi_n` has no points of least
period n there. `increasing` is whether the target still grows across the
second half. A flagged prefix is a diagnostic, not a proof."""


def check_slow_growth_obstruction(phi):
    """Diagnose targets growing to infinity more slowly than n

    A map whose periodic points track such a target within a bounded ratio
    must eventually have no points of least period n, so its periodic point
    counts are bounded, which contradicts the target growing.
    """
    phi = transforms.Sequence(phi)
    num = len(phi)
    if num < 2:
        return SlowGrowthDiagnosis(False, False, False, num)
    half = num // 2
    forced = all(2 * phi[n - 1] < n for n in range(half + 1, num + 1))
    increasing = phi[-1] > phi[half - 1]
    return SlowGrowthDiagnosis(forced and increasing, forced, increasing,
                               num)


def pathological_indices(bound):
    """Block positions of the products of consecutive primes up to bound

    `n_r = p_r p_{r+1}` is assigned position j within blocks of sizes
    1, 2, 3, ..., so positions run 1; 1, 2; 1, 2, 3; and so on.

    Returns
    -------
    positions : {int: int}
        Map from `n_r` to its position.
    """
    positions = {}
    ps = arith.primes()
    prev = next(ps)
    block = size = 1
    for prime in ps:
        index = prev * prime
        if index > bound:
            break
        positions[index] = size
        size += 1
        if size > block:
            block += 1
            size = 1
        prev = prime
    return positions


def gen_pathological_orbit_growth(bound):
    """Least period counts whose log growth has infinitely many limit points

    `f*_k = k 2^(k^3)` except at `n_r = p_r p_{r+1}`, where
    `f*_{n_r} = n_r 2^(j n_r)` for the block position j of r.
    """
    bound = operator.index(bound)
    if bound < 2:
        raise ValueError('bound must be at least 2, got {:d}'.format(bound))
    positions = pathological_indices(bound)
    return transforms.Sequence(
        k * 2 ** (positions[k] * k if k in positions else k ** 3)
        for k in range(1, bound + 1))


def pathology_f(least):
    """Periodic point counts of the pathological least period counts"""
    return transforms.divisor_sums(least)


GrowthRecord = collections.namedtuple('GrowthRecord', [
    'n', 'f', 'fstar', 'scaled', 'scaled_star', 'log_rate', 'log_rate_star',
    'tags'])
GrowthRecord.__doc__ = """Scaled statistics at one index

`scaled` and `scaled_star` are `f_n / n^alpha` and `f*_n / n^alpha` as
fractions, exact for integral alpha. The log rates are floats and None where
the count is zero."""


def index_tags(n):
    """Which index families n belongs to"""
    factors = arith.factorize(n)
    tags = set()
    if len(factors) == 1:
        tags.add('prime' if factors[0][1] == 1 else 'prime-power')
    elif len(factors) == 2 and all(mult == 1 for _, mult in factors):
        tags.add('semiprime')
    return frozenset(tags)


def _scaled(value, n, alpha):
    lo, hi = power_bounds(n, alpha)
    return value / ((lo + hi) / 2)


def _log_rate(value, n):
    return math.log(value) / n if value > 0 else None


def _decimal(value, places):
    if value is None:
        return ''
    return '{:.{}f}'.format(float(value), places)


class GrowthReport(object):
    """Per index growth statistics of a periodic point sequence

    Parameters
    ----------
    records : [GrowthRecord]
        One record per reported index.
    alpha : Fraction
        The polynomial scale.
    """
    columns = ('n', 'f_n', 'f*_n', 'f_n/n^a', 'f*_n/n^a', 'log(f_n)/n',
               'log(f*_n)/n', 'tags')

    def __init__(self, records, alpha):
        self.records = records
        self.alpha = alpha

    def record(self, n):
        """The record at index n"""
        for rec in self.records:
            if rec.n == n:
                return rec
        raise KeyError(n)

    def rows(self, places=DECIMAL_PLACES):
        """Table rows with statistics rendered as decimals"""
        return [[rec.n, rec.f, rec.fstar,
                 _decimal(rec.scaled, places),
                 _decimal(rec.scaled_star, places),
                 _decimal(rec.log_rate, places),
                 _decimal(rec.log_rate_star, places),
                 ','.join(sorted(rec.tags))] for rec in self.records]

    def to_json(self, places=DECIMAL_PLACES):
        """Json serializable form"""
        return {
            'alpha': str(self.alpha),
            'records': [dict(zip(
                ('n', 'f', 'fstar', 'scaled', 'scaled_star', 'log_rate',
                 'log_rate_star', 'tags'),
                [rec.n, str(rec.f), str(rec.fstar)] + row[3:7] +
                [sorted(rec.tags)]))
                        for rec, row in zip(self.records, self.rows(places))],
        }


def growth_report(per, alpha, indices=None):
    """Growth statistics of a periodic point sequence

    Parameters
    ----------
    per : [int]
        Positive periodic point counts.
    alpha : Fraction
        Polynomial scale for the ratios.
    indices : [int], optional
        Only report these indices. The least period counts are then computed
        just where needed.
    """
    per = transforms.Sequence(per)
    alpha = _rational(alpha, 'alpha')
    for index, value in enumerate(per, 1):
        if value < 1:
            raise ValueError('growth needs positive terms, got {:d} at n={:d}'
                             .format(value, index))
    if indices is None:
        indices = range(1, len(per) + 1)
        least = transforms.least_period_counts(per)
        star = least.term
    else:
        indices = list(indices)
        for n in indices:
            if not 1 <= n <= len(per):
                raise ValueError('index {:d} outside 1..{:d}'.format(
                    n, len(per)))

        def star(n):
            """Moebius sum at a single index"""
            return sum(arith.moebius(n // d) * per.term(d)
                       for d in arith.divisors(n))
    records = []
    for n in indices:
        value = per.term(n)
        fstar = star(n)
        records.append(GrowthRecord(
            n, value, fstar, _scaled(value, n, alpha),
            _scaled(fstar, n, alpha), _log_rate(value, n),
            _log_rate(fstar, n), index_tags(n)))
    return GrowthReport(records, alpha)


def polynomial_limit_points(per, alpha, prime):
    """The two limit point families of `f*_n / n^alpha` and `f_n / n^alpha`

    Returns
    -------
    powers : [(int, Fraction)]
        `(r, f*_{p^r} / p^(r alpha))` for every `p^r` in the prefix.
    semiprimes : [(int, Fraction)]
        `(q, f_{pq} / (pq)^alpha)` for every prime `q != p` with `pq` in the
        prefix.
    """
    per = transforms.Sequence(per)
    num = len(per)
    powers = []
    for r in itertools.count(1):
        index = prime ** r
        if index > num:
            break
        least = per.term(index) - per.term(index // prime)
        powers.append((r, _scaled(least, index, alpha)))
    semiprimes = [(q, _scaled(per.term(prime * q), prime * q, alpha))
                  for q in arith.primes_up_to(num // prime) if q != prime]
    return powers, semiprimes


def primorial_lower_bound(count):
    """`sum 1/p_i` over the first `count` primes, with their product

    When `f*_n / n` tends to a positive constant, `f_n / n` at the product
    of the first m primes is at least this sum, which is unbounded."""
    total = fractions.Fraction(0)
    product = 1
    for prime in itertools.islice(arith.primes(), count):
        total += fractions.Fraction(1, prime)
        product *= prime
    return product, total
