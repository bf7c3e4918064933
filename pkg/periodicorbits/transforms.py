"""The periodic point and orbit count transforms

A map with `o_n` orbits of length n has `f_n = sum_{d|n} d o_d` points fixed
by its n-th iterate. This module moves between the two descriptions and
decides when a sequence of integers can be the periodic point counts of some
map: exactly when every Moebius sum `sum_{d|n} mu(n/d) a_d` is non-negative
and divisible by n.

All verdicts are about the finite prefix that is given. A pass means that no
violation exists up to its length.
"""
import collections
import fractions
import logging
import operator

from periodicorbits import arith


NEGATIVE = 'negative'
NOT_DIVISIBLE = 'not-divisible'


class Sequence(tuple):
    """A finite 1-indexed prefix of integers

    This is a tuple, so it compares equal to a tuple with the same terms, but
    `term` indexes from one."""

    def __new__(cls, terms=()):
        return super().__new__(cls, (operator.index(t) for t in terms))

    def term(self, n):
        """The n-th term, starting from one"""
        if not 1 <= n <= len(self):
            raise IndexError('index {:d} outside 1..{:d}'.format(
                n, len(self)))
        return self[n - 1]

    def __repr__(self):
        return 'Sequence({})'.format(', '.join(map(str, self)))


Witness = collections.namedtuple('Witness', ['index', 'value', 'reason'])
Witness.__doc__ = """The smallest index at which the realizability test fails

`value` is the Moebius sum at `index` and `reason` is either `negative` or
`not-divisible`."""


class ERVerdict(collections.namedtuple(
        'ERVerdict', ['length', 'orbit_counts', 'witness'])):
    """The outcome of the exact realizability test on a prefix

    Exactly one of `orbit_counts` and `witness` is None."""
    __slots__ = ()

    @property
    def passed(self):
        """Whether the prefix is consistent with exact realizability"""
        return self.witness is None

    def summary(self):
        """The machine readable verdict line"""
        if self.passed:
            return 'ER-CONSISTENT N={:d}'.format(self.length)
        index, value, reason = self.witness
        return 'FAIL n={:d} reason={} s={:d}'.format(index, reason, value)

    def describe(self):
        """A human readable sentence for the verdict"""
        if self.passed:
            return 'consistent with ER up to N={:d}'.format(self.length)
        index, value, reason = self.witness
        if reason == NEGATIVE:
            why = 'is negative'
        else:
            why = 'is not divisible by {:d}'.format(index)
        return 'not exactly realizable: the Moebius sum {:d} at n={:d} {}'.format(
            value, index, why)


class NotRealizableError(ValueError):
    """A sequence has no orbit decomposition

    The failed verdict is available as `verdict`."""

    def __init__(self, verdict):
        super().__init__(verdict.describe())
        self.verdict = verdict


def per_transform(orbits):
    """Periodic point counts from orbit counts

    Parameters
    ----------
    orbits : [int]
        Non-negative number of orbits of each length, starting at length one.

    Returns
    -------
    per : Sequence
        `per_n = sum_{d|n} d orbits_d`.
    """
    orbits = Sequence(orbits)
    for index, count in enumerate(orbits, 1):
        if count < 0:
            raise ValueError(
                'orbit count at index {:d} is negative: {:d}'.format(
                    index, count))
    num = len(orbits)
    per = [0] * (num + 1)
    for d, count in enumerate(orbits, 1):
        weight = d * count
        if weight:
            for mult in range(d, num + 1, d):
                per[mult] += weight
    return Sequence(per[1:])


def least_period_counts(per):
    """Moebius inversion of a sequence

    `result_n = sum_{d|n} mu(n/d) per_d`, the number of points of least
    period n. This never fails, so it can be used for diagnosis of sequences
    that aren't realizable."""
    per = Sequence(per)
    num = len(per)
    mu = arith.mobius_table(num)
    least = [0] * (num + 1)
    for d, val in enumerate(per, 1):
        if val:
            for k in range(1, num // d + 1):
                if mu[k]:
                    least[d * k] += mu[k] * val
    return Sequence(least[1:])


def divisor_sums(least):
    """Periodic point counts from least period counts

    `result_n = sum_{d|n} least_d`, the inverse of `least_period_counts`."""
    least = Sequence(least)
    num = len(least)
    per = [0] * (num + 1)
    for d, val in enumerate(least, 1):
        if val:
            for mult in range(d, num + 1, d):
                per[mult] += val
    return Sequence(per[1:])


def check_er(seq):
    """Test whether a prefix can count the periodic points of a map

    Parameters
    ----------
    seq : [int]
        Any finite sequence of integers starting at index one.

    Returns
    -------
    verdict : ERVerdict
        On a pass the orbit counts `s_n / n` are attached, on a failure the
        smallest failing index with its Moebius sum. Non-negativity is
        checked before divisibility.
    """
    seq = Sequence(seq)
    least = least_period_counts(seq)
    orbits = []
    for index, value in enumerate(least, 1):
        if value < 0:
            reason = NEGATIVE
        elif value % index:
            reason = NOT_DIVISIBLE
        else:
            orbits.append(value // index)
            continue
        logging.debug('realizability fails at %d: %d is %s', index, value,
                      reason)
        return ERVerdict(len(seq), None, Witness(index, value, reason))
    return ERVerdict(len(seq), Sequence(orbits), None)


def orbit_transform(per):
    """Orbit counts from periodic point counts

    Raises
    ------
    NotRealizableError
        If some Moebius sum is negative or not divisible by its index. The
        error carries the failing verdict.
    """
    verdict = check_er(per)
    if not verdict.passed:
        raise NotRealizableError(verdict)
    return verdict.orbit_counts


def iterate_per(start, steps):
    """Repeatedly apply the periodic point transform

    Each row counts the periodic points of a map whose orbit counts are the
    previous row. Returns `steps + 1` rows, the first being `start`."""
    steps = operator.index(steps)
    if steps < 1:
        raise ValueError('steps must be positive, got {:d}'.format(steps))
    rows = [Sequence(start)]
    for _ in range(steps):
        rows.append(per_transform(rows[-1]))
    return rows


def delta(num):
    """The sequence `1, 0, 0, ...` of length num"""
    if num < 1:
        raise ValueError('length must be positive, got {:d}'.format(num))
    return Sequence([1] + [0] * (num - 1))


def lind_gap(per, n):
    """The relative shortfall `1 - f*_n / f_n` as an exact fraction"""
    per = Sequence(per)
    total = per.term(n)
    if total <= 0:
        raise ValueError('term {:d} must be positive, got {:d}'.format(
            n, total))
    least = sum(arith.moebius(n // d) * per.term(d)
                for d in arith.divisors(n))
    return 1 - fractions.Fraction(least, total)


def orbit_counts(per):
    """Orbit counts, or None when the sequence isn't realizable"""
    return check_er(per).orbit_counts
