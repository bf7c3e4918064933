"""Binary recurrences and their exact realizability

A sequence with `u_{n+2} = a u_{n+1} + b u_n` whose discriminant
`a^2 + 4b` isn't a square and with `gcd(a, a^2 + 2b) = 1` is exactly
realizable precisely when `u_2 / u_1 = (a^2 + 2b) / a`, in which case it is a
multiple of the traces of powers of `[[a, b], [1, 0]]`. Failures are
witnessed by a prime p where `u_p` and `u_1` differ modulo p.
"""
import collections
import fractions
import itertools
import logging
import math
import operator

from periodicorbits import arith
from periodicorbits import generators
from periodicorbits import transforms


WITNESS_PRIME_CAP = 10 ** 4

THEOREM_APPLIES = 'theorem-applies'
SQUARE_DISCRIMINANT = 'square-discriminant'
COMMON_FACTOR = 'common-factor'
IN_ER = 'in-ER'
NOT_IN_ER = 'not-in-ER'

JACOBSTHAL = 'jacobsthal'
MERSENNE = 'mersenne'
FAMILIES = (JACOBSTHAL, MERSENNE)


class RecurrenceSpec(collections.namedtuple(
        'RecurrenceSpec', ['a', 'b', 'u1', 'u2'])):
    """Coefficients and initial terms of `u_{n+2} = a u_{n+1} + b u_n`"""
    __slots__ = ()

    def __new__(cls, a, b, u1, u2):
        a, b, u1, u2 = map(operator.index, (a, b, u1, u2))
        if u1 < 1 or u2 < 1:
            raise ValueError(
                'initial terms must be positive, got u1={:d} u2={:d}'.format(
                    u1, u2))
        return super().__new__(cls, a, b, u1, u2)

    @property
    def discriminant(self):
        """`a^2 + 4b`"""
        return self.a ** 2 + 4 * self.b

    @property
    def common_factor(self):
        """`gcd(a, a^2 + 2b)`"""
        return math.gcd(self.a, self.a ** 2 + 2 * self.b)

    def terms(self):
        """Infinite iterator over `u_1, u_2, ...`"""
        prev, cur = self.u1, self.u2
        while True:
            yield prev
            prev, cur = cur, self.a * cur + self.b * prev

    def shifted(self, k):
        """The same recurrence started at `u_{k+1}`"""
        k = operator.index(k)
        if k < 0:
            raise ValueError('shift must be non-negative, got {:d}'.format(k))
        first, second = itertools.islice(self.terms(), k, k + 2)
        return RecurrenceSpec(self.a, self.b, first, second)


def lucasian(u1, u2):
    """The recurrence `u_{n+2} = u_{n+1} + u_n` with given initial terms"""
    return RecurrenceSpec(1, 1, u1, u2)


RecurrenceVerdict = collections.namedtuple('RecurrenceVerdict', [
    'spec', 'applicability', 'decision', 'witness_prime', 'empirical',
    'note'])
RecurrenceVerdict.__doc__ = """Classification of a binary recurrence

`decision` and `witness_prime` are None unless the classification theorem
applies; `empirical` is always the verdict on the requested prefix."""


def eval_recurrence(spec, num):
    """The first num terms of the recurrence"""
    num = operator.index(num)
    if num < 2:
        raise ValueError('need at least two terms, got {:d}'.format(num))
    return transforms.Sequence(itertools.islice(spec.terms(), num))


def _term_mod(spec, n, mod):
    """`u_n` modulo mod by fast powers of the companion matrix"""
    # [u_{k+1}, u_k] = M^(k-1) [u_2, u_1] with M = [[a, b], [1, 0]]
    res = (1, 0, 0, 1)
    base = (spec.a % mod, spec.b % mod, 1, 0)
    exp = n - 1
    while exp:
        if exp & 1:
            res = _mat_mul(res, base, mod)
        base = _mat_mul(base, base, mod)
        exp >>= 1
    return (res[2] * spec.u2 + res[3] * spec.u1) % mod


def _mat_mul(lhs, rhs, mod):
    """Product of 2x2 matrices stored row major, modulo mod"""
    return ((lhs[0] * rhs[0] + lhs[1] * rhs[2]) % mod,
            (lhs[0] * rhs[1] + lhs[1] * rhs[3]) % mod,
            (lhs[2] * rhs[0] + lhs[3] * rhs[2]) % mod,
            (lhs[2] * rhs[1] + lhs[3] * rhs[3]) % mod)


def witness_prime(spec, *, cap=WITNESS_PRIME_CAP):
    """The smallest prime showing a recurrence is not realizable

    Searches the first `cap` primes for p coprime to `2 b disc` with the
    Legendre symbol `(disc / p) = -1` at which `u_p != u_1 mod p`. Returns
    None if there is none among them.
    """
    disc = spec.discriminant
    bad = 2 * spec.b * disc
    for prime in itertools.islice(arith.primes(), cap):
        if prime == 2 or bad % prime == 0:
            continue
        if arith.jacobi(disc, prime) != -1:
            continue
        if _term_mod(spec, prime, prime) != spec.u1 % prime:
            logging.debug('witness prime %d for %s', prime, spec)
            return prime
    logging.warning('no witness prime among the first %d primes for %s',
                    cap, spec)
    return None


def classify(spec, num, *, cap=WITNESS_PRIME_CAP):
    """Classify a binary recurrence for exact realizability

    Parameters
    ----------
    spec : RecurrenceSpec
        The recurrence.
    num : int
        Length of the prefix checked empirically.
    cap : int, optional
        Number of primes searched for a witness.
    """
    empirical = transforms.check_er(eval_recurrence(spec, num))
    disc = spec.discriminant
    if arith.is_square(disc):
        return RecurrenceVerdict(spec, SQUARE_DISCRIMINANT, None, None,
                                 empirical, None)
    if spec.common_factor != 1:
        return RecurrenceVerdict(spec, COMMON_FACTOR, None, None, empirical,
                                 None)
    if spec.u2 * spec.a == spec.u1 * (spec.a ** 2 + 2 * spec.b):
        return RecurrenceVerdict(spec, THEOREM_APPLIES, IN_ER, None,
                                 empirical, None)
    prime = witness_prime(spec, cap=cap)
    note = None
    if prime is None:
        note = 'no witness prime among the first {:d} primes'.format(cap)
    return RecurrenceVerdict(spec, THEOREM_APPLIES, NOT_IN_ER, prime,
                             empirical, note)


def ratio_family(family, t, s, num):
    """Realizable solutions of recurrences with square discriminant

    `jacobsthal` gives `t trace([[1, 2], [1, 0]]^n) + s |(-2)^n - 1|`, a
    solution of `u_{n+2} = u_{n+1} + 2u_n`. `mersenne` gives `t 2^n + s`, a
    solution of `u_{n+2} = 3u_{n+1} - 2u_n`.
    """
    t = operator.index(t)
    s = operator.index(s)
    if t < 0 or s < 0 or t == s == 0:
        raise ValueError('need t, s >= 0 not both zero, got t={:d} s={:d}'
                         .format(t, s))
    if family == JACOBSTHAL:
        shift = generators.gen_sft_trace(
            generators.MatrixSpec([[1, 2], [1, 0]]), num)
        dual = generators.gen_s_integer_connected(
            generators.SIntegerSpec(-2), num)
        return transforms.Sequence(t * x + s * y for x, y in zip(shift, dual))
    elif family == MERSENNE:
        return transforms.Sequence(t * 2 ** n + s
                                   for n in range(1, num + 1))
    raise ValueError('unknown family {!r}, expected one of {}'.format(
        family, ', '.join(FAMILIES)))


def family_ratio(family, t, s):
    """The initial ratio `u_2 / u_1` of a ratio family member"""
    first, second = ratio_family(family, t, s, 2)
    return fractions.Fraction(second, first)
