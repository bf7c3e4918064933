"""Operations on realizable sequences

Termwise sums and products of realizable sequences are realizable, by
disjoint unions and products of maps. Additive and Dirichlet convolutions
and termwise quotients are not, and the functions here make it easy to
exhibit failures. There is also a search for termwise factorizations into
realizable factors, and refuters showing that polynomials and completely
multiplicative sequences other than the constants are never realizable.
"""
import collections
import logging
import operator

from periodicorbits import arith
from periodicorbits import transforms


DEFAULT_NODE_BUDGET = 10 ** 6


class NonIntegralQuotientError(ValueError):
    """A termwise quotient is not an integer

    The first offending index is available as `index`."""

    def __init__(self, index, numer, denom):
        super().__init__('{:d} is not divisible by {:d} at n={:d}'.format(
            numer, denom, index))
        self.index = index


FactorizationResult = collections.namedtuple(
    'FactorizationResult', ['pairs', 'complete', 'nodes'])
FactorizationResult.__doc__ = """Termwise factorizations of a sequence

`pairs` lists `(b, c)` with `b <= c` lexicographically. `complete` is False
when the node budget or result limit stopped the search with branches left
unexplored."""


def _pair(lhs, rhs):
    """Coerce to sequences of equal length"""
    lhs = transforms.Sequence(lhs)
    rhs = transforms.Sequence(rhs)
    if len(lhs) != len(rhs):
        raise ValueError('sequences must have equal lengths, got {:d} and {:d}'
                         .format(len(lhs), len(rhs)))
    return lhs, rhs


def pointwise_add(lhs, rhs):
    """Termwise sum"""
    lhs, rhs = _pair(lhs, rhs)
    return transforms.Sequence(x + y for x, y in zip(lhs, rhs))


def pointwise_mul(lhs, rhs):
    """Termwise product"""
    lhs, rhs = _pair(lhs, rhs)
    return transforms.Sequence(x * y for x, y in zip(lhs, rhs))


def additive_convolution(lhs, rhs):
    """`sum_{i+j=n+1} lhs_i rhs_j`"""
    lhs, rhs = _pair(lhs, rhs)
    return transforms.Sequence(
        sum(lhs[i] * rhs[n - 1 - i] for i in range(n))
        for n in range(1, len(lhs) + 1))


def dirichlet_convolution(lhs, rhs):
    """`sum_{d|n} lhs_d rhs_{n/d}`"""
    lhs, rhs = _pair(lhs, rhs)
    num = len(lhs)
    res = [0] * (num + 1)
    for d, val in enumerate(lhs, 1):
        if val:
            for k in range(1, num // d + 1):
                res[d * k] += val * rhs[k - 1]
    return transforms.Sequence(res[1:])


def quotient_check(numer, denom):
    """Termwise quotient when every term divides exactly

    Raises
    ------
    NonIntegralQuotientError
        At the first index where the quotient isn't an integer.
    """
    numer, denom = _pair(numer, denom)
    quot = []
    for index, (top, bottom) in enumerate(zip(numer, denom), 1):
        if bottom == 0:
            raise ValueError('division by zero at n={:d}'.format(index))
        if top % bottom:
            raise NonIntegralQuotientError(index, top, bottom)
        quot.append(top // bottom)
    return transforms.Sequence(quot)


def is_multiplicative(seq):
    """Whether `seq_{mn} = seq_m seq_n` for coprime m, n within the prefix"""
    seq = transforms.Sequence(seq)
    if seq and seq[0] != 1:
        return False
    for n in range(2, len(seq) + 1):
        factors = arith.factorize(n)
        if len(factors) < 2:
            continue
        prod = 1
        for prime, mult in factors:
            prod *= seq[prime ** mult - 1]
        if prod != seq[n - 1]:
            return False
    return True


def search_factorizations(seq, max_results=None, *,
                          node_budget=DEFAULT_NODE_BUDGET):
    """Find every termwise factorization into realizable factors

    Depth first over the indices, choosing a divisor `b_n` of `a_n` at each
    step. A branch is cut as soon as the Moebius sum of either factor at the
    current index is negative or not divisible by the index; these only
    depend on earlier indices.

    Parameters
    ----------
    seq : [int]
        A positive realizable prefix.
    max_results : int, optional
        Stop after this many pairs.
    node_budget : int, optional
        Stop after visiting this many partial assignments.
    """
    seq = transforms.Sequence(seq)
    if any(term < 1 for term in seq):
        raise ValueError('factorization needs positive terms')
    verdict = transforms.check_er(seq)
    if not verdict.passed:
        raise ValueError('sequence is not realizable: {}'.format(
            verdict.describe()))
    num = len(seq)
    mu = arith.mobius_table(num)
    # proper divisors d of n with mu(n/d) != 0
    terms = [[(d, mu[n // d]) for d in arith.divisors(n)[:-1] if mu[n // d]]
             for n in range(1, num + 1)]
    choices = [arith.divisors(term) for term in seq]

    pairs = []
    nodes = 0
    # each entry is (b, c, equal so far)
    stack = [((), (), True)]
    while stack:
        lhs, rhs, equal = stack.pop()
        n = len(lhs) + 1
        if n > num:
            pairs.append((transforms.Sequence(lhs), transforms.Sequence(rhs)))
            if max_results is not None and len(pairs) >= max_results:
                return FactorizationResult(pairs, not stack, nodes)
            continue
        nodes += 1
        if nodes > node_budget:
            logging.warning('factorization search hit node budget %d with %d '
                            'pairs', node_budget, len(pairs))
            return FactorizationResult(pairs, False, nodes)
        lhs_base = sum(m * lhs[d - 1] for d, m in terms[n - 1])
        rhs_base = sum(m * rhs[d - 1] for d, m in terms[n - 1])
        term = seq[n - 1]
        children = []
        for left in choices[n - 1]:
            right = term // left
            if equal and left > right:
                break
            lsum = lhs_base + left
            rsum = rhs_base + right
            if lsum < 0 or rsum < 0 or lsum % n or rsum % n:
                continue
            children.append((lhs + (left,), rhs + (right,),
                             equal and left == right))
        stack.extend(reversed(children))
    logging.debug('factorization search visited %d nodes', nodes)
    return FactorizationResult(pairs, True, nodes)


def is_trivial(pair):
    """Whether one factor of a pair is the constant sequence one"""
    return any(all(term == 1 for term in factor) for factor in pair)


def refute_polynomial(coeffs, bound):
    """First index where `(P(n))` fails to be realizable

    Parameters
    ----------
    coeffs : [int]
        Coefficients `c_0, c_1, ...` of P.
    bound : int
        Number of terms examined.

    Returns
    -------
    index : int or None
        None when the prefix up to `bound` shows no failure.
    """
    coeffs = [operator.index(c) for c in coeffs]
    values = []
    for n in range(1, bound + 1):
        value = 0
        for coeff in reversed(coeffs):
            value = value * n + coeff
        if value < 1:
            raise ValueError('polynomial must be positive, P({:d}) = {:d}'
                             .format(n, value))
        values.append(value)
    verdict = transforms.check_er(values)
    return None if verdict.passed else verdict.witness.index


def completely_multiplicative(prime_values, bound):
    """Extend values at primes to a completely multiplicative prefix"""
    values = [1]
    for n in range(2, bound + 1):
        value = 1
        for prime, mult in arith.factorize(n):
            try:
                value *= operator.index(prime_values[prime]) ** mult
            except KeyError:
                raise ValueError('no value given for the prime {:d}'.format(
                    prime))
        values.append(value)
    return transforms.Sequence(values)


def refute_completely_multiplicative(prime_values, bound):
    """First index where a completely multiplicative sequence fails

    Parameters
    ----------
    prime_values : {int: int}
        Positive value at every prime up to `bound`.
    bound : int
        Number of terms examined.
    """
    for prime, value in prime_values.items():
        if value < 1:
            raise ValueError('value at {:d} must be positive, got {:d}'.format(
                prime, value))
    verdict = transforms.check_er(completely_multiplicative(prime_values,
                                                            bound))
    return None if verdict.passed else verdict.witness.index
