"""Text formats for sequences and command line arguments

Sequences are read and written either as a single line of comma separated
values, or as b-files with one `n value` pair per line, indices contiguous
from one and `#` starting a comment.
"""
import fractions
import re

from periodicorbits import arith
from periodicorbits import transforms


CSV = 'csv'
BFILE = 'bfile'
FORMATS = (CSV, BFILE)

_INT = re.compile(r'[+-]?\d+\Z')


class ParseError(ValueError):
    """Malformed text, located by one based line and column"""

    def __init__(self, line, column, message):
        super().__init__('line {:d} column {:d}: {}'.format(
            line, column, message))
        self.line = line
        self.column = column


def _int(token, line, column):
    if not _INT.match(token):
        raise ParseError(line, column, 'expected an integer, got {!r}'.format(
            token))
    return int(token)


def _fields(text, sep, offset=1):
    """Split text on sep, yielding stripped fields with their columns"""
    column = offset
    for field in text.split(sep):
        stripped = field.strip()
        yield stripped, column + len(field) - len(field.lstrip())
        column += len(field) + len(sep)


def parse_csv(text):
    """A sequence from one line of comma separated integers"""
    lines = [(num, line) for num, line in enumerate(text.splitlines(), 1)
             if line.strip()]
    if not lines:
        raise ParseError(1, 1, 'empty sequence')
    if len(lines) > 1:
        raise ParseError(lines[1][0], 1, 'csv sequences are a single line')
    num, line = lines[0]
    return transforms.Sequence(_int(field, num, col)
                               for field, col in _fields(line, ','))


def parse_bfile(text):
    """A sequence from `n value` lines starting at n = 1"""
    terms = []
    for num, line in enumerate(text.splitlines(), 1):
        content = line.split('#', 1)[0]
        if not content.strip():
            continue
        parts = content.split()
        if len(parts) != 2:
            raise ParseError(num, 1, 'expected "n value", got {!r}'.format(
                content.strip()))
        index_col = content.index(parts[0]) + 1
        end = index_col - 1 + len(parts[0])
        value_col = content.index(parts[1], end) + 1
        index = _int(parts[0], num, index_col)
        if index != len(terms) + 1:
            raise ParseError(num, index_col, 'expected index {:d}, got {:d}'
                             .format(len(terms) + 1, index))
        terms.append(_int(parts[1], num, value_col))
    if not terms:
        raise ParseError(1, 1, 'empty sequence')
    return transforms.Sequence(terms)


def parse_sequence(text, fmt=CSV):
    """Parse text in either format"""
    if fmt == CSV:
        return parse_csv(text)
    elif fmt == BFILE:
        return parse_bfile(text)
    raise ValueError('unknown format {!r}'.format(fmt))


def render_sequence(seq, fmt=CSV):
    """Text of a sequence ending in a newline"""
    if fmt == CSV:
        return ','.join(map(str, seq)) + '\n'
    elif fmt == BFILE:
        return ''.join('{:d} {:d}\n'.format(n, val)
                       for n, val in enumerate(seq, 1))
    raise ValueError('unknown format {!r}'.format(fmt))


def parse_ints(text):
    """Comma separated integers such as polynomial coefficients"""
    return [_int(field, 1, col) for field, col in _fields(text, ',')]


def parse_matrix(text):
    """A square integer matrix written row by row as `a,b;c,d`"""
    rows = []
    for row, col in _fields(text, ';'):
        rows.append([_int(field, 1, fcol)
                     for field, fcol in _fields(row, ',', col)])
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise ParseError(1, 1, 'matrix {!r} is not square'.format(text))
    return rows


def parse_rational(text):
    """A rational written `p/q` or an integer"""
    text = text.strip()
    num, sep, den = text.partition('/')
    top = _int(num.strip(), 1, 1)
    bottom = _int(den.strip(), 1, len(num) + 2) if sep else 1
    if bottom == 0:
        raise ParseError(1, len(num) + 2, 'zero denominator')
    return fractions.Fraction(top, bottom)


def parse_primes(text):
    """A set of primes such as `2,3,5`, possibly empty"""
    if not text.strip():
        return frozenset()
    primes = set()
    for field, col in _fields(text, ','):
        prime = _int(field, 1, col)
        if not arith.is_prime(prime):
            raise ParseError(1, col, '{:d} is not a prime'.format(prime))
        primes.add(prime)
    return frozenset(primes)


def parse_prime_values(text):
    """Values at primes written `2:3,3:1`"""
    values = {}
    for field, col in _fields(text, ','):
        prime, sep, value = field.partition(':')
        if not sep:
            raise ParseError(1, col, 'expected "prime:value", got {!r}'.format(
                field))
        prime = _int(prime.strip(), 1, col)
        if not arith.is_prime(prime):
            raise ParseError(1, col, '{:d} is not a prime'.format(prime))
        values[prime] = _int(value.strip(), 1, col + field.index(':') + 1)
    return values
