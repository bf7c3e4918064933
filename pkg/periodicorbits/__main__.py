"""Module for command line access to periodic orbit arithmetic"""
import argparse
import functools
import io
import json
import logging
import os
import sys

import tabulate

import periodicorbits
from periodicorbits import algebra
from periodicorbits import generators
from periodicorbits import oracle
from periodicorbits import rategrowth
from periodicorbits import recurrence
from periodicorbits import seqio
from periodicorbits import transforms


def _argument(parse):
    """Argparse type that keeps the position of parse errors"""
    @functools.wraps(parse)
    def wrapped(text):
        try:
            return parse(text)
        except ValueError as ex:
            raise argparse.ArgumentTypeError(str(ex))
    return wrapped


_MATRIX = _argument(seqio.parse_matrix)
_RATIONAL = _argument(seqio.parse_rational)
_PRIMES = _argument(seqio.parse_primes)
_PRIME_VALUES = _argument(seqio.parse_prime_values)
_INTS = _argument(seqio.parse_ints)


def main(*argv): # pylint: disable=too-many-statements
    """Entry point for cli with args

    Exits with 0 on success or a passing verdict, 1 on a failing verdict and
    2 on bad usage or input."""
    parser = argparse.ArgumentParser(
        prog='porb', description="""Arithmetic of periodic orbit counts.
        Sequences are read from standard in and written to standard out, so
        commands compose with pipes.""")
    parser.add_argument(
        '--verbose', '-v', action='count', default=0, help="""Sets the
        verbosity of commands. Output is sent to standard error.""")
    parser.add_argument(
        '--version', '-V', action='version',
        version='%(prog)s {}'.format(periodicorbits.__version__))

    base = argparse.ArgumentParser(add_help=False)
    base.add_argument(
        '--out', '-o', metavar='<file>', default='-',
        type=argparse.FileType('w'), help="""File to write output to.
        (default: stdout)""")
    base.add_argument(
        '--format', '-f', choices=seqio.FORMATS, default=seqio.CSV,
        help="""Format of sequences read and written. `csv` is a single line
        of comma separated values, `bfile` has one `n value` pair per line.
        (default: %(default)s)""")
    seq_in = argparse.ArgumentParser(add_help=False, parents=[base])
    seq_in.add_argument(
        '--in', '-i', metavar='<file>', default='-', dest='input',
        type=argparse.FileType('r'), help="""File to read the sequence from.
        (default: stdin)""")
    json_out = argparse.ArgumentParser(add_help=False)
    json_out.add_argument(
        '--json', '-j', action='store_true', help="""Write a single json
        object instead of text.""")

    subparsers = parser.add_subparsers(title='Subcommands', dest='command')
    subparsers.required = True

    subparsers.add_parser(
        'per', parents=[seq_in], help="""Periodic point counts from orbit
        counts.""", description="""Compute `sum_{d|n} d o_d` for the orbit
        counts `o` read from input.""")
    subparsers.add_parser(
        'orbit', parents=[seq_in], help="""Orbit counts from periodic point
        counts.""", description="""Invert the periodic point transform. Exits
        with 1 if the input isn't exactly realizable.""")
    subparsers.add_parser(
        'fstar', parents=[seq_in], help="""Points of least period.""",
        description="""Compute the Moebius sums `sum_{d|n} mu(n/d) f_d`. This
        never fails.""")
    subparsers.add_parser(
        'check', parents=[seq_in, json_out], help="""Test exact
        realizability.""", description="""Test whether the input can count
        the periodic points of some map. Prints a sentence and then either
        `ER-CONSISTENT N=<n>` or `FAIL n=<n> reason=<reason> s=<value>`, and
        exits with 1 on a failure.""")

    parser_gen = subparsers.add_parser(
        'gen', parents=[base], help="""Periodic points of realizing
        systems.""", description="""Generate the periodic point counts of a
        concrete system.""")
    parser_gen.add_argument(
        'kind', choices=('sft', 'toral', 'binom', 'sint', 'sint0', 'named'),
        help="""`sft` is a subshift of finite type, `toral` a toral
        automorphism, `binom` the binomials `C(kn, jn)`, `sint` a connected
        S-integer system, `sint0` the zero dimensional S-integer example and
        `named` a sequence from the algebra of realizable sequences.""")
    parser_gen.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of terms.""")
    parser_gen.add_argument(
        '--matrix', '-m', metavar='<a,b;c,d>', type=_MATRIX,
        help="""Integer matrix for `sft` and `toral`.""")
    parser_gen.add_argument(
        '--k', metavar='<k>', type=int, help="""`k` for `binom`.""")
    parser_gen.add_argument(
        '--j', metavar='<j>', type=int, help="""`j` for `binom`.""")
    parser_gen.add_argument(
        '--xi', metavar='<p/q>', type=_RATIONAL, help="""Rational
        for `sint`.""")
    parser_gen.add_argument(
        '--S', metavar='<p,q,...>', dest='primes', type=_PRIMES,
        default=frozenset(), help="""Primes for `sint`.""")
    parser_gen.add_argument(
        '--name', choices=generators.NAMED_SEQUENCES, help="""Sequence for
        `named`.""")
    parser_gen.add_argument(
        '--param', metavar='<c>', type=int, help="""Optional parameter for
        `named`.""")

    parser_iter = subparsers.add_parser(
        'iterate', parents=[base], help="""Repeatedly apply the periodic point
        transform.""", description="""Print the starting sequence and the
        result of each of `steps` applications of the periodic point
        transform, one per line.""")
    parser_iter.add_argument(
        '--steps', '-k', metavar='<k>', type=int, required=True,
        help="""Number of applications.""")
    parser_iter.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of terms of each row.""")
    parser_start = parser_iter.add_mutually_exclusive_group(required=True)
    parser_start.add_argument(
        '--start', '-s', metavar='<file>', type=argparse.FileType('r'),
        help="""File with the starting sequence.""")
    parser_start.add_argument(
        '--delta', '-d', action='store_true', help="""Start from `1, 0, 0,
        ...`.""")
    parser_iter.add_argument(
        '--table', '-t', action='store_true', help="""Render the rows as a
        table instead.""")

    parser_class = subparsers.add_parser(
        'classify', parents=[base, json_out], help="""Classify a binary
        recurrence.""", description="""Decide whether `u_{n+2} = a u_{n+1} +
        b u_n` is exactly realizable. Exits with 1 if it isn't, or if no
        decision applies and the prefix fails the test.""")
    for flag in ('a', 'b', 'u1', 'u2'):
        parser_class.add_argument(
            '--' + flag, type=int, required=True, help="""`{}` of the
            recurrence.""".format(flag))
    parser_class.add_argument(
        '--terms', '-n', metavar='<n>', type=int, default=30,
        help="""Number of terms checked empirically. (default:
        %(default)s)""")
    parser_class.add_argument(
        '--prime-cap', metavar='<count>', type=int,
        default=recurrence.WITNESS_PRIME_CAP, help="""Number of primes
        searched for a witness. (default: %(default)s)""")

    parser_fam = subparsers.add_parser(
        'family', parents=[base], help="""Realizable recurrences with square
        discriminant.""", description="""Generate `t` times the realizing
        sequence plus `s` times its companion.""")
    parser_fam.add_argument(
        '--name', choices=recurrence.FAMILIES, required=True,
        help="""Family.""")
    parser_fam.add_argument('--t', type=int, required=True, help="""`t`""")
    parser_fam.add_argument('--s', type=int, required=True, help="""`s`""")
    parser_fam.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of terms.""")

    parser_conv = subparsers.add_parser(
        'conv', parents=[base], help="""Convolve two sequences.""",
        description="""Additive or Dirichlet convolution of two sequences of
        equal length.""")
    parser_conv.add_argument(
        '--mode', choices=('additive', 'dirichlet'), required=True,
        help="""Which convolution.""")
    parser_conv.add_argument(
        'lhs', metavar='<a-file>', type=argparse.FileType('r'),
        help="""First sequence.""")
    parser_conv.add_argument(
        'rhs', metavar='<b-file>', type=argparse.FileType('r'),
        help="""Second sequence.""")

    parser_quot = subparsers.add_parser(
        'quot', parents=[base], help="""Divide two sequences termwise.""",
        description="""Termwise quotient, an error unless every term
        divides.""")
    parser_quot.add_argument(
        'lhs', metavar='<a-file>', type=argparse.FileType('r'),
        help="""Numerators.""")
    parser_quot.add_argument(
        'rhs', metavar='<b-file>', type=argparse.FileType('r'),
        help="""Denominators.""")

    parser_fact = subparsers.add_parser(
        'factor', parents=[seq_in, json_out], help="""Factor a sequence
        termwise into realizable sequences.""", description="""Print every
        pair `b * c` of realizable sequences with product the input, one pair
        per line, followed by whether the search was complete.""")
    parser_fact.add_argument(
        '--max-results', metavar='<m>', type=int, help="""Stop after this
        many pairs.""")
    parser_fact.add_argument(
        '--budget', metavar='<nodes>', type=int,
        default=algebra.DEFAULT_NODE_BUDGET, help="""Stop after visiting
        this many partial factorizations. (default: %(default)s)""")

    parser_poly = subparsers.add_parser(
        'refute-poly', parents=[base], help="""Find where a polynomial stops
        being realizable.""", description="""Print `WITNESS n=<n>` for the
        first failing index of `(P(n))`, or `NO-WITNESS bound=<n>`.""")
    parser_poly.add_argument(
        '--coeffs', metavar='<c0,c1,...>', type=_INTS,
        required=True, help="""Coefficients from the constant term up.""")
    parser_poly.add_argument(
        '--bound', metavar='<n>', type=int, default=100, help="""Number of
        terms examined. (default: %(default)s)""")

    parser_cm = subparsers.add_parser(
        'refute-cm', parents=[base], help="""Find where a completely
        multiplicative sequence stops being realizable.""",
        description="""Print `WITNESS n=<n>` for the first failing index, or
        `NO-WITNESS bound=<n>`.""")
    parser_cm.add_argument(
        '--primes', metavar='<p:v,...>', type=_PRIME_VALUES,
        required=True, help="""Values at every prime up to the bound.""")
    parser_cm.add_argument(
        '--bound', metavar='<n>', type=int, default=100, help="""Number of
        terms examined. (default: %(default)s)""")

    parser_rr = subparsers.add_parser(
        'rr', parents=[base], help="""Realize a sequence in rate.""",
        description="""Construct a map with periodic points asymptotic to
        `floor(n^alpha)` or `floor(beta^n)`.""")
    parser_rate = parser_rr.add_mutually_exclusive_group(required=True)
    parser_rate.add_argument(
        '--alpha', metavar='<p/q>', type=_RATIONAL,
        help="""Polynomial exponent, bigger than one.""")
    parser_rate.add_argument(
        '--beta', metavar='<p/q>', type=_RATIONAL, help="""Base of
        exponential growth, at least one.""")
    parser_rr.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of terms.""")
    parser_rr.add_argument(
        '--emit', choices=('orbits', 'per', 'both'), default='per',
        help="""Which sequences to print, orbits first. (default:
        %(default)s)""")

    parser_growth = subparsers.add_parser(
        'growth', parents=[seq_in, json_out], help="""Growth statistics of
        periodic points.""", description="""Tabulate `f_n / n^alpha`,
        `f*_n / n^alpha` and the logarithmic growth rates.""")
    parser_growth.add_argument(
        '--alpha', metavar='<p/q>', type=_RATIONAL, default='1',
        help="""Polynomial scale. (default: %(default)s)""")
    parser_growth.add_argument(
        '--indices', metavar='<n,...>', type=_INTS, help="""Only
        report these indices.""")
    parser_growth.add_argument(
        '--places', metavar='<digits>', type=int,
        default=rategrowth.DECIMAL_PLACES, help="""Decimal places of the
        statistics. (default: %(default)s)""")

    parser_path = subparsers.add_parser(
        'pathology', parents=[base], help="""Least period counts with
        pathological growth.""", description="""Print the least period
        counts, or with `--sum` the periodic point counts, of a map whose
        logarithmic growth rate has infinitely many limit points.""")
    parser_path.add_argument(
        '--k', metavar='<k>', type=int, required=True, help="""Number of
        terms.""")
    parser_path.add_argument(
        '--sum', action='store_true', help="""Print periodic point counts
        instead.""")

    parser_oracle = subparsers.add_parser(
        'oracle', parents=[base], help="""Recount periodic points of a
        permutation.""", description="""Build a permutation with the given
        orbit counts and count its periodic points by iteration. Orbit
        counts past the end of the file are zero.""")
    parser_oracle.add_argument(
        '--orbits', metavar='<file>', type=argparse.FileType('r'),
        required=True, help="""File with orbit counts.""")
    parser_oracle.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of iterates counted.""")
    parser_oracle.add_argument(
        '--max-points', metavar='<points>', type=int,
        default=oracle.MAX_POINTS, help="""Largest permutation built.
        (default: %(default)s)""")

    parser_lind = subparsers.add_parser(
        'lind', parents=[base], help="""Relative gap between periodic points
        and points of least period.""", description="""Print `1 - f*_n / f_n`
        exactly and as a decimal for a matrix system.""")
    parser_lind.add_argument(
        '--matrix', '-m', metavar='<a,b;c,d>', type=_MATRIX,
        required=True, help="""Integer matrix.""")
    parser_lind.add_argument(
        '--kind', choices=('toral', 'sft'), default='toral', help="""How the
        matrix acts. (default: %(default)s)""")
    parser_lind.add_argument(
        '--n', metavar='<n>', type=int, required=True, help="""Index.""")

    parser_neck = subparsers.add_parser(
        'necklace', parents=[base], help="""Count aperiodic necklaces by
        brute force.""", description="""Print the number of Lyndon words of
        each length over `k` letters.""")
    parser_neck.add_argument(
        '--k', metavar='<k>', type=int, required=True, help="""Alphabet
        size.""")
    parser_neck.add_argument(
        '--terms', '-n', metavar='<n>', type=int, required=True,
        help="""Number of lengths.""")

    args = parser.parse_args(argv or None)
    logging.basicConfig(stream=sys.stderr,
                        level=30 - 10 * min(args.verbose, 2))

    try:
        status = _COMMANDS[args.command](args)
    except (ValueError, OSError) as ex:
        sys.stderr.write('porb: error: {}\n'.format(ex))
        sys.exit(2)
    finally:
        _close(args)
    sys.exit(status or 0)


def _close(args):
    """Close files opened for arguments, leaving the standard streams"""
    for value in vars(args).values():
        if (isinstance(value, io.IOBase) and
                value not in (sys.stdin, sys.stdout, sys.stderr)):
            value.close()


def _read(args, stream=None):
    """Read a sequence in the selected format"""
    return seqio.parse_sequence((stream or args.input).read(), args.format)


def _write(args, seq):
    args.out.write(seqio.render_sequence(seq, args.format))


def _json(args, obj):
    json.dump(obj, args.out)
    args.out.write('\n')


def _bold(args, word):
    """Emphasise verdict words on terminals"""
    if 'NO_COLOR' in os.environ or not args.out.isatty():
        return word
    return '\033[1m{}\033[0m'.format(word)


def _verdict_json(verdict):
    witness = None
    if not verdict.passed:
        witness = dict(zip(('index', 'value', 'reason'), verdict.witness))
    return {
        'length': verdict.length,
        'passed': verdict.passed,
        'orbit_counts': (None if verdict.orbit_counts is None
                         else list(verdict.orbit_counts)),
        'witness': witness,
    }


def _per(args):
    _write(args, transforms.per_transform(_read(args)))


def _orbit(args):
    verdict = transforms.check_er(_read(args))
    if not verdict.passed:
        sys.stderr.write('porb: {}\n'.format(verdict.summary()))
        return 1
    _write(args, verdict.orbit_counts)


def _fstar(args):
    _write(args, transforms.least_period_counts(_read(args)))


def _check(args):
    verdict = transforms.check_er(_read(args))
    if args.json:
        _json(args, _verdict_json(verdict))
    else:
        args.out.write(verdict.describe() + '\n')
        word, _, rest = verdict.summary().partition(' ')
        args.out.write('{} {}\n'.format(_bold(args, word), rest))
    return 0 if verdict.passed else 1


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError('gen {} needs --{}'.format(args.kind, name))


def _gen(args):
    if args.kind in ('sft', 'toral'):
        _require(args, 'matrix')
        if args.kind == 'sft':
            seq = generators.gen_sft_trace(generators.MatrixSpec(
                args.matrix, generators.NONNEG), args.terms)
        else:
            seq = generators.gen_toral_det(generators.MatrixSpec(
                args.matrix, generators.INVERTIBLE), args.terms)
    elif args.kind == 'binom':
        _require(args, 'k', 'j')
        seq = generators.gen_binomial(generators.BinomialSpec(args.k, args.j),
                                      args.terms)
    elif args.kind == 'sint':
        _require(args, 'xi')
        seq = generators.gen_s_integer_connected(generators.SIntegerSpec(
            args.xi, args.primes), args.terms)
    elif args.kind == 'sint0':
        seq = generators.gen_s_integer_zero_dim_example(args.terms)
    else:
        _require(args, 'name')
        seq = generators.gen_named(args.name, args.param, args.terms)
    _write(args, seq)


def _iterate(args):
    if args.delta:
        start = transforms.delta(args.terms)
    else:
        start = _read(args, args.start)
        if len(start) < args.terms:
            raise ValueError('start has {:d} terms, fewer than {:d}'.format(
                len(start), args.terms))
        start = start[:args.terms]
    rows = transforms.iterate_per(start, args.steps)
    if args.table:
        args.out.write(tabulate.tabulate(
            [[k] + list(row) for k, row in enumerate(rows)],
            headers=['k'] + list(range(1, args.terms + 1))) + '\n')
    else:
        for row in rows:
            _write(args, row)


def _classify(args):
    spec = recurrence.RecurrenceSpec(args.a, args.b, args.u1, args.u2)
    verdict = recurrence.classify(spec, args.terms, cap=args.prime_cap)
    if args.json:
        _json(args, {
            'a': spec.a, 'b': spec.b, 'u1': spec.u1, 'u2': spec.u2,
            'discriminant': spec.discriminant,
            'applicability': verdict.applicability,
            'decision': verdict.decision,
            'witness_prime': verdict.witness_prime,
            'empirical': _verdict_json(verdict.empirical),
            'note': verdict.note,
        })
    else:
        args.out.write(tabulate.tabulate([
            ['discriminant', spec.discriminant],
            ['applicability', verdict.applicability],
            ['decision', _bold(args, verdict.decision or '-')],
            ['witness prime', verdict.witness_prime or '-'],
            ['empirical', verdict.empirical.summary()],
        ], tablefmt='plain') + '\n')
        if verdict.note:
            args.out.write('note: {}\n'.format(verdict.note))
    if verdict.decision is None:
        return 0 if verdict.empirical.passed else 1
    return 0 if verdict.decision == recurrence.IN_ER else 1


def _family(args):
    _write(args, recurrence.ratio_family(args.name, args.t, args.s,
                                         args.terms))


def _conv(args):
    lhs = _read(args, args.lhs)
    rhs = _read(args, args.rhs)
    if args.mode == 'additive':
        _write(args, algebra.additive_convolution(lhs, rhs))
    else:
        _write(args, algebra.dirichlet_convolution(lhs, rhs))


def _quot(args):
    _write(args, algebra.quotient_check(_read(args, args.lhs),
                                        _read(args, args.rhs)))


def _factor(args):
    result = algebra.search_factorizations(
        _read(args), args.max_results, node_budget=args.budget)
    if args.json:
        _json(args, {
            'pairs': [{'b': list(b), 'c': list(c),
                       'trivial': algebra.is_trivial((b, c))}
                      for b, c in result.pairs],
            'complete': result.complete,
            'nodes': result.nodes,
        })
        return
    for lhs, rhs in result.pairs:
        args.out.write('{} * {}\n'.format(','.join(map(str, lhs)),
                                          ','.join(map(str, rhs))))
    args.out.write('PAIRS={:d} complete={}\n'.format(
        len(result.pairs), 'yes' if result.complete else 'no'))


def _witness(args, index):
    if index is None:
        args.out.write('NO-WITNESS bound={:d}\n'.format(args.bound))
    else:
        args.out.write('WITNESS n={:d}\n'.format(index))


def _refute_poly(args):
    _witness(args, algebra.refute_polynomial(args.coeffs, args.bound))


def _refute_cm(args):
    _witness(args, algebra.refute_completely_multiplicative(args.primes,
                                                            args.bound))


def _rr(args):
    if args.alpha is not None:
        orbits, per = rategrowth.rr_construct_power(args.alpha, args.terms)
    else:
        orbits, per = rategrowth.rr_construct_geometric(args.beta, args.terms)
    if args.emit in ('orbits', 'both'):
        _write(args, orbits)
    if args.emit in ('per', 'both'):
        _write(args, per)


def _growth(args):
    report = rategrowth.growth_report(_read(args), args.alpha, args.indices)
    if args.json:
        _json(args, report.to_json(args.places))
    else:
        args.out.write(tabulate.tabulate(
            report.rows(args.places), headers=report.columns,
            disable_numparse=True) + '\n')


def _pathology(args):
    least = rategrowth.gen_pathological_orbit_growth(args.k)
    _write(args, rategrowth.pathology_f(least) if args.sum else least)


def _oracle(args):
    orbits = _read(args, args.orbits)[:args.terms]
    perm = oracle.build_permutation(orbits, max_points=args.max_points)
    _write(args, oracle.fixed_point_counts(perm, args.terms))


def _lind(args):
    kind = (generators.INVERTIBLE if args.kind == 'toral'
            else generators.NONNEG)
    spec = generators.MatrixSpec(args.matrix, kind)
    if args.kind == 'toral':
        per = generators.gen_toral_det(spec, args.n)
    else:
        per = generators.gen_sft_trace(spec, args.n)
    gap = transforms.lind_gap(per, args.n)
    args.out.write('GAP n={:d} value={} approx={:.3e}\n'.format(
        args.n, gap, float(gap)))


def _necklace(args):
    _write(args, [oracle.count_lyndon_words(args.k, n)
                  for n in range(1, args.terms + 1)])


_COMMANDS = {
    'per': _per,
    'orbit': _orbit,
    'fstar': _fstar,
    'check': _check,
    'gen': _gen,
    'iterate': _iterate,
    'classify': _classify,
    'family': _family,
    'conv': _conv,
    'quot': _quot,
    'factor': _factor,
    'refute-poly': _refute_poly,
    'refute-cm': _refute_cm,
    'rr': _rr,
    'growth': _growth,
    'pathology': _pathology,
    'oracle': _oracle,
    'lind': _lind,
    'necklace': _necklace,
}


if __name__ == '__main__':  # pragma: no cover
    main()
