"""Test cli"""
import io
import json
import os
import sys
import traceback
from unittest import mock

import jsonschema
import pytest

from periodicorbits import __main__ as main
from periodicorbits import generators


def run(*args):
    """Run a command line and return its exit code"""
    try:
        main.main(*args)
    except SystemExit as ex:
        return int(str(ex) or 0)
    except Exception: # pylint: disable=broad-except
        traceback.print_exc()
        return -1
    return 0


def stdin(inp):
    """Patch stdin with input"""
    return mock.patch.object(sys, 'stdin', io.StringIO(inp))


def stdout():
    """Patch stdout and return stringio"""
    return mock.patch.object(sys, 'stdout', io.StringIO())


def stderr():
    """Patch stderr and return stringio"""
    return mock.patch.object(sys, 'stderr', io.StringIO())


class _Terminal(io.StringIO):
    """A string buffer pretending to be a terminal"""

    def isatty(self):
        return True


def validate_object(obj, obj_schema):
    """Validate a required object schema"""
    jsonschema.validate(obj, {
        'type': 'object',
        'properties': obj_schema,
        'required': list(obj_schema),
    })


VERDICT_SCHEMA = {
    'length': {'type': 'integer'},
    'passed': {'type': 'boolean'},
    'orbit_counts': {'type': ['array', 'null'],
                     'items': {'type': 'integer'}},
    'witness': {'type': ['object', 'null']},
}

GEN_ARGS = [
    ['sft', '--matrix', '1,1;1,0'],
    ['sft', '--matrix', '0,1,1;1,0,1;1,1,2'],
    ['toral', '--matrix', '2,1;1,1'],
    ['binom', '--k', '3', '--j', '1'],
    ['sint', '--xi', '2', '--S', '2,3,5,7'],
    ['sint', '--xi', '3/2', '--S', '2'],
    ['sint0'],
] + [['named', '--name', name] for name in generators.NAMED_SEQUENCES]


def test_help():
    """Test getting help by itself"""
    with stdout(), stderr() as err:
        assert run('-h') == 0, err.getvalue()


@pytest.mark.parametrize('cmd', list(main._COMMANDS)) # pylint: disable=protected-access
def test_cmd_help(cmd):
    """Test getting help from commands"""
    with stdout(), stderr() as err:
        assert run(cmd, '-h') == 0, err.getvalue()


def test_version():
    """Test the version flag"""
    with stdout() as out, stderr():
        assert run('--version') == 0
    assert out.getvalue().startswith('porb ')


def test_usage_errors():
    """Test bad usage exits with 2"""
    with stderr() as err:
        assert run('bogus') == 2
    assert 'porb' in err.getvalue()
    with stderr():
        assert run('gen', 'sft') == 2
    with stderr() as err:
        assert run('gen', 'sft', '--terms', '3', '--matrix', '1,1;1,a') == 2
    assert 'line 1 column 7' in err.getvalue()
    with stderr() as err:
        assert run('rr', '--alpha', '3/0', '--terms', '3') == 2
    assert 'zero denominator' in err.getvalue()
    with stderr():
        assert run('rr', '--alpha', '2', '--beta', '2', '--terms', '3') == 2


def test_gen_sft():
    """Test the golden mean shift"""
    with stdout() as out, stderr() as err:
        assert run('gen', 'sft', '--matrix', '1,1;1,0', '--terms', '6') == 0, \
            err.getvalue()
    assert out.getvalue() == '1,3,4,7,11,18\n'


def test_gen_s_integer():
    """Test the S-integer fixture"""
    with stdout() as out, stderr() as err:
        assert run('gen', 'sint', '--xi', '2', '--S', '2,3,5,7', '--terms',
                   '15') == 0, err.getvalue()
    assert out.getvalue() == (
        '1,1,1,1,31,1,127,17,73,341,2047,13,8191,5461,4681\n')


def test_gen_missing_argument():
    """Test generators name their missing flag"""
    with stderr() as err:
        assert run('gen', 'sft', '--terms', '3') == 2
    assert err.getvalue() == 'porb: error: gen sft needs --matrix\n'
    with stderr() as err:
        assert run('gen', 'toral', '--matrix', '2,0;0,1', '--terms', '3') == 2
    assert err.getvalue().startswith('porb: error: ')


@pytest.mark.parametrize('args', GEN_ARGS)
def test_gen_check(args):
    """Test every generator pipes into a passing check"""
    with stdout() as out, stderr() as err:
        assert run('gen', *args, '--terms', '24') == 0, err.getvalue()
    text = out.getvalue()
    with stdin(text), stdout() as out, stderr() as err:
        assert run('check') == 0, err.getvalue()
    assert out.getvalue().splitlines()[-1] == 'ER-CONSISTENT N=24'

    with stdin(text), stdout() as out, stderr() as err:
        assert run('orbit') == 0, err.getvalue()
    with stdin(out.getvalue()), stdout() as per, stderr() as err:
        assert run('per') == 0, err.getvalue()
    assert per.getvalue() == text


def test_check_fail():
    """Test the fibonacci numbers fail"""
    with stdin('1,1,2,3,5,8\n'), stdout() as out, stderr():
        assert run('check') == 1
    lines = out.getvalue().splitlines()
    assert len(lines) == 2
    assert lines[1] == 'FAIL n=3 reason=not-divisible s=1'
    assert 'n=3' in lines[0]


def test_check_json():
    """Test json verdicts"""
    with stdin('1,1,2,3,5,8\n'), stdout() as out, stderr():
        assert run('check', '--json') == 1
    verdict = json.loads(out.getvalue())
    validate_object(verdict, VERDICT_SCHEMA)
    assert verdict['witness'] == {
        'index': 3, 'value': 1, 'reason': 'not-divisible'}
    with stdin('1,3,4,7\n'), stdout() as out, stderr():
        assert run('check', '-j') == 0
    verdict = json.loads(out.getvalue())
    validate_object(verdict, VERDICT_SCHEMA)
    assert verdict['orbit_counts'] == [1, 1, 1, 1]


def test_check_bold():
    """Test verdict words are emphasised on terminals only"""
    with stdin('1,3\n'), mock.patch.object(sys, 'stdout', _Terminal()) as out:
        with mock.patch.dict(os.environ), stderr():
            os.environ.pop('NO_COLOR', None)
            assert run('check') == 0
    assert '\033[1mER-CONSISTENT\033[0m N=2' in out.getvalue()
    with stdin('1,3\n'), mock.patch.object(sys, 'stdout', _Terminal()) as out:
        with mock.patch.dict(os.environ, {'NO_COLOR': '1'}), stderr():
            assert run('check') == 0
    assert out.getvalue().splitlines()[-1] == 'ER-CONSISTENT N=2'


def test_orbit_fail():
    """Test orbit counts of an unrealizable sequence"""
    with stdin('1,1,2\n'), stdout() as out, stderr() as err:
        assert run('orbit') == 1
    assert not out.getvalue()
    assert err.getvalue() == 'porb: FAIL n=3 reason=not-divisible s=1\n'


def test_fstar():
    """Test least period counts never fail"""
    with stdin('1,1,2,3,5,8\n'), stdout() as out, stderr() as err:
        assert run('fstar') == 0, err.getvalue()
    assert out.getvalue() == '1,0,1,2,4,6\n'


def test_malformed_input():
    """Test malformed sequences report their location"""
    with stdin('1,2,x\n'), stdout(), stderr() as err:
        assert run('check') == 2
    assert err.getvalue() == (
        "porb: error: line 1 column 5: expected an integer, got 'x'\n")
    with stdin('1 1\n3 4\n'), stdout(), stderr() as err:
        assert run('check', '--format', 'bfile') == 2
    assert 'line 2 column 1' in err.getvalue()


def test_bfile_format():
    """Test b-file input and output"""
    with stdin('1 1\n2 1\n3 1\n'), stdout() as out, stderr() as err:
        assert run('per', '-f', 'bfile') == 0, err.getvalue()
    assert out.getvalue() == '1 1\n2 3\n3 4\n'


def test_files(tmp_path):
    """Test reading and writing files"""
    source = tmp_path / 'in.csv'
    source.write_text('1,1,1\n')
    dest = tmp_path / 'out.csv'
    with stderr() as err:
        assert run('per', '--in', str(source), '--out', str(dest)) == 0, \
            err.getvalue()
    assert dest.read_text() == '1,3,4\n'
    with stderr() as err:
        assert run('per', '--in', str(tmp_path / 'missing')) == 2


def test_iterate():
    """Test the iterated rows from delta"""
    with stdout() as out, stderr() as err:
        assert run('iterate', '--delta', '--steps', '3', '--terms', '6') == 0, \
            err.getvalue()
    assert out.getvalue() == (
        '1,0,0,0,0,0\n1,1,1,1,1,1\n1,3,4,7,6,12\n1,7,13,35,31,91\n')


def test_iterate_start(tmp_path):
    """Test iterating from a file and as a table"""
    start = tmp_path / 'start.csv'
    start.write_text('1,1,1,1\n')
    with stdout() as out, stderr() as err:
        assert run('iterate', '--start', str(start), '--steps', '1',
                   '--terms', '3') == 0, err.getvalue()
    assert out.getvalue() == '1,1,1\n1,3,4\n'
    with stdout() as out, stderr() as err:
        assert run('iterate', '--start', str(start), '--steps', '1',
                   '--terms', '3', '--table') == 0, err.getvalue()
    lines = out.getvalue().splitlines()
    assert lines[0].split() == ['k', '1', '2', '3']
    assert lines[-1].split() == ['1', '1', '3', '4']
    with stdout(), stderr():
        assert run('iterate', '--start', str(start), '--steps', '1',
                   '--terms', '5') == 2


def test_classify():
    """Test classification exit codes and output"""
    with stdout() as out, stderr() as err:
        assert run('classify', '--a', '1', '--b', '1', '--u1', '1', '--u2',
                   '1') == 1, err.getvalue()
    assert 'not-in-ER' in out.getvalue()
    with stdout() as out, stderr() as err:
        assert run('classify', '--a', '1', '--b', '1', '--u1', '2', '--u2',
                   '6') == 0, err.getvalue()
    assert 'in-ER' in out.getvalue()
    with stdout() as out, stderr() as err:
        assert run('classify', '--a', '1', '--b', '2', '--u1', '1', '--u2',
                   '5', '--terms', '20') == 0, err.getvalue()
    assert 'square-discriminant' in out.getvalue()
    with stdout() as out, stderr() as err:
        assert run('classify', '--a', '1', '--b', '1', '--u1', '1', '--u2',
                   '1', '--prime-cap', '1') == 1, err.getvalue()
    assert 'note: no witness prime' in out.getvalue()


def test_classify_json():
    """Test json classification"""
    with stdout() as out, stderr() as err:
        assert run('classify', '--a', '1', '--b', '1', '--u1', '1', '--u2',
                   '1', '--json') == 1, err.getvalue()
    verdict = json.loads(out.getvalue())
    validate_object(verdict, {
        'a': {'type': 'integer'},
        'b': {'type': 'integer'},
        'u1': {'type': 'integer'},
        'u2': {'type': 'integer'},
        'discriminant': {'type': 'integer'},
        'applicability': {'type': 'string'},
        'decision': {'type': ['string', 'null']},
        'witness_prime': {'type': ['integer', 'null']},
        'empirical': {'type': 'object'},
        'note': {'type': ['string', 'null']},
    })
    validate_object(verdict['empirical'], VERDICT_SCHEMA)
    assert verdict['witness_prime'] == 3
    assert verdict['decision'] == 'not-in-ER'


def test_family():
    """Test ratio families"""
    with stdout() as out, stderr() as err:
        assert run('family', '--name', 'jacobsthal', '--t', '1', '--s', '0',
                   '--terms', '4') == 0, err.getvalue()
    assert out.getvalue() == '1,5,7,17\n'


def test_conv_and_quot(tmp_path):
    """Test convolutions and quotients of files"""
    ones = tmp_path / 'ones.csv'
    ones.write_text('1,1,1,1\n')
    twos = tmp_path / 'twos.csv'
    twos.write_text('2,2,2,2\n')
    powers = tmp_path / 'powers.csv'
    powers.write_text('2,4,8,16\n')
    with stdout() as out, stderr() as err:
        assert run('conv', '--mode', 'additive', str(ones), str(ones)) == 0, \
            err.getvalue()
    assert out.getvalue() == '1,2,3,4\n'
    with stdout() as out, stderr() as err:
        assert run('conv', '--mode', 'dirichlet', str(ones), str(ones)) == 0, \
            err.getvalue()
    assert out.getvalue() == '1,2,2,3\n'
    with stdout() as out, stderr() as err:
        assert run('quot', str(powers), str(twos)) == 0, err.getvalue()
    assert out.getvalue() == '1,2,4,8\n'
    with stdout(), stderr() as err:
        assert run('quot', str(ones), str(twos)) == 2
    assert err.getvalue().startswith('porb: error: 1 is not divisible by 2')


def test_factor():
    """Test factorization output"""
    with stdin('3,9,27,81\n'), stdout() as out, stderr() as err:
        assert run('factor') == 0, err.getvalue()
    lines = out.getvalue().splitlines()
    assert '1,3,1,3 * 3,3,27,27' in lines
    assert lines[-1] == 'PAIRS={:d} complete=yes'.format(len(lines) - 1)
    with stdin('3,9,27,81\n'), stdout() as out, stderr() as err:
        assert run('factor', '--json', '--max-results', '1') == 0, \
            err.getvalue()
    result = json.loads(out.getvalue())
    validate_object(result, {
        'pairs': {'type': 'array', 'items': {'type': 'object'}},
        'complete': {'type': 'boolean'},
        'nodes': {'type': 'integer'},
    })
    assert len(result['pairs']) == 1
    assert not result['complete']
    validate_object(result['pairs'][0], {
        'b': {'type': 'array', 'items': {'type': 'integer'}},
        'c': {'type': 'array', 'items': {'type': 'integer'}},
        'trivial': {'type': 'boolean'},
    })


def test_refuters():
    """Test refuter lines"""
    with stdout() as out, stderr() as err:
        assert run('refute-poly', '--coeffs', '0,1') == 0, err.getvalue()
    assert out.getvalue() == 'WITNESS n=2\n'
    with stdout() as out, stderr() as err:
        assert run('refute-poly', '--coeffs', '7', '--bound', '50') == 0, \
            err.getvalue()
    assert out.getvalue() == 'NO-WITNESS bound=50\n'
    with stdout() as out, stderr() as err:
        assert run('refute-cm', '--primes', '2:3,3:1', '--bound', '4') == 0, \
            err.getvalue()
    assert out.getvalue() == 'WITNESS n=4\n'
    with stdout(), stderr() as err:
        assert run('refute-cm', '--primes', '2:3', '--bound', '4') == 2
    assert 'prime 3' in err.getvalue()


def test_rr():
    """Test rate realizations"""
    with stdout() as out, stderr() as err:
        assert run('rr', '--alpha', '2', '--terms', '5', '--emit',
                   'both') == 0, err.getvalue()
    assert out.getvalue() == '1,2,3,3,5\n1,5,10,17,26\n'
    with stdout() as out, stderr() as err:
        assert run('rr', '--beta', '2', '--terms', '4') == 0, err.getvalue()
    assert out.getvalue() == '2,4,8,16\n'
    with stdout(), stderr() as err:
        assert run('rr', '--alpha', '1', '--terms', '4') == 2
    assert 'not realizable in rate' in err.getvalue()
    with stdout() as out, stderr() as err:
        assert run('rr', '--alpha', '2', '--terms', '0') == 2
    assert out.getvalue() == ''
    assert 'must be positive' in err.getvalue()


def test_growth():
    """Test growth tables and json"""
    with stdin('1,3,4,7,6,12\n'), stdout() as out, stderr() as err:
        assert run('growth', '--places', '2') == 0, err.getvalue()
    lines = out.getvalue().splitlines()
    assert lines[0].split()[:3] == ['n', 'f_n', 'f*_n']
    assert lines[-1].split()[:5] == ['6', '12', '6', '2.00', '1.00']
    with stdin('1,3,4,7,6,12\n'), stdout() as out, stderr() as err:
        assert run('growth', '--alpha', '2', '--indices', '4,6',
                   '--json') == 0, err.getvalue()
    report = json.loads(out.getvalue())
    validate_object(report, {
        'alpha': {'type': 'string'},
        'records': {'type': 'array', 'items': {'type': 'object'}},
    })
    assert report['alpha'] == '2'
    assert [rec['n'] for rec in report['records']] == [4, 6]
    assert report['records'][0]['tags'] == ['prime-power']
    with stdin('1,3,4\n'), stdout(), stderr() as err:
        assert run('growth', '--indices', '7') == 2
    assert err.getvalue() == 'porb: error: index 7 outside 1..3\n'


def test_pathology():
    """Test pathological least period counts"""
    with stdout() as out, stderr() as err:
        assert run('pathology', '--k', '6') == 0, err.getvalue()
    expected = [2, 2 * 2 ** 8, 3 * 2 ** 27, 4 * 2 ** 64, 5 * 2 ** 125,
                6 * 2 ** 6]
    assert out.getvalue() == ','.join(map(str, expected)) + '\n'
    with stdout() as out, stderr() as err:
        assert run('pathology', '--k', '2', '--sum') == 0, err.getvalue()
    assert out.getvalue() == '2,514\n'


def test_oracle(tmp_path):
    """Test the permutation recount"""
    orbits = tmp_path / 'orbits.csv'
    orbits.write_text('1,1,1\n')
    with stdout() as out, stderr() as err:
        assert run('oracle', '--orbits', str(orbits), '--terms', '6') == 0, \
            err.getvalue()
    assert out.getvalue() == '1,3,4,3,1,6\n'
    with stdout(), stderr() as err:
        assert run('oracle', '--orbits', str(orbits), '--terms', '3',
                   '--max-points', '5') == 2
    assert 'more than 5' in err.getvalue()
    with stdout() as out, stderr() as err:
        assert run('oracle', '--orbits', str(orbits), '--terms', '-1') == 2
    assert out.getvalue() == ''
    assert 'must be positive' in err.getvalue()


def test_lind():
    """Test the relative gap of the cat map"""
    with stdout() as out, stderr() as err:
        assert run('lind', '--matrix', '2,1;1,1', '--n', '20') == 0, \
            err.getvalue()
    line = out.getvalue()
    assert line.startswith('GAP n=20 value=')
    assert float(line.split('approx=')[1]) < 1e-4


def test_necklace():
    """Test brute force necklace counts"""
    with stdout() as out, stderr() as err:
        assert run('necklace', '--k', '2', '--terms', '6') == 0, err.getvalue()
    assert out.getvalue() == '2,1,2,3,6,9\n'


def test_verbose():
    """Test verbosity flags"""
    with stdin('1,1\n'), stdout() as out, stderr():
        assert run('-vv', 'per') == 0
    assert out.getvalue() == '1,3\n'
