# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

'''
The tubular command line. Every invocation prints one report (JSON by
default) and exits with 0 when verified or separated, 1 when a check
failed or was inconclusive and 2 on usage or domain errors.

Negative rationals that are not integers must be attached to their flag,
e.g. ``--t=-1/2``.
'''

import argparse
import logging
import os.path
import random
import sys
import time

from tubular.algebra.arith import parse_rational
from tubular.algebra.poly import render
from tubular.cli.parse import parse_expression
from tubular.cli.report import Report, VERIFIED, FAILED, NON_EQUIVALENT, INCONCLUSIVE, ERROR
from tubular.geometry import families
from tubular.geometry.families import instantiate_family
from tubular.geometry.levi import levi_signature, random_point, signature_scan
from tubular.invariants.chi import chi, chi_inverse, chi_monotone_scan, BRANCHES
from tubular.invariants.jinvariant import j_of_ct, phi_derivative_at_zero, phi_monotone_scan, \
    phi_of_cube_identity, reciprocity_check, reciprocity_identity, weierstrass_reduce
from tubular.invariants.quartics import gl2r_separate
from tubular.maps.automorphisms import catalog_entry
from tubular.maps.homogeneity import homogeneity_round_trip, homogenize_at
from tubular.maps.separation import graded_separation
from tubular.maps.sphericity import verify_catalog, verify_quadric_to_tube, verify_sphericity
from tubular.util import conf
from tubular.util.exceptions import TubularError, catch
from tubular.util.log import configure_logging
import tubular


logger = logging.getLogger(__name__)


report_dir = conf.String(None, desc='A directory each report is also written to.')
report_format = conf.Enum('json', choices=('json', 'text'), desc='The format of printed reports.')
seed = conf.Int(0, desc='The seed of every sampled grid of random base points.')


class CommandError(TubularError, ValueError):
    pass



MAPS = {
    'M1': 'phi1',
    'M2': 'phi2',
    'Pt': 'pt',
    'CalPt': 'calpt',
    'St': 'st',
}

FAMILY_PARAMS = ('k', 'n', 'p', 't', 'tau', 'a', 'b', 'c', 'd')


def family_params(args):
    return {name: getattr(args, name) for name in FAMILY_PARAMS if getattr(args, name, None) is not None}


def parse_binding(text):
    '''
    A key=value family parameter, integral for k, n and p.
    '''
    try:
        key, value = text.split('=', 1)
    except ValueError:
        raise CommandError('%r is not formatted as "key=value"' % text)
    key = key.strip()
    if key not in FAMILY_PARAMS:
        raise CommandError('Unknown family parameter %r, use one of %s' % (key, ', '.join(FAMILY_PARAMS)))
    try:
        return key, int(value) if key in 'knp' else parse_rational(value)
    except ValueError as exc:
        raise CommandError('Invalid value for %s: %s' % (key, exc)) from exc


def parse_point(text):
    return [parse_rational(value) for value in text.split(',')]


def family_base(args):
    if not args.family:
        raise CommandError('%s needs --family' % args.command)
    params = family_params(args)
    if getattr(args, 'symbolic', False) and any(params.get(name) is not None for name in ('t', 'tau')):
        raise CommandError('--symbolic excludes values for t and tau')
    return instantiate_family(args.family, **params)



def families_command(args):
    if not args.family:
        return VERIFIED, dict(families=list(families.TAGS)), None
    base = family_base(args)
    values = dict(family=base.describe(), n=base.n, F=render(base.F), tower=repr(base.spec))
    return VERIFIED, values, None


def verify_sphericity_command(args):
    if not args.family:
        results = verify_catalog()
        values = {label: VERIFIED if result.verified else FAILED for label, result in results}
        residual_terms = sum(result.residual_terms for _, result in results)
        return VERIFIED if all(result.verified for _, result in results) else FAILED, values, residual_terms
    params = family_params(args)
    if args.family == 'QuadricTube':
        result = verify_quadric_to_tube(params.get('k', 2), params.get('n', 3))
    elif args.family in MAPS:
        if getattr(args, 'symbolic', False) and params.get('t') is not None:
            raise CommandError('--symbolic excludes a value for t')
        result = verify_sphericity(*catalog_entry(MAPS[args.family], **params))
    else:
        raise CommandError('No automorphism is known for %s, use one of %s'
                           % (args.family, ', '.join(sorted(MAPS) + ['QuadricTube'])))
    values = {}
    if not result.verified:
        values['residual'] = render(result.residual)
    return VERIFIED if result.verified else FAILED, values, result.residual_terms


def verify_homogeneity_command(args):
    base = family_base(args)
    passed, results = homogeneity_round_trip(base, args.count, args.seed)
    values = dict(points=[', '.join(map(str, r.point)) for r in results],
                  failures=sum(1 for r in results if not (r.fixed and r.origin)))
    return VERIFIED if passed else FAILED, values, None


def trace_command(args):
    base = family_base(args)
    if args.point:
        x = parse_point(args.point)
    else:
        x = random_point(random.Random(tubular.conf['tubular.cli.run.seed'] if args.seed is None else args.seed),
                         base.n)
    q = base.point_over(x)
    m, trace = homogenize_at(base, q)
    values = dict(point=', '.join(map(str, q)), steps=[str(step) for step in trace],
                  fixes_origin=m.apply_point(q) == (base.spec.zero,) * (base.n + 1))
    return VERIFIED, values, None


def signature_command(args):
    base = family_base(args)
    if args.scan:
        agree, reports = signature_scan(base, args.at, args.count, args.seed)
        values = dict(signatures=['%s at (%s)' % (r, ', '.join(map(str, r.point))) for r in reports])
        return VERIFIED if agree else FAILED, values, None
    point = parse_point(args.point) if args.point else None
    report = levi_signature(base, point, args.at)
    values = dict(signature=str(report), positives=report.positives, negatives=report.negatives,
                  zeros=report.zeros)
    return VERIFIED, values, None


def _invariants(invariants):
    return dict(I=invariants.I, J=invariants.J, disc=invariants.disc)


def separate_quartics_command(args):
    result = gl2r_separate(args.t1, args.t2)
    values = dict(first=_invariants(result.first), second=_invariants(result.second), witness=result.witness)
    return NON_EQUIVALENT if result.separated else INCONCLUSIVE, values, None


def separate_bases_command(args):
    bases = []
    for spec in (args.first, args.second):
        tag, *bindings = spec
        bases.append(instantiate_family(tag, **dict(parse_binding(b) for b in bindings)))
    result = graded_separation(*bases)
    values = dict(first=bases[0].describe(), second=bases[1].describe(), witness=result.witness)
    if result.detail is not None:
        values['quartics'] = dict(first=_invariants(result.detail.first), second=_invariants(result.detail.second))
    return NON_EQUIVALENT if result.separated else INCONCLUSIVE, values, None


def j_invariant_command(args):
    values = dict(j=j_of_ct(args.t))
    if args.weierstrass:
        reduction = weierstrass_reduce(args.t)
        values.update(model=dict(reduction.model._asdict()), scale=reduction.scale, C=reduction.C)
    return VERIFIED, values, None


def phi_scan_command(args):
    result = phi_monotone_scan(args.lo, args.hi, args.samples)
    values = dict(samples=result.samples, violation=result.violation, phi_prime_at_zero=phi_derivative_at_zero())
    return VERIFIED if result.monotone else FAILED, values, None


def _chi_argument(text):
    value = parse_expression(text).constant_value()
    if value is None:
        raise CommandError('Expected a constant, got %s' % text)
    if value.is_ground() and value.ground().is_ground:
        return value.to_fraction()
    return value


def chi_command(args):
    if args.scan:
        result = chi_monotone_scan(args.lo, args.hi, args.samples)
        values = dict(samples=result.samples, violation=result.violation)
        return VERIFIED if result.monotone else FAILED, values, None
    if args.tau is not None:
        if not args.branch:
            raise CommandError('chi --tau needs --branch, one of %s' % ', '.join(BRANCHES))
        return VERIFIED, dict(t=chi_inverse(args.tau, args.branch)), None
    if args.t is None:
        raise CommandError('chi needs --t, --tau or --scan')
    return VERIFIED, dict(chi=chi(_chi_argument(args.t))), None


def reciprocity_command(args):
    if args.t is not None:
        holds = reciprocity_check(args.t)
        return VERIFIED if holds else FAILED, dict(product_is_1728_squared=holds), None
    identities = dict(reciprocity=reciprocity_identity(), phi_of_cube=phi_of_cube_identity())
    return VERIFIED if all(identities.values()) else FAILED, identities, None


def render_command(args):
    p = parse_expression(args.expression)
    return VERIFIED, dict(polynomial=render(p), tower=repr(p.spec)), None



argparser = argparse.ArgumentParser(prog='tubular', description='Exact verification for tube hypersurfaces.')
argparser.add_argument('--conf', action='append', metavar='KEY=VALUE',
                       help='tubular configuration in "key=value" format, may be repeated')
argparser.add_argument('--config', help='an ini file with tubular configuration')
argparser.add_argument('--format', choices=('json', 'text'), help='the report format')
argparser.add_argument('-v', '--verbose', action='count', default=0,
                       help='log at INFO, DEBUG or TRACE level when given once, twice or three times')

subparsers = argparser.add_subparsers(dest='command', metavar='command')
subparsers.required = True

family_parser = argparse.ArgumentParser(add_help=False)
family_parser.add_argument('--family', choices=families.TAGS)
family_parser.add_argument('--k', type=int)
family_parser.add_argument('--n', type=int)
family_parser.add_argument('--p', type=int)
for name in ('t', 'tau', 'a', 'b', 'c', 'd'):
    family_parser.add_argument('--%s' % name, type=parse_rational, help='rational value of %s, symbolic when '
                                                                        'left out' % name)
family_parser.add_argument('--symbolic', action='store_true', help='keep all parameters symbolic')

sampling_parser = argparse.ArgumentParser(add_help=False)
sampling_parser.add_argument('--count', type=int, help='the number of random base points')
sampling_parser.add_argument('--seed', type=int, help='the seed of the random base points')


def _command(name, handler, help, parents=()):
    parser = subparsers.add_parser(name, help=help, parents=list(parents))
    parser.set_defaults(handler=handler)
    return parser


_command('families', families_command, 'list the families or show one', [family_parser])
_command('verify-sphericity', verify_sphericity_command,
         'verify the automorphism of a family, or the whole catalog', [family_parser])
_command('verify-homogeneity', verify_homogeneity_command,
         'homogenize at random base points and check the round trip', [family_parser, sampling_parser])

trace_parser = _command('trace', trace_command, 'show the normalization steps at a base point',
                        [family_parser, sampling_parser])
trace_parser.add_argument('--point', help='comma separated coordinates x1,...,xn')

signature_parser = _command('signature', signature_command, 'the Levi signature of a family',
                            [family_parser, sampling_parser])
signature_parser.add_argument('--point', help='comma separated coordinates x1,...,xn')
signature_parser.add_argument('--at', type=parse_rational, help='the value bound to a symbolic parameter')
signature_parser.add_argument('--scan', action='store_true', help='compare the origin with random points')

quartics_parser = _command('separate-quartics', separate_quartics_command, 'separate q_t1 and q_t2 under GL2(R)')
quartics_parser.add_argument('--t1', type=parse_rational, required=True)
quartics_parser.add_argument('--t2', type=parse_rational, required=True)

bases_parser = _command('separate-bases', separate_bases_command, 'separate two bases by their graded parts')
bases_parser.add_argument('--first', nargs='+', required=True, metavar='TAG [key=value]')
bases_parser.add_argument('--second', nargs='+', required=True, metavar='TAG [key=value]')

j_parser = _command('j-invariant', j_invariant_command, 'the j-invariant of the cubic c_t')
j_parser.add_argument('--t', type=parse_rational, help='rational t, symbolic when left out')
j_parser.add_argument('--weierstrass', action='store_true', help='also show the Weierstrass model')

phi_parser = _command('phi-scan', phi_scan_command, 'check that phi increases on a rational grid')
phi_parser.add_argument('--lo', type=parse_rational, default=-1)
phi_parser.add_argument('--hi', type=parse_rational, default=1)
phi_parser.add_argument('--samples', type=int)

chi_parser = _command('chi', chi_command, 'evaluate chi, its inverse or scan its monotonicity')
chi_parser.add_argument('--t', help='t >= 1, e.g. 4 or 17+12*sqrt(2)')
chi_parser.add_argument('--tau', type=parse_rational)
chi_parser.add_argument('--branch', choices=BRANCHES)
chi_parser.add_argument('--scan', action='store_true')
chi_parser.add_argument('--lo', type=parse_rational, default=1)
chi_parser.add_argument('--hi', type=parse_rational, default=100)
chi_parser.add_argument('--samples', type=int)

reciprocity_parser = _command('reciprocity', reciprocity_command,
                              'check j(t)j(-18/t) = 1728^2, or the identities in Q(s) and Q(t)')
reciprocity_parser.add_argument('--t', type=parse_rational)

render_parser = _command('render', render_command, 'parse an expression and print its canonical form')
render_parser.add_argument('expression')


def update_config(args):
    conf = tubular.conf
    if args.config:
        conf.read_file(args.config)
    conf.update(*(args.conf or ()))
    if args.format:
        conf['tubular.cli.run.report_format'] = args.format


def command_echo(args):
    skip = ('conf', 'config', 'format', 'verbose', 'handler')
    return {key: value for key, value in sorted(vars(args).items()) if key not in skip and value not in (None, False)}


def run(args):
    '''
    Run the command of parsed arguments.

    :return: Report
    '''
    logger.info('running %s', args.command)
    start = time.perf_counter()
    try:
        verdict, values, residual_terms = args.handler(args)
        error = None
    except (TubularError, ValueError, ArithmeticError) as exc:
        logger.debug('%s failed', args.command, exc_info=True)
        verdict, values, residual_terms, error = ERROR, None, None, str(exc)
    except Exception as exc:
        logger.exception('%s failed unexpectedly', args.command)
        verdict, values, residual_terms = ERROR, None, None
        error = 'internal error: %s: %s' % (type(exc).__name__, exc)
    elapsed_ms = (time.perf_counter() - start) * 1000
    report = Report(command_echo(args), verdict, values, residual_terms, error, round(elapsed_ms, 3))
    logger.info('%s: %s', args.command, verdict)
    return report


def write_report(report, fmt):
    directory = tubular.conf['tubular.cli.run.report_dir']
    if not directory:
        return None
    path = os.path.join(directory, '%s.%s' % (report.command['command'], 'json' if fmt == 'json' else 'txt'))
    with catch(OSError, log_level=logging.WARNING):
        os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            f.write(report.render(fmt) + '\n')
        return path


def main(args=None):
    args = argparser.parse_args(args)
    configure_logging(args.verbose)
    try:
        update_config(args)
        fmt = tubular.conf['tubular.cli.run.report_format']
    except (OSError, ValueError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2

    report = run(args)
    print(report.render(fmt))
    write_report(report, fmt)
    if report.error:
        print('error: %s' % report.error, file=sys.stderr)
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
