# -*- coding: utf-8 -*-
"""
orthopack.cli

Command line front end. Subcommands:

- ``construct``: builds a named set and writes it as JSON
- ``verify``: runs a check on a stored set
- ``finite``: the discrete cube of Z_p^2 x Z_q^2 x Z_r^2 and its lift
- ``report``: renders stored certificates as text or CSV

Exit codes are 0 (pass), 1 (fail), 2 (undecidable), 64 (usage) and 74
(input/output).
"""

import argparse
import json
import logging
import sys

import yaml

import orthopack
from orthopack import _call_with_settings
from orthopack import constants as c
from orthopack import constructions, cube, finite, verify
from orthopack.certificate import Certificate
from orthopack.constructions.families import FamilySet
from orthopack.cube import as_vector
from orthopack.exceptions import (BoundExceeded, BranchLimit, NotOrthogonal,
                                  Undecidable, UnsupportedFamily, UsageError)
from orthopack.finite.intervals import lifted_maximality, few_zeros_sampling
from orthopack.finite.mask import MaskPolynomial
from orthopack.io import report as report_io
from orthopack.io.json import dumps, read_json, write_json
from orthopack.io.workspace import Workspace

logger = logging.getLogger(__name__)

set_checks = ('maximal', 'incomplete', 'affine-cover', 'discretized')
point_checks = ('orthogonal', 'packing', 'coordinate', 'slab', 'spectrum1d',
                'embed2d')
finite_checks = ('maximal', 'orthogonal', 'spectrum', 'tiling', 'mask',
                 'overflow', 'few-zeros', 'lifted', 'greedy', 'lemma')
finite_sets = ('h0', 'gamma0', 'lambda0', 'lift')
#: Earlier check names accepted by ``verify --check``
check_aliases = {'shift': 'coordinate', 'cover': 'affine-cover'}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser raising UsageError instead of exiting"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO with -v, DEBUG with -vv.')
    common.add_argument('--config', help='Workspace YAML file.')
    common.add_argument('--witness', action='append', default=[],
                        metavar='NAME=PRESET',
                        help='Witness preset of a symbol, e.g. '
                             'alpha=sqrt2/2. Repeatable.')
    common.add_argument('--seed', type=int,
                        help='Seed of random samplers (default: 0).')
    common.add_argument('--window', type=int,
                        help='Truncation window (default: 5).')
    common.add_argument('--kmax', type=int,
                        help='Truncation parameter bound (default: 5).')
    common.add_argument('--timings', action='store_true',
                        help='Record timings in reports.')
    return common


def build_parser():
    """Argument parser of the ``orthopack`` command"""
    common = _common_parser()
    parser = _Parser(prog='orthopack',
                     description='Maximal orthogonal sets of exponentials for '
                                 'the unit cube and unions of intervals.')
    parser.add_argument('--version', action='version',
                        version='orthopack {}'.format(orthopack.__version__))
    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)

    construct = subparsers.add_parser(
        'construct', parents=[common],
        help='Build a named set and write it as JSON.')
    construct.add_argument('name', metavar='NAME[:D]',
                           help='One of {}. D is the dimension of lattice, '
                                'empty and gamma.'
                                ''.format(', '.join(constructions.presets)))
    construct.add_argument('--times', action='append', default=[],
                           metavar='NAME[:D]',
                           help='Right factor of a product. Repeatable.')
    construct.add_argument('--lift', type=int, metavar='M',
                           help='Lift the set by M dimensions.')
    construct.add_argument('--without', type=int, metavar='INDEX',
                           help='Delete one family (a mutant).')
    construct.add_argument('--out', help='Output JSON file of the set.')
    construct.add_argument('--points',
                           help='Output JSON file of the truncation.')

    check = subparsers.add_parser(
        'verify', parents=[common], help='Run a check on a stored set.')
    check.add_argument('--set', dest='set_file', required=True,
                       help='Set or points JSON file.')
    check.add_argument('--check', action='append', required=True,
                       choices=(set_checks + point_checks
                                + tuple(check_aliases)),
                       help='Check to run. Repeatable.')
    check.add_argument('--inner-window', type=int, dest='inner_window',
                       help='Window of the coordinate and slab checks '
                            '(default: 3).')
    check.add_argument('--branch-limit', type=int, dest='branch_limit',
                       help='Node cap of the maximality engine.')
    check.add_argument('--fallback', action='store_true',
                       help='Use a discretized search for unsupported '
                            'families (evidence only).')
    check.add_argument('--radius', type=int,
                       help='Integer radius of the discretized search.')
    check.add_argument('--report', help='Output JSON report.')

    group = subparsers.add_parser(
        'finite', parents=[common],
        help='Discrete cube of Z_p^2 x Z_q^2 x Z_r^2 and its lift to R.')
    p, q, r = c.default('primes')
    group.add_argument('--p', type=int, default=p)
    group.add_argument('--q', type=int, default=q)
    group.add_argument('--r', type=int, default=r)
    group.add_argument('--emit', choices=finite_sets,
                       help='Set written to --out (or printed).')
    group.add_argument('--verify', action='append', default=[],
                       choices=finite_checks, help='Check to run. Repeatable.')
    group.add_argument('--samples', type=int,
                       help='Draws of the few-zeros sampling.')
    group.add_argument('--denominators', type=int, nargs='+',
                       help='Trial denominators of the lifted check '
                            '(default: N 2N 3N 7N).')
    group.add_argument('--moduli', type=int, nargs=2, default=[6, 6],
                       help='Group of the lemma oracle (default: 6 6).')
    group.add_argument('--trials', type=int, default=1000,
                       help='Trials of the lemma oracle (default: 1000).')
    group.add_argument('--out', help='Output JSON file of the emitted set.')
    group.add_argument('--report', help='Output JSON report.')

    render = subparsers.add_parser(
        'report', parents=[common],
        help='Render stored certificates as text or CSV.')
    render.add_argument('files', nargs='+', help='JSON reports.')
    render.add_argument('--format', choices=('text', 'csv'), default='text')
    render.add_argument('--out', help='Output file (default: stdout).')
    return parser


def _configure_logging(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def _workspace(args):
    """Workspace of the config file with command line overrides"""
    if args.config:
        workspace = Workspace.from_yaml(args.config)
    else:
        workspace = Workspace()
    for assignment in args.witness:
        name, sep, preset = assignment.partition('=')
        if not sep:
            err_msg = ('Invalid witness assignment: "{}". Use name=preset.'
                       ''.format(assignment))
            raise UsageError(err_msg)
        c.parse_preset(preset.strip())
        workspace.symbols[name.strip()] = preset.strip()
    for setting in ('window', 'kmax', 'seed'):
        value = getattr(args, setting)
        if value is not None:
            setattr(workspace, setting, value)
    return workspace


def _preset(text, workspace):
    name, _, dimension = text.partition(':')
    try:
        builder = constructions.presets[name]
    except KeyError:
        err_msg = ('Invalid set name: {}. Accepted names are {}.'
                   ''.format(name, ', '.join(constructions.presets)))
        raise UsageError(err_msg)
    dimension = int(dimension) if dimension else workspace.dimension
    return _call_with_settings(builder, dimension=dimension)


def set_artifact(F):
    """JSON-ready dictionary of a FamilySet with its schema tag"""
    obj_dict = F.to_dict()
    obj_dict['schema'] = c.schemas['familyset']
    return obj_dict


def points_artifact(points, dimension):
    return {'schema': c.schemas['points'], 'dimension': dimension,
            'points': [as_vector(v) for v in points]}


def load_set(filename):
    """Reads a set or points artifact

    Returns
    -------
        F : FamilySet or None
        points : list of Vector or None
    """
    obj = read_json(filename)
    if isinstance(obj, FamilySet):
        return obj, None
    if isinstance(obj, dict) and 'points' in obj:
        return None, [as_vector(v) for v in obj['points']]
    err_msg = '{} holds neither a set nor a list of points.'.format(filename)
    raise UsageError(err_msg)


def _write_report(report, filename, workspace):
    if filename is None:
        return
    write_json(report, workspace.output_path(filename))


def _print_certificates(report):
    for label, cert in sorted(report.certificates.items()):
        tag = ' (evidence)' if cert.evidence_only else ''
        line = '{}: {}{}'.format(label, cert.verdict, tag)
        if cert.witness is not None:
            line += ' witness={}'.format(dumps(cert.witness, indent=None))
        print(line)


def construct(args, workspace):
    F = _preset(args.name, workspace)
    for factor in args.times:
        F = constructions.product(F, _preset(factor, workspace))
    if args.lift is not None:
        F = constructions.lift(F, args.lift)
    if args.without is not None:
        if not 0 <= args.without < len(F.families):
            err_msg = ('Family index {} is out of range for a set with {} '
                       'families.'.format(args.without, len(F.families)))
            raise UsageError(err_msg)
        F = F.without(args.without)
    workspace.check_symbols(F)
    if args.out:
        write_json(set_artifact(F), workspace.output_path(args.out))
    points = F.truncate(workspace.window, workspace.kmax)
    if args.points:
        write_json(points_artifact(points, F.dimension),
                   workspace.output_path(args.points))
    print('{}: dimension {}, {} families, {} points at window {} and kmax {}'
          ''.format(F.name or 'set', F.dimension, len(F.families),
                    len(points), workspace.window, workspace.kmax))
    return 0


def _embed2d(S):
    try:
        spectrum = constructions.embed_square(S)
    except NotOrthogonal as error:
        return Certificate(kind='embed_square', verdict='fail',
                           details={'reason': str(error)})
    return Certificate(kind='embed_square', verdict='pass',
                       witness=spectrum, details={'size': len(S)})


_checks = {
    'maximal': verify.is_maximal,
    'incomplete': verify.incompleteness_evidence,
    'discretized': verify.discretized_extension_search,
    'orthogonal': cube.pairwise_orthogonal,
    'packing': cube.is_packing,
    'coordinate': verify.coordinate_shift_check,
    'slab': verify.slab_check,
    'spectrum1d': verify.one_dim_spectrum_check,
    'embed2d': _embed2d,
}


def run_check(name, F=None, points=None, **kwargs):
    """Runs one named check of ``orthopack verify``

    Parameters
    ----------
        name : str
            Check name
        F : FamilySet, optional
            Required by 'maximal', 'incomplete', 'affine-cover' and
            'discretized'
        points : list of Vector, optional
            Points of the point checks. Taken from kwargs['window'] and
            kwargs['kmax'] truncation of F if not given
        kwargs : keyword arguments
            Passed to the check when it names them
    Returns
    -------
        certificate : Certificate
    """
    name = check_aliases.get(name, name)
    if name in set_checks and F is None:
        err_msg = ('Check "{}" needs a set file, not a points file.'
                   ''.format(name))
        raise UsageError(err_msg)
    if name == 'affine-cover':
        cover = constructions.affine_cover(F)
        S = F.truncate(kwargs['window'], kwargs['kmax'])
        certificate = verify.affine_cover_check(S, cover)
        certificate.details['declared_dimension'] = \
            constructions.affine_dimension(cover)
        return certificate
    if points is None and F is not None:
        points = F.truncate(kwargs['window'], kwargs['kmax'])
    kwargs = dict(kwargs)
    kwargs.pop('kmax', None)
    kwargs['window'] = kwargs.pop('inner_window', None)
    return _call_with_settings(_checks[name], F=F, S=points, **kwargs)


def verify_set(args, workspace):
    F, points = load_set(args.set_file)
    if F is not None:
        workspace.check_symbols(F)
    report = report_io.Report(command=['orthopack'] + list(args.argv),
                              seed=workspace.seed,
                              record_timings=args.timings)
    report.add_input(args.set_file)
    witness = workspace.witness()
    for name in args.check:
        name = check_aliases.get(name, name)
        logger.info('Running check %s on %s', name, args.set_file)
        with report.timed(name):
            certificate = run_check(
                name, F=F, points=points, window=workspace.window,
                kmax=workspace.kmax, inner_window=args.inner_window,
                witness=witness, branch_limit=args.branch_limit,
                fallback=args.fallback, radius=args.radius)
        report.add(name, certificate)
    _write_report(report, args.report, workspace)
    _print_certificates(report)
    return report.exit_code


def _finite_set(name, p, q, r):
    if name == 'h0':
        return finite.discrete_cube(p, q, r)
    if name == 'gamma0':
        return finite.gamma0(p, q, r)
    return finite.lambda0(p, q, r)


def finite_artifact(name, p, q, r):
    """JSON-ready dictionary of an emitted finite set"""
    obj_dict = {'schema': c.schemas['finite'], 'primes': [p, q, r],
                'N': (p*q*r)**2, 'set': name}
    if name == 'lift':
        H, Lambda, Gamma = finite.lift_to_R(p, q, r)
        obj_dict.update({'H': H, 'Lambda': Lambda, 'Gamma': Gamma,
                         'H_runs': [list(run) for run in H.merged()],
                         'Lambda_unit': Lambda.points(0, 1),
                         'Gamma_unit': Gamma.points(0, 1)})
    else:
        elements = sorted(_finite_set(name, p, q, r))
        obj_dict.update({'moduli': [p*p, q*q, r*r], 'size': len(elements),
                         'elements': [list(x) for x in elements],
                         'residues': finite.phi_set(p, q, r, elements)})
    return obj_dict


def _mask_agreement(p, q, r):
    """Compares the mask polynomial zeros of phi(H0) with the predicate"""
    N = (p*q*r)**2
    P = MaskPolynomial.from_set(finite.phi_set(p, q, r,
                                               finite.discrete_cube(p, q, r)),
                                N)
    exact = P.zero_mask()
    is_zero = finite.ft_zero_set_H0(p, q, r)
    mismatches = [k for k in range(N)
                  if exact[k] != is_zero(finite.phi_inverse(p, q, r, k))]
    return Certificate.from_bool('mask_agreement', not mismatches,
                                 witness=mismatches[:20],
                                 details={'residues': N,
                                          'mismatches': len(mismatches),
                                          'dft_mismatches':
                                              len(P.dft_agreement())})


def _finite_check(name, args, workspace):
    p, q, r = args.p, args.q, args.r
    G = finite.FiniteGroup.cube_group(p, q, r)
    H0 = finite.discrete_cube(p, q, r)
    zero = finite.zero_mask_H0(p, q, r)
    if name == 'maximal':
        Lambda = finite.lambda0(p, q, r)
        certificate = finite.exhaustive_maximality(Lambda, zero, G)
        certificate.details.update({
            'cube_size': len(H0),
            'pq+qr+rp': p*q + q*r + r*p,
            '3qr': 3*q*r,
            'pqr': p*q*r,
            'incomplete': len(Lambda) < p*q + q*r + r*p < 3*q*r <= p*q*r,
        })
        return certificate
    if name == 'orthogonal':
        return finite.group_pairwise_orthogonal(finite.lambda0(p, q, r),
                                                zero, G)
    if name == 'spectrum':
        return finite.spectrum_check(finite.gamma0(p, q, r), zero, H0, G)
    if name == 'tiling':
        tiles = finite.gamma0(p, q, r)
        return Certificate.from_bool('tiling',
                                     finite.tiling_check(H0, tiles, G),
                                     details={'tiles': len(tiles)})
    if name == 'mask':
        return _mask_agreement(p, q, r)
    if name == 'overflow':
        holds, largest, chain = finite.no_overflow_check(p, q, r,
                                                         verbose=True)
        chain['largest'] = largest
        return Certificate.from_bool('no_overflow', holds, details=chain)
    if name == 'few-zeros':
        return few_zeros_sampling(p, q, r, samples=args.samples,
                                  seed=workspace.seed)
    if name == 'lifted':
        return lifted_maximality(p, q, r, denominators=args.denominators,
                                 samples=args.samples, seed=workspace.seed)
    if name == 'greedy':
        _, certificate = finite.greedy_maximal_extension(
            [(0, 0, 0)], zero, G, target_size=len(H0), seed=workspace.seed)
        return certificate
    return verify.lemma_two_subgroups_oracle(moduli=tuple(args.moduli),
                                             trials=args.trials,
                                             seed=workspace.seed)


def finite_group(args, workspace):
    p, q, r = args.p, args.q, args.r
    finite.discrete_cube(p, q, r)
    if args.emit:
        artifact = finite_artifact(args.emit, p, q, r)
        if args.out:
            write_json(artifact, workspace.output_path(args.out))
        else:
            print(dumps(artifact))
    report = report_io.Report(command=['orthopack'] + list(args.argv),
                              seed=workspace.seed,
                              record_timings=args.timings)
    for name in args.verify:
        with report.timed(name):
            report.add(name, _finite_check(name, args, workspace))
    _write_report(report, args.report, workspace)
    _print_certificates(report)
    if not args.emit and not args.verify:
        print('N = {}, |H0| = {}, |Gamma0| = {}, |Lambda0| = {}'
              ''.format((p*q*r)**2, p*q*r, p*q*r,
                        len(finite.lambda0(p, q, r))))
    return report.exit_code


def render_reports(args, workspace):
    certificates = {}
    for filename in args.files:
        for label, cert in report_io.load_certificates(filename).items():
            key = label if len(args.files) == 1 else '{}:{}'.format(filename,
                                                                   label)
            certificates[key] = cert
    out = report_io.render(certificates, fmt=args.format)
    if args.out:
        with open(workspace.output_path(args.out), 'w',
                  encoding='utf-8') as f_ptr:
            f_ptr.write(out)
    else:
        sys.stdout.write(out)
    return 0


_commands = {
    'construct': construct,
    'verify': verify_set,
    'finite': finite_group,
    'report': render_reports,
}


def run(argv=None):
    """Runs the command line interface

    Parameters
    ----------
        argv : list of str, optional
            Arguments without the program name. Default is sys.argv[1:]
    Returns
    -------
        exit_code : int
            0 pass, 1 fail, 2 undecidable, 64 usage error, 74 I/O error
    """
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return c.exit_codes['usage']
        args.argv = list(argv)
        _configure_logging(args.verbose)
        workspace = _workspace(args)
        return _commands[args.command](args, workspace)
    except (Undecidable, BranchLimit, BoundExceeded,
            UnsupportedFamily) as error:
        print('undecidable: {}'.format(error), file=sys.stderr)
        return c.exit_codes['undecidable']
    except (OSError, json.JSONDecodeError, yaml.YAMLError) as error:
        print('I/O error: {}'.format(error), file=sys.stderr)
        return c.exit_codes['io']
    except (UsageError, ValueError, KeyError) as error:
        print('usage error: {}'.format(error), file=sys.stderr)
        return c.exit_codes['usage']


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
