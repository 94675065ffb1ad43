"""
Command line interface.

Every command writes its results into an output directory together with a ``manifest.json`` which records the
command, all parameters, the integrator step, the package version and the SHA-256 digests of the written files.
``squeezehelpers rerun <manifest>`` replays a manifest and compares the digests.

Exit codes: 0 success, 1 rerun produced different files, 2 usage error, 3 invalid design, 4 integration failure.
"""
import argparse
import logging
import math
import os
import re
import sys
import tempfile
from fractions import Fraction

import numpy as np

import squeezehelpers
from squeezehelpers import configuration
from squeezehelpers.errors import MalformedDesignError, IntegrationError, NonSymplecticError, \
    IntersectionNotFoundError
from squeezehelpers.export import write_raster, write_curves, write_profile, write_trajectories, write_shadow, \
    write_json, read_json, sha256_file
from squeezehelpers.symplectic import AmplitudeProfile, classify
from squeezehelpers.mathieu import OPERATION_INTERVAL, MathieuParams, mathieu_profile, ScanGrid, strutt_map, \
    CurveKind, trace_curve, find_intersection
from squeezehelpers.design import GammaFunction, ThetaDesign, solve_coefficients, coefficient_audit, \
    beta_from_theta, design_profile, validate_design, suitability
from squeezehelpers.packets import GaussianPacket, trajectory_congruence, uncertainty_shadow, shadow_multiplier
from squeezehelpers.units import PhysicalContext, TrapDrive, trap_to_dimensionless, required_voltages

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DESIGN_INVALID = 3
EXIT_INTEGRATION = 4

MANIFEST_NAME = 'manifest.json'

# keys of the parsed arguments which do not influence the results
_RUN_KEYS = ('func', 'out', 'manifest', 'verbose', 'quiet')

_PI_PATTERN = re.compile(r'^([+-]?[0-9]*\.?[0-9]*)\*?pi(?:/([0-9]+\.?[0-9]*))?$')


def parse_number(text):
    """
    Parse a finite number given as decimal, fraction (``9/5``) or multiple of pi (``-pi/2``, ``35pi/32``).

    :raises argparse.ArgumentTypeError: If the text is not a finite number.
    """
    compact = str(text).strip().lower().replace(' ', '')
    value = None
    try:
        value = float(Fraction(compact))
    except (ValueError, ZeroDivisionError):
        match = _PI_PATTERN.match(compact)
        if match:
            factor, divisor = match.groups()
            try:
                factor = float(factor + '1') if factor in ('', '+', '-') else float(factor)
                value = factor * math.pi / (float(divisor) if divisor else 1.)
            except (ValueError, ZeroDivisionError):
                value = None
    if value is None or not math.isfinite(value):
        raise argparse.ArgumentTypeError('invalid number: %r' % text)
    return value


def parse_packets(text):
    """
    Parse ``"q0,p0[,kappa];..."`` into a list of :class:`GaussianPacket`.
    """
    packets = []
    for item in str(text).split(';'):
        if not item.strip():
            continue
        try:
            values = [parse_number(x) for x in item.split(',')]
        except argparse.ArgumentTypeError:
            raise argparse.ArgumentTypeError('invalid packet %r' % item)
        if len(values) not in (2, 3):
            raise argparse.ArgumentTypeError('packets are given as q0,p0[,kappa], got %r' % item)
        try:
            packets.append(GaussianPacket(*values))
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))
    if not packets:
        raise argparse.ArgumentTypeError('no packet given')
    return packets


def parse_gamma(text):
    try:
        return GammaFunction.from_string(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text):
    value = parse_number(text)
    if value <= 0:
        raise argparse.ArgumentTypeError('must be positive, got %r' % text)
    return value


def _output(args, name):
    return os.path.join(args.out, name)


def _sample_taus(interval, n_samples):
    return np.linspace(interval[0], interval[1], n_samples)


def _source_profile(args, interval):
    """
    The amplitude profile selected by ``--design``, ``--mathieu`` or ``--beta``.
    """
    if args.design is not None:
        design = ThetaDesign.from_dict(read_json(args.design))
        domain = (-math.pi / 2, math.pi / 2)
        if args.extend:
            domain = (min(domain[0], *interval), max(domain[1], *interval))
        return design_profile(design, domain), design
    if args.mathieu is not None:
        return mathieu_profile(MathieuParams(*args.mathieu)), None
    return AmplitudeProfile.constant(args.beta), None


def cmd_scan(args):
    """
    Raster of the evolution matrices over a grid of Mathieu parameters and the squeeze curves.
    """
    step = configuration.scan_step if args.step is None else args.step
    grid = ScanGrid(args.beta0_range, args.beta1_range, args.grid, args.interval)
    parallel = args.parallel or None

    smap = strutt_map(grid, step, parallel, args.max_workers)
    outputs = {'raster': write_raster(_output(args, 'raster.csv'), smap)}

    summary = {'grid': grid.as_dict(), 'counts': smap.counts(), 'flagged': smap.flagged_count, 'intersection': None}
    if smap.flagged_count:
        logger.warning('%d grid nodes were flagged as integration failures', smap.flagged_count)

    if not args.skip_curves:
        curves = [trace_curve(kind, grid, step, parallel=parallel, max_workers=args.max_workers)
                  for kind in (CurveKind.U12_ZERO, CurveKind.U21_ZERO)]
        outputs['curves'] = write_curves(_output(args, 'curves.csv'), curves)
        summary['curve_points'] = {c.kind.value: len(c) for c in curves}
        try:
            params, matrix = find_intersection(*curves)
            summary['intersection'] = {'beta0': params.beta0, 'beta1': params.beta1, 'lambda': matrix.u11,
                                       'inverse_lambda': matrix.u22, 'matrix': matrix.to_list()}
            print('Intersection at beta0 = %.6f, beta1 = %.6f: lambda = %.6f, 1/lambda = %.6f' %
                  (params.beta0, params.beta1, matrix.u11, matrix.u22))
        except IntersectionNotFoundError as e:
            logger.info('%s', e)
            print('No intersection of the squeeze curves in the scanned region')

    outputs['summary'] = write_json(_output(args, 'summary.json'), summary)
    counts = ', '.join('%s %d' % item for item in sorted(smap.counts().items()))
    print('Scanned %d x %d nodes: %s' % (grid.shape[0], grid.shape[1], counts))
    return EXIT_OK, outputs, step


def cmd_design(args):
    """
    Solve, validate and sample a designed amplitude.
    """
    step = configuration.step if args.step is None else args.step
    design = solve_coefficients(args.b, args.c, args.beta_end, args.gamma_end, args.gamma, args.third_derivative)
    outputs = {'design': write_json(_output(args, 'design.json'), design.to_dict())}

    interval = tuple(args.extension) if args.extension else (-math.pi / 2, math.pi / 2)
    taus = _sample_taus(interval, args.samples)
    outputs['profile'] = write_profile(_output(args, 'profile.csv'), taus, beta_from_theta(design, taus),
                                       design.gamma(taus), design(taus))

    report = validate_design(design, step=step)
    result = {'design': design.to_dict(), 'report': report.as_dict(),
              'audit': coefficient_audit(args.b, args.c, args.beta_end, design.gamma_end,
                                         args.third_derivative)._asdict()}
    if report.condition1_ok:
        suitable, diagnostics = suitability(design, step=step)
        result['suitable'] = suitable
        result['min_beta'] = diagnostics.min_beta
        result['sign_changes'] = diagnostics.sign_changes
    else:
        result['suitable'] = False
    outputs['report'] = write_json(_output(args, 'report.json'), result)

    print(repr(design))
    print('Conditions: %s, residuals %.3g / %.3g / %.3g' % ('satisfied' if report.ok else 'VIOLATED',
                                                          report.condition1_residual, report.condition2_residual,
                                                          report.condition3_residual))
    if report.endpoint_matrix is not None:
        print('Propagated u(pi/2, -pi/2) = %s' % report.endpoint_matrix.to_list())
    print('Verdict: %s' % ('suitable' if result['suitable'] else 'not suitable'))
    return (EXIT_OK if report.ok else EXIT_DESIGN_INVALID), outputs, step


def cmd_propagate(args):
    """
    Centre trajectories of packets and the final evolution matrix.
    """
    step = configuration.step if args.step is None else args.step
    interval = tuple(args.interval)
    profile, _ = _source_profile(args, interval)

    congruence = trajectory_congruence(profile, interval, args.packets, args.samples, step)
    outputs = {'trajectories': write_trajectories(_output(args, 'trajectories.csv'), congruence)}

    final = congruence.family.final
    report = classify(final)
    outputs['final'] = write_json(_output(args, 'final.json'), {
        'interval': list(interval),
        'matrix': final.to_list(),
        'classification': report.as_dict(),
        'packets': [pk.as_dict() for pk in args.packets]
    })
    print('u(%.6g, %.6g) = %s' % (interval[1], interval[0], final.to_list()))
    print('Regime %s, trace %.6g, q factor %.6g' % (report.regime.value, report.gamma_trace, final.u11))
    return EXIT_OK, outputs, step


def cmd_shadow(args):
    """
    Uncertainty shadow of a packet.
    """
    step = configuration.step if args.step is None else args.step
    interval = tuple(args.interval)
    profile, _ = _source_profile(args, interval)
    packet = args.packet[0]
    w = shadow_multiplier(args.probability) if args.w is None else args.w

    band = uncertainty_shadow(profile, interval, packet, w, args.samples, step)
    outputs = {'shadow': write_shadow(_output(args, 'shadow.csv'), band)}
    print('Shadow with w = %.6g reaches |q| = %.6g' % (w, band.max_extent))
    return EXIT_OK, outputs, step


def _load_context(args):
    if args.context is None:
        if args.wavelength is not None:
            return PhysicalContext.from_radio_wavelength(args.wavelength, r0=args.r0)
        return PhysicalContext.proton(r0=args.r0)
    if args.context.lstrip().startswith('{'):
        import json
        data = json.loads(args.context)
    else:
        data = read_json(args.context)
    if not isinstance(data, dict):
        raise ValueError('Context must be a JSON object')
    return PhysicalContext.from_dict(data)


def cmd_units(args):
    """
    Conversion between trap voltages and Mathieu parameters.
    """
    ctx = _load_context(args)
    result = {'context': ctx.to_dict(), 'direction': args.direction, 'energy_scale_eV': ctx.energy_scale_ev,
              'voltage_scale_V': ctx.voltage_scale, 'time_scale_s': ctx.time_scale}
    if args.direction == 'to-dimensionless':
        drive = TrapDrive(args.phi0, args.phi1)
        params = trap_to_dimensionless(ctx, drive)
        if args.q is not None or args.p is not None:
            result['phase_space'] = list(ctx.to_dimensionless(args.q or 0., args.p or 0.))
    else:
        params = MathieuParams(args.beta0, args.beta1)
        drive = required_voltages(ctx, params)
        if args.q is not None or args.p is not None:
            result['phase_space'] = list(ctx.to_physical(args.q or 0., args.p or 0.))
    result['drive'] = drive.as_dict()
    result['params'] = {'beta0': params.beta0, 'beta1': params.beta1}

    outputs = {'conversion': write_json(_output(args, 'conversion.json'), result)}
    print('%r <-> %r (energy scale %.6g eV)' % (drive, params, ctx.energy_scale_ev))
    return EXIT_OK, outputs, None


COMMANDS = {
    'scan': cmd_scan,
    'design': cmd_design,
    'propagate': cmd_propagate,
    'shadow': cmd_shadow,
    'units': cmd_units
}


def _manifest(command, params, step, outputs, out):
    return {
        'command': command,
        'params': params,
        'step': step,
        'configuration': configuration.as_dict(),
        'version': squeezehelpers.__version__,
        'outputs': {key: {'file': os.path.relpath(path, out), 'sha256': sha256_file(path)}
                    for key, path in sorted(outputs.items())}
    }


def _params(args):
    return {key: value for key, value in sorted(vars(args).items()) if key not in _RUN_KEYS}


def _execute(command, args):
    if args.profile is not None:
        configuration.set_target_profile(args.profile)
    os.makedirs(args.out, exist_ok=True)
    code, outputs, step = COMMANDS[command](args)
    manifest = _manifest(command, _params(args), step, outputs, args.out)
    write_json(args.manifest or _output(args, MANIFEST_NAME), manifest)
    return code, manifest


def _restore(params):
    """
    Turn manifest parameters back into parsed arguments.
    """
    args = argparse.Namespace(**params)
    for key in ('packets', 'packet'):
        if getattr(args, key, None) is not None:
            setattr(args, key, [GaussianPacket(**pk) for pk in getattr(args, key)])
    if getattr(args, 'gamma', None) is not None and isinstance(args.gamma, dict):
        args.gamma = GammaFunction.from_dict(args.gamma)
    return args


def cmd_rerun(args):
    """
    Replay a manifest and compare the digests of the regenerated files.
    """
    manifest = read_json(args.manifest_file)
    try:
        command = manifest['command']
        params = manifest['params']
    except (KeyError, TypeError):
        raise ValueError('%s is not a run manifest' % args.manifest_file)
    if command not in COMMANDS:
        raise ValueError('Unknown command %r in manifest' % command)

    run_args = _restore(params)
    run_args.manifest = None
    baseline = os.path.dirname(os.path.abspath(args.manifest_file))
    if args.out is not None:
        if os.path.abspath(args.out) == baseline:
            raise ValueError('Rerun output directory %s would overwrite the manifest' % args.out)
        run_args.out = args.out
        code, rerun = _execute(command, run_args)
    else:
        # regenerated files are only needed for their digests
        with tempfile.TemporaryDirectory(prefix='squeezehelpers-rerun-') as tmp:
            run_args.out = tmp
            code, rerun = _execute(command, run_args)

    mismatches = [key for key, item in manifest['outputs'].items()
                  if rerun['outputs'].get(key, {}).get('sha256') != item['sha256']]
    for key in mismatches:
        logger.error('Output %s differs from the manifest', key)
    if manifest.get('version') != squeezehelpers.__version__:
        logger.warning('Manifest was written by version %s, running %s', manifest.get('version'),
                       squeezehelpers.__version__)
    print('Rerun of %s: %s' % (command, 'identical' if not mismatches else '%d file(s) differ' % len(mismatches)))
    return code if not mismatches else EXIT_MISMATCH


def _add_common(parser):
    parser.add_argument('--out', default='.', help='output directory (default: current directory)')
    parser.add_argument('--manifest', default=None, help='manifest file (default: <out>/manifest.json)')
    parser.add_argument('--step', type=_positive, default=None, help='maximum RK4 step')
    parser.add_argument('--profile', choices=sorted(configuration.INTEGRATION_DEFAULTS), default=None,
                        help='named set of integration settings')


def _add_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--design', default=None, help='design descriptor written by the design command')
    source.add_argument('--mathieu', nargs=2, type=parse_number, metavar=('BETA0', 'BETA1'), default=None,
                        help='Mathieu amplitude beta0 + 2 beta1 cos(tau)')
    source.add_argument('--beta', type=parse_number, default=None, help='constant amplitude')
    parser.add_argument('--extend', action='store_true',
                        help='continue the designed amplitude beyond [-pi/2, pi/2]')
    parser.add_argument('--interval', nargs=2, type=parse_number, metavar=('TAU0', 'TAU1'),
                        default=[-math.pi / 2, math.pi / 2], help='integration interval (default: -pi/2 pi/2)')
    parser.add_argument('--samples', type=int, default=400, help='number of uniform intervals between samples')


def build_parser():
    parser = argparse.ArgumentParser(prog='squeezehelpers',
                                     description='Squeezing operations of time dependent quadratic Hamiltonians.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + squeezehelpers.__version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='log warnings and errors only')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    scan_parser = subparsers.add_parser('scan', help='stability chart and squeeze curves of the Mathieu case')
    _add_common(scan_parser)
    scan_parser.add_argument('--beta0-range', nargs=2, type=parse_number, metavar=('LO', 'HI'), default=[0.9, 2.0])
    scan_parser.add_argument('--beta1-range', nargs=2, type=parse_number, metavar=('LO', 'HI'), default=[0.5, 1.6])
    scan_parser.add_argument('--grid', nargs=2, type=int, metavar=('N0', 'N1'), default=[221, 221])
    scan_parser.add_argument('--interval', nargs=2, type=parse_number, metavar=('TAU0', 'TAU1'),
                             default=list(OPERATION_INTERVAL))
    scan_parser.add_argument('--skip-curves', action='store_true', help='only write the raster')
    scan_parser.add_argument('--parallel', action='store_true', help='distribute scan lines over processes')
    scan_parser.add_argument('--max-workers', type=int, default=None)
    scan_parser.set_defaults(func=cmd_scan)

    design_parser = subparsers.add_parser('design', help='solve and validate a designed amplitude')
    _add_common(design_parser)
    design_parser.add_argument('--b', type=parse_number, required=True, help='target u12 at the interval ends')
    design_parser.add_argument('--c', type=parse_number, required=True, help='third derivative design constant')
    design_parser.add_argument('--beta-end', type=parse_number, default=0., help='amplitude at the interval ends')
    design_parser.add_argument('--gamma', type=parse_gamma, default=GammaFunction('const', 1.),
                               help='kinetic amplitude, "sin2" or "const:<value>" (default: const:1)')
    design_parser.add_argument('--gamma-end', type=parse_number, default=None)
    design_parser.add_argument('--third-derivative', choices=('printed', 'analytic'), default='printed')
    design_parser.add_argument('--extension', nargs=2, type=parse_number, metavar=('TAU0', 'TAU1'), default=None,
                               help='sampling interval of profile.csv (default: -pi/2 pi/2)')
    design_parser.add_argument('--samples', type=int, default=1001)
    design_parser.set_defaults(func=cmd_design)

    propagate_parser = subparsers.add_parser('propagate', help='packet centre trajectories and final matrix')
    _add_common(propagate_parser)
    _add_source(propagate_parser)
    propagate_parser.add_argument('--packets', type=parse_packets, default=[GaussianPacket(0., 1.)],
                                  help='packets "q0,p0[,kappa];..." (default: 0,1)')
    propagate_parser.set_defaults(func=cmd_propagate)

    shadow_parser = subparsers.add_parser('shadow', help='uncertainty shadow of a packet')
    _add_common(shadow_parser)
    _add_source(shadow_parser)
    shadow_parser.add_argument('--packet', type=parse_packets, default=[GaussianPacket(0., 1.)],
                               help='packet "q0,p0[,kappa]" (default: 0,1)')
    shadow_parser.add_argument('--w', type=parse_number, default=None, help='uncertainty multiplier')
    shadow_parser.add_argument('--probability', type=parse_number, default=None,
                               help='probability enclosed by the band if --w is not given')
    shadow_parser.set_defaults(func=cmd_shadow)

    units_parser = subparsers.add_parser('units', help='convert between trap voltages and Mathieu parameters')
    _add_common(units_parser)
    units_parser.add_argument('direction', choices=('to-dimensionless', 'to-physical'))
    units_parser.add_argument('--context', default=None,
                              help='JSON file or text {mass_g, charge_e, r0_cm, omega_rad_s[, hbar]}')
    units_parser.add_argument('--wavelength', type=_positive, default=None,
                              help='radio wavelength in cm setting omega = c / wavelength (proton)')
    units_parser.add_argument('--r0', type=_positive, default=10., help='trap radius in cm (default: 10)')
    units_parser.add_argument('--phi0', type=parse_number, default=0.)
    units_parser.add_argument('--phi1', type=parse_number, default=0.)
    units_parser.add_argument('--beta0', type=parse_number, default=0.)
    units_parser.add_argument('--beta1', type=parse_number, default=0.)
    units_parser.add_argument('--q', type=parse_number, default=None, help='phase-space position')
    units_parser.add_argument('--p', type=parse_number, default=None, help='phase-space momentum')
    units_parser.set_defaults(func=cmd_units)

    rerun_parser = subparsers.add_parser('rerun', help='replay a run manifest')
    rerun_parser.add_argument('manifest_file')
    rerun_parser.add_argument('--out', default=None, help='directory of the regenerated files (default: a temporary directory)')
    rerun_parser.set_defaults(func=None)

    return parser


def main(argv=None):
    """
    Entry point of the ``squeezehelpers`` command.

    :param argv: Arguments without the program name, defaults to ``sys.argv[1:]``.
    :return: The exit code.
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(format='[%(module)-12s] %(message)s', level=level)

    try:
        if args.command == 'rerun':
            return cmd_rerun(args)
        code, _ = _execute(args.command, args)
        return code
    except MalformedDesignError as e:
        logger.error('Invalid design: %s', e)
        return EXIT_DESIGN_INVALID
    except (IntegrationError, NonSymplecticError) as e:
        logger.error('Integration failed: %s', e)
        return EXIT_INTEGRATION
    except (ValueError, KeyError, AssertionError, OSError) as e:
        logger.error('%s', e)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
