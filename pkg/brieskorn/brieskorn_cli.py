# Native libraries
import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
# Project libraries
from brieskorn.classes.core.family_scan import SCAN_HEADER, ScanSpec, parse_range, run_scan
from brieskorn.classes.dinvariant import registry
from brieskorn.classes.topology.errors import BrieskornError, InputValidationError, SearchBudgetError
from brieskorn.classes.topology.floer import (alpha, d_torus_surgery_minus, reduced_kernel_degrees,
                                              semigroup_profile)
from brieskorn.classes.topology.obstruct import (analyze, cuspidal_check, family_verdict, flmn_family_report,
                                                 lens_space_label, markov_member)
from brieskorn.classes.topology.plumbing import (bad_vertices, build_plumbing, form_properties,
                                                 intersection_matrix, to_dot)
from brieskorn.classes.topology.seifert import BrieskornData, seifert_invariants
from brieskorn.classes.topology.stein import enumerate_rot_vectors, rot_profile, torus_legendrian_count
from brieskorn.utilities.argument_parser import BrieskornArgumentParser
from brieskorn.utilities.report_writer import output_document, render_csv, render_json, render_text
from brieskorn.utilities.utils import ascii_label, set_debug_level, setup_logger
import brieskorn.config as config

# Logging instance for console output
logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Exit codes of the command line tool
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Settings a run may overwrite from its flags
_RUN_SETTINGS = ('DEBUG_LEVEL', 'CHAR_BOX_MARGIN', 'SEARCH_BUDGET', 'MARKOV_BOUND', 'ENUMERATION_LIMIT',
                 'OUTPUT_FORMAT', 'SCAN_WORKERS')


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


def _setup(argv):
    logger.debug('Processing command line parameters')
    parser = BrieskornArgumentParser(argv)
    registry.clear()
    registry.register_defaults()
    return parser.args


def _sphere(args):
    return BrieskornData.from_values(args.multiplicities)


def _plumbing_payload(b):
    seifert = seifert_invariants(b)
    graph = build_plumbing(seifert)
    form = intersection_matrix(graph)
    return graph, {
        'manifold': ascii_label(b.multiplicities),
        'seifert': seifert.to_dict(),
        'plumbing': graph.to_dict(),
        'vertex_ids': graph.vertex_ids(),
        'matrix': form.to_dict()['matrix'],
        'properties': form_properties(form).to_dict(),
        'bad_vertices': bad_vertices(graph),
    }


def _semigroup_payload(p, q):
    profile = semigroup_profile(p, q)
    payload = profile.to_dict()
    payload['alpha'] = [alpha(profile, j) for j in range(profile.frobenius + 1)]
    payload['alpha_g_minus_1'] = alpha(profile, profile.genus - 1)
    payload['d_torus_surgery_minus'] = d_torus_surgery_minus(p, q)
    payload['reduced_kernel_degrees'] = reduced_kernel_degrees(p, q)
    payload['legendrian'] = torus_legendrian_count(p, q).to_dict()
    return payload


def _execute(args):
    """
    Runs the selected subcommand

    :param args: Parsed arguments
    :type args: argparse.Namespace
    :return: Rendered payload for the selected output format
    :rtype: str or dict
    """
    command = args.command
    logger.debug('Executing {}'.format(command))

    if command == 'analyze':
        return analyze(_sphere(args)).to_dict()
    if command == 'family':
        return family_verdict(args.p, args.q, args.n, args.sign).to_dict()
    if command == 'plumbing':
        graph, payload = _plumbing_payload(_sphere(args))
        return to_dot(graph) if config.OUTPUT_FORMAT == 'dot' else payload
    if command == 'dinv':
        b = _sphere(args)
        return dict(registry.compute_all(b).to_dict(), manifold=ascii_label(b.multiplicities))
    if command == 'semigroup':
        return _semigroup_payload(args.p, args.q)
    if command == 'rot':
        b = _sphere(args)
        graph = build_plumbing(seifert_invariants(b))
        return {'manifold': ascii_label(b.multiplicities), 'profile': rot_profile(graph).to_dict(),
                'enumeration': enumerate_rot_vectors(graph).to_dict()}
    if command == 'markov':
        payload = {'x': args.x, 'bound': config.MARKOV_BOUND, 'member': markov_member(args.x, config.MARKOV_BOUND)}
        if args.lens_q is not None:
            payload['lens_space'] = lens_space_label(args.x, args.lens_q)
        return payload
    if command == 'cuspidal':
        return cuspidal_check(args.degree, args.singularities).to_dict()
    if command == 'flmn':
        return flmn_family_report(args.degree).to_dict()
    if command == 'scan':
        spec = ScanSpec(args.family, p=parse_range(args.p_range, 'p'), q=parse_range(args.q_range, 'q'),
                        n=parse_range(args.n_range, 'n'), k=parse_range(args.k_range, 'k'),
                        d=parse_range(args.d_range, 'd'))
        rows = run_scan(spec)
        if config.OUTPUT_FORMAT == 'csv':
            return render_csv(SCAN_HEADER, rows)
        return {'family': args.family, 'header': list(SCAN_HEADER), 'rows': rows}
    raise InputValidationError('Unknown command {!r}'.format(command))


def _report(argv, result):
    """
    Writes the command result to stdout in the configured output format
    """
    if isinstance(result, str):
        sys.stdout.write(result)
    elif config.OUTPUT_FORMAT == 'json':
        sys.stdout.write(render_json(output_document(argv, result)))
    else:
        sys.stdout.write(render_text(result))


def brieskorn(argv):
    """
    Parses, executes and reports one command, mapping errors onto exit codes

    :param argv: Command line arguments without the program name
    :type argv: list[str]
    :return: Exit code
    :rtype: int
    """
    try:
        args = _setup(argv)
    except SystemExit as error:
        # argparse prints usage and exits 0 for --help, 2 for usage errors
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    try:
        _report(argv, _execute(args))
    except InputValidationError as error:
        sys.stderr.write('error: {}\n'.format(error))
        return EXIT_USAGE
    except SearchBudgetError as error:
        sys.stderr.write('error: {}\n'.format(error))
        return EXIT_BUDGET
    except BrieskornError as error:
        sys.stderr.write('error: {}\n'.format(error))
        return EXIT_FAILURE
    return EXIT_OK


def run(argv):
    """
    Runs one command with captured output. Settings changed by the command's flags are restored afterwards.

    :param argv: Command line arguments without the program name
    :type argv: list[str]
    :rtype: CommandResult
    """
    saved = {name: getattr(config, name) for name in _RUN_SETTINGS}
    stdout, stderr = io.StringIO(), io.StringIO()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            exit_code = brieskorn(list(argv))
    finally:
        for name, value in saved.items():
            setattr(config, name, value)
        set_debug_level(saved['DEBUG_LEVEL'])
    return CommandResult(exit_code, stdout.getvalue(), stderr.getvalue())


def main():
    """
    Console script entry point
    """
    sys.exit(brieskorn(sys.argv[1:]))


if __name__ == '__main__':
    main()
