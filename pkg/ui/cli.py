import argparse
import os

import consts
from ui import commands
from ui.report import print_error, print_record, print_warning
from utils.errors import BraidmodError


def default_threads() -> int:
    """Worker count from the environment, 1 when unset or invalid."""
    value = os.environ.get(consts.THREADS_ENV_VAR)
    if value is None:
        return consts.DEFAULT_THREADS
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        print_warning(f"{consts.THREADS_ENV_VAR}={value!r} is not a positive integer; using {consts.DEFAULT_THREADS}")
        return consts.DEFAULT_THREADS
    return threads


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Braid invariants and braid monodromy of polynomial loops')
    parser.add_argument('--format', choices=[consts.OUTPUT_FORMAT_KV, consts.OUTPUT_FORMAT_TABLE],
                        default=consts.OUTPUT_FORMAT_KV, help='Output as key=value lines or a table')
    parser.add_argument('--verbose', action='store_true', help='Report progress on stderr')
    parser.add_argument('--threads', type=int, default=None,
                        help=f'Workers for root tracking (default: ${consts.THREADS_ENV_VAR} or 1)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', help='Thurston type, entropy and conformal module of a braid')
    p.add_argument('word', help='Braid word, e.g. "1 -2"')
    p.add_argument('--strands', type=int, default=3)

    p = sub.add_parser('monodromy', help='Braid monodromy of a loop file')
    p.add_argument('loopfile')
    p.add_argument('--emit-track', dest='emit_track', help='Write strand trajectories as CSV')
    p.add_argument('--module', type=float, help='Module of the annulus, adds the criteria verdicts')

    p = sub.add_parser('zjuzin', help='Reducibility criterion for prime degree')
    p.add_argument('--degree', type=int, required=True)
    p.add_argument('--module', type=float, required=True)
    p.add_argument('--index', type=int, required=True)

    p = sub.add_parser('solvable', help='Solvability criterion for degree 3')
    p.add_argument('--module', type=float, required=True)

    p = sub.add_parser('obstruct', help='Module obstruction for a 3-braid class')
    p.add_argument('--module', type=float, required=True)
    p.add_argument('word')

    p = sub.add_parser('torus-check', help='Necessary condition for homomorphisms of the free group into B3')
    p.add_argument('word_a')
    p.add_argument('word_b')

    p = sub.add_parser('equal', help='Word problem')
    p.add_argument('word1')
    p.add_argument('word2')
    p.add_argument('--strands', type=int, default=3)

    p = sub.add_parser('normalform', help='Garside left normal form')
    p.add_argument('word')
    p.add_argument('--strands', type=int, default=3)

    p = sub.add_parser('powmod', help='Module of the class of a power')
    p.add_argument('--module', type=float, required=True)
    p.add_argument('--power', type=int, required=True)

    p = sub.add_parser('annulus', help='Module of a round annulus')
    p.add_argument('--inner', type=float, required=True)
    p.add_argument('--outer', type=float, required=True)

    p = sub.add_parser('generate', help='Generate a loop file')
    p.add_argument('--kind', choices=consts.LOOP_KINDS, default='power')
    p.add_argument('--degree', type=int, default=3)
    p.add_argument('--samples', type=int, default=consts.DEFAULT_LOOP_SAMPLES)
    p.add_argument('--radius', type=float, default=1.0, help='Radius for the power family')
    p.add_argument('--radii', type=_float_list, help='Comma separated radii for the linear family')
    p.add_argument('--windings', type=_int_list, help='Comma separated windings for the linear family')
    p.add_argument('--seed', type=int, help='Seed for the random family')
    p.add_argument('--output', help='Loop file to write')
    p.add_argument('--output-dir', dest='output_dir', default=consts.DEFAULT_LOOP_DIR,
                   help='Directory for generated loops when --output is not given')
    return parser


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def _dispatch(args):
    if args.command == 'classify':
        return commands.classify(args.word, args.strands)
    if args.command == 'monodromy':
        threads = args.threads if args.threads is not None else default_threads()
        return commands.monodromy(args.loopfile, args.emit_track, args.module, threads, args.verbose)
    if args.command == 'zjuzin':
        return commands.zjuzin(args.degree, args.module, args.index)
    if args.command == 'solvable':
        return commands.solvable(args.module)
    if args.command == 'obstruct':
        return commands.obstruct(args.module, args.word)
    if args.command == 'torus-check':
        return commands.torus_check(args.word_a, args.word_b)
    if args.command == 'equal':
        return commands.equal(args.word1, args.word2, args.strands)
    if args.command == 'normalform':
        return commands.normalform(args.word, args.strands)
    if args.command == 'powmod':
        return commands.powmod(args.module, args.power)
    if args.command == 'annulus':
        return commands.annulus(args.inner, args.outer)
    if args.command == 'generate':
        degree = len(args.radii) if args.kind == 'linear' and args.radii else args.degree
        return commands.generate(args.kind, degree, args.samples, args.output, args.output_dir,
                                 radius=args.radius, radii=args.radii, windings=args.windings, seed=args.seed)
    raise ValueError(f"unknown command {args.command}")


def process_args(args) -> int:
    """Run the selected subcommand, print its record and return the exit code."""
    if args.threads is not None and args.threads < 1:
        print_error(ValueError("--threads must be at least 1"))
        return consts.EXIT_ERROR
    try:
        record, exit_code = _dispatch(args)
    except (BraidmodError, ValueError, OSError) as e:
        print_error(e)
        return consts.EXIT_ERROR
    print_record(record, args.format)
    return exit_code


def run(argv=None) -> int:
    return process_args(parse_args(argv))
