#!/usr/bin/env python3
"""
MW Toolkit CLI

This script provides a unified command-line interface for the toolkit.
Uses the Managers under modules/ for every operation.

Example usage:
    python mw_cli.py perm-tutte exact --graph s4.json
    python mw_cli.py perm-tutte mc --graph s4.json --x 2 --y 0 --samples 100000 --seed 1
    python mw_cli.py tutte graph --graph six_vertex.json
    python mw_cli.py tutte matroid --matroid "dual(uniform:6,3)"
    python mw_cli.py verify-transfer --graph c4.json
    python mw_cli.py certify idea --idea 4
    python mw_cli.py certify circuit-interval --k 4
    python mw_cli.py certify degree-scan --s 0.9226 --delta 3
    python mw_cli.py certify matroid --matroid uniform:12,6 --ell 6
    python mw_cli.py growth --family hnnn --x 2 --side x0
    python mw_cli.py counterexample --n 3 --x 2
    python mw_cli.py conjecture-scan --min-degree 2 --trials 50 --seed 7
    python mw_cli.py gluing --first s4.json --root1 3 --second s4.json --root2 3 --x 2 --y 0
    python mw_cli.py reproduce --output results

Exit codes: 0 success/PASS, 1 FAIL verdict or failed check, 2 usage or input error,
130 when interrupted.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

# Add the tool directory to the path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from api.errors import InvalidArgumentError, ToolkitError
from config.config_factory import config_factory
from modules.config_utils import load_bipartite_graph, load_multigraph
from modules.certify import CertifyManager
from modules.growth import GrowthManager
from modules.permtutte import PermTutteManager
from modules.tutte import TutteManager

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


def resolve_graph_path(path: str) -> str:
    """Use the path as given when it exists, otherwise look it up among the bundled graphs."""
    if Path(path).exists():
        return path
    bundled = Path(config_factory.get_graph_paths()['graphs']) / path
    if bundled.exists():
        return str(bundled)
    raise InvalidArgumentError(f"graph file not found: {path}")


def _bipartite(path: str):
    return load_bipartite_graph(resolve_graph_path(path))


def _multigraph(path: str):
    return load_multigraph(resolve_graph_path(path))


def build_parser() -> argparse.ArgumentParser:
    runtime = argparse.ArgumentParser(add_help=False)
    runtime.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    runtime.add_argument('--threads', type=int, help='Monte Carlo worker threads (default: MW_THREADS or CPU count)')

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--format', dest='output_format', choices=['table', 'json', 'csv'], default='table',
                        help='Output format for certificate reports')
    output.add_argument('--precision', type=int, help='Significant digits (default 15)')
    output.add_argument('--certificate', help='Write the certificate file to this path')

    parser = argparse.ArgumentParser(
        prog='mw_cli.py',
        description='MW Toolkit CLI - Tutte polynomials, permutation Tutte polynomials and exact certificates',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python mw_cli.py certify idea --idea 2 --x 2.54 --s 0.76               # Idea 2 sweep with its verdict
  python mw_cli.py certify idea --idea 4 --x 2.2 --s 0.78 --d0 100       # Negative control, VERDICT FAIL
  python mw_cli.py verify-transfer --graph c4.json                       # Transfer identity on C4
  python mw_cli.py perm-tutte mc --graph s4.json --x 2 --y 0 --seed 3    # Seeded Monte Carlo estimate
  python mw_cli.py growth --family hnnn --x 2 --side 0x                  # Growth constant with cross-check
  python mw_cli.py reproduce                                             # Regenerate every table and certificate
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # perm-tutte
    perm_parser = subparsers.add_parser('perm-tutte', help='Permutation Tutte polynomial of a bipartite graph')
    perm_sub = perm_parser.add_subparsers(dest='mode', help='Evaluation mode')
    exact_parser = perm_sub.add_parser('exact', parents=[runtime], help='Exact polynomial (<= 11 vertices)')
    exact_parser.add_argument('--graph', required=True, help='Bipartite graph JSON file')
    exact_parser.add_argument('--x', help='Evaluate at x (exact decimal, p/q or golden1/golden_s)')
    exact_parser.add_argument('--y', help='Evaluate at y')
    exact_parser.add_argument('--bounds', action='store_true', help='Also print the product lower bound')
    mc_parser = perm_sub.add_parser('mc', parents=[runtime], help='Monte Carlo estimate')
    mc_parser.add_argument('--graph', required=True, help='Bipartite graph JSON file')
    mc_parser.add_argument('--x', required=True, help='x value')
    mc_parser.add_argument('--y', required=True, help='y value')
    mc_parser.add_argument('--samples', type=int, help='Number of samples')
    mc_parser.add_argument('--seed', type=int, help='Random seed')
    mc_parser.add_argument('--integrate-leaves', action='store_true', default=None,
                           help='Integrate pendant leaves analytically')

    # tutte
    tutte_parser = subparsers.add_parser('tutte', help='Tutte polynomial of a graph or matroid')
    tutte_sub = tutte_parser.add_subparsers(dest='mode', help='Input kind')
    graph_parser = tutte_sub.add_parser('graph', parents=[runtime], help='Multigraph JSON file')
    graph_parser.add_argument('--graph', required=True, help='Multigraph JSON file')
    graph_parser.add_argument('--method', choices=['deletion-contraction', 'activities'],
                              default='deletion-contraction', help='Algorithm')
    graph_parser.add_argument('--check', action='store_true', help='Print the Merino-Welsh evaluations')
    matroid_parser = tutte_sub.add_parser('matroid', parents=[runtime], help='Matroid descriptor')
    matroid_parser.add_argument('--matroid', required=True, help='uniform:m,n | graphic:<path> | dual(..) | double(..) | sum(..,..)')
    matroid_parser.add_argument('--check', action='store_true', help='Print the Merino-Welsh evaluations')

    # verify-transfer
    transfer_parser = subparsers.add_parser('verify-transfer', parents=[runtime],
                                            help='Check T_G against the sum over spanning-tree exchange graphs')
    transfer_parser.add_argument('--graph', required=True, help='Connected multigraph JSON file (<= 8 edges)')

    # certify
    certify_parser = subparsers.add_parser('certify', help='Exact inequality certificates')
    certify_sub = certify_parser.add_subparsers(dest='mode', help='Certificate kind')
    idea_parser = certify_sub.add_parser('idea', parents=[runtime, output], help='Idea 1-4 degree sweep')
    idea_parser.add_argument('--idea', type=int, required=True, choices=[1, 2, 3, 4], help='Idea number')
    idea_parser.add_argument('--x', help='x (default from certify.yaml)')
    idea_parser.add_argument('--s', help='s (default from certify.yaml)')
    idea_parser.add_argument('--d0', type=int, help='Last degree d0 (default from certify.yaml)')
    idea_parser.add_argument('--include-d0', action=argparse.BooleanOptionalAction, default=None,
                             help='Whether the table runs to d0 (default: yes for ideas 1-3, no for idea 4)')
    interval_parser = certify_sub.add_parser('circuit-interval', parents=[runtime, output],
                                             help='Sweep G(d,2,s,s) over the circuit interval of k')
    interval_parser.add_argument('--k', required=True, help='k >= 4')
    scan_parser = certify_sub.add_parser('degree-scan', parents=[runtime],
                                         help='Largest D with G(d,2,s,gamma(delta)) > 1 on [delta, D]')
    scan_parser.add_argument('--s', required=True, help='s in (0, 1)')
    scan_parser.add_argument('--delta', type=int, required=True, help='Minimum degree')
    scan_parser.add_argument('--limit', type=int, help='Scan cap')
    theorem_parser = certify_sub.add_parser('matroid', parents=[runtime],
                                            help='Circuit-length criterion on a matroid')
    theorem_parser.add_argument('--matroid', required=True, help='Matroid descriptor')
    theorem_parser.add_argument('--ell', type=int, required=True, help='Minimum circuit length (>= 6)')

    # growth
    growth_parser = subparsers.add_parser('growth', parents=[runtime], help='Growth constants')
    growth_parser.add_argument('--family', choices=['kab', 'hnnn', 'x0'], required=True, help='Graph family')
    growth_parser.add_argument('--x', help='x > 1')
    growth_parser.add_argument('--alpha', help='alpha in (0, 1) for kab')
    growth_parser.add_argument('--side', choices=['x0', '0x'], default='x0', help='Which evaluation for hnnn')

    # counterexample
    probe_parser = subparsers.add_parser('counterexample', parents=[runtime],
                                         help='T~(x,0) T~(0,x) on H_{n,n,n}')
    probe_parser.add_argument('--n', type=int, help='n (default from asymptotics.yaml)')
    probe_parser.add_argument('--x', help='x (default 2)')
    probe_parser.add_argument('--samples', type=int, help='Monte Carlo samples per factor')
    probe_parser.add_argument('--seed', type=int, help='Random seed')

    # conjecture-scan
    cscan_parser = subparsers.add_parser('conjecture-scan', parents=[runtime],
                                         help='Random search for T~(2,0) T~(0,2) < 1')
    cscan_parser.add_argument('--min-degree', type=int, help='Minimum degree')
    cscan_parser.add_argument('--trials', type=int, help='Number of random graphs')
    cscan_parser.add_argument('--seed', type=int, help='Random seed')
    cscan_parser.add_argument('--max-vertices', type=int, help='Vertex cap (<= 10)')

    # gluing
    gluing_parser = subparsers.add_parser('gluing', parents=[runtime], help='Gluing inequality on two graphs')
    gluing_parser.add_argument('--first', required=True, help='First bipartite graph JSON file')
    gluing_parser.add_argument('--root1', type=int, required=True, help='Root vertex of the first graph')
    gluing_parser.add_argument('--second', required=True, help='Second bipartite graph JSON file')
    gluing_parser.add_argument('--root2', type=int, required=True, help='Root vertex of the second graph')
    gluing_parser.add_argument('--x', default='2', help='x >= 1')
    gluing_parser.add_argument('--y', default='0', help='y in [0, 1]')

    # reproduce
    reproduce_parser = subparsers.add_parser('reproduce',
                                             help='Regenerate every table, sweep and identity check')
    reproduce_parser.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    reproduce_parser.add_argument('--output', help='Output directory (default from graph_configs/toolkit.yaml)')
    reproduce_parser.add_argument('--quick', action='store_true', help='Skip the k=6 sweep')

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )


def dispatch(args: argparse.Namespace) -> bool:
    """Run the selected command and return its success."""
    command = args.command

    if command == 'perm-tutte':
        manager = PermTutteManager()
        if args.mode == 'exact':
            return manager.exact(_bipartite(args.graph), args.x, args.y, args.bounds)
        if args.mode == 'mc':
            return manager.monte_carlo(_bipartite(args.graph), args.x, args.y, args.samples, args.seed,
                                       args.threads, args.integrate_leaves)

    elif command == 'tutte':
        manager = TutteManager()
        if args.mode == 'graph':
            return manager.tutte_graph(_multigraph(args.graph), args.method, args.check)
        if args.mode == 'matroid':
            return manager.tutte_matroid(manager.load_matroid(args.matroid), args.check)

    elif command == 'verify-transfer':
        return TutteManager().verify_transfer(_multigraph(args.graph))

    elif command == 'certify':
        manager = CertifyManager()
        if args.mode == 'idea':
            return manager.certify_idea(args.idea, args.x, args.s, args.d0, args.include_d0,
                                        args.output_format, args.precision, args.certificate)
        if args.mode == 'circuit-interval':
            return manager.certify_circuit_interval(args.k, args.output_format, args.precision, args.certificate)
        if args.mode == 'degree-scan':
            return manager.degree_scan(args.s, args.delta, args.limit)
        if args.mode == 'matroid':
            return manager.certify_matroid(TutteManager().load_matroid(args.matroid), args.ell)

    elif command == 'growth':
        return GrowthManager().growth(args.family, args.x, args.alpha, args.side)

    elif command == 'counterexample':
        return GrowthManager().counterexample(args.n, args.x, args.samples, args.seed, args.threads)

    elif command == 'conjecture-scan':
        return PermTutteManager().scan(args.min_degree, args.trials, args.seed, args.max_vertices)

    elif command == 'gluing':
        return PermTutteManager().gluing(_bipartite(args.first), args.root1, _bipartite(args.second),
                                         args.root2, args.x, args.y)

    elif command == 'reproduce':
        from build import ReproductionBuilder
        return ReproductionBuilder(output_dir=args.output, include_slow=not args.quick).build()

    raise InvalidArgumentError(f"missing subcommand for '{command}'")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    _configure_logging(getattr(args, 'verbose', False))

    try:
        success = dispatch(args)
        return EXIT_OK if success else EXIT_FAIL
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_INTERRUPTED
    except InvalidArgumentError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ToolkitError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAIL


def main():
    """Main CLI entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
