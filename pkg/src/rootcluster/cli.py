#!/usr/bin/env python3
"""CLI interface for the root cluster calculus"""
import argparse
import logging
import sys
from typing import List, Optional

from .catalog import list_fixtures
from .controller import CatalogRun, Controller
from .errors import InvariantViolation, RootClusterError
from .permcore import DEFAULT_LIMITS, Limits
from .reports import dumps
from .tables import render
from .utils import parse_points
from .verify import SuiteReport

log = logging.getLogger("rootcluster")

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INTERRUPTED = 130


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s [%(levelname)s] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
    )
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


def print_available_fixtures():
    """Print the fixture registry grouped by speed"""
    fixtures = list_fixtures()
    print("\n" + "=" * 60)
    print("AVAILABLE FIXTURES")
    print("=" * 60)
    for title, slow in (("\nFast:", False), ("\nSlow (sweeps):", True)):
        print(title)
        for fx in fixtures:
            if fx.slow == slow:
                print(f"  • {fx.name:<32} - {fx.description}")
    print("\n" + "=" * 60 + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Emit JSON instead of text tables')
    common.add_argument('-v', '--verbose', action='store_true', help='Enable verbose logging')
    common.add_argument(
        '--max-order',
        type=int,
        default=DEFAULT_LIMITS.max_order,
        help=f'Largest group order to enumerate (default: {DEFAULT_LIMITS.max_order})'
    )
    common.add_argument(
        '--max-degree',
        type=int,
        default=DEFAULT_LIMITS.max_degree,
        help=f'Largest permutation degree (default: {DEFAULT_LIMITS.max_degree})'
    )
    common.add_argument(
        '--workers',
        type=int,
        default=None,
        help='Thread pool size for sweeps (default: Python default)'
    )

    parser = argparse.ArgumentParser(
        prog="rootcluster",
        description="Root cluster calculus - cluster sizes, chains, capacities and magnification "
                    "of finite permutation groups",
        epilog="Examples:\n"
               "  rootcluster invariants catalog:metacyclic:9\n"
               "  rootcluster tower catalog:metacyclic:9 --order 1,4,2,3,5,6,7,8,9\n"
               "  rootcluster chain --ascending catalog:metacyclic:12\n"
               "  rootcluster capacity catalog:metacyclic:12 --upper points:1,4\n"
               "  rootcluster magnify catalog:wreathlike:3:2 --by catalog:cyclic:2\n"
               "  rootcluster basechange example_s3.json --by catalog:cyclic:5\n"
               "  rootcluster catalog run nPk-5-2\n",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def command(name: str, help_text: str, spec: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if spec:
            p.add_argument('spec', help='Spec file path or catalog: URI')
        return p

    command('invariants', 'Cluster size r, number of clusters s and the clusters themselves')

    tower = command('tower', 'Cluster tower for one ordering, or every ordering')
    mode = tower.add_mutually_exclusive_group(required=True)
    mode.add_argument('--order', help="One root per cluster, in order, e.g. \"1,4,2\"")
    mode.add_argument('--all-orders', action='store_true', help='Sweep every ordering of cluster representatives')
    tower.add_argument(
        '--max-clusters', type=int, default=10, help='Refuse sweeps over more clusters (default: 10)'
    )

    chain = command('chain', 'Unique descending or ascending chain of the extension')
    direction = chain.add_mutually_exclusive_group(required=True)
    direction.add_argument('--descending', action='store_true', help='Normalizer chain down from L')
    direction.add_argument('--ascending', action='store_true', help='Normal closure chain up from K')

    capacity = command('capacity', 'Root capacity of an intermediate field M containing L')
    capacity.add_argument('--upper', required=True, help='points:i,j,... or a spec over the same group')

    command('detect', 'Search for a strong cluster magnification decomposition')

    magnify = command('magnify', 'Strongly magnify by a Galois group R')
    magnify.add_argument('--by', required=True, help='catalog:cyclic:m, catalog:abelian:a,b or a spec')

    basechange = command('basechange', 'Check every invariant under base change')
    basechange.add_argument('--by', required=True, help='Group of the disjoint base extension')
    basechange.add_argument('--magnifier', help='Also check strong magnification by this group')

    catalog = sub.add_parser('catalog', parents=[common], help='List or run built-in fixtures')
    catalog.add_argument('action', choices=['list', 'run'], help='list | run')
    catalog.add_argument('name', nargs='?', help='Fixture name, or "all"')
    catalog.add_argument('--include-slow', action='store_true', help='Include sweep fixtures in "run all"')

    command('verify', 'Run the full cross-module invariant suite')
    return parser


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    ctrl = Controller(Limits(max_order=args.max_order, max_degree=args.max_degree), args.workers)

    if args.command == 'invariants':
        result = ctrl.invariants(args.spec)
    elif args.command == 'tower':
        order = parse_points(args.order) if args.order else None
        result = ctrl.tower(args.spec, order, args.max_clusters)
    elif args.command == 'chain':
        result = ctrl.chain(args.spec, ascending=args.ascending)
    elif args.command == 'capacity':
        result = ctrl.capacity(args.spec, args.upper)
    elif args.command == 'detect':
        result = ctrl.detect(args.spec)
    elif args.command == 'magnify':
        result = ctrl.magnify(args.spec, args.by)
    elif args.command == 'basechange':
        result = ctrl.basechange(args.spec, args.by, args.magnifier)
    elif args.command == 'verify':
        result = ctrl.verify(args.spec)
    elif args.action == 'list':
        if args.name:
            parser.error("catalog list takes no fixture name")
        if not args.json:
            print_available_fixtures()
            return EXIT_OK
        result = ctrl.catalog_list()
    else:
        if not args.name:
            parser.error("catalog run needs a fixture name or 'all'")
        if args.name == 'all':
            names = [fx.name for fx in list_fixtures() if args.include_slow or not fx.slow]
        else:
            names = [args.name]
        result = ctrl.catalog_run(names)

    print(dumps(result) if args.json else render(result))
    if isinstance(result, (SuiteReport, CatalogRun)) and not result.passed:
        return EXIT_INVARIANT
    return EXIT_OK


def main(argv: Optional[List[str]] = None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        code = run(args, parser)
    except KeyboardInterrupt:
        log.warning("\nOperation cancelled by user")
        sys.exit(EXIT_INTERRUPTED)
    except InvariantViolation as e:
        log.error(f"✗ Invariant violated: {e}", exc_info=args.verbose)
        sys.exit(e.exit_code)
    except RootClusterError as e:
        log.error(f"✗ {e}", exc_info=args.verbose)
        sys.exit(e.exit_code)
    sys.exit(code)


if __name__ == "__main__":
    main()
