import argparse
import sys

from nilift import config
from nilift.cli.commands import (
    cmd_classical,
    cmd_lift,
    cmd_orbits,
    cmd_tables,
    cmd_type_a,
    cmd_verify,
)
from nilift.cli.render import render
from nilift.exceptions import (
    InvalidCartanTypeException,
    InvalidPartitionException,
    InvalidSubsetException,
    NiliftException,
    NonMinusculeWeightException,
    NotLeviDominantException,
    RankMismatchException,
    UnknownOrbitException,
    WeightOutsideRootLatticeException,
    WeightSyntaxException,
)
from nilift.logger import log

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE_ERROR = 2

USAGE_ERRORS = (
    InvalidCartanTypeException,
    InvalidPartitionException,
    InvalidSubsetException,
    NonMinusculeWeightException,
    NotLeviDominantException,
    RankMismatchException,
    UnknownOrbitException,
    WeightOutsideRootLatticeException,
    WeightSyntaxException,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilift", description="Lifts of local systems on nilpotent orbits"
    )
    parser.add_argument("--format", choices=config.OUTPUT_FORMATS, default="text")
    subparsers = parser.add_subparsers(dest="mode", required=True)

    orbits = subparsers.add_parser("orbits", help="List the nilpotent orbits of a simple type")
    orbits.add_argument("group", help="Cartan type such as E6 or B3")
    orbits.add_argument("--lattice", choices=config.LATTICES, default=config.LATTICES[0])

    lift = subparsers.add_parser("lift", help="Descent test and traces of a Levi weight")
    lift.add_argument("group")
    lift.add_argument("orbit", help="orbit name such as 'D4(a1)' or a weighted diagram")
    lift.add_argument("weight", help="'w2', 'w2-w7', '3w1' or a comma separated vector")
    lift.add_argument("--bound", type=int, default=None, help="norm bound of the lift search")
    lift.add_argument(
        "--minimal", action="store_true", help="search the shortest lift with the same character"
    )

    classical = subparsers.add_parser("classical", help="Lifts for a classical partition")
    classical.add_argument("partition", help="parts such as 5,3")
    kind = classical.add_mutually_exclusive_group()
    kind.add_argument("--epsilon", type=int, choices=[0, 1], default=0)
    kind.add_argument("--type-a", action="store_true", help="partition of SL_n")
    classical.add_argument(
        "--node", type=int, default=None, help="terminal node of a very even partition"
    )

    subparsers.add_parser("verify", help="Check every golden row and worked example")

    tables = subparsers.add_parser("tables", help="Recompute the golden tables of a group")
    tables.add_argument("group")
    tables.add_argument("--orbit", default=None)

    for subparser in subparsers.choices.values():
        subparser.add_argument(
            "--format", choices=config.OUTPUT_FORMATS, default=argparse.SUPPRESS
        )
    return parser


def run(args: argparse.Namespace) -> int:
    if args.mode == "orbits":
        record = cmd_orbits(args.group, args.lattice)
    elif args.mode == "lift":
        record = cmd_lift(args.group, args.orbit, args.weight, args.bound, args.minimal)
    elif args.mode == "classical":
        if args.type_a:
            record = cmd_type_a(args.partition)
        else:
            record = cmd_classical(args.partition, args.epsilon, args.node)
    elif args.mode == "verify":
        record = cmd_verify()
    else:
        record = cmd_tables(args.group, args.orbit)
    sys.stdout.write(render(record, args.format))
    if args.mode == "verify" and not record.passed:
        return EXIT_VERIFICATION_FAILURE
    return EXIT_SUCCESS


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_SUCCESS if e.code == 0 else EXIT_USAGE_ERROR
    log.debug(f"nilift {args.mode} starting...")
    try:
        return run(args)
    except USAGE_ERRORS as e:
        log.error(f"{e.__class__.__name__}: {e}")
        return EXIT_USAGE_ERROR
    except NiliftException as e:
        log.error(f"{e.__class__.__name__}: {e}")
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
