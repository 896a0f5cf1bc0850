import argparse
import os
from ..count import DEFAULT_GUARD_BITS
from ..errors import DomainError
from ..export import EXPORTS, FORMATS
from ..morphism import DEFAULT_MAX_END_N
from ..rewrite import DEFAULT_MAX_RULES
from ..semigroup import DEFAULT_MAX_ELEMENTS
from ..verify import SUITES

ENV_PREFIX = "KISELMAN_"
VERIFY_GUARD_BITS = 20


def env_int(name, default):
    """ Read an integer default from a KISELMAN_* environment variable

    :param name: the variable name without the prefix
    :type name: str
    :param default: the value when the variable is unset
    :type default: int
    :return: the value
    :rtype: int
    """

    value = os.environ.get(ENV_PREFIX + name, "")
    if value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise DomainError("Error: %s%s = %r should be an integer." % (ENV_PREFIX, name, value))


def _add_common_args(parser):
    # Guards
    parser.add_argument("-max_elements", "--max-elements", dest="max_elements", type=int,
                        default=env_int("MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS),
                        help="largest number of elements enumerated from K_n")
    parser.add_argument("-max_rules", "--max-rules", dest="max_rules", type=int,
                        default=env_int("MAX_RULES", DEFAULT_MAX_RULES),
                        help="largest number of rules during Knuth-Bendix completion")
    parser.add_argument("-max_n", "--max-n", dest="max_n", type=int,
                        default=env_int("MAX_N", DEFAULT_MAX_END_N),
                        help="largest n for the enumerations of End(K_n) and M_n")

    # Parallelism
    parser.add_argument("-n_workers", "--n-workers", dest="n_workers", type=int,
                        default=env_int("N_WORKERS", 1),
                        help="number of worker processes")

    # I/O
    parser.add_argument("-format", "--format", dest="output_format", type=str, default="json", choices=FORMATS,
                        help="output format")
    parser.add_argument("-o", "-output", "--output", dest="output_path", type=str, default="",
                        help="output file (stdout when omitted)")
    parser.add_argument("-no_timestamp", "--no-timestamp", dest="timestamp", action="store_false",
                        help="drop time-dependent fields from the output")
    parser.add_argument("-log_path", "--log-path", dest="log_path", type=str, default="",
                        help="logging path (console only when omitted)")
    parser.add_argument("-quiet", "--quiet", dest="quiet", action="store_true",
                        help="hide progress bars and informational logs")


def get_cli_args_parser():
    """ Parse the arguments for KiselmanPipe

    :return: parameters
    :rtype: argparse.ArgumentParser
    """

    parser = argparse.ArgumentParser(prog="kiselman",
                                     description="Kiselman's semigroup, its endomorphisms and pattern-avoiding "
                                                 "boolean matrices")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    elements = subparsers.add_parser("elements", help="list the normal forms of K_n")
    elements.add_argument("-n", type=int, required=True, help="number of generators")
    elements.add_argument("-idempotents_only", "--idempotents-only", dest="idempotents_only", action="store_true",
                          help="keep the idempotents only")
    _add_common_args(elements)

    endos = subparsers.add_parser("endos", help="list End(K_n) as content tuples, monotone sequences and matrices")
    endos.add_argument("-n", type=int, required=True, help="number of generators")
    endos.add_argument("-method", "--method", dest="method", type=str, default="monotone",
                       choices=["brute", "monotone"],
                       help="find endomorphisms by checking every candidate map or from monotone sequences")
    _add_common_args(endos)

    count = subparsers.add_parser("count", help="count m x n matrices avoiding [[0,1],[1,0]]")
    count.add_argument("-m", type=int, default=0, help="number of rows")
    count.add_argument("-n", type=int, default=0, help="number of columns")
    count.add_argument("-grid", "--grid", dest="grid", action="store_true",
                       help="count every shape with m in 2..5 and m * n <= max_bits")
    count.add_argument("-max_bits", "--max-bits", "-guard_bits", "--guard-bits", dest="guard_bits", type=int,
                       default=env_int("GUARD_BITS", DEFAULT_GUARD_BITS),
                       help="largest m * n counted by brute force")
    count.add_argument("-brute_only", "--brute-only", dest="brute_only", action="store_true",
                       help="allow shapes without a closed formula")
    _add_common_args(count)

    verify = subparsers.add_parser("verify", help="run the verification suites")
    verify.add_argument("-n", type=int, default=3, help="largest number of generators checked")
    verify.add_argument("-suite", "--suite", dest="suites", type=str, action="append", choices=SUITES,
                        help="suite to run (repeatable, all when omitted)")
    verify.add_argument("-samples", "--samples", dest="samples", type=int, default=2000,
                        help="number of random cases for sampled checks")
    verify.add_argument("-seed", "--seed", dest="seed", type=int, default=0,
                        help="random seed for sampled checks")
    verify.add_argument("-guard_bits", "--guard-bits", "-max_bits", "--max-bits", dest="guard_bits", type=int,
                        default=env_int("GUARD_BITS", VERIFY_GUARD_BITS),
                        help="largest m * n counted by brute force in the counting suite")
    _add_common_args(verify)

    export = subparsers.add_parser("export", help="write listings and Cayley tables")
    export.add_argument("-n", type=int, required=True, help="number of generators")
    export.add_argument("-what", "--what", dest="what", type=str, default="elements", choices=EXPORTS,
                        help="what to export")
    _add_common_args(export)

    return parser


def validate_run_config(opt):
    """ Check a parsed configuration

    :param opt: the parsed arguments
    :type opt: argparse.Namespace
    :return: the same namespace
    :rtype: argparse.Namespace
    """

    for name in ("max_elements", "max_rules", "max_n", "n_workers"):
        if getattr(opt, name) < 1:
            raise DomainError("Error: %s = %d should be positive." % (name, getattr(opt, name)))
    if getattr(opt, "guard_bits", 1) < 1:
        raise DomainError("Error: guard_bits = %d should be positive." % (opt.guard_bits))
    if getattr(opt, "samples", 1) < 1:
        raise DomainError("Error: samples = %d should be positive." % (opt.samples))

    if opt.command == "count":
        if not opt.grid:
            if opt.m < 1 or opt.n < 1:
                raise DomainError("Error: count needs -m and -n >= 1, or --grid.")
    elif opt.n < 1:
        raise DomainError("Error: n = %d should be positive." % (opt.n))

    opt.progress = not opt.quiet
    return opt
