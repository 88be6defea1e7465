"""
This file contains all command line parsers of the schreier tool.

Every subcommand returns an exit code: 0 on success, 1 when values disagree,
2 for usage errors and 3 for IO, parse or unexpected errors.
"""
import sys
import traceback
from argparse import ArgumentParser

from schreier.counting.params import ParameterError, validate
from schreier.counting.schreier_sets import BRUTE, SUM, sr_sequence
from schreier.formats import bfile, graph_export, tables
from schreier.graphs import construct
from schreier.graphs.policy import RandomPolicy
from schreier.graphs.turan import turan_edge_count
from schreier.settings import schreier_settings
from schreier.settings.schreier_settings import IO_ERROR, MISMATCH, SUCCESS, USAGE_ERROR
from schreier.utilities import logger
from schreier.verify import identity

log_name = "cmdline"  # Used for identifying the origin of the log message.

COMMANDS = ("seq", "verify", "graph", "compare", "diff-table", "conf")
CSV = "csv"
BFILE = "bfile"


class CliConfig(object):
    """
    The validated options of one invocation.
    """

    def __init__(self, command, n_max=1, p=None, q=None, p_max=1, q_max=1, out=None, format=CSV):
        if command not in COMMANDS:
            raise ParameterError("unknown command %r" % (command,))
        settings = schreier_settings.get_instance()
        self.command = command
        self.n_max = n_max
        self.p = settings.defaults_p() if p is None else p
        self.q = settings.defaults_q() if q is None else q
        self.p_max = p_max
        self.q_max = q_max
        self.out = out
        self.format = format
        validate(self.n_max, self.p, self.q)
        validate(1, self.p_max, self.q_max)

    @classmethod
    def from_args(cls, command, args):
        names = ("n_max", "p", "q", "p_max", "q_max", "out", "format")
        return cls(command, **{name: getattr(args, name) for name in names if hasattr(args, name)})


def _emit(text, out=None):
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _add_pq(parser):
    parser.add_argument('--p', type=int, help='Schreier factor p (default from the settings, 1)')
    parser.add_argument('--q', type=int, help='Progression difference q (default from the settings, 1)')


def execute(cmd=None):
    if cmd is None:
        cmd = sys.argv[1:]

    parser = ArgumentParser(prog="schreier", description="Schreier sets and modified Turán graphs")
    subparsers = parser.add_subparsers(dest="command")

    # create the seq subcommand
    parser_list = subparsers.add_parser("seq", help="Print Sr(1..n_max, p, q)")
    parser_list.set_defaults(func=execute_seq)

    # create the verify subcommand
    parser_list = subparsers.add_parser("verify", help="Check Sr(n, p, q) = T(n+1, pq+1, q) over a grid")
    parser_list.set_defaults(func=execute_verify)

    # create the graph subcommand
    parser_list = subparsers.add_parser("graph", help="Export a constructed graph as DOT")
    parser_list.set_defaults(func=execute_graph)

    # create the compare subcommand
    parser_list = subparsers.add_parser("compare", help="Compare a generated sequence with a b-file")
    parser_list.set_defaults(func=execute_compare)

    # create the diff-table subcommand
    parser_list = subparsers.add_parser("diff-table", help="Tabulate the step formulas")
    parser_list.set_defaults(func=execute_diff_table)

    # create the conf subcommand
    parser_list = subparsers.add_parser("conf", help="Allows changing the configuration file")
    parser_list.set_defaults(func=execute_conf)

    try:
        args = parser.parse_args(cmd[:1])
        if not args.command:
            parser.print_usage(sys.stderr)
            return USAGE_ERROR
        return args.func(cmd[1:])
    except SystemExit as e:
        return USAGE_ERROR if e.code else SUCCESS
    except ParameterError as e:
        logger.error("invalid parameters: %s" % e, log_name)
        sys.stderr.write("error: %s\n" % e)
        return USAGE_ERROR
    except (bfile.BFileParseError, OSError) as e:
        logger.error("could not read or write: %s" % e, log_name)
        sys.stderr.write("error: %s\n" % e)
        return IO_ERROR
    except Exception:
        title = "An error occurred!"
        body = traceback.format_exc()
        logger.error(title, log_name)
        logger.error(body, log_name)
        sys.stderr.write(body)
        return IO_ERROR


def execute_seq(cmd):
    parser = ArgumentParser(prog="schreier seq", description="Print Sr(1..n_max, p, q)")
    _add_pq(parser)
    parser.add_argument('--n-max', dest='n_max', type=int, required=True, help='Last term to print')
    parser.add_argument('--format', choices=[CSV, BFILE], default=CSV, help='Output format')
    parser.add_argument('--check', action='store_true', default=False,
                        help='Cross-check the partial sums against brute force enumeration')
    parser.add_argument('--out', help='Write to this file instead of stdout')
    args = parser.parse_args(cmd)
    config = CliConfig.from_args("seq", args)

    values = sr_sequence(config.p, config.q, config.n_max, SUM)
    if args.check:
        reference = sr_sequence(config.p, config.q, config.n_max, BRUTE)
        comparison = bfile.compare_sequences(values, reference)
        if not comparison.matches:
            n = comparison.length + 1
            logger.error("Sr(%d, %d, %d): partial sum %d, brute force %d"
                         % (n, config.p, config.q, values[n - 1], reference[n - 1]), log_name)
            sys.stderr.write("mismatch at n=%d\n" % n)
            return MISMATCH

    if config.format == BFILE:
        text = bfile.write_bfile(values, 1)
    else:
        rows = tables.sequence_table(config.p, config.q, config.n_max)
        text = tables.write_csv(tables.SEQUENCE_HEADER, rows)
    _emit(text, config.out)
    return SUCCESS


def execute_verify(cmd):
    parser = ArgumentParser(prog="schreier verify", description="Check Sr(n, p, q) = T(n+1, pq+1, q)")
    parser.add_argument('--n-max', dest='n_max', type=int, default=19, help='Largest n')
    parser.add_argument('--p-max', dest='p_max', type=int, default=2, help='Largest p')
    parser.add_argument('--q-max', dest='q_max', type=int, default=2, help='Largest q')
    parser.add_argument('--threads', type=int, help='Worker threads (default from SCHREIER_THREADS or settings)')
    parser.add_argument('--policies', type=int,
                        help='Random policies per cell the edge counts must not depend on (default from settings, 0 skips)')
    parser.add_argument('--out', help='Store the reports as JSON in this file')
    args = parser.parse_args(cmd)
    config = CliConfig.from_args("verify", args)

    policies = args.policies
    if policies is None:
        policies = schreier_settings.get_instance().sweep_random_policies()

    reports = identity.sweep(config.n_max, config.p_max, config.q_max, args.threads, policies)
    if config.out:
        identity.save_reports(reports, config.out)

    print("%3s %3s %8s %8s" % ("p", "q", "passed", "total"))
    for p in range(1, config.p_max + 1):
        for q in range(1, config.q_max + 1):
            cell = [r for r in reports if r.params.p == p and r.params.q == q]
            print("%3d %3d %8d %8d" % (p, q, sum(r.passed for r in cell), len(cell)))

    summary = identity.SweepSummary(reports)
    if not summary.ok:
        first = summary.first_failure
        print("FAIL at (n, p, q) = (%d, %d, %d): %s" % (first.params.as_tuple() + (first.detail,)))
        return MISMATCH
    print("all %d reports passed" % summary.total)
    return SUCCESS


def execute_graph(cmd):
    parser = ArgumentParser(prog="schreier graph", description="Export a constructed graph as DOT")
    parser.add_argument('--n', type=int, required=True, help='Number of vertices')
    parser.add_argument('--p', type=int, required=True, help='Number of parts')
    parser.add_argument('--q', type=int, default=1, help='Numbering period')
    parser.add_argument('--family', choices=list(construct.FAMILIES), default=construct.T, help='Graph family')
    parser.add_argument('--seed', type=int, help='Use a random policy with this seed')
    parser.add_argument('--out', help='Write the DOT text to this file instead of stdout')
    args = parser.parse_args(cmd)
    validate(args.n, args.p, args.q)

    policy = RandomPolicy(args.seed) if args.seed is not None else None
    g = construct.build(args.family, args.n, args.p, args.q, policy)
    name = "%s_%d_%d_%d" % (args.family, args.n, args.p, args.q)
    _emit(graph_export.export_graph(g, name), args.out)

    message = "%s(%d, %d, %d): %d edges\n" % (args.family, args.n, args.p, args.q, construct.edge_count(g))
    (sys.stdout if args.out else sys.stderr).write(message)
    return SUCCESS


def execute_compare(cmd):
    parser = ArgumentParser(prog="schreier compare", description="Compare a generated sequence with a b-file")
    parser.add_argument('bfile', help='Path of the b-file')
    parser.add_argument('--sequence', choices=['sr', 'turan'], default='sr',
                        help='Sr(n, p, q) or the Turán edge counts T(n, p)')
    _add_pq(parser)
    args = parser.parse_args(cmd)
    config = CliConfig("compare", p=args.p, q=args.q)

    entries = bfile.load_bfile(args.bfile)
    indices = [entry.index for entry in entries]
    if args.sequence == 'turan':
        generated = [turan_edge_count(index, config.p) for index in indices]
    elif entries:
        validate(indices[0], config.p, config.q)
        values = sr_sequence(config.p, config.q, indices[-1])
        generated = [values[index - 1] for index in indices]
    else:
        generated = []

    comparison = bfile.compare_sequences(generated, [entry.value for entry in entries])
    if not comparison.matches:
        index = indices[comparison.length]
        print("mismatch at index %d: generated %d, b-file %d"
              % (index, generated[comparison.length], entries[comparison.length].value))
        return MISMATCH
    print("agreement length %d" % comparison.length)
    return SUCCESS


def execute_diff_table(cmd):
    parser = ArgumentParser(prog="schreier diff-table", description="Tabulate the step formulas")
    _add_pq(parser)
    parser.add_argument('--n-max', dest='n_max', type=int, required=True, help='Last n')
    parser.add_argument('--out', help='Write to this file instead of stdout')
    args = parser.parse_args(cmd)
    config = CliConfig.from_args("diff-table", args)

    rows = tables.difference_table(config.p, config.q, config.n_max)
    _emit(tables.write_csv(tables.DIFFERENCE_HEADER, rows), config.out)
    bad = [row for row in rows if not tables.rows_agree(row)]
    if bad:
        logger.error("step formulas disagree at n=%d" % bad[0][0], log_name)
        return MISMATCH
    return SUCCESS


def execute_conf(cmd):
    parser = ArgumentParser(prog="schreier conf", description="allows changing the configuration file")
    subparsers = parser.add_subparsers(dest="command", title="files")

    parser_setup = subparsers.add_parser("setup", help='Change values of schreier_setup.cfg')
    parser_setup.set_defaults(func=conf_setup)

    args = parser.parse_args(cmd[:1])
    if not args.command:
        parser.print_usage(sys.stderr)
        return USAGE_ERROR
    return args.func(cmd[1:])


def conf_setup(cmd):
    parser = ArgumentParser(prog="schreier conf setup", description="change the configuration file")

    # Active section
    parser.add_argument('-l', '--active_logger', help='(De)activate the logger', choices=["0", "1"])
    parser.add_argument('-v', '--active_verbose', help='(De)activate the printer', choices=["0", "1"])

    # Sweep section
    parser.add_argument('-t', '--sweep_threads', help='Worker threads of a sweep, 0 for one per cpu')
    parser.add_argument('-r', '--sweep_random_policies', help='Random policies per cell in policy checks')
    parser.add_argument('-s', '--sweep_seed', help='Seed of the random policies')

    # Defaults section
    parser.add_argument('-p', '--defaults_p', help='Default p of seq, compare and diff-table')
    parser.add_argument('-q', '--defaults_q', help='Default q of seq, compare and diff-table')

    args = parser.parse_args(cmd)

    schreier_settings.store(args)
    return SUCCESS


def main():
    sys.exit(execute())


if __name__ == '__main__':
    main()
