"""
Command line entry point. Subcommands share the controllers with the HTTP API.

    python cli.py ptab 2,1,2
    python cli.py commutes 2,1,2 1
    python cli.py centralizer 1 --len 4 --max 2
    python cli.py count 1 --len 4 --max 2
    python cli.py expand 1 --len 4
    python cli.py conjecture stability --u 12345 --w-alphabet 5 --w-length 6 --k-bound 4

Exit status: 0 success or conjecture holds, 1 counterexample found, 2 usage, budget
or interrupted sweep.
"""
import argparse
import json
import sys

from actions.harness import CONJECTURES, COUNTEREXAMPLE, HOLDS
from controller.controller_centralizer import controller_centralizer
from controller.controller_commutes import controller_commutes
from controller.controller_conjecture import controller_conjecture
from controller.controller_count import controller_count
from controller.controller_expand import controller_expand
from controller.controller_ptab import controller_ptab
from utils.config import REPORTS_DIR, default_workers
from utils.error import messageError
from utils.file_manager import write_report
from utils.logging_config import configure_logger

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; raise instead so cli_dispatch can return a status
    def error(self, message):
        self.print_usage(sys.stderr)
        raise messageError(f"{self.prog}: error: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON document instead of text")
    parser = _Parser(prog="plactic", description="Plactic monoid centralizer toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ptab = sub.add_parser("ptab", parents=[common], help="insertion tableau P(w)")
    ptab.add_argument("word")

    commutes = sub.add_parser("commutes", parents=[common], help="does w lie in C(u)")
    commutes.add_argument("u")
    commutes.add_argument("w")

    for name, text in (("centralizer", "list C(u) in [max]^len"), ("count", "c_{len,max}(u)")):
        command = sub.add_parser(name, parents=[common], help=text)
        command.add_argument("u")
        command.add_argument("--len", type=int, required=True)
        command.add_argument("--max", type=int, required=True)
        command.add_argument("--workers", type=int, default=1)
        if name == "count":
            command.add_argument("--method", choices=("brute", "shapes"), default="brute")

    expand = sub.add_parser("expand", parents=[common], help="binomial-basis expansion of c_{len,m}(u)")
    expand.add_argument("u")
    expand.add_argument("--len", type=int, required=True)
    expand.add_argument("--method", choices=("shapes", "brute"), default="shapes")

    conjecture = sub.add_parser("conjecture", parents=[common], help="verify a conjecture over a finite range")
    conjecture.add_argument("name", choices=CONJECTURES)
    conjecture.add_argument("--u")
    conjecture.add_argument("--m", type=int)
    conjecture.add_argument("--u-alphabet", type=int)
    conjecture.add_argument("--u-length", type=int)
    conjecture.add_argument("--u-sum", type=int)
    conjecture.add_argument("--w-alphabet", type=int)
    conjecture.add_argument("--w-length", type=int)
    conjecture.add_argument("--k-bound", type=int)
    conjecture.add_argument("--n-max", type=int)
    conjecture.add_argument("--shards", type=int)
    conjecture.add_argument("--workers", type=int, help="worker processes (default: PLACTIC_WORKERS or the physical core count)")
    conjecture.add_argument("--budget", type=int)
    conjecture.add_argument("--output", nargs="?", const=REPORTS_DIR, help="directory for the JSON report")
    conjecture.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    return parser


def _print_json(document):
    print(json.dumps(document, sort_keys=True, indent=2))


def _run(args) -> int:
    if args.command == "ptab":
        result = controller_ptab({"word": args.word})
        if args.json:
            _print_json(result)
        elif result["text"]:
            print(result["text"])
        return EXIT_OK

    if args.command == "commutes":
        result = controller_commutes({"u": args.u, "w": args.w})
        if args.json:
            _print_json(result)
        else:
            print(str(result["commutes"]).lower())
        return EXIT_OK

    if args.command == "centralizer":
        result = controller_centralizer(
            {"u": args.u, "len": args.len, "max": args.max, "workers": args.workers}
        )
        if args.json:
            _print_json(result)
        else:
            for word in result["words"]:
                print(word or "()")
        return EXIT_OK

    if args.command == "count":
        result = controller_count(
            {"u": args.u, "len": args.len, "max": args.max, "method": args.method, "workers": args.workers}
        )
        if args.json:
            _print_json(result)
        else:
            print(result["count"])
        return EXIT_OK

    if args.command == "expand":
        result = controller_expand({"u": args.u, "len": args.len, "method": args.method})
        if args.json:
            _print_json(result)
        else:
            print(result["expansion"])
        return EXIT_OK

    workers = args.workers if args.workers is not None else default_workers()
    data = {
        "conjecture": args.name,
        "u": args.u,
        "m": args.m,
        "u_alphabet": args.u_alphabet,
        "u_length": args.u_length,
        "u_sum": args.u_sum,
        "w_alphabet": args.w_alphabet,
        "w_length": args.w_length,
        "k_bound": args.k_bound,
        "n_max": args.n_max,
        # one block per worker unless --shards says otherwise
        "shards": args.shards if args.shards is not None else workers,
        "workers": workers,
        "budget": args.budget,
        "timing": not args.no_timing,
    }
    report = controller_conjecture(data)
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.output:
        path = write_report(text, args.output, f"{args.name}-report")
        print(f"report: {path}", file=sys.stderr)
    if args.json:
        print(text)
    else:
        print(f"{report['conjecture']}: {report['verdict']} ({report['checked']} checked)")
        for key, value in sorted(report["summary"].items()):
            if key != "lines":
                print(f"  {key}: {value}")
        for example in report["counterexamples"]:
            print(f"  u={example['u']} w={example['w']}: {example['detail']}")
    if report["verdict"] == HOLDS:
        return EXIT_OK
    if report["verdict"] == COUNTEREXAMPLE:
        return EXIT_COUNTEREXAMPLE
    return EXIT_USAGE


def cli_dispatch(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except messageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK
    configure_logger()
    try:
        return _run(args)
    except messageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(cli_dispatch())
