"""
Command-line front end for the fuzzy topology census.

Subcommands count topologies, list them, count bitopologies, verify the
closed forms against enumeration and export result tables. Results go to
stdout (or --output); logs and statistics go to stderr.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import colorama
from colorama import Fore, Style

from fuzzytop.cli.export import (
    build_table_rows,
    family_key,
    format_family,
    listing_to_json,
    rows_to_csv,
    rows_to_json,
    write_text,
)
from fuzzytop.cli.verification import MATCH, MISMATCH, run_verification
from fuzzytop.counting.bitopology import PairConvention, bitop_closed_form, bitop_count
from fuzzytop.counting.closed_forms import formula_count
from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_LATTICE_SIZE,
    DEFAULT_WORKERS,
    EnumBudget,
    EnumStatistics,
    TopologyFamily,
    enumerate_all_sizes,
    enumerate_topologies,
)
from fuzzytop.utils.error import (
    CensusError,
    ErrorReporter,
    InvalidArgsError,
    NotCoveredError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INTERNAL_ERROR = 5


class ResultFormatter:
    """
    Formats result lines with optional coloring.
    """

    @staticmethod
    def verdict(ok: bool, with_color: bool = False) -> str:
        """
        Format a match verdict.

        Args:
            ok: Whether the compared values agree.
            with_color: Whether to add color to the output.
        """
        text = MATCH if ok else MISMATCH
        if not with_color:
            return text
        color = Fore.GREEN if ok else Fore.RED
        return f"{color}{Style.BRIGHT}{text}{Style.RESET_ALL}"

    @staticmethod
    def value(value: Optional[int]) -> str:
        return "-" if value is None else str(value)

    @staticmethod
    def dim(text: str, with_color: bool = False) -> str:
        if not with_color:
            return text
        return f"{Style.DIM}{text}{Style.RESET_ALL}"


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive range written A..B, or a single integer A.

    Raises:
        argparse.ArgumentTypeError: On malformed input.
    """
    try:
        if ".." in text:
            low_text, high_text = text.split("..", 1)
            low, high = int(low_text), int(high_text)
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}")
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high


class CensusRunner:
    """
    Runs one parsed subcommand and maps errors to exit codes.
    """

    def __init__(self, args: argparse.Namespace, output: Optional[TextIO] = None) -> None:
        """
        Initialize the runner.

        Args:
            args: Parsed command-line arguments.
            output: Stream for results. Defaults to stdout.

        Raises:
            InvalidArgsError: If a budget option is not positive.
        """
        self.args: argparse.Namespace = args
        self.output: TextIO = output if output is not None else sys.stdout
        self.json_output: bool = getattr(args, "format", "text") == "json"
        self.color: bool = (
            not args.no_color
            and not getattr(args, "output", None)
            and self.output.isatty()
        )
        self.statistics: EnumStatistics = EnumStatistics()
        self.budget: EnumBudget = EnumBudget(
            max_candidates=getattr(args, "max_candidates", DEFAULT_MAX_CANDIDATES),
            max_lattice_size=getattr(args, "max_lattice_size", DEFAULT_MAX_LATTICE_SIZE),
            workers=getattr(args, "workers", DEFAULT_WORKERS),
        )

    def emit(self, text: str = "") -> None:
        print(text, file=self.output)

    def emit_json(self, document: Any) -> None:
        print(json.dumps(document, indent=2), file=self.output)

    def run(self) -> int:
        """
        Run the selected subcommand.

        Returns:
            0 on success, 1 on a verification mismatch, or the exit code of
            the census error raised.
        """
        commands: Dict[str, Callable[[], int]] = {
            "count": self.cmd_count,
            "list": self.cmd_list,
            "bitop": self.cmd_bitop,
            "verify": self.cmd_verify,
            "table": self.cmd_table,
            "census": self.cmd_census,
        }

        try:
            return commands[self.args.command]()
        except CensusError as e:
            if self.json_output:
                self.emit_json({"success": False, "error": ErrorReporter.format_json_error(e)})
            else:
                print(f"Error: {ErrorReporter.report_error(e)}", file=sys.stderr)
            return e.EXIT_CODE
        finally:
            if self.args.stats:
                self._print_statistics()

    def _context(self) -> LatticeContext:
        return LatticeContext(self.args.n, self.args.m)

    def _print_statistics(self) -> None:
        self.statistics.finish()
        report = self.statistics.get_report()
        print("\nStatistics:", file=sys.stderr)
        print("-" * 30, file=sys.stderr)
        print(f"Search nodes: {report['nodes']}", file=sys.stderr)
        print(f"Pruned branches: {report['pruned']}", file=sys.stderr)
        print(f"Families found: {report['families']}", file=sys.stderr)
        print(f"Partitions: {report['partitions']}", file=sys.stderr)
        print(f"Processing time: {report['processing_time']:.6f} seconds", file=sys.stderr)

    def cmd_count(self) -> int:
        """Print tau(n, m, k) by formula, enumeration, or both."""
        n, m, k = self.args.n, self.args.m, self.args.k
        method = self.args.method
        label = f"tau(n={n}, m={m}, k={k})"

        formula = None
        source = None
        if method in ("formula", "both", "auto"):
            try:
                result = formula_count(n, m, k)
                formula, source = result.value, result.source.value
            except NotCoveredError:
                if method == "formula":
                    raise
                logger.info("%s has no closed form, enumerating", label)

        # k above m^n: the small-k formulas give 0 and there is nothing to enumerate
        skip_enumeration = method == "both" and formula is not None and k > m**n

        enumeration = None
        if skip_enumeration:
            logger.info("%s exceeds the lattice size, enumeration skipped", label)
        elif method in ("enumerate", "both") or (method == "auto" and formula is None):
            enumeration = enumerate_topologies(
                self._context(), k, self.budget, statistics=self.statistics
            )

        ok = formula is None or enumeration is None or formula == enumeration
        if self.json_output:
            self.emit_json(
                {
                    "n": n,
                    "m": m,
                    "k": k,
                    "formula": formula,
                    "source": source,
                    "enumeration": enumeration,
                    "match": (formula == enumeration)
                    if formula is not None and enumeration is not None
                    else None,
                }
            )
        else:
            if formula is not None:
                self.emit(f"{label} = {formula}  [{source}]")
            elif method == "both":
                self.emit(f"{label}: no closed form (not covered)")
            if enumeration is not None:
                self.emit(f"{label} = {enumeration}  [enumeration]")
            elif skip_enumeration:
                self.emit(f"{label}: enumeration not applicable (k > m^n = {m**n})")
            if formula is not None and enumeration is not None:
                self.emit(ResultFormatter.verdict(ok, self.color))

        return EXIT_OK if ok else EXIT_MISMATCH

    def cmd_list(self) -> int:
        """List every k-element topology."""
        ctx = self._context()
        k = self.args.k
        families: List[TopologyFamily] = []
        enumerate_topologies(ctx, k, self.budget, emit=families.append, statistics=self.statistics)
        families.sort(key=family_key)

        if self.json_output:
            text = listing_to_json(ctx, k, families) + "\n"
        else:
            lines = [format_family(f, self.args.rational_grades) for f in families]
            lines.append(f"{len(families)} fuzzy topologies with {k} open sets")
            text = "\n".join(lines) + "\n"

        if self.args.output:
            write_text(self.args.output, text)
        else:
            self.output.write(text)
        return EXIT_OK

    def cmd_bitop(self) -> int:
        """Print T and the pair count under the chosen convention."""
        n, m, k = self.args.n, self.args.m, self.args.k
        conv = PairConvention.from_flag(self.args.convention)
        method = self.args.method
        if method == "auto":
            try:
                formula_count(n, m, k)
                method = "formula"
            except NotCoveredError:
                method = "enumerate"

        result = bitop_count(n, m, k, conv, method, self.budget)

        closed = None
        if conv is PairConvention.PAPER:
            try:
                closed = bitop_closed_form(n, m, k)
            except NotCoveredError:
                pass
        ok = closed is None or closed == result.pair_count

        if self.json_output:
            self.emit_json(
                {
                    "n": n,
                    "m": m,
                    "k": k,
                    "convention": conv.value,
                    "method": result.method,
                    "topologies": result.topology_count,
                    "pairs": result.pair_count,
                    "direct_closed_form": closed,
                }
            )
        else:
            self.emit(f"T = {result.topology_count}  [{result.method}]")
            self.emit(f"pairs = {result.pair_count}  [{conv.value}]")
            if closed is not None:
                verdict = ResultFormatter.verdict(ok, self.color)
                self.emit(f"direct closed form = {closed}  {verdict}")

        return EXIT_OK if ok else EXIT_MISMATCH

    def cmd_verify(self) -> int:
        """Sweep every covered cell and compare formula with enumeration."""
        report = run_verification(
            self.args.max_n, self.args.max_m, self.args.max_k, self.budget
        )
        timings = self.args.timings

        if self.json_output:
            self.emit_json(report.to_dict(timings))
        else:
            header = f"{'n':>3} {'m':>3} {'k':>4} {'formula':>12} {'enumeration':>12}  status"
            if timings:
                header += "  ms"
            self.emit(header)
            self.emit("-" * len(header))
            for row in report.rows:
                status = (
                    ResultFormatter.verdict(row.match, self.color)
                    if row.status in (MATCH, MISMATCH)
                    else ResultFormatter.dim(row.status, self.color)
                )
                line = (
                    f"{row.n:>3} {row.m:>3} {row.k:>4} "
                    f"{ResultFormatter.value(row.formula):>12} "
                    f"{ResultFormatter.value(row.enumeration):>12}  {status}"
                )
                if timings:
                    line += f"  {row.elapsed_ms:.1f}"
                self.emit(line)
            summary = report.summary()
            self.emit(
                f"\ncells: {summary['cells']}  matches: {summary['matches']}  "
                f"mismatches: {summary['mismatches']}  skips: {summary['skips']}"
            )

        return EXIT_OK if report.ok else EXIT_MISMATCH

    def cmd_table(self) -> int:
        """Export the n, m, k table as CSV or JSON."""
        n_low, n_high = self.args.n_range or (self.args.n, self.args.n)
        m_low, m_high = self.args.m_range or (self.args.m, self.args.m)
        k_low, k_high = self.args.k_range
        if n_low is None or m_low is None:
            raise InvalidArgsError("table needs --n or --n-range and --m or --m-range")

        rows = build_table_rows(
            range(n_low, n_high + 1),
            range(m_low, m_high + 1),
            range(k_low, k_high + 1),
            self.budget,
        )
        text = rows_to_json(rows) if self.json_output else rows_to_csv(rows)

        if self.args.output:
            write_text(self.args.output, text)
            logger.info("wrote %d rows to %s", len(rows), self.args.output)
        else:
            self.output.write(text)
        return EXIT_OK

    def cmd_census(self) -> int:
        """Count the topologies of every size on one lattice."""
        ctx = self._context()
        census = enumerate_all_sizes(ctx, self.budget, statistics=self.statistics)
        total = sum(census.values())

        if self.json_output:
            self.emit_json(
                {
                    "n": ctx.n,
                    "m": ctx.m,
                    "counts": {str(k): v for k, v in census.items()},
                    "total": total,
                }
            )
        else:
            for k, count in census.items():
                self.emit(f"k={k}: {count}")
            self.emit(f"total: {total}")
        return EXIT_OK


def _add_budget_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-candidates",
        type=int,
        default=DEFAULT_MAX_CANDIDATES,
        help="Cap on candidate families examined by enumeration.",
    )
    parser.add_argument(
        "--max-lattice-size",
        type=int,
        default=DEFAULT_MAX_LATTICE_SIZE,
        help="Cap on m^n for enumeration.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help="Worker processes for enumeration (1 = in process).",
    )


def _add_nmk(parser: argparse.ArgumentParser, with_k: bool = True) -> None:
    parser.add_argument("--n", type=int, required=True, help="Number of points of X.")
    parser.add_argument("--m", type=int, required=True, help="Number of grades in M.")
    if with_k:
        parser.add_argument("--k", type=int, required=True, help="Number of open sets.")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with every subcommand.

    Returns:
        The parser.
    """
    parser = argparse.ArgumentParser(
        prog="fuzzytop",
        description="Exact counts of fuzzy topologies and fuzzy bitopologies.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for debug)."
    )
    parser.add_argument("--no-color", action="store_true", help="Disable colored output.")
    parser.add_argument(
        "--stats", action="store_true", help="Print search statistics to stderr."
    )

    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="Count fuzzy topologies with k open sets.")
    _add_nmk(count)
    count.add_argument(
        "--method", choices=["auto", "formula", "enumerate", "both"], default="auto"
    )
    count.add_argument("--format", choices=["text", "json"], default="text")
    _add_budget_options(count)

    listing = sub.add_parser("list", help="List fuzzy topologies with k open sets.")
    _add_nmk(listing)
    listing.add_argument("--format", choices=["text", "json"], default="text")
    listing.add_argument("--output", help="File for the listing (default: stdout).")
    listing.add_argument(
        "--rational-grades", action="store_true", help="Print grades as i/(m-1)."
    )
    _add_budget_options(listing)

    bitop = sub.add_parser("bitop", help="Count fuzzy bitopologies with k open sets.")
    _add_nmk(bitop)
    bitop.add_argument(
        "--convention", choices=["paper", "ordered", "distinct"], default="paper"
    )
    bitop.add_argument("--method", choices=["auto", "formula", "enumerate"], default="auto")
    bitop.add_argument("--format", choices=["text", "json"], default="text")
    _add_budget_options(bitop)

    verify = sub.add_parser("verify", help="Check closed forms against enumeration.")
    verify.add_argument("--max-n", type=int, default=3)
    verify.add_argument("--max-m", type=int, default=3)
    verify.add_argument("--max-k", type=int, default=5)
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument(
        "--timings", action="store_true", help="Include per-cell elapsed milliseconds."
    )
    _add_budget_options(verify)

    table = sub.add_parser("table", help="Export a results table.")
    table.add_argument("--n", type=int, help="Single n (or use --n-range).")
    table.add_argument("--m", type=int, help="Single m (or use --m-range).")
    table.add_argument("--n-range", type=parse_range, help="Inclusive range A..B of n.")
    table.add_argument("--m-range", type=parse_range, help="Inclusive range A..B of m.")
    table.add_argument(
        "--k-range", type=parse_range, default=(2, 5), help="Inclusive range A..B of k."
    )
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--output", help="File for the table (default: stdout).")
    _add_budget_options(table)

    census = sub.add_parser("census", help="Count topologies of every size on (n, m).")
    _add_nmk(census, with_k=False)
    census.add_argument("--format", choices=["text", "json"], default="text")
    _add_budget_options(census)

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main function.

    Args:
        argv: Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        Exit code: 0 success, 1 mismatch, 2 invalid arguments, 3 over
        budget, 4 I/O failure, 5 internal error.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    colorama.just_fix_windows_console()

    try:
        return CensusRunner(args).run()
    except CensusError as e:
        print(f"Error: {ErrorReporter.report_error(e)}", file=sys.stderr)
        return e.EXIT_CODE
    except Exception as e:
        logger.debug("unhandled error", exc_info=True)
        print(f"Fatal error: {str(e)}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
