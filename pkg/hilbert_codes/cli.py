"""Command-line front end for the Hilbert code toolkit.

Every command writes one JSON document to standard output on success (exit 0).
Domain errors exit 1 and usage errors exit 2, with diagnostics on standard
error and nothing on standard output. Other exceptions are logged and
propagate.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from pydantic import BaseModel, Field

from . import __version__
from .core import DEFAULT_CONFIG, HilbertCodeError, InvalidInputError
from .formats import load_boxed, load_matrix, load_places
from .models import (
    BitMatrix,
    BlockMatrix,
    EquivalenceWitness,
    Place,
    WeightEnumerator,
)
from .primes import is_odd_prime
from .tools import boxed, gf2core, hilbert_code, localsym
from .tools.realize import realize as realize_boxed
from .tools.realize import verify_realization

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


class CommandOutcome(BaseModel):
    """Result of one CLI invocation."""

    exit_code: int = Field(..., description="0 success, 1 domain error, 2 usage error")
    payload: dict[str, Any] | None = Field(
        None, description="JSON document for standard output, present only on success"
    )
    diagnostics: str = Field("", description="Text for standard error")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _parse_places(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"places must be comma-separated integers, got {text!r}"
        ) from None


def _parse_place(text: str) -> Place:
    if text.lower() in ("inf", "infinity"):
        return Place.infinity()
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"place must be 'inf', '2' or an odd prime, got {text!r}"
        ) from None
    if p == 2:
        return Place.two()
    if not is_odd_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not an odd prime")
    return Place.odd(p)


def _read_source(source: str) -> str:
    """Read a file argument; '-' reads standard input."""
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.is_file():
        raise InvalidInputError(f"input file not found: {source}")
    return path.read_text(encoding="utf-8")


def _enumerator_pairs(enumerator: WeightEnumerator | None) -> list[list[int]] | None:
    return enumerator.as_pairs() if enumerator is not None else None


def _witness_payload(witness: EquivalenceWitness) -> dict[str, Any]:
    return {
        "row_transform": witness.row_transform.to_strings(),
        "column_permutation": list(witness.column_permutation),
    }


def _code_statistics(matrix: BitMatrix) -> dict[str, Any]:
    """Enumerator-derived fields for any generator matrix, within the guard."""
    rank = gf2core.rank(matrix)
    stats: dict[str, Any] = {
        "length": matrix.n_cols,
        "dimension": rank,
        "weight_enumerator": None,
        "min_distance": None,
        "doubly_even": gf2core.is_doubly_even(matrix),
        "identified_as": None,
    }
    if 0 < rank <= DEFAULT_CONFIG.enumerator_rank_guard:
        enumerator = gf2core.weight_enumerator(matrix)
        stats["weight_enumerator"] = enumerator.as_pairs()
        stats["min_distance"] = min(w for w in enumerator.counts if w > 0)
        if matrix.n_cols % 2 == 0:
            stats["identified_as"] = hilbert_code.identify_code(matrix, enumerator)
    return stats


def _cmd_build(args: argparse.Namespace) -> dict[str, Any]:
    candidates = args.places if args.places is not None else load_places(
        _read_source(args.source)
    )
    places = hilbert_code.verify_place_set(candidates)
    metadata = hilbert_code.code_metadata(places)
    generator = metadata.generator
    return {
        "places": list(places.primes),
        "length": generator.n_cols,
        "dimension": places.n,
        "rows": generator.to_strings(),
        "boxed": metadata.boxed_blocks.to_strings(),
        "weight_enumerator": _enumerator_pairs(metadata.weight_enumerator),
        "min_distance": metadata.min_distance,
        "doubly_even": metadata.doubly_even,
        "identified_as": metadata.identified_as,
    }


def _cmd_box(args: argparse.Namespace) -> dict[str, Any]:
    matrix = load_matrix(_read_source(args.input))
    blocks, witness = boxed.box_code(matrix)
    flattened = boxed.matrix_of(blocks)
    return {
        "length": matrix.n_cols,
        "dimension": matrix.n_rows,
        "rows": flattened.to_strings(),
        "boxed": blocks.to_strings(),
        "witness": _witness_payload(witness),
    }


def _cmd_realize(args: argparse.Namespace) -> dict[str, Any]:
    blocks = load_boxed(_read_source(args.boxed))
    result = realize_boxed(blocks, count=args.count, bound=args.bound)
    realizations = [list(s.primes) for s in result.realizations]
    return {
        "boxed": blocks.to_strings(),
        "places": realizations[0] if realizations else None,
        "realizations": realizations,
        "count": args.count,
        "bound": result.bound,
        "exhausted": result.exhausted,
        "deepest_index": result.deepest_index,
    }


def _cmd_enumerate(args: argparse.Namespace) -> dict[str, Any]:
    n = args.n
    boxed.check_boxed_dimension(n)
    payload: dict[str, Any] = {"n": n, "length": 2 * n, "count": boxed.boxed_count(n)}
    if args.classify:
        payload["classes"] = [
            {
                "weight_enumerator": entry["weight_enumerator"].as_pairs(),
                "size": entry["size"],
                "members": entry["members"],
            }
            for entry in boxed.classify_boxed(n)
        ]
    else:
        payload["boxed"] = [b.to_strings() for b in boxed.enumerate_boxed(n)]
    return payload


def _cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    if args.boxed is not None and args.places is None:
        raise InvalidInputError("--boxed checks a realization and needs --places")
    if args.places is not None:
        places = hilbert_code.verify_place_set(args.places)
        matrix = hilbert_code.generator_matrix(places)
        payload: dict[str, Any] = {"places": list(places.primes)}
    else:
        matrix = load_matrix(_read_source(args.input))
        payload = {}
    is_square_shape = matrix.n_cols == 2 * matrix.n_rows
    view: BlockMatrix | None = boxed.blocks_of(matrix) if is_square_shape else None
    payload.update(
        {
            "rows": matrix.to_strings(),
            "self_dual": matrix.n_cols % 2 == 0
            and gf2core.is_self_dual_generator(matrix),
            "is_boxed": view is not None and boxed.is_boxed(view),
            **_code_statistics(matrix),
        }
    )
    if args.boxed is not None:
        target = load_boxed(_read_source(args.boxed))
        payload["realizes"] = verify_realization(target, args.places)
    return payload


def _cmd_symbol(args: argparse.Namespace) -> dict[str, Any]:
    bit = localsym.hilbert_symbol(args.a, args.b, args.place)
    return {
        "a": args.a,
        "b": args.b,
        "place": args.place.label,
        "symbol": bit,
        "value": -1 if bit else 1,
    }


def _cmd_weights(args: argparse.Namespace) -> dict[str, Any]:
    matrix = load_matrix(_read_source(args.input))
    if gf2core.rank(matrix) == 0:
        raise InvalidInputError("the row space is zero")
    return {"rows": matrix.to_strings(), **_code_statistics(matrix)}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hilbert-codes",
        description="Self-dual codes from Hilbert symbols: build, box and realize.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--verbose", action="store_true", help="Log debug traces to standard error"
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    build = commands.add_parser("build", help="Generator matrix of the Hilbert code of S")
    source = build.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--places",
        type=_parse_places,
        help="Odd primes p = 3 mod 4, comma-separated (2 and inf are implicit)",
    )
    source.add_argument(
        "--from",
        dest="source",
        help="JSON payload carrying 'places' or 'realizations' ('-' for stdin)",
    )
    build.set_defaults(handler=_cmd_build)

    box = commands.add_parser("box", help="Carry a self-dual generator to boxed form")
    box.add_argument("--input", required=True, help="Matrix file ('-' for stdin)")
    box.set_defaults(handler=_cmd_box)

    realize = commands.add_parser("realize", help="Find place sets realizing a boxed matrix")
    realize.add_argument("--boxed", required=True, help="Boxed matrix file ('-' for stdin)")
    realize.add_argument("--count", type=int, default=1, help="Number of realizations")
    realize.add_argument("--bound", type=int, default=None, help="Largest prime tried")
    realize.set_defaults(handler=_cmd_realize)

    enumerate_cmd = commands.add_parser("enumerate", help="List every boxed matrix of size n")
    enumerate_cmd.add_argument("--n", type=int, required=True, help="Block dimension")
    enumerate_cmd.add_argument(
        "--classify", action="store_true", help="Group by weight enumerator"
    )
    enumerate_cmd.set_defaults(handler=_cmd_enumerate)

    verify = commands.add_parser("verify", help="Check self-duality and boxed form")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--places", type=_parse_places, help="Odd primes of S")
    target.add_argument("--input", help="Matrix file ('-' for stdin)")
    verify.add_argument("--boxed", help="Boxed matrix the place set should realize")
    verify.set_defaults(handler=_cmd_verify)

    symbol = commands.add_parser("symbol", help="Hilbert symbol (a, b)_v")
    symbol.add_argument("--a", type=int, required=True)
    symbol.add_argument("--b", type=int, required=True)
    symbol.add_argument("--place", type=_parse_place, required=True, help="inf, 2 or P")
    symbol.set_defaults(handler=_cmd_symbol)

    weights = commands.add_parser("weights", help="Weight enumerator of a matrix")
    weights.add_argument("--input", required=True, help="Matrix file ('-' for stdin)")
    weights.set_defaults(handler=_cmd_weights)

    return parser


def execute(argv: Sequence[str]) -> CommandOutcome:
    """Parse and run one command without touching standard output."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as e:
        return CommandOutcome(exit_code=EXIT_USAGE_ERROR, diagnostics=str(e))
    except SystemExit as e:
        # --help and --version print and exit on their own
        code = e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR
        return CommandOutcome(exit_code=code)

    logging.getLogger("hilbert_codes").setLevel(
        logging.DEBUG if args.verbose else logging.WARNING
    )
    try:
        payload = args.handler(args)
    except HilbertCodeError as e:
        logger.debug(f"{args.command} failed: {e}", exc_info=True)
        return CommandOutcome(exit_code=EXIT_DOMAIN_ERROR, diagnostics=f"error: {e}\n")
    except Exception as e:
        logger.error(f"Unexpected failure in {args.command}: {e}", exc_info=True)
        raise
    logger.info(f"{args.command} completed")
    return CommandOutcome(exit_code=EXIT_OK, payload={"command": args.command, **payload})


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI, writing the payload to stdout and diagnostics to stderr."""
    outcome = execute(sys.argv[1:] if argv is None else argv)
    if outcome.diagnostics:
        sys.stderr.write(outcome.diagnostics)
    if outcome.payload is not None:
        sys.stdout.write(json.dumps(outcome.payload, indent=2) + "\n")
    return outcome.exit_code


def main() -> None:
    logging.basicConfig(
        level=logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
