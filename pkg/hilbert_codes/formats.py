"""Text formats for generator matrices and boxed matrices.

Matrix format: one row per line over '0'/'1', no separators.
Boxed format: n lines of n space-separated two-character blocks.
Both ignore blank lines and lines starting with '#'. The loaders also accept
the JSON payloads written by the CLI so commands compose through pipes.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from typing import Any

from pydantic import ValidationError

from .core import InvalidInputError
from .models import BitMatrix, BlockMatrix, parse_block


def _content_lines(text: str) -> list[str]:
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def _payload(text: str) -> dict[str, Any] | None:
    if not text.lstrip().startswith("{"):
        return None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"malformed JSON input: {e}") from e
    if not isinstance(data, dict):
        raise InvalidInputError("JSON input must be an object")
    return data


def parse_matrix_text(text: str) -> BitMatrix:
    """Parse the matrix text format.

    Raises:
        InvalidInputError: no rows, ragged rows or characters other than 0/1.
    """
    return _matrix_from_lines(_content_lines(text))


def _matrix_from_lines(lines: Iterable[str]) -> BitMatrix:
    try:
        return BitMatrix.from_strings(lines)
    except ValidationError as e:
        raise InvalidInputError(str(e)) from e


def format_matrix_text(matrix: BitMatrix) -> str:
    return "".join(f"{line}\n" for line in matrix.to_strings())


def parse_boxed_text(text: str) -> BlockMatrix:
    """Parse the boxed text format.

    Raises:
        InvalidInputError: the lines do not form an n x n array of bit pairs.
    """
    return _blocks_from_lines(_content_lines(text))


def _blocks_from_lines(lines: list[str]) -> BlockMatrix:
    if not lines:
        raise InvalidInputError("a boxed matrix needs at least one row")
    try:
        blocks = tuple(tuple(parse_block(token) for token in line.split()) for line in lines)
        return BlockMatrix(n=len(blocks), blocks=blocks)
    except ValueError as e:
        # pydantic's ValidationError is a ValueError too
        raise InvalidInputError(f"malformed boxed matrix: {e}") from e


def format_boxed_text(blocks: BlockMatrix) -> str:
    return "".join(f"{line}\n" for line in blocks.to_strings())


def load_matrix(text: str) -> BitMatrix:
    """Matrix from the text format or from a CLI payload's ``rows`` field."""
    payload = _payload(text)
    if payload is None:
        return parse_matrix_text(text)
    rows = payload.get("rows")
    if not isinstance(rows, list):
        raise InvalidInputError("JSON input has no 'rows' list")
    return _matrix_from_lines(str(row) for row in rows)


def load_boxed(text: str) -> BlockMatrix:
    """Boxed matrix from the boxed text format or from a CLI payload's ``boxed`` field."""
    payload = _payload(text)
    if payload is None:
        return parse_boxed_text(text)
    boxed = payload.get("boxed")
    if not isinstance(boxed, list):
        raise InvalidInputError("JSON input has no 'boxed' list")
    return _blocks_from_lines([str(line) for line in boxed])


def load_places(text: str) -> list[int]:
    """Odd primes from a CLI payload: its ``places`` list, else the first realization."""
    payload = _payload(text)
    if payload is None:
        raise InvalidInputError("expected a JSON payload with 'places' or 'realizations'")
    places = payload.get("places")
    if places is None:
        realizations = payload.get("realizations") or []
        if not realizations:
            raise InvalidInputError("JSON input carries no place set")
        places = realizations[0]
    if not isinstance(places, list) or not all(isinstance(p, int) for p in places):
        raise InvalidInputError("'places' must be a list of integers")
    return places
