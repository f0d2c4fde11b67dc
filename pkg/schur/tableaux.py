"""Semistandard Young tableaux and Kostka numbers by exhaustive enumeration."""
import logging
from functools import lru_cache

from core.exceptions import KostkaWeightMismatch
from symmetric.powersums import Partition

logger = logging.getLogger(__name__)


def _cells(shape):
    return [(row, column) for row, width in enumerate(shape) for column in range(width)]


def iter_semistandard_tableaux(shape, content):
    """Yield every semistandard tableau of ``shape`` filled with ``content``.

    ``content[i]`` copies of the entry ``i + 1``; rows weakly increase and
    columns strictly increase. Tableaux are tuples of rows, yielded in
    row-major lexicographic order.
    """
    shape = Partition.from_parts(shape)
    content = tuple(content)
    if shape.weight != sum(content):
        raise KostkaWeightMismatch(
            f'Shape {shape} has weight {shape.weight}, content has weight {sum(content)}')
    cells = _cells(shape)
    remaining = list(content)
    filling = [[0] * width for width in shape]

    def backtrack(position):
        if position == len(cells):
            yield tuple(tuple(row) for row in filling)
            return
        row, column = cells[position]
        lowest = filling[row][column - 1] if column else 1
        if row:
            lowest = max(lowest, filling[row - 1][column] + 1)
        for entry in range(lowest, len(remaining) + 1):
            if not remaining[entry - 1]:
                continue
            remaining[entry - 1] -= 1
            filling[row][column] = entry
            yield from backtrack(position + 1)
            remaining[entry - 1] += 1
        filling[row][column] = 0

    yield from backtrack(0)


@lru_cache(maxsize=None)
def _kostka(shape, content):
    return sum(1 for _ in iter_semistandard_tableaux(shape, content))


def kostka(shape, content):
    """Number of semistandard tableaux of ``shape`` and ``content``."""
    shape = Partition.from_parts(shape)
    content = Partition.from_parts(content)
    if shape.weight != content.weight:
        raise KostkaWeightMismatch(
            f'Shape {shape} has weight {shape.weight}, content {content} has weight '
            f'{content.weight}')
    return _kostka(shape.parts, content.parts)
