"""Multi-indices: tuples of non-negative integers used as summation indices.

A multi-index ``gamma`` in N^n has a weight ``|gamma| = sum(gamma)`` and a
second elementary symmetric value ``e2(gamma) = sum_{i<j} gamma_i*gamma_j``.
Enumeration comes in two flavours matching the two termination shapes of the
catalog: fixed total weight (a simplex shell) and a rectangular box.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence, Tuple

MultiIndex = Tuple[int, ...]


def weight(gamma: Sequence[int]) -> int:
    return sum(gamma)


def e2(gamma: Sequence[int]) -> int:
    """Second elementary symmetric polynomial of the entries."""
    s = sum(gamma)
    return (s * s - sum(g * g for g in gamma)) // 2


def enumerate_weight(n: int, total: int) -> Iterator[MultiIndex]:
    """Yield all gamma in N^n with |gamma| == total, in lexicographic order."""
    if n < 0 or total < 0:
        raise ValueError(f"need n >= 0 and total >= 0, got n={n}, total={total}")
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in enumerate_weight(n - 1, total - head):
            yield (head,) + rest


def enumerate_box(bounds: Sequence[int]) -> Iterator[MultiIndex]:
    """Yield all gamma with 0 <= gamma_i <= bounds_i, in lexicographic order."""
    if any(b < 0 for b in bounds):
        raise ValueError(f"box bounds must be non-negative, got {tuple(bounds)}")
    yield from product(*(range(b + 1) for b in bounds))
