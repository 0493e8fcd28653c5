"""Small shared helpers: published-table rounding and ordered parallel maps."""
from __future__ import annotations

import concurrent.futures
from decimal import Decimal, ROUND_HALF_UP
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def round_half_away(value: float, ndigits: int) -> float:
    """Round to `ndigits` with ties going away from zero.

    Python's built-in round() uses banker's rounding; hand-rounded tables
    round .5 away from zero, so emitted figures use this instead.
    """
    quantum = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def ordered_map(func: Callable[[T], U], items: Iterable[T], threads: int = 1) -> list[U]:
    """Map `func` over `items`, preserving input order.

    With threads > 1 the work runs on a thread pool; results come back in
    input order either way, so downstream aggregation stays deterministic.
    """
    seq = list(items)
    if threads <= 1 or len(seq) <= 1:
        return [func(item) for item in seq]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, seq))
