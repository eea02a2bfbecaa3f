"""Deterministic helpers for optional thread-level parallelism.

Results are always assembled in input order, and every task is a pure
function of its argument, so output is bit-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor


def parallel_map(fn, items, threads: int = 1) -> list:
    """Map ``fn`` over ``items``, optionally on a thread pool.

    The returned list is ordered like ``items`` regardless of completion
    order; ``threads <= 1`` runs sequentially.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
