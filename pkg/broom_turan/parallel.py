"""Process-pool fan-out driven by an asyncio event loop.

Augmentation subtrees share nothing, so each one is handed to a worker process
and the partial results are gathered back in submission order.
"""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

_LOGGER = logging.getLogger(__name__)

ItemT = TypeVar("ItemT")
ResultT = TypeVar("ResultT")


async def async_map_in_pool(
    func: Callable[[ItemT], ResultT],
    items: Sequence[ItemT],
    threads: int,
) -> list[ResultT]:
    """Apply a picklable function to every item in worker processes.

    Args:
        func: Module-level function (or partial of one) to run per item.
        items: Work items, typically augmentation-tree nodes.
        threads: Number of worker processes.

    Returns:
        Results in the order of the items.
    """
    loop = asyncio.get_running_loop()
    _LOGGER.debug("Dispatching %d subtrees to %d workers", len(items), threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [loop.run_in_executor(pool, func, item) for item in items]
        return list(await asyncio.gather(*futures))


def map_in_pool(
    func: Callable[[ItemT], ResultT],
    items: Sequence[ItemT],
    threads: int,
) -> list[ResultT]:
    """Apply a function to every item, in worker processes when threads > 1.

    Must not be called from inside a running event loop; use
    :func:`async_map_in_pool` there.
    """
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    return asyncio.run(async_map_in_pool(func, items, threads))
