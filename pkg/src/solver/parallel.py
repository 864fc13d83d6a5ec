"""
Order-preserving fan-out for enumeration prefixes and theorem trials.

Results always come back in task order, so callers reduce them exactly as
a serial loop would and the outcome does not depend on the worker count.
"""
import logging
import multiprocessing
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterator, Sequence, TypeVar

logger = logging.getLogger("tverberg.parallel")

T = TypeVar("T")
R = TypeVar("R")


def _make_executor(jobs: int) -> Executor:
    """Process pool with 'fork'; threads where fork is unavailable."""
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=jobs, mp_context=ctx)
    except ValueError as e:
        logger.warning("Process pool unavailable, using threads", extra={"error": str(e)})
        return ThreadPoolExecutor(max_workers=jobs)


def ordered_map(func: Callable[[T], R], tasks: Sequence[T], jobs: int = 1) -> Iterator[R]:
    """
    Yield ``func(task)`` for each task in order.

    With jobs > 1 tasks run in worker processes; closing the iterator early
    cancels the tasks that have not started.
    """
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield func(task)
        return

    executor = _make_executor(min(jobs, len(tasks)))
    try:
        for result in executor.map(func, tasks):
            yield result
    finally:
        executor.shutdown(wait=True, cancel_futures=True)
