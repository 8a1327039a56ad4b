# --------------------------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
import logging
import os
import threading
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

"""
This module keeps the worker threads used for embarrassingly parallel numeric work:
Monte Carlo chunks and property-suite trials.

1. Work is submitted to a named executor.  Executors are created the first time their
  name is used and are shared afterwards, so repeated calls do not pay thread start-up
  costs.

2. `map_on_named_executor` always returns results in input order.  Callers derive
  their random streams from the item index, never from the worker that ran it, so
  outputs are identical regardless of how many workers exist.

3. Exceptions raised by a work item are re-raised in the calling thread when its
  result is collected.  Remaining futures are cancelled.

4. Work submitted from inside a worker of the same executor runs inline, which keeps
  nested parallel calls from deadlocking a bounded pool.
"""

MONTE_CARLO = "monte_carlo"
SUITE = "suite"

_executors = {}
_executors_lock = threading.Lock()


def _default_workers():
    return min(8, os.cpu_count() or 1)


def _get_named_executor(name, max_workers=None):
    """
    Get a ThreadPoolExecutor object with the given name.  If no such executor exists,
    this function will create one and assign it to the provided name.
    """
    with _executors_lock:
        if name not in _executors:
            workers = max_workers or _default_workers()
            logger.info("Creating {} executor with {} workers".format(name, workers))
            _executors[name] = ThreadPoolExecutor(
                max_workers=workers, thread_name_prefix="twoofn-{}".format(name)
            )
        return _executors[name]


def _in_named_executor(name):
    return threading.current_thread().name.startswith("twoofn-{}".format(name))


def map_on_named_executor(name, func, items):
    """
    Run func on every item using the named executor and return the results in input order.

    :param str name: Name of the executor, e.g. MONTE_CARLO
    :param func: Callable taking one item
    :param items: Iterable of work items
    :returns: list of results, one per item
    """
    items = list(items)
    if len(items) <= 1 or _in_named_executor(name):
        logger.debug("Running {} item(s) inline for {}".format(len(items), name))
        return [func(item) for item in items]

    executor = _get_named_executor(name)
    futures = [executor.submit(func, item) for item in items]
    results = []
    try:
        for future in futures:
            results.append(future.result())
    except BaseException:
        for future in futures:
            future.cancel()
        raise
    return results


def shutdown_executors(wait=True):
    """
    Shut down every named executor.  New executors are created on the next use.
    """
    with _executors_lock:
        for name, executor in list(_executors.items()):
            logger.info("Shutting down {} executor".format(name))
            executor.shutdown(wait=wait)
        _executors.clear()
