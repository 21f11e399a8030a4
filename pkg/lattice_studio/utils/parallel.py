# =========================================================================== #
#                            ORDERED PARALLEL MAP                             #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \parallel.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Tuesday August 18th 2026, 1:29:39 pm                           #
# Last Modified: Wednesday August 26th 2026, 10:23:45 pm                      #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Thread pool helper whose results do not depend on the thread count."""
from concurrent.futures import ThreadPoolExecutor
import logging
import os

logger = logging.getLogger(__name__)

THREADS_ENV = 'LATTICE_STUDIO_THREADS'

def default_threads():
    """Thread count from the environment, 1 when unset or invalid."""
    value = os.environ.get(THREADS_ENV)
    if value is None:
        return 1
    try:
        threads = int(value)
    except ValueError:
        logger.warning("ignoring %s=%r, expected a positive integer",
                       THREADS_ENV, value)
        return 1
    return max(threads, 1)

def ordered_map(func, items, threads=1):
    """Applies func to every item and returns the results in input order.

    Parameters
    ----------
    func : callable
        Pure function of one argument.

    items : iterable
        Work items.

    threads : int, optional (default=1)
        Number of worker threads. With 1 the items run in the caller's
        thread.
    """
    items = list(items)
    if threads is None:
        threads = default_threads()
    if not isinstance(threads, int) or threads < 1:
        raise ValueError("threads must be a positive integer.")
    if threads == 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(func, item) for item in items]
        return [future.result() for future in futures]
