"""Ordered worker-pool map capped by ``BATRES_THREADS``."""

import os
from concurrent.futures import ThreadPoolExecutor


def max_workers(requested=None):
    """Worker count: ``requested`` (default 1) capped by ``BATRES_THREADS``."""
    n = 1 if requested is None else max(1, int(requested))
    cap = os.environ.get("BATRES_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def ordered_map(fn, items, workers=None):
    """``[fn(x) for x in items]``, possibly on a thread pool; order is kept."""
    items = list(items)
    n = max_workers(workers)
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
