"""Chunked map over a process pool, with results merged in submission order."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

THREADS_ENV = "EFL_THREADS"

_default_threads: int | None = None


def set_default_threads(k: int | None) -> None:
    global _default_threads
    _default_threads = k


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        threads = _default_threads
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        threads = int(env) if env else 1
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    return threads


def map_chunks(func: Callable, args: Sequence[tuple], threads: int | None = None) -> list:
    threads = resolve_threads(threads)
    if threads == 1 or len(args) <= 1:
        return [func(*a) for a in args]
    with ProcessPoolExecutor(max_workers=min(threads, len(args))) as pool:
        futures = [pool.submit(func, *a) for a in args]
        return [f.result() for f in futures]


def merged_counts(func: Callable, args: Sequence[tuple], threads: int | None = None) -> Counter:
    total: Counter = Counter()
    for c in map_chunks(func, args, threads):
        total.update(c)
    return total
