"""
BOHRKIT Sweep Module

Seeded, order-stable fan-out of per-sample work over a thread pool.

Each sample index gets its own generator spawned from one SeedSequence,
so the draw for sample i never depends on scheduling or worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, TypeVar

import numpy as np

from ..utils.logger import get_logger
from ..utils.validators import validate_positive_int


logger = get_logger('bohrkit.sweep')

T = TypeVar('T')
SampleTask = Callable[[int, np.random.Generator], T]


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """One independent generator per sample index."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def run_sweep(task: SampleTask, count: int, seed: int = 0, workers: int = 1) -> List[T]:
    """
    Run task(index, rng) for every index in range(count).

    Args:
        task: Per-sample callable; must not share mutable state across calls
        count: Number of samples (>= 1)
        seed: Root seed for the spawned generators
        workers: Thread count; 1 runs inline

    Returns:
        Results in index order
    """
    count = validate_positive_int(count, "samples")
    workers = validate_positive_int(workers, "workers")
    generators = spawn_generators(seed, count)

    if workers == 1:
        results = [task(i, rng) for i, rng in enumerate(generators)]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="bohrkit-sweep") as executor:
            futures = [executor.submit(task, i, rng) for i, rng in enumerate(generators)]
            results = [future.result() for future in futures]

    logger.info("Sweep finished: %d samples, seed %d, %d worker(s)", count, seed, workers)
    return results
