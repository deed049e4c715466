"""
Exhaustive search over small integer grids.

Candidates are m-element selections of distinct nonzero grid vectors, taken
in lexicographic order of the sorted grid. With `dedupe` each set is tried
once; without it every ordering is tried.
"""
import itertools
import math
from collections import deque
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from balance import is_balanced, is_uniform
from common.errors import BudgetExceeded, UsageError
from common.log import logger
from config import conf
from geometry import ArithmeticMode, Configuration, PlaneVector, as_scalar

CHUNK_SIZE = 4096


@dataclass(frozen=True)
class SearchSpec:
    m: int
    coordinate_set: Tuple[Fraction, ...]
    require_uniform: bool = False
    dedupe: bool = True
    budget: Optional[int] = None

    def __post_init__(self):
        if self.m < 1:
            raise UsageError("m must be >= 1, got {}".format(self.m), {"m": self.m})
        coords = set()
        for value in self.coordinate_set:
            value = as_scalar(value)
            if not isinstance(value, Fraction):
                raise UsageError("search coordinates must be exact, got {!r}".format(value))
            coords.add(value)
        if not coords:
            raise UsageError("empty coordinate set")
        object.__setattr__(self, "coordinate_set", tuple(sorted(coords)))

    def grid(self) -> List[PlaneVector]:
        return [PlaneVector(x, y) for x in self.coordinate_set for y in self.coordinate_set if x != 0 or y != 0]

    def candidate_count(self) -> int:
        size = len(self.grid())
        return math.comb(size, self.m) if self.dedupe else math.perm(size, self.m)


def _check(spec: SearchSpec, vectors: Tuple[PlaneVector, ...]) -> Optional[Configuration]:
    c = Configuration(vectors, ArithmeticMode.EXACT)
    if not is_balanced(c).balanced:
        return None
    if spec.require_uniform and not is_uniform(c).uniform:
        return None
    return c


def _check_chunk(spec: SearchSpec, chunk: List[Tuple[PlaneVector, ...]]) -> List[Configuration]:
    return [c for c in (_check(spec, vectors) for vectors in chunk) if c is not None]


def _chunks(candidates: Iterable, size: int):
    iterator = iter(candidates)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def _bounded_map(executor: Executor, fn: Callable, items: Iterable, window: int) -> Iterator:
    """Like executor.map, but keeps at most `window` items in flight. Results come back in submission order."""
    pending = deque()
    for item in items:
        pending.append(executor.submit(fn, item))
        if len(pending) >= window:
            yield pending.popleft().result()
    while pending:
        yield pending.popleft().result()


def enumerate_balanced(spec: SearchSpec, workers: int = None) -> List[Configuration]:
    budget = conf().get("search_budget", 10**7) if spec.budget is None else spec.budget
    total = spec.candidate_count()
    if total > budget:
        raise BudgetExceeded("{} candidates exceed the budget of {}".format(total, budget), {"candidates": total, "budget": budget})

    grid = spec.grid()
    candidates = itertools.combinations(grid, spec.m) if spec.dedupe else itertools.permutations(grid, spec.m)
    workers = conf().get("search_workers", 1) if workers is None else workers

    found: List[Configuration] = []
    if workers <= 1:
        for chunk in _chunks(candidates, CHUNK_SIZE):
            found.extend(_check_chunk(spec, chunk))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for hits in _bounded_map(executor, partial(_check_chunk, spec), _chunks(candidates, CHUNK_SIZE), 2 * workers):
                found.extend(hits)

    logger.info("[Search] m={} coords={} candidates={} balanced={}".format(spec.m, [str(x) for x in spec.coordinate_set], total, len(found)))
    return found
