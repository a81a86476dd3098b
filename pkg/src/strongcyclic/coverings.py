"""Existence, counting and enumeration of n-fold strongly-cyclic branched coverings.

A covering is recorded by its monodromy on the knot group generators with
the meridian normalized to 1, i.e. a vector ``x`` in ``Z_n^g`` solving
``H x + b == 0 (mod n)``. Distinct solutions are non-equivalent coverings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .intlinalg import IntMatrix, gcd_mod, is_solution, solve_congruences
from .presentation import HomologyData

BRUTE_FORCE_LIMIT = 10**7


class CoveringError(ValueError):
    pass


class SearchSpaceTooLarge(CoveringError):
    pass


class CountExceedsLimit(CoveringError):
    """The solution count is over the cap; ``partial`` holds the first ``limit`` in order."""

    def __init__(self, count: int, limit: int, partial: list["Monodromy"]):
        super().__init__(f"{count} coverings exceed the enumeration cap {limit}")
        self.count = count
        self.limit = limit
        self.partial = partial


@dataclass(frozen=True, order=True)
class Monodromy:
    n: int
    x: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise CoveringError(f"covering degree must be at least 2, got {self.n}")
        if any(not 0 <= v < self.n for v in self.x):
            raise CoveringError(f"monodromy entries must lie in 0..{self.n - 1}: {self.x}")

    @property
    def gamma_image(self) -> int:
        return 1

    @classmethod
    def reduced(cls, n: int, x: Sequence[int]) -> "Monodromy":
        return cls(n, tuple(int(v) % n for v in x))

    def satisfies(self, h: HomologyData) -> bool:
        return len(self.x) == h.genus and is_solution(h.H, h.b, self.n, self.x)


@dataclass(frozen=True)
class CoveringReport:
    n: int
    exists: bool
    count: int
    monodromies: tuple[Monodromy, ...] | None = None
    truncated: bool = False


def _check_n(n: int) -> None:
    if n < 2:
        raise CoveringError(f"covering degree must be at least 2, got {n}")


def covering_exists(h: HomologyData, n: int) -> bool:
    _check_n(n)
    return all(gcd_mod(e, n) == gcd_mod(ep, n) for e, ep in zip(h.e, h.eprime))


def covering_count(h: HomologyData, n: int) -> int:
    _check_n(n)
    if not covering_exists(h, n):
        return 0
    return n**h.d * math.prod(gcd_mod(t, n) for t in h.torsion)


def unique_covering(h: HomologyData, n: int) -> bool:
    """True iff H_1(N) is finite of order prime to n."""
    _check_n(n)
    return h.d == 0 and math.gcd(math.prod(h.torsion), n) == 1


def equivalent_monodromies(x1: Sequence[int], x2: Sequence[int], n: int) -> bool:
    """Equivalence up to a unit ``u`` of ``Z_n``.

    The meridian must stay at 1, which forces ``u == 1``; the search over
    units is kept explicit anyway.
    """
    for u in range(1, n):
        if math.gcd(u, n) != 1 or u % n != 1 % n:
            continue
        if all((u * a - c) % n == 0 for a, c in zip(x1, x2)):
            return True
    return False


def _lex_solutions(H: IntMatrix, b: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Solutions in lexicographic order without materializing the whole set.

    Fixes coordinates left to right and prunes any prefix whose remaining
    system has no solution.
    """
    g = H.cols

    def feasible(prefix):
        k = len(prefix)
        rhs = [bi + sum(H[i, j] * prefix[j] for j in range(k)) for i, bi in enumerate(b)]
        rest = H.select_columns(range(k, g))
        return solve_congruences(rest, rhs, n).particular is not None

    def walk(prefix):
        if len(prefix) == g:
            yield tuple(prefix)
            return
        for v in range(n):
            prefix.append(v)
            if feasible(prefix):
                yield from walk(prefix)
            prefix.pop()

    if feasible([]):
        yield from walk([])


def enumerate_monodromies(h: HomologyData, n: int, limit: int | None = None) -> list[Monodromy]:
    """Every covering monodromy, sorted lexicographically.

    Raises :class:`CountExceedsLimit` when there are more than ``limit``;
    the exception carries the exact count and the first ``limit`` entries.
    """
    _check_n(n)
    sols = solve_congruences(h.H, h.b, n)
    count = sols.cardinality
    if limit is not None and count > limit:
        partial = [Monodromy(n, x) for x in itertools.islice(_lex_solutions(h.H, h.b, n), limit)]
        raise CountExceedsLimit(count, limit, partial)
    result = [Monodromy(n, x) for x in sols.materialize()]
    assert all(m.satisfies(h) for m in result)
    return result


def brute_force_monodromies(h: HomologyData, n: int) -> list[Monodromy]:
    """Exhaustive scan of ``Z_n^g``; independent of the Smith form machinery."""
    _check_n(n)
    g = h.genus
    if n**g > BRUTE_FORCE_LIMIT:
        raise SearchSpaceTooLarge(f"{n}^{g} candidates exceed {BRUTE_FORCE_LIMIT}")
    rows = [(tuple(r), bi) for r, bi in zip(h.H.data, h.b)]
    found = []
    for cand in itertools.product(range(n), repeat=g):
        if all((sum(a * v for a, v in zip(r, cand)) + bi) % n == 0 for r, bi in rows):
            found.append(Monodromy(n, cand))
    return found


def covering_report(h: HomologyData, n: int, cap: int | None = None) -> CoveringReport:
    count = covering_count(h, n)
    try:
        monos = enumerate_monodromies(h, n, cap)
        truncated = False
    except CountExceedsLimit as exc:
        monos, truncated = exc.partial, True
    if len(monos) > count or (not truncated and len(monos) != count):
        raise AssertionError(f"enumeration found {len(monos)} coverings, count formula gives {count}")
    return CoveringReport(n, count > 0, count, tuple(monos), truncated)
