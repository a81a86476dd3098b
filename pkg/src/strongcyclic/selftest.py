"""Seeded oracle suites: Smith form, counts vs brute force, lift vs sheet walk."""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .coverings import brute_force_monodromies, covering_count, covering_exists
from .intlinalg import IntMatrix, InvariantViolation, SnfResult, smith_normal_form
from .lift import hat_substitution, lift_words, sheet_walk
from .presentation import KnotGroupPresentation, abelianize
from .words import GAMMA, GAMMA_GEN, Word, alpha, free_reduce, theta_shift


def random_word(rng: random.Random, genus: int, max_len: int, max_exp: int = 5) -> Word:
    gens = [alpha(i) for i in range(1, genus + 1)] + [GAMMA_GEN]
    length = rng.randint(0, max_len)
    syl = []
    for _ in range(length):
        e = rng.randint(-max_exp, max_exp)
        syl.append((rng.choice(gens), e or 1))
    return free_reduce(syl)


def random_presentation(rng: random.Random, max_genus: int = 3, max_len: int = 12, max_exp: int = 5) -> KnotGroupPresentation:
    g = rng.randint(1, max_genus)
    return KnotGroupPresentation(g, tuple(random_word(rng, g, max_len, max_exp) for _ in range(g)))


def random_matrix(rng: random.Random, max_dim: int = 6, bound: int = 20) -> IntMatrix:
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)], c)


def determinantal_factors(M: IntMatrix) -> tuple[int, ...]:
    """Invariant factors as ratios of gcds of k x k minors. Exponential; small inputs only."""
    divisors = [1]
    for k in range(1, min(M.rows, M.cols) + 1):
        g = 0
        for rows in itertools.combinations(range(M.rows), k):
            for cols in itertools.combinations(range(M.cols), k):
                minor = IntMatrix.from_rows([[M[i, j] for j in cols] for i in rows], k)
                g = math.gcd(g, minor.det())
        divisors.append(g)
    factors = []
    for k in range(1, len(divisors)):
        factors.append(divisors[k] // divisors[k - 1] if divisors[k] else 0)
    return tuple(factors)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    _hash: "hashlib._Hash" = field(default_factory=hashlib.sha256, repr=False)

    @property
    def digest(self) -> str:
        """Fingerprint of every case visited, in order."""
        return self._hash.hexdigest()[:16]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, case: str) -> None:
        self._hash.update(case.encode() + b"\0")
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(case)


def snf_suite(rng: random.Random, cases: int, snf: Callable[[IntMatrix], SnfResult]) -> SuiteResult:
    res = SuiteResult("snf")
    for _ in range(cases):
        M = random_matrix(rng, max_dim=4, bound=20)
        try:
            out = snf(M)
            out.check(M)
            ok = out.factors == determinantal_factors(M)
        except InvariantViolation:
            ok = False
        res.record(ok, str(M.tolist()))
    return res


def count_suite(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("count-vs-brute-force")
    for _ in range(cases):
        p = random_presentation(rng)
        h = abelianize(p)
        n = rng.randint(2, 12)
        brute = brute_force_monodromies(h, n)
        ok = covering_exists(h, n) == bool(brute) and covering_count(h, n) == len(brute)
        res.record(ok, f"n={n}\n{p}")
    return res


def leading_gamma(w: Word) -> int:
    if w.syllables and w.syllables[0][0].kind == GAMMA:
        return w.syllables[0][1]
    return 0


def lift_suite(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("lift-vs-sheet-walk")
    done = 0
    while done < cases:
        p = random_presentation(rng)
        n = rng.randint(2, 8)
        monos = brute_force_monodromies(abelianize(p), n)
        if not monos:
            continue
        mono = rng.choice(monos)
        done += 1
        cp = lift_words(p, mono)
        ok = True
        for w, rbar in zip(cp.words, hat_substitution(p, mono).relators):
            walked, final = sheet_walk(rbar, n)
            ok = ok and final == 1 and theta_shift(w, leading_gamma(rbar), n) == walked
        res.record(ok, f"n={n} x={mono.x}\n{p}")
    return res


def run_selftest(seed: int = 42, scale: int = 100, snf: Callable[[IntMatrix], SnfResult] = smith_normal_form) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [snf_suite(rng, scale, snf), count_suite(rng, scale), lift_suite(rng, scale)]


def corrupted_snf(M: IntMatrix) -> SnfResult:
    """Test hook: a Smith form whose D has been tampered with."""
    good = smith_normal_form(M)
    rows = good.D.tolist()
    rows[0][0] += 1
    return SnfResult(IntMatrix.from_rows(rows, M.cols), good.U, good.V)
