"""Free-group words over the generator alphabets used throughout the package.

Two alphabets share one representation: the knot-group letters ``a<i>`` and
``g`` (the meridian), and the covering letters ``x<i>.<j>``. Words are kept
in syllable (run-length) form, so ``a2^1000000`` costs one entry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache, total_ordering
from typing import Iterable, Mapping

ALPHA = "alpha"
GAMMA = "gamma"
X = "x"

_KIND_RANK = {ALPHA: 0, GAMMA: 1, X: 2}


class WordError(ValueError):
    pass


class MissingImage(WordError):
    def __init__(self, generator: "Generator"):
        super().__init__(f"no image given for generator {generator}")
        self.generator = generator


class NonCyclicGenerator(WordError):
    def __init__(self, generator: "Generator"):
        super().__init__(f"theta shift is undefined on generator {generator}")
        self.generator = generator


class WordSyntaxError(WordError):
    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


@total_ordering
@dataclass(frozen=True)
class Generator:
    """A single free generator: ``alpha(i)``, ``gamma()`` or ``x(i, j)``.

    Ordering is Alpha < Gamma < X, then by indices.
    """

    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind == ALPHA:
            if self.i < 1 or self.j != 0:
                raise WordError(f"bad alpha index {self.i}")
        elif self.kind == GAMMA:
            if self.i or self.j:
                raise WordError("gamma takes no indices")
        elif self.kind == X:
            if self.i < 1 or self.j < 1:
                raise WordError(f"bad x indices ({self.i}, {self.j})")
        else:
            raise WordError(f"unknown generator kind {self.kind!r}")

    def _key(self):
        return (_KIND_RANK[self.kind], self.i, self.j)

    def __lt__(self, other: "Generator") -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        if self.kind == ALPHA:
            return f"a{self.i}"
        if self.kind == GAMMA:
            return "g"
        return f"x{self.i}.{self.j}"

    def __repr__(self) -> str:
        return f"Generator({self})"


@lru_cache(maxsize=None)
def alpha(i: int) -> Generator:
    return Generator(ALPHA, i)


def gamma() -> Generator:
    return Generator(GAMMA)


@lru_cache(maxsize=4096)
def x(i: int, j: int) -> Generator:
    return Generator(X, i, j)


GAMMA_GEN = gamma()

Syllable = tuple[Generator, int]


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[list] = []
    for gen, exp in syllables:
        exp = int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((gen, exp) for gen, exp in stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; build it with :func:`free_reduce` or :meth:`of`."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.syllables:
            if exp == 0 or gen == prev:
                raise WordError(f"syllables are not freely reduced: {self.syllables}")
            prev = gen

    @classmethod
    def of(cls, *syllables: Syllable) -> "Word":
        return free_reduce(syllables)

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __len__(self) -> int:
        """Letter length, i.e. the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.syllables + other.syllables)

    def __invert__(self) -> "Word":
        return Word(tuple((gen, -e) for gen, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** -k
        result = Word()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @cached_property
    def _generators(self) -> frozenset[Generator]:
        return frozenset(gen for gen, _ in self.syllables)

    def generators(self) -> frozenset[Generator]:
        return self._generators

    def letters(self):
        """Yield ``(generator, +1 or -1)`` one letter at a time."""
        for gen, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield gen, step

    def __str__(self) -> str:
        return format_word(self)


def free_reduce(syllables: Iterable[Syllable]) -> Word:
    """Freely reduce a raw syllable list. Zero exponents are dropped."""
    return Word(_reduce(syllables))


def exponent_sum(w: Word, gen: Generator) -> int:
    return sum(e for g, e in w.syllables if g == gen)


def substitute(w: Word, images: Mapping[Generator, Word]) -> Word:
    """Apply the homomorphism ``gen -> images[gen]`` to ``w``."""
    out: list[Syllable] = []
    for gen, e in w.syllables:
        try:
            image = images[gen]
        except KeyError:
            raise MissingImage(gen) from None
        piece = image if e > 0 else ~image
        # repeated squaring keeps huge exponents cheap
        out.extend((piece ** abs(e)).syllables)
    return free_reduce(out)


def theta_shift(w: Word, shift: int, n: int) -> Word:
    """Shift the second index of every ``x<i>.<j>`` by ``shift`` modulo ``n``."""
    if n < 1:
        raise WordError(f"width must be positive, got {n}")
    out = []
    for gen, e in w.syllables:
        if gen.kind != X:
            raise NonCyclicGenerator(gen)
        if gen.j > n:
            raise WordError(f"{gen} is out of range for width {n}")
        out.append((x(gen.i, (gen.j - 1 + shift) % n + 1), e))
    return Word(tuple(out))


def format_word(w: Word) -> str:
    parts = []
    for gen, e in w.syllables:
        parts.append(str(gen) if e == 1 else f"{gen}^{e}")
    return " ".join(parts)


_TOKEN = re.compile(r"(?:a(?P<a>\d+)|(?P<g>g)|x(?P<xi>\d+)\.(?P<xj>\d+))(?:\^(?P<e>[+-]?\d+))?")


def parse_word(text: str) -> Word:
    """Parse the display syntax, e.g. ``"a2 a1^-2 g a2^-1 g^-1"``.

    Raises :class:`WordSyntaxError` whose ``offset`` is the 0-based position
    of the offending token in ``text``.
    """
    syllables = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.fullmatch(m.group())
        if tok is None:
            raise WordSyntaxError(f"bad syllable {m.group()!r}", m.start())
        try:
            if tok["a"] is not None:
                gen = alpha(int(tok["a"]))
            elif tok["g"] is not None:
                gen = GAMMA_GEN
            else:
                gen = x(int(tok["xi"]), int(tok["xj"]))
        except WordError as exc:
            raise WordSyntaxError(str(exc), m.start()) from None
        syllables.append((gen, int(tok["e"]) if tok["e"] is not None else 1))
    return free_reduce(syllables)
