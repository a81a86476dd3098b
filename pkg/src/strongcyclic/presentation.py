"""Knot group presentations ``<a1..ag, g | r1..rg>`` and their abelianization.

File format, one statement per line, ``#`` starts a comment::

    genus 2
    rel a2 a1^-2 g a2^-1 g^-1
    rel a1 g a2^3 a1^-1 g^-1

A relator may carry a label, ``rel r1: a1 g``; labels must be distinct.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .intlinalg import AbelianGroup, IntMatrix, abelian_group, smith_normal_form
from .words import (
    ALPHA,
    GAMMA,
    GAMMA_GEN,
    Word,
    WordSyntaxError,
    alpha,
    format_word,
    parse_word,
)


class PresentationError(ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"line {line}, column {column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


class GenusMismatch(PresentationError):
    pass


class IndexOutOfRange(PresentationError):
    pass


class DuplicateRelatorLabel(PresentationError):
    pass


@dataclass(frozen=True)
class KnotGroupPresentation:
    genus: int
    relators: tuple[Word, ...]
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        if self.genus < 1:
            raise GenusMismatch(f"genus must be positive, got {self.genus}")
        if len(self.relators) != self.genus:
            raise GenusMismatch(f"genus {self.genus} needs {self.genus} relators, got {len(self.relators)}")
        for k, r in enumerate(self.relators, 1):
            for gen in r.generators():
                if gen.kind == ALPHA and gen.i > self.genus:
                    raise IndexOutOfRange(f"relator {k}: {gen} exceeds genus {self.genus}")
                if gen.kind not in (ALPHA, GAMMA):
                    raise IndexOutOfRange(f"relator {k}: {gen} is not a knot-group generator")
        if self.labels is not None:
            if len(self.labels) != self.genus:
                raise GenusMismatch("one label slot per relator")
            named = [lab for lab in self.labels if lab is not None]
            if len(named) != len(set(named)):
                raise DuplicateRelatorLabel(f"duplicate relator labels in {named}")

    def with_relators(self, relators) -> "KnotGroupPresentation":
        return KnotGroupPresentation(self.genus, tuple(relators), self.labels)

    def __str__(self) -> str:
        return format_presentation(self)


def trivial_knot(genus: int) -> KnotGroupPresentation:
    return KnotGroupPresentation(genus, (Word(),) * genus)


def core_knot(genus: int) -> KnotGroupPresentation:
    return KnotGroupPresentation(genus, (Word(((GAMMA_GEN, 1),)),) + (Word(),) * (genus - 1))


def takahashi_knot(p: int, r: int) -> KnotGroupPresentation:
    """The (2,1)-knot in L(p,1) # L(r,1) whose coverings are T_n(p/1, r/1)."""
    a1, a2, g = alpha(1), alpha(2), GAMMA_GEN
    r1 = Word.of((a2, 1), (a1, -r), (g, 1), (a2, -1), (g, -1))
    r2 = Word.of((a1, 1), (g, 1), (a2, p), (a1, -1), (g, -1))
    return KnotGroupPresentation(2, (r1, r2))


_GENUS = re.compile(r"genus\s+(\d+)\s*")
_REL = re.compile(r"rel(?=\s|$)")
_LABEL = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*:")


def parse_presentation(text: str) -> KnotGroupPresentation:
    genus = None
    relators: list[Word] = []
    labels: list[str | None] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col0 = len(line) - len(stripped)
        if genus is None:
            m = _GENUS.fullmatch(stripped)
            if m is None:
                raise PresentationSyntaxError(lineno, col0 + 1, "'genus <g>'")
            genus = int(m.group(1))
            if genus < 1:
                raise GenusMismatch(f"line {lineno}: genus must be positive")
            continue
        if _REL.match(stripped) is None:
            raise PresentationSyntaxError(lineno, col0 + 1, "'rel <word>'")
        body_start = col0 + 3
        body = line[body_start:]
        label = None
        m = _LABEL.match(body)
        if m:
            label = m.group(1)
            if label in labels:
                raise DuplicateRelatorLabel(f"line {lineno}: relator label {label!r} used twice")
            body_start += m.end()
            body = line[body_start:]
        try:
            word = parse_word(body)
        except WordSyntaxError as exc:
            raise PresentationSyntaxError(lineno, body_start + exc.offset + 1, "a syllable a<i>, g or x<i>.<j> with optional ^<int>") from None
        for gen in word.generators():
            if gen.kind == ALPHA and gen.i > genus:
                raise IndexOutOfRange(f"line {lineno}: {gen} exceeds genus {genus}")
            if gen.kind not in (ALPHA, GAMMA):
                raise IndexOutOfRange(f"line {lineno}: {gen} is not allowed in a knot group relator")
        if len(relators) == genus:
            raise GenusMismatch(f"line {lineno}: more than {genus} relators")
        relators.append(word)
        labels.append(label)
    if genus is None:
        raise PresentationSyntaxError(1, 1, "'genus <g>'")
    if len(relators) != genus:
        raise GenusMismatch(f"genus {genus} needs {genus} relators, got {len(relators)}")
    return KnotGroupPresentation(genus, tuple(relators), tuple(labels) if any(labels) else None)


def format_presentation(p: KnotGroupPresentation) -> str:
    lines = [f"genus {p.genus}"]
    labels = p.labels or (None,) * p.genus
    for label, r in zip(labels, p.relators):
        head = f"rel {label}:" if label else "rel"
        body = format_word(r)
        lines.append(f"{head} {body}" if body else head)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class HomologyData:
    """Exponent-sum data of a presentation.

    ``H[i][j]`` is the exponent sum of ``a<j>`` in relator ``i``, ``b[i]``
    that of ``g``. ``e``/``eprime`` are the invariant factors of ``H`` and of
    ``[H | b]``, zero-padded to length g. ``d`` and ``torsion`` decompose
    ``H_1(N) = Z^d + Z_t1 + ... + Z_ts``.
    """

    H: IntMatrix
    b: tuple[int, ...]
    Hprime: IntMatrix
    e: tuple[int, ...]
    eprime: tuple[int, ...]
    d: int
    torsion: tuple[int, ...]

    @property
    def genus(self) -> int:
        return self.H.rows

    def homology_of_manifold(self) -> AbelianGroup:
        return AbelianGroup(self.d, self.torsion)


def _padded_factors(M: IntMatrix, length: int) -> tuple[int, ...]:
    nonzero = [f for f in smith_normal_form(M).factors if f]
    return tuple(nonzero) + (0,) * (length - len(nonzero))


def homology_data(H: IntMatrix, b) -> HomologyData:
    g = H.rows
    b = tuple(int(v) for v in b)
    Hprime = IntMatrix.from_rows([list(row) + [bi] for row, bi in zip(H.data, b)], g + 1)
    e = _padded_factors(H, g)
    eprime = _padded_factors(Hprime, g)
    d = sum(1 for f in e if f == 0)
    torsion = tuple(f for f in e if f > 1)
    return HomologyData(H, b, Hprime, e, eprime, d, torsion)


def exponent_sums(p: KnotGroupPresentation) -> tuple[IntMatrix, tuple[int, ...]]:
    """The matrix ``H`` and vector ``b`` without any Smith form work."""
    g = p.genus
    rows, b = [], []
    for r in p.relators:
        row = [0] * (g + 1)
        for gen, e in r.syllables:
            row[gen.i - 1 if gen.kind == ALPHA else g] += e
        rows.append(row[:g])
        b.append(row[g])
    return IntMatrix.from_rows(rows, g), tuple(b)


def abelianize(p: KnotGroupPresentation) -> HomologyData:
    return homology_data(*exponent_sums(p))


def homology_of_complement(p: KnotGroupPresentation) -> AbelianGroup:
    """H_1 of the knot complement: generators a1..ag, g; one relation per relator."""
    return abelian_group(abelianize(p).Hprime)
