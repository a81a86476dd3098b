"""Cyclic presentations of covering groups.

Given a knot group presentation and a monodromy ``x``, each ``a<i>`` is
rewritten as ``â<i> g^{x_i}`` so the monodromy kills the new letters. A
relator then reads ``â_{j1}^{e1} g^{h1} â_{j2}^{e2} g^{h2} ...`` and lifts to
``x_{j1,1}^{e1} x_{j2,k2}^{e2} ...`` with ``k_l = 1 + h1 + ... + h_{l-1}``
modulo n. The hat letters are stored as ordinary ``a<i>`` generators.

Two conventions are not forced by the block form and are applied here:
a relator that starts with ``g^c`` is conjugated so the power moves to the
end (its lift is then ``theta^{-c}`` of the sheet walk from sheet 1), and a
relator that is a pure power of ``g`` lifts to the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coverings import Monodromy
from .intlinalg import AbelianGroup, IntMatrix, abelian_group
from .presentation import KnotGroupPresentation, exponent_sums
from .words import (
    ALPHA,
    GAMMA,
    GAMMA_GEN,
    X,
    Word,
    WordSyntaxError,
    format_word,
    free_reduce,
    parse_word,
    substitute,
    theta_shift,
    x,
)


class LiftError(ValueError):
    pass


class InvalidMonodromy(LiftError):
    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class GammaSumNotZeroModN(LiftError):
    pass


@dataclass(frozen=True)
class BlockForm:
    """``blocks[l] = (j, epsilon, eta)`` for ``â_j^epsilon g^eta``.

    ``rotation`` is the leading power of g moved to the end before
    blocking; ``gamma_total`` is the full exponent sum of g.
    """

    blocks: tuple[tuple[int, int, int], ...]
    rotation: int = 0
    gamma_total: int = 0

    @property
    def length(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class CyclicPresentation:
    m: int
    n: int
    words: tuple[Word, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise LiftError(f"bad shape m={self.m} n={self.n}")
        if len(self.words) != self.m:
            raise LiftError(f"expected {self.m} words, got {len(self.words)}")
        for w in self.words:
            for gen in w.generators():
                if gen.kind != X or gen.i > self.m or gen.j > self.n:
                    raise LiftError(f"{gen} is outside x<1..{self.m}>.<1..{self.n}>")

    def generators(self):
        return [x(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]

    def __str__(self) -> str:
        return format_cyclic(self)


def hat_substitution(p: KnotGroupPresentation, mono: Monodromy) -> KnotGroupPresentation:
    """Rewrite every ``a<i>`` as ``â<i> g^{x_i}`` and freely reduce."""
    if len(mono.x) != p.genus:
        raise InvalidMonodromy(f"monodromy has {len(mono.x)} entries, genus is {p.genus}")
    if not any(p.relators):
        return p
    for row, r in enumerate(p.relators, 1):
        # gamma exponent sum after substitution: b_i + sum_j a_ij x_j
        total = sum(e * (mono.x[gen.i - 1] if gen.kind == ALPHA else 1) for gen, e in r.syllables)
        if total % mono.n:
            H, b = exponent_sums(p)
            lhs = " + ".join(f"{a}*{v}" for a, v in zip(H.data[row - 1], mono.x))
            raise InvalidMonodromy(
                f"row {row}: {lhs} + {b[row - 1]} = {total} is not 0 mod {mono.n}", row=row
            )
    images = {GAMMA_GEN: Word(((GAMMA_GEN, 1),))}
    for gen in set().union(*(r.generators() for r in p.relators)):
        if gen.kind == ALPHA and mono.x[gen.i - 1]:
            images[gen] = Word(((gen, 1), (GAMMA_GEN, mono.x[gen.i - 1])))
        else:
            images[gen] = Word(((gen, 1),))
    return p.with_relators(substitute(r, images) if r else r for r in p.relators)


def _gamma_sum(w: Word) -> int:
    return sum(e for gen, e in w.syllables if gen.kind == GAMMA)


def _check_closed(w: Word, n: int) -> int:
    total = _gamma_sum(w)
    if total % n:
        raise GammaSumNotZeroModN(f"g-exponent sum {total} of {format_word(w)!r} is not 0 mod {n}")
    return total


def block_normal_form(rbar: Word, n: int) -> BlockForm:
    total = _check_closed(rbar, n)
    syl = list(rbar.syllables)
    for gen, _ in syl:
        if gen.kind not in (ALPHA, GAMMA):
            raise LiftError(f"{gen} cannot appear in a knot group relator")
    rotation = 0
    if len(syl) == 1 and syl[0][0].kind == GAMMA:
        return BlockForm((), 0, total)
    if syl and syl[0][0].kind == GAMMA:
        rotation = syl[0][1]
        syl = syl[1:]
        if syl and syl[-1][0].kind == GAMMA:
            syl[-1] = (GAMMA_GEN, syl[-1][1] + rotation)
        else:
            syl.append((GAMMA_GEN, rotation))
    blocks = []
    for gen, e in syl:
        if gen.kind == GAMMA:
            j, eps, eta = blocks[-1]
            blocks[-1] = (j, eps, eta + e)
        else:
            blocks.append((gen.i, e, 0))
    return BlockForm(tuple(blocks), rotation, total)


def lift_blocks(form: BlockForm, n: int) -> Word:
    out = []
    sheet = 1
    for j, eps, eta in form.blocks:
        out.append((x(j, sheet), eps))
        sheet = (sheet - 1 + eta) % n + 1
    return free_reduce(out)


def lift_words(p: KnotGroupPresentation, mono: Monodromy) -> CyclicPresentation:
    n = mono.n
    hatted = hat_substitution(p, mono)
    words, notes = [], []
    for i, rbar in enumerate(hatted.relators, 1):
        if not rbar:
            words.append(rbar)
            continue
        form = block_normal_form(rbar, n)
        if form.rotation:
            notes.append(f"relator {i}: leading g^{form.rotation} moved to the end before lifting")
        if not form.blocks and form.gamma_total:
            notes.append(f"relator {i}: pure power g^{form.gamma_total} lifts to the empty word")
        words.append(lift_blocks(form, n))
    return CyclicPresentation(p.genus, n, tuple(words), tuple(notes))


def sheet_walk(rbar: Word, n: int) -> tuple[Word, int]:
    """Walk ``rbar`` letter by letter from sheet 1; return the lift and the final sheet."""
    sheet = 1
    out = []
    for gen, step in rbar.letters():
        if gen.kind == GAMMA:
            sheet = (sheet - 1 + step) % n + 1
        elif gen.kind == ALPHA:
            out.append((x(gen.i, sheet), step))
        else:
            raise LiftError(f"{gen} cannot appear in a knot group relator")
    return free_reduce(out), sheet


def sheet_walk_lift(rbar: Word, n: int) -> Word:
    _check_closed(rbar, n)
    word, final = sheet_walk(rbar, n)
    if final != 1:
        raise AssertionError(f"sheet walk ended on sheet {final}")
    return word


def expand_relators(cp: CyclicPresentation) -> list[Word]:
    return [theta_shift(w, j, cp.n) for w in cp.words for j in range(cp.n)]


def relation_matrix(cp: CyclicPresentation) -> IntMatrix:
    """Exponent sums of the expanded relators; column ``(i-1)*n + (j-1)`` is ``x<i>.<j>``."""
    n = cp.n
    rows = []
    for w in expand_relators(cp):
        row = [0] * (cp.m * n)
        for gen, e in w.syllables:
            row[(gen.i - 1) * n + gen.j - 1] += e
        rows.append(row)
    return IntMatrix.from_rows(rows, cp.m * n)


def covering_homology(cp: CyclicPresentation) -> AbelianGroup:
    return abelian_group(relation_matrix(cp))


_HEADER = re.compile(r"cyclic\s+m=(\d+)\s+n=(\d+)\s*")


def format_cyclic(cp: CyclicPresentation) -> str:
    lines = [f"cyclic m={cp.m} n={cp.n}"]
    for w in cp.words:
        body = format_word(w)
        lines.append(f"word {body}" if body else "word")
    return "\n".join(lines) + "\n"


def parse_cyclic(text: str) -> CyclicPresentation:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise LiftError("empty cyclic presentation")
    head = _HEADER.fullmatch(lines[0])
    if head is None:
        raise LiftError(f"expected 'cyclic m=<m> n=<n>', got {lines[0]!r}")
    m, n = int(head.group(1)), int(head.group(2))
    words = []
    for ln in lines[1:]:
        if ln != "word" and not ln.startswith("word "):
            raise LiftError(f"expected 'word <w>', got {ln!r}")
        try:
            words.append(parse_word(ln[4:]))
        except WordSyntaxError as exc:
            raise LiftError(str(exc)) from None
    return CyclicPresentation(m, n, tuple(words))
