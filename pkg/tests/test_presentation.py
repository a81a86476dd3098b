import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongcyclic.intlinalg import AbelianGroup, IntMatrix, is_divisibility_chain
from strongcyclic.presentation import (
    DuplicateRelatorLabel,
    GenusMismatch,
    IndexOutOfRange,
    KnotGroupPresentation,
    PresentationSyntaxError,
    abelianize,
    core_knot,
    format_presentation,
    homology_of_complement,
    parse_presentation,
    takahashi_knot,
    trivial_knot,
)
from strongcyclic.selftest import random_presentation
from strongcyclic.words import Word, alpha

from .oracles import determinantal_factors
from .strategies import presentations

TAKAHASHI = "genus 2\nrel a2 a1^-2 g a2^-1 g^-1\nrel a1 g a2^3 a1^-1 g^-1\n"


def test_parse_takahashi():
    p = parse_presentation(TAKAHASHI)
    assert p == takahashi_knot(3, 2)
    assert p.genus == 2


def test_parse_empty_relator():
    p = parse_presentation("genus 1\nrel\n")
    assert p.relators == (Word(),)


def test_parse_comments_and_blank_lines():
    text = "# header\n\ngenus 2   # two handles\n  rel g  # core\nrel\n"
    assert parse_presentation(text) == core_knot(2)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        parse_presentation("genus 2\nrel a3\nrel a1\n")


def test_x_letters_rejected():
    with pytest.raises(IndexOutOfRange):
        parse_presentation("genus 1\nrel x1.1\n")


@pytest.mark.parametrize("text", ["genus 2\nrel a1\n", "genus 1\nrel a1\nrel g\n", "genus 0\n"])
def test_genus_mismatch(text):
    with pytest.raises(GenusMismatch):
        parse_presentation(text)


def test_syntax_error_position():
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("genus 2\nrel a1 b\nrel\n")
    assert (exc.value.line, exc.value.column) == (2, 8)
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("genus 1\n  relator a1\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("rel a1\n")
    assert exc.value.line == 1
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("")


def test_labels():
    p = parse_presentation("genus 2\nrel first: a1 g\nrel second: a2\n")
    assert p.labels == ("first", "second")
    assert parse_presentation(format_presentation(p)) == p
    with pytest.raises(DuplicateRelatorLabel):
        parse_presentation("genus 2\nrel r: a1\nrel r: a2\n")


@given(presentations())
def test_round_trip(p):
    assert parse_presentation(format_presentation(p)) == p


def test_abelianize_takahashi():
    h = abelianize(takahashi_knot(3, 2))
    assert h.H == IntMatrix.from_rows([[-2, 0], [0, 3]])
    assert h.b == (0, 0)
    assert h.e == (1, 6) == determinantal_factors(h.H.tolist())
    assert h.eprime == (1, 6) == determinantal_factors(h.Hprime.tolist())
    assert h.d == 0 and h.torsion == (6,)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_abelianize_trivial_knot(g):
    h = abelianize(trivial_knot(g))
    assert h.H == IntMatrix.zeros(g, g)
    assert h.b == (0,) * g
    assert h.e == h.eprime == (0,) * g
    assert h.d == g and h.torsion == ()


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_abelianize_core_knot(g):
    h = abelianize(core_knot(g))
    assert h.H == IntMatrix.zeros(g, g)
    assert h.b == (1,) + (0,) * (g - 1)
    assert h.e == (0,) * g
    assert h.eprime == (1,) + (0,) * (g - 1)


def test_homology_of_complement_examples():
    assert homology_of_complement(takahashi_knot(3, 2)) == AbelianGroup(1, (6,))
    assert determinantal_factors([[-2, 0, 0], [0, 3, 0]]) == (1, 6)
    for g in (1, 2, 3):
        assert homology_of_complement(trivial_knot(g)) == AbelianGroup(g + 1, ())
        assert homology_of_complement(core_knot(g)) == AbelianGroup(g, ())


def test_takahashi_lens_space_homology():
    # N = L(p,1) # L(r,1), so H_1(N) = Z_p + Z_r
    for p, r in [(3, 2), (5, 1), (7, 4), (4, 6)]:
        h = abelianize(takahashi_knot(p, r))
        assert h.d == 0
        assert math.prod(h.torsion) == p * r
        assert h.torsion == tuple(t for t in (math.gcd(p, r), p * r // math.gcd(p, r)) if t > 1)


def test_homology_corpus_invariants():
    rng = random.Random(2024)
    for _ in range(500):
        p = random_presentation(rng, max_genus=4, max_len=20)
        h = abelianize(p)
        g = p.genus
        assert h.Hprime.select_columns(range(g)) == h.H
        assert h.Hprime.column(g) == h.b
        assert len(h.e) == len(h.eprime) == g
        assert is_divisibility_chain(h.e) and is_divisibility_chain(h.eprime)
        assert h.d == g - sum(1 for v in h.e if v)
        assert h.torsion == tuple(v for v in h.e if v > 1)
        if all(h.e):
            assert abs(h.H.det()) == math.prod(h.e)
        else:
            assert h.H.det() == 0


@settings(max_examples=50)
@given(presentations(), st.randoms())
def test_relator_order_does_not_change_homology(p, rnd):
    rels = list(p.relators)
    rnd.shuffle(rels)
    h1, h2 = abelianize(p), abelianize(p.with_relators(rels))
    assert (h1.e, h1.eprime, h1.d, h1.torsion) == (h2.e, h2.eprime, h2.d, h2.torsion)


def test_presentation_validation():
    with pytest.raises(GenusMismatch):
        KnotGroupPresentation(2, (Word(),))
    with pytest.raises(IndexOutOfRange):
        KnotGroupPresentation(1, (Word.of((alpha(2), 1)),))
