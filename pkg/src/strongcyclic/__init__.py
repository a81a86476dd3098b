"""Strongly-cyclic branched coverings of (g,1)-knots from group presentations."""

from .coverings import (
    CountExceedsLimit,
    CoveringReport,
    Monodromy,
    SearchSpaceTooLarge,
    brute_force_monodromies,
    covering_count,
    covering_exists,
    covering_report,
    enumerate_monodromies,
    equivalent_monodromies,
    unique_covering,
)
from .intlinalg import (
    AbelianGroup,
    CongruenceSolutionSet,
    IntMatrix,
    SnfResult,
    invariant_factors,
    smith_normal_form,
    solve_congruences,
)
from .lift import (
    BlockForm,
    CyclicPresentation,
    GammaSumNotZeroModN,
    InvalidMonodromy,
    block_normal_form,
    covering_homology,
    expand_relators,
    hat_substitution,
    lift_words,
    sheet_walk_lift,
)
from .presentation import (
    HomologyData,
    KnotGroupPresentation,
    abelianize,
    core_knot,
    homology_of_complement,
    parse_presentation,
    takahashi_knot,
    trivial_knot,
)
from .words import Generator, Word, exponent_sum, free_reduce, parse_word, substitute, theta_shift

__version__ = "0.1.0"
