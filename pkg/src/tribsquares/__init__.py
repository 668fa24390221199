"""Distinct squares and cubes in prefixes of the Tribonacci word."""
from .counts import (
    Breakpoints,
    CountResult,
    PositionRange,
    SquareCase,
    SQUARE_CASES,
    a_indicator,
    breakpoints,
    count_cubes,
    count_cubes_at_tm,
    count_squares,
    count_squares_at_tm,
    count_squares_at_tm_glen,
    cube_length_classes,
    delta_cum,
    glen_expression,
    position_range,
    square_length_classes,
    theta_cum,
)
from .errors import DomainError, NotAFactorError, ResourceError
from .kernel import (
    Decomposition,
    KernelDescriptor,
    decompose,
    find_occurrences,
    first_end_position,
    ker,
    kernel_descriptor,
    kernel_word,
    reassemble,
)
from .oracle import (
    RepetitionRecord,
    assert_no_fourth_power,
    brute_distinct_cubes,
    brute_distinct_squares,
    new_repetition_positions,
)
from .words import ALPHABET, factor, kernel_number, last_letter, prefix, tribonacci_number, word_tm

__version__ = "0.1.0"
