"""Tests for the align module."""
from functools import lru_cache
from itertools import product
import random

import pytest

from pseudoknots import align, core, exceptions, generators, scoring

from tests.factories import all_structures, folded, letter_structure, random_decomposable


FIVE_PAIRING_KNOT = core.make_structure(10, [(1, 4), (2, 7), (3, 9), (5, 8), (6, 10)])


def hairpins():
    """Returns the GC hairpin and the GAAC hairpin."""
    return folded(2, [(1, 2)], 'GC'), folded(4, [(1, 4)], 'GAAC')


def knot_and_nest():
    """Returns a crossing and a nested structure over the same letters."""
    return folded(4, [(1, 3), (2, 4)], 'ACGU'), folded(4, [(1, 4), (2, 3)], 'ACGU')


def all_folded(n, letters='AU'):
    """Yields every folded sequence with n bases over letters."""
    for structure in all_structures(n):
        for word in product(letters, repeat=n):
            yield core.FoldedSequence(structure, ''.join(word))


@lru_cache(maxsize=None)
def is_decomposable(structure):
    """Returns whether a structure is decomposable over the built-in generators."""
    return generators.is_decomposable(structure)[0]


def knot_variants(rng, count, full=False):
    """Returns knot sequences paired with knots or knot prefixes.

        Pairing letters differ between the two sides so that no pairing
        can be matched for free. Without full, the second side is a
        prefix of at most five bases.
    """
    pairs = []

    for _ in range(count):
        first = letter_structure(FIVE_PAIRING_KNOT, rng, ('GC', 'CG'), 'AU')
        second = letter_structure(FIVE_PAIRING_KNOT, rng, ('AU', 'UA'), 'GC')
        if not full or rng.random() < 0.5:
            second = core.restrict(second, (1, rng.randint(1, 5)))
        pairs.append((first, second))

    return pairs


def assert_traceback_sound(first, second, scheme, result):
    """Checks that a traced alignment is valid and scores as reported."""
    assert align.validate_alignment(result.alignment, first, second)
    assert scoring.score_alignment(result.alignment, scheme) == result.score


def blank_free(alignment, pairing):
    """Returns whether neither row holds a blank at the pairing ends."""
    return all(
        word[position - 1] != alignment.blank for word in (alignment.top, alignment.bottom)
        for position in pairing
    )


# DYNAMIC PROGRAM
# -----------------------------------------------------------------------------
def test__align__identical_inputs(unit_scheme):
    """Tests that a sequence aligns to itself for free."""
    sequence = folded(6, [(1, 4), (2, 6)], 'GGAUCC')

    result = align.align(sequence, sequence, unit_scheme, trace=True)

    assert result.score == 0
    assert result.alignment.structure == sequence.structure
    assert result.alignment.top == result.alignment.bottom == 'GGAUCC'


def test__align__hairpins(unit_scheme):
    """Tests the GC hairpin against the GAAC hairpin."""
    first, second = hairpins()

    result = align.align(first, second, unit_scheme, trace=True)

    assert result.score == 2
    assert result.alignment == core.Alignment(core.make_structure(4, [(1, 4)]), 'G◦◦C', 'GAAC')


def test__align__hairpins_strict_proper(unit_scheme):
    """Tests that strict splittings cannot split the short hairpin."""
    first, second = hairpins()

    result = align.align(first, second, unit_scheme, mode=generators.STRICT_PROPER)

    assert result.score == 6


def test__align__knot_and_nest(unit_scheme):
    """Tests a crossing structure against a nested one."""
    first, second = knot_and_nest()

    result = align.align(first, second, unit_scheme, trace=True)

    assert result.score == 5
    assert_traceback_sound(first, second, unit_scheme, result)

    matched = [
        pairing for pairing in result.alignment.structure.pairings
        if blank_free(result.alignment, pairing)
    ]
    assert len(matched) == 1


def test__align__empty_inputs(unit_scheme):
    """Tests aligning against the empty sequence."""
    sequence = folded(3, [(1, 3)], 'GAC')
    empty = folded(0, word='')

    assert align.align(sequence, empty, unit_scheme).score == 3
    assert align.align(empty, empty, unit_scheme).score == 0


def test__align__one_sequence_rejected(unit_scheme):
    """Tests that 1-sequences cannot be aligned."""
    sequence = folded(2, [(1, 2)], 'GC', gap=1)

    with pytest.raises(exceptions.TypeMismatch):
        align.align(sequence, sequence, unit_scheme)


def test__align__unknown_letter(unit_scheme):
    """Tests that letters outside the scheme are rejected."""
    with pytest.raises(exceptions.UnknownLetter):
        align.align(folded(1, word='T'), folded(1, word='A'), unit_scheme)


def test__aligner__s0_single_bases(unit_scheme):
    """Tests an S0 entry of two unpaired single bases."""
    aligner = align.Aligner(folded(1, word='A'), folded(1, word='C'), unit_scheme)

    assert aligner.s0_entry(core.Interval(1, 1), core.Interval(1, 1)) == 1


def test__aligner__s0_vanished_pairing_end(unit_scheme):
    """Tests that a paired base whose partner lies outside the interval does not count."""
    aligner = align.Aligner(folded(2, [(1, 2)], 'GC'), folded(1, word='A'), unit_scheme)

    assert aligner.s0_entry(core.Interval(1, 1), core.Interval(1, 1)) == 1


def test__aligner__s0_empty(unit_scheme):
    """Tests the entry of two empty intervals."""
    aligner = align.Aligner(folded(1, word='A'), folded(1, word='C'), unit_scheme)

    assert aligner.s0_entry(core.EMPTY, core.EMPTY) == 0


def test__aligner__s1_pair_match(unit_scheme):
    """Tests an S1 entry of two identical pairings."""
    first, _ = hairpins()
    aligner = align.Aligner(first, first, unit_scheme)

    left, right = core.Interval(1, 1), core.Interval(2, 2)

    assert aligner.s1_entry(left, right, left, right) == 0


def test__aligner__s1_insertion(unit_scheme):
    """Tests an S1 entry reached by inserting two bases on the right leg."""
    first, second = hairpins()
    aligner = align.Aligner(first, second, unit_scheme)

    score = aligner.s1_entry(
        core.Interval(1, 1), core.Interval(2, 2), core.Interval(1, 1), core.Interval(2, 4)
    )

    assert score == 2


def test__aligner__unknown_mode(unit_scheme):
    """Tests that the splitting mode must be known."""
    first, second = hairpins()

    with pytest.raises(ValueError):
        align.Aligner(first, second, unit_scheme, mode='greedy')


def test__aligner__stats(unit_scheme):
    """Tests that memo statistics are reported."""
    first, second = knot_and_nest()

    stats = align.align(first, second, unit_scheme).stats

    assert stats['s0_entries'] > 0
    assert stats['s1_entries'] > 0
    assert stats['splittings'] > 0


def test__align__memo_within_space_bound(unit_scheme):
    """Tests that S1 entries stay under the quartic interval bound."""
    rng = random.Random(3)

    for size in (4, 6):
        first = random_decomposable(rng, size)
        second = random_decomposable(rng, size)

        stats = align.align(first, second, unit_scheme).stats

        assert stats['s1_entries'] <= (first.n + 1) ** 4 * (second.n + 1) ** 4


def test__traceback__missing_records(unit_scheme):
    """Tests that traceback needs a filled table."""
    first, second = hairpins()

    with pytest.raises(exceptions.MissingRecords):
        align.traceback(align.Aligner(first, second, unit_scheme))


def test__aligner__fresh_tables_identical(unit_scheme):
    """Tests that two fresh aligners fill the same entries with the same values."""
    first, second = knot_and_nest()
    aligners = [align.Aligner(first, second, unit_scheme) for _ in range(2)]

    scores = [aligner.score() for aligner in aligners]

    assert scores[0] == scores[1]
    assert aligners[0].s0 == aligners[1].s0
    assert aligners[0].s1 == aligners[1].s1
    assert aligners[0].stats == aligners[1].stats


def test__aligner__empty_generator_set(unit_scheme):
    """Tests that an empty generator set is used as given."""
    first, second = hairpins()
    empty = generators.GeneratorSet([])

    aligner = align.Aligner(first, second, unit_scheme, empty)

    assert aligner.generators is empty
    assert align.align(first, second, unit_scheme, empty).score == 6
    assert align.align(first, second, unit_scheme).score == 2


def test__align__symmetric_scheme_swaps_inputs():
    """Tests that swapping the inputs keeps the score under a symmetric scheme."""
    rng = random.Random(23)

    for name in ('unit', 'additive'):
        scheme = scoring.preset_scheme(name)
        assert scheme.is_symmetric()

        for _ in range(10):
            first = random_decomposable(rng, rng.randint(1, 6))
            second = letter_structure(
                random_decomposable(rng, rng.randint(1, 6)).structure, rng, ('GC', 'AU'), 'AG'
            )

            assert align.align(first, second, scheme).score == align.align(second, first, scheme).score


def test__align__asymmetric_scheme_swaps_roles():
    """Tests that swapping the inputs of an asymmetric scheme swaps deletions and insertions."""
    scheme = scoring.parse_scheme('base_del * 2\nbase_ins * 3')
    swapped = scoring.parse_scheme('base_del * 3\nbase_ins * 2')
    first, second = hairpins()

    assert not scheme.is_symmetric()
    assert align.align(first, second, scheme).score == 6
    assert align.align(second, first, swapped).score == 6


def test__align__at_most_all_gap_weights(unit_scheme):
    """Tests that no score exceeds deleting the first input and inserting the second."""
    rng = random.Random(29)

    for _ in range(10):
        first = random_decomposable(rng, rng.randint(1, 6))
        second = random_decomposable(rng, rng.randint(1, 6), ('AU', 'UA'), 'GC')
        ceiling = (
            scoring.all_gap_weight(first, unit_scheme, scoring.DELETION)
            + scoring.all_gap_weight(second, unit_scheme, scoring.INSERTION)
        )

        assert align.align(first, second, unit_scheme).score <= ceiling


def test__align__decomposable_random_inputs_match_oracle(unit_scheme):
    """Tests exactness against enumeration on random decomposable inputs."""
    rng = random.Random(5)

    for _ in range(15):
        first = random_decomposable(rng, rng.randint(1, 5))
        second = letter_structure(
            random_decomposable(rng, rng.randint(1, 5)).structure, rng, ('GC', 'AU'), 'AG'
        )

        result = align.align(first, second, unit_scheme, trace=True)
        oracle, _ = align.brute_force_min_alignment(first, second, unit_scheme)

        assert result.score == oracle
        assert_traceback_sound(first, second, unit_scheme, result)


def test__align__traced_alignment_is_semi_decomposable(unit_scheme):
    """Tests that the alignment of a decomposable input is semi-decomposable."""
    first, second = knot_and_nest()

    result = align.align(first, second, unit_scheme, trace=True)

    assert generators.is_semi_decomposable(result.alignment)


def test__align__approximation_bound():
    """Tests oracle <= DP <= c * oracle for a knot against short sequences."""
    scheme = scoring.preset_scheme('unit')
    constant = scoring.approximation_constant(scheme)
    rng = random.Random(13)

    for first, second in knot_variants(rng, 4):
        assert not generators.is_decomposable(first.structure)[0]

        result = align.align(first, second, scheme, trace=True)
        oracle, _ = align.brute_force_min_alignment(first, second, scheme, size_limit=20)

        assert oracle <= result.score <= constant * oracle
        assert_traceback_sound(first, second, scheme, result)


def test__align__additive_scheme_exact():
    """Tests that the additive preset is exact for a knot against short sequences."""
    scheme = scoring.preset_scheme('additive')
    rng = random.Random(17)

    for first, second in knot_variants(rng, 4):
        result = align.align(first, second, scheme)
        oracle, _ = align.brute_force_min_alignment(first, second, scheme, size_limit=20)

        assert result.score == oracle


@pytest.mark.slow
def test__align__approximation_bound_sweep():
    """Tests the approximation bound and additive exactness on 200 knot variants."""
    unit = scoring.preset_scheme('unit')
    additive = scoring.preset_scheme('additive')
    rng = random.Random(19)

    for first, second in knot_variants(rng, 200, full=True):
        oracle, _ = align.brute_force_min_alignment(first, second, unit, size_limit=20)
        result = align.align(first, second, unit, trace=True)

        assert oracle <= result.score <= 4 * oracle
        assert_traceback_sound(first, second, unit, result)

        additive_oracle, _ = align.brute_force_min_alignment(first, second, additive, size_limit=20)
        assert align.align(first, second, additive).score == additive_oracle


@pytest.mark.slow
@pytest.mark.parametrize('sizes', [(n1, n2) for n1 in range(6) for n2 in range(6)])
def test__align__exhaustive_small_inputs(sizes):
    """Tests DP == oracle on every pair of sequences up to five bases with a decomposable side."""
    scheme = scoring.preset_scheme('unit')

    for first in all_folded(sizes[0]):
        first_decomposable = is_decomposable(first.structure)

        for second in all_folded(sizes[1]):
            if not first_decomposable and not is_decomposable(second.structure):
                continue

            result = align.align(first, second, scheme, trace=True)
            oracle, _ = align.brute_force_min_alignment(first, second, scheme)

            assert result.score == oracle, (first, second)
            assert_traceback_sound(first, second, scheme, result)


# VALIDATION
# -----------------------------------------------------------------------------
def test__validate_alignment__both_alignments_of_knot_and_nest():
    """Tests two different valid alignments of the crossing and nested structures."""
    first, second = knot_and_nest()
    deleting = core.Alignment(
        core.make_structure(8, [(1, 3), (2, 4), (5, 8), (6, 7)]), 'ACGU◦◦◦◦', '◦◦◦◦ACGU'
    )
    matching = core.Alignment(
        core.make_structure(6, [(1, 5), (2, 6), (3, 4)]), 'AC◦◦GU', 'A◦CGU◦'
    )

    assert align.validate_alignment(deleting, first, second)
    assert align.validate_alignment(matching, first, second)
    assert scoring.score_alignment(matching, scoring.preset_scheme('unit')) == 5


def test__validate_alignment__half_blank_pairing():
    """Tests that a pairing with a single blank end is invalid."""
    first, second = hairpins()
    alignment = core.Alignment(core.make_structure(4, [(1, 4)]), 'G◦◦C', 'GAA◦')

    validation = align.validate_alignment(alignment, first, second)

    assert not validation
    assert 'row 2' in validation.reason


def test__validate_alignment__dropped_letter():
    """Tests that an alignment losing a letter is invalid."""
    first, second = hairpins()
    alignment = core.Alignment(core.make_structure(4, [(1, 4)]), 'G◦◦C', 'GA◦C')

    assert not align.validate_alignment(alignment, first, second)


# ENUMERATION
# -----------------------------------------------------------------------------
def test__brute_force_min_alignment__hairpins(unit_scheme):
    """Tests enumeration on the hairpin pair."""
    first, second = hairpins()

    score, alignment = align.brute_force_min_alignment(first, second, unit_scheme)

    assert score == 2
    assert alignment == core.Alignment(core.make_structure(4, [(1, 4)]), 'G◦◦C', 'GAAC')


def test__brute_force_min_alignment__knot_and_nest(unit_scheme):
    """Tests enumeration on the crossing and nested structures."""
    first, second = knot_and_nest()

    score, alignment = align.brute_force_min_alignment(first, second, unit_scheme)

    assert score == 5
    assert scoring.score_alignment(alignment, unit_scheme) == 5
    assert align.validate_alignment(alignment, first, second)


def test__brute_force_min_alignment__self(unit_scheme):
    """Tests that a sequence aligns to itself for free."""
    sequence = folded(7, [(1, 5), (2, 7), (3, 4)], 'GCAUGCA')

    assert align.brute_force_min_alignment(sequence, sequence, unit_scheme)[0] == 0


def test__brute_force_min_alignment__too_large(unit_scheme):
    """Tests that large inputs are refused."""
    sequence = folded(9)

    try:
        align.brute_force_min_alignment(sequence, sequence, unit_scheme)
    except exceptions.TooLarge as error:
        assert error.size == 18
        assert error.limit == 16
    else:
        assert False
