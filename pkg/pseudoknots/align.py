"""Structural alignment of folded sequences.

    ``align`` runs the memoized interval dynamic program: S0 entries over
    interval pairs, S1 entries over pairs of interval pairs, each the
    minimum of an all-gap fallback, a direct match and one candidate per
    generator and pair of splittings. ``brute_force_min_alignment``
    enumerates every alignment of small inputs instead.
"""
from collections import namedtuple
import logging

from pseudoknots import core, exceptions, scoring
from pseudoknots.generators import (
    RELAXED, SPLITTING_MODES, STRICT_PROPER, builtin_generator_set, region_live, split_region,
    trim_region,
)


logger = logging.getLogger(__name__)

DEFAULT_ORACLE_LIMIT = 16

FALLBACK = 'fallback'
MATCH = 'match'


class AlignResult(namedtuple('AlignResult', ['score', 'alignment', 'stats'])):
    """Score of an alignment job, the alignment when traced back, and memo statistics."""
    __slots__ = ()


class Validation(namedtuple('Validation', ['valid', 'reason'])):
    """Outcome of ``validate_alignment``; falsy when invalid."""
    __slots__ = ()

    def __bool__(self):
        return self.valid


# A splitting of one side: its intervals, the pair deletion cost of the
# pairings it breaks, one (region, leg sizes) per generator child and the
# broken pairings as (interval, base, interval, base).
SideSplit = namedtuple('SideSplit', ['splitting', 'cost', 'children', 'broken'])


class Side():
    """Lookup tables for one input sequence in one role.

        Parameters:
            folded (obj): the FoldedSequence.
            scheme (obj): the ScoreScheme.
            role (int): ``scoring.DELETION`` or ``scoring.INSERTION``.
    """
    def __init__(self, folded, scheme, role):
        self.folded = folded
        self.structure = folded.structure
        self.weights = scoring.precompute_W(folded, scheme, role)
        self._live = {}
        self._splits = {}

    def live(self, region):
        """Returns the alive positions per interval of region."""
        if region not in self._live:
            self._live[region] = region_live(self.structure, region)

        return self._live[region]

    def weight(self, region):
        """Returns the all-gap weight of region."""
        return self.weights.weight(*region)

    def splits(self, region, live, generator, strict):
        """Returns the SideSplit list of region for generator."""
        key = (region, generator.name)

        if key not in self._splits:
            self._splits[key] = [
                self._side_split(generator, groups, splitting)
                for groups, splitting in split_region(generator, self.structure, live, strict)
            ]

        return self._splits[key]

    def _side_split(self, generator, groups, splitting):
        pairs = self.weights.pairs
        intervals = splitting.intervals
        cost = sum(pairs(intervals[first], intervals[second]) for first, second in generator.loose)

        index = {position: number for number, group in enumerate(groups) for position in group}
        broken = []

        for number, group in enumerate(groups):
            for position in group:
                partner = self.structure.partner(position)

                if partner is None or partner < position:
                    continue

                other = index[partner]
                if other != number and (number, other) not in generator.paired:
                    broken.append((number, position, other, partner))

        children = []

        for child in generator.children:
            members = set()
            for number in child:
                members.update(groups[number])

            live = tuple(
                [
                    position for position in groups[number]
                    if self.structure.partner(position) is None
                    or self.structure.partner(position) in members
                ]
                for number in child
            )
            children.append((trim_region(live), tuple(len(positions) for positions in live)))

        return SideSplit(splitting, cost, tuple(children), tuple(broken))


def _normalized_rank(sizes1, sizes2):
    """Returns the rank of a child entry after empty leg pairs are dropped."""
    if len(sizes1) == 2 and (
            (sizes1[0] == 0 and sizes2[0] == 0) or (sizes1[1] == 0 and sizes2[1] == 0)
    ):
        return 1

    return 0 if len(sizes1) == 2 else 1


class Aligner():
    """The dynamic program engine and its memo tables.

        Parameters:
            first (obj): the first folded 0-sequence (deletion role).
            second (obj): the second folded 0-sequence (insertion role).
            scheme (obj): the ScoreScheme.
            generators (obj): the GeneratorSet, built-in by default.
            mode (str): ``relaxed`` or ``strict-proper`` splittings.
    """
    def __init__(self, first, second, scheme, generators=None, mode=RELAXED):
        if mode not in SPLITTING_MODES:
            raise ValueError('Unknown splitting mode {!r}.'.format(mode))

        self.first = first
        self.second = second
        self.scheme = scheme
        self.generators = builtin_generator_set() if generators is None else generators
        self.mode = mode
        self.sides = (
            Side(first, scheme, scoring.DELETION),
            Side(second, scheme, scoring.INSERTION),
        )
        self.s0 = {}
        self.s1 = {}
        self.choices = {}
        self.splittings = 0

    @property
    def stats(self):
        """dict: memo sizes and number of splitting pairs examined."""
        return {
            's0_entries': len(self.s0),
            's1_entries': len(self.s1),
            'splittings': self.splittings,
        }

    def root(self):
        """Returns the region pair covering both sequences."""
        return (
            (core.make_interval(1, self.first.n),),
            (core.make_interval(1, self.second.n),),
        )

    def normalize(self, region1, region2):
        """Trims both regions and drops a leg pair that is empty on both sides.

            Returns:
                tuple: the regions, their alive positions and the index
                    of the dropped leg (None when nothing was dropped).
        """
        live1 = self.sides[0].live(region1)
        live2 = self.sides[1].live(region2)
        region1, region2 = trim_region(live1), trim_region(live2)

        if len(region1) == 2:
            for dropped in (0, 1):
                if not live1[dropped] and not live2[dropped]:
                    kept = 1 - dropped
                    return (
                        (region1[kept],), (region2[kept],), (live1[kept],), (live2[kept],), dropped
                    )

        return region1, region2, live1, live2, None

    def score(self, region1=None, region2=None):
        """Returns the memoized S0 or S1 entry of a region pair."""
        if region1 is None:
            region1, region2 = self.root()

        region1, region2, live1, live2, _ = self.normalize(region1, region2)
        table = self.s0 if len(region1) == 1 else self.s1
        key = region1 + region2

        if key not in table:
            table[key], self.choices[key] = self._compute(region1, region2, live1, live2)

        return table[key]

    def s0_entry(self, first, second):
        """Returns the S0 entry of interval first against interval second."""
        return self.score((first,), (second,))

    def s1_entry(self, first_left, first_right, second_left, second_right):
        """Returns the S1 entry of two interval pairs.

            Collapses to an S0 entry when a leg is empty on both sides.
        """
        return self.score((first_left, first_right), (second_left, second_right))

    def _match(self, live1, live2):
        """Returns the direct match score, None when the entry is not a single element pair."""
        sizes = tuple(len(positions) for positions in live1 + live2)

        if any(size != 1 for size in sizes):
            return None

        letters1 = tuple(self.first.letter(positions[0]) for positions in live1)
        letters2 = tuple(self.second.letter(positions[0]) for positions in live2)

        if len(live1) == 1:
            return self.scheme.base_sub[letters1 + letters2]

        structure1, structure2 = self.first.structure, self.second.structure
        if (structure1.partner(live1[0][0]) == live1[1][0]
                and structure2.partner(live2[0][0]) == live2[1][0]):
            return self.scheme.pair_sub[letters1 + letters2]

        return None

    def _compute(self, region1, region2, live1, live2):
        side1, side2 = self.sides
        best = side1.weight(region1) + side2.weight(region2)
        choice = FALLBACK

        sizes1 = tuple(len(positions) for positions in live1)
        sizes2 = tuple(len(positions) for positions in live2)

        if not sum(sizes1) or not sum(sizes2):
            return best, choice

        match = self._match(live1, live2)
        if match is not None and match < best:
            best, choice = match, MATCH

        measure = (sum(sizes1) + sum(sizes2), 0 if len(region1) == 2 else 1)
        strict = self.mode == STRICT_PROPER

        for generator in self.generators.of_kind(len(region1) - 1):
            splits1 = side1.splits(region1, live1, generator, strict)
            if not splits1:
                continue
            splits2 = side2.splits(region2, live2, generator, strict)

            for split1 in splits1:
                if split1.cost >= best:
                    continue

                for split2 in splits2:
                    self.splittings += 1
                    total = split1.cost + split2.cost

                    if total >= best or not self._progress(split1, split2, measure):
                        continue

                    for (child1, _), (child2, _) in zip(split1.children, split2.children):
                        total += self.score(child1, child2)
                        if total >= best:
                            break
                    else:
                        best, choice = total, (generator, split1, split2)

        return best, choice

    @staticmethod
    def _progress(split1, split2, measure):
        """Returns whether every child entry is strictly smaller than its parent."""
        for (_, sizes1), (_, sizes2) in zip(split1.children, split2.children):
            if (sum(sizes1) + sum(sizes2), _normalized_rank(sizes1, sizes2)) >= measure:
                return False

        return True

    def columns(self, region1=None, region2=None):
        """Returns the alignment columns of an entry, one list per leg.

            A column is a pair (position in first, position in second)
            with None marking a blank.

            Raises:
                MissingRecords: the entry was never computed.
        """
        if region1 is None:
            region1, region2 = self.root()

        region1, region2, live1, live2, dropped = self.normalize(region1, region2)

        if dropped is not None:
            kept = self.columns(region1, region2)[0]
            return [[], kept] if dropped == 0 else [kept, []]

        key = region1 + region2
        if key not in self.choices:
            raise exceptions.MissingRecords('No recorded choice for {!r}.'.format(key))

        choice = self.choices[key]

        if choice == FALLBACK:
            return [
                [(position, None) for position in positions1]
                + [(None, position) for position in positions2]
                for positions1, positions2 in zip(live1, live2)
            ]

        if choice == MATCH:
            return [
                [(positions1[0], positions2[0])] for positions1, positions2 in zip(live1, live2)
            ]

        generator, split1, split2 = choice
        per_base = [[] for _ in range(generator.structure.n)]

        for child, (child1, _), (child2, _) in zip(generator.children, split1.children, split2.children):
            for number, leg in zip(child, self.columns(child1, child2)):
                per_base[number] = leg

        for side, split in enumerate((split1, split2)):
            for number, position, other, partner in split.broken:
                _insert(per_base[number], side, position)
                _insert(per_base[other], side, partner)

        result = []
        start = 0
        for size in generator.leg_sizes:
            result.append([column for leg in per_base[start:start + size] for column in leg])
            start += size

        return result


def _insert(columns, side, position):
    """Inserts a one-sided column keeping the positions of side increasing."""
    column = (position, None) if side == 0 else (None, position)

    for index, existing in enumerate(columns):
        if existing[side] is not None and existing[side] > position:
            columns.insert(index, column)
            return

    columns.append(column)


def assemble(columns, first, second, blank=core.DEFAULT_BLANK):
    """Builds the Alignment of two folded sequences from ordered columns."""
    column1 = {}
    column2 = {}

    for index, (position1, position2) in enumerate(columns, start=1):
        if position1 is not None:
            column1[position1] = index
        if position2 is not None:
            column2[position2] = index

    pairings = {(column1[i], column1[j]) for i, j in first.structure.pairings}
    pairings.update((column2[i], column2[j]) for i, j in second.structure.pairings)

    top = ''.join(blank if position is None else first.letter(position) for position, _ in columns)
    bottom = ''.join(blank if position is None else second.letter(position) for _, position in columns)

    return core.Alignment(core.Structure(len(columns), pairings), top, bottom, blank)


def traceback(aligner):
    """Reconstructs the optimal alignment recorded by a filled Aligner.

        Raises:
            MissingRecords: ``score`` was not run on the root first.
    """
    columns = aligner.columns()[0]

    return assemble(columns, aligner.first, aligner.second, aligner.scheme.alphabet.blank)


def _check_inputs(first, second, scheme):
    for folded in (first, second):
        if folded.structure.kind != 0:
            raise exceptions.TypeMismatch('Only folded 0-sequences can be aligned.')
        folded.check_alphabet(scheme.alphabet)


def align(first, second, scheme, generators=None, mode=RELAXED, trace=False):
    """Returns the minimum semi-decomposable alignment score of two folded sequences.

        The score is exact when either input is decomposable, and within
        ``scoring.approximation_constant(scheme)`` of the exact minimum
        otherwise.

        Parameters:
            first (obj): the first FoldedSequence.
            second (obj): the second FoldedSequence.
            scheme (obj): the ScoreScheme.
            generators (obj): the GeneratorSet, built-in by default.
            mode (str): ``relaxed`` (default) or ``strict-proper``.
            trace (bool): also reconstruct an optimal alignment.

        Returns:
            obj: an AlignResult.

        Raises:
            TypeMismatch: an input is a 1-sequence.
            UnknownLetter: an input holds a letter outside the scheme.
    """
    _check_inputs(first, second, scheme)

    aligner = Aligner(first, second, scheme, generators, mode)
    score = aligner.score()
    stats = aligner.stats

    logger.debug(
        'Aligned %s x %s bases: score %s, %s S0 and %s S1 entries, %s splittings',
        first.n, second.n, score, stats['s0_entries'], stats['s1_entries'], stats['splittings'],
    )

    return AlignResult(score, traceback(aligner) if trace else None, stats)


def validate_alignment(alignment, first, second):
    """Checks that an alignment projects to both folded sequences.

        Returns:
            obj: a Validation, falsy with a reason when invalid.
    """
    for number, (word, folded) in enumerate(((alignment.top, first), (alignment.bottom, second)), start=1):
        try:
            projected = core.project(alignment.structure, word, alignment.blank)
        except exceptions.StructureError as error:
            return Validation(False, 'row {}: {}'.format(number, error))

        if projected != folded:
            return Validation(
                False, 'row {} projects to {!r}, expected {!r}'.format(number, projected, folded)
            )

    return Validation(True, None)


class _Enumeration():
    """Depth-first search over monotone matchings of base positions."""
    def __init__(self, first, second, scheme):
        self.first = first
        self.second = second
        self.scheme = scheme
        self.structure1 = first.structure
        self.structure2 = second.structure

        self.delete = [0] * (first.n + 2)
        for position in range(1, first.n + 1):
            self.delete[position] = self._gap_cost(first, position, scoring.DELETION)

        self.insert = [0] * (second.n + 1)
        for position in range(1, second.n + 1):
            self.insert[position] = (
                self.insert[position - 1] + self._gap_cost(second, position, scoring.INSERTION)
            )

        self.best = scoring.all_gap_weight(first, scheme) + scoring.all_gap_weight(
            second, scheme, scoring.INSERTION
        )
        self.best_matching = ()

    def _gap_cost(self, folded, position, role):
        """Cost of leaving a base unmatched; pairings are charged at their left end."""
        partner = folded.structure.partner(position)

        if partner is None:
            return self.scheme.base_indel(folded.letter(position), role)
        if partner > position:
            return self.scheme.pair_indel(folded.letter(position), folded.letter(partner), role)
        return 0

    def skipped(self, last, upto):
        """Insertion cost of the second sequence's bases strictly between last and upto."""
        return self.insert[upto - 1] - self.insert[last]

    def search(self, position, last, cost, matching, pending):
        """Extends a partial matching from position on."""
        if cost >= self.best:
            return

        if position > self.first.n:
            total = cost + self.skipped(last, self.second.n + 1)
            if total < self.best:
                self.best = total
                self.best_matching = matching
            return

        partner = self.structure1.partner(position)

        if partner is not None and partner < position:
            target = pending.get(position)

            if target is None:
                self.search(position + 1, last, cost, matching, pending)
            else:
                rest = {key: value for key, value in pending.items() if key != position}
                self.search(
                    position + 1, target, cost + self.skipped(last, target),
                    matching + ((position, target),), rest,
                )
            return

        limit = min(pending.values(), default=self.second.n + 1)

        for target in range(last + 1, limit):
            other = self.structure2.partner(target)

            if partner is None:
                if other is not None:
                    continue
                extra = self.scheme.base_sub[(self.first.letter(position), self.second.letter(target))]
                following = pending
            else:
                if other is None or other < target or not self._consistent(pending, partner, other):
                    continue
                extra = self.scheme.pair_sub[(
                    self.first.letter(position), self.first.letter(partner),
                    self.second.letter(target), self.second.letter(other),
                )]
                following = dict(pending)
                following[partner] = other

            self.search(
                position + 1, target, cost + self.skipped(last, target) + extra,
                matching + ((position, target),), following,
            )

        self.search(position + 1, last, cost + self.delete[position], matching, pending)

    @staticmethod
    def _consistent(pending, partner, other):
        """Returns whether a new forced match keeps the matching monotone."""
        return all((key < partner) == (value < other) for key, value in pending.items())


def _matching_columns(matching, first_size, second_size):
    """Returns the columns of a monotone matching, gaps of the first sequence first."""
    columns = []
    last1 = last2 = 0

    for position1, position2 in matching + ((first_size + 1, second_size + 1),):
        columns.extend((position, None) for position in range(last1 + 1, position1))
        columns.extend((None, position) for position in range(last2 + 1, position2))
        columns.append((position1, position2))
        last1, last2 = position1, position2

    return columns[:-1]


def brute_force_min_alignment(first, second, scheme, size_limit=DEFAULT_ORACLE_LIMIT):
    """Returns the exact minimum alignment score by exhaustive enumeration.

        Every alignment corresponds to a monotone partial matching of
        base positions in which unpaired bases match unpaired bases and
        a pairing matches a pairing end to end.

        Returns:
            tuple: (score, Alignment).

        Raises:
            TooLarge: the inputs hold more than size_limit bases.
    """
    _check_inputs(first, second, scheme)

    size = first.n + second.n
    if size > size_limit:
        raise exceptions.TooLarge(size, size_limit)

    enumeration = _Enumeration(first, second, scheme)
    enumeration.search(1, 0, 0, (), {})

    columns = _matching_columns(enumeration.best_matching, first.n, second.n)
    alignment = assemble(columns, first, second, scheme.alphabet.blank)

    return enumeration.best, alignment
