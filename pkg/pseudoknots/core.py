"""The structure algebra for pseudoknotted RNA.

    Bases are numbered from 1. A structure is a base count, a set of
    disjoint pairings and, for 1-structures, a gap position ``k``
    splitting the bases into the legs ``[1, k]`` and ``[k + 1, n]``.
    Every value in this module is immutable and every operation returns
    a new value.
"""
from collections import namedtuple

from pseudoknots import exceptions


INDEPENDENT = 'independent'
NESTED = 'nested'
CROSSED = 'crossed'

DEFAULT_LETTERS = 'ACGU'
DEFAULT_BLANK = '◦'


class Interval(namedtuple('Interval', ['first', 'last'])):
    """A closed interval of base positions; ``EMPTY`` when last < first."""
    __slots__ = ()

    @property
    def length(self):
        """int: number of positions in the interval."""
        return max(0, self.last - self.first + 1)

    @property
    def is_empty(self):
        """bool: whether the interval holds no position."""
        return self.last < self.first

    def contains(self, position):
        """Returns whether position lies inside the interval."""
        return self.first <= position <= self.last

    def positions(self):
        """Returns the positions of the interval in increasing order."""
        return range(self.first, self.last + 1)

    def __repr__(self):
        if self.is_empty:
            return '[]'

        return '[{},{}]'.format(self.first, self.last)


EMPTY = Interval(1, 0)


def make_interval(first, last):
    """Returns the interval [first, last], canonical ``EMPTY`` if last < first."""
    if last < first:
        return EMPTY

    return Interval(first, last)


class UnpairedBase(namedtuple('UnpairedBase', ['position'])):
    """Structural element for a base without partner."""
    __slots__ = ()


class Pairing(namedtuple('Pairing', ['first', 'second'])):
    """Structural element for a pairing (first < second)."""
    __slots__ = ()


class Structure():
    """A validated 0-structure (``gap is None``) or 1-structure.

        Parameters:
            n (int): number of bases.
            pairings (iterable): pairs (i, j) of base positions.
            gap (int): last base of the left leg, or None for a
                0-structure.

        Raises:
            IndexOutOfRange: a pairing end is outside [1, n].
            NotIncreasing: a pairing (i, j) has i >= j.
            SharedEndpoint: two pairings share a base.
            BadGap: the gap is outside [0, n].
    """
    __slots__ = ('_n', '_pairings', '_gap', '_partner')

    def __init__(self, n, pairings=(), gap=None):
        if not isinstance(n, int) or n < 0:
            raise exceptions.IndexOutOfRange(
                'Base count must be a non-negative integer, got {!r}.'.format(n)
            )

        partner = {}

        for first, second in pairings:
            if not (1 <= first <= n and 1 <= second <= n):
                raise exceptions.IndexOutOfRange(
                    'Pairing ({}, {}) is outside [1, {}].'.format(first, second, n)
                )

            if first >= second:
                raise exceptions.NotIncreasing(
                    'Pairing ({}, {}) must have its left end first.'.format(first, second)
                )

            for end in (first, second):
                if end in partner:
                    raise exceptions.SharedEndpoint(
                        'Base {} belongs to more than one pairing.'.format(end)
                    )

            partner[first] = second
            partner[second] = first

        if gap is not None and not (isinstance(gap, int) and 0 <= gap <= n):
            raise exceptions.BadGap('Gap {!r} is outside [0, {}].'.format(gap, n))

        self._n = n
        self._gap = gap
        self._partner = partner
        self._pairings = frozenset(
            Pairing(first, second) for first, second in partner.items() if first < second
        )

    @property
    def n(self):  # pylint: disable=invalid-name
        """int: number of bases."""
        return self._n

    @property
    def pairings(self):
        """frozenset: the pairings as ``Pairing`` tuples."""
        return self._pairings

    @property
    def gap(self):
        """int: the gap position, None for a 0-structure."""
        return self._gap

    @property
    def kind(self):
        """int: 0 for a 0-structure, 1 for a 1-structure."""
        return 0 if self._gap is None else 1

    def partner(self, position):
        """Returns the partner of a base, or None when it is unpaired."""
        return self._partner.get(position)

    def is_unpaired(self, position):
        """Returns whether position is a base of the structure without partner."""
        return 1 <= position <= self._n and position not in self._partner

    def legs(self):
        """Returns the leg intervals (one for a 0-structure, two otherwise)."""
        if self._gap is None:
            return (make_interval(1, self._n),)

        return (make_interval(1, self._gap), make_interval(self._gap + 1, self._n))

    def sorted_pairings(self):
        """Returns the pairings sorted by their left end."""
        return sorted(self._pairings)

    def __eq__(self, other):
        if not isinstance(other, Structure):
            return NotImplemented

        return (self._n, self._pairings, self._gap) == (other.n, other.pairings, other.gap)

    def __hash__(self):
        return hash((self._n, self._pairings, self._gap))

    def __repr__(self):
        pairs = ','.join('({},{})'.format(first, second) for first, second in self.sorted_pairings())

        if self._gap is None:
            return 'Structure({}, {{{}}})'.format(self._n, pairs)

        return 'Structure({}, {{{}}}, gap={})'.format(self._n, pairs, self._gap)


def make_structure(n, pairings=(), gap=None):
    """Validates raw input and returns a Structure.

        Parameters:
            n (int): number of bases.
            pairings (iterable): pairs (i, j) of 1-based positions.
            gap (int): optional gap position; present for 1-structures.

        Returns:
            obj: the validated Structure.
    """
    return Structure(n, pairings, gap)


ID0 = Structure(1)
ID1 = Structure(2, [(1, 2)], 1)
EMPTY0 = Structure(0)
EMPTY1 = Structure(0, (), 0)


def is_identity(structure):
    """Returns whether the structure is id0 or id1."""
    return structure in (ID0, ID1)


def classify_pair_relation(pairing, other):
    """Classifies two pairings as independent, nested or crossed.

        Parameters:
            pairing (tuple): a pairing (i, j).
            other (tuple): a pairing (i', j').

        Returns:
            str: one of ``INDEPENDENT``, ``NESTED`` or ``CROSSED``.

        Raises:
            SharedEndpoint: the pairings share a base.
    """
    if set(pairing) & set(other):
        raise exceptions.SharedEndpoint(
            'Pairings {} and {} share a base.'.format(tuple(pairing), tuple(other))
        )

    outer, inner = sorted([tuple(pairing), tuple(other)])

    if outer[1] < inner[0]:
        return INDEPENDENT

    if inner[1] < outer[1]:
        return NESTED

    return CROSSED


def crossing_pairs(structure):
    """Returns every crossed pair of pairings, ordered by left ends."""
    pairings = structure.sorted_pairings()
    crossed = []

    for index, pairing in enumerate(pairings):
        for other in pairings[index + 1:]:
            if other[0] > pairing[1]:
                break

            if pairing[0] < other[0] < pairing[1] < other[1]:
                crossed.append((pairing, other))

    return crossed


def is_nested(structure):
    """Returns whether no two pairings of the structure cross."""
    return not crossing_pairs(structure)


def element_order(structure):
    """Returns the structural elements ordered by their first base."""
    elements = [
        UnpairedBase(position) for position in range(1, structure.n + 1)
        if structure.is_unpaired(position)
    ]
    elements.extend(structure.pairings)

    return sorted(elements, key=lambda element: element[0])


def compose_at_base(structure, base, child):
    """Replaces an unpaired base by a 0-structure.

        Parameters:
            structure (obj): the outer Structure.
            base (int): an unpaired base of structure.
            child (obj): the 0-structure inserted at base.

        Returns:
            obj: a Structure with n + m - 1 bases.

        Raises:
            WrongType: child is a 1-structure.
            BaseIsPaired: base is paired (or not a base).
    """
    if child.kind != 0:
        raise exceptions.WrongType('Composition along a base needs a 0-structure.')

    if not structure.is_unpaired(base):
        raise exceptions.BaseIsPaired('Base {} is not an unpaired base.'.format(base))

    size = child.n

    def shift(position):
        return position if position < base else position + size - 1

    pairings = [(shift(first), shift(second)) for first, second in structure.pairings]
    pairings.extend(
        (first + base - 1, second + base - 1) for first, second in child.pairings
    )

    gap = structure.gap
    if gap is not None and gap >= base:
        gap += size - 1

    return Structure(structure.n + size - 1, pairings, gap)


def compose_at_pairing(structure, pairing, child):
    """Replaces a pairing by a 1-structure, legs at the two pairing ends.

        Parameters:
            structure (obj): the outer Structure.
            pairing (tuple): a pairing (i, j) of structure.
            child (obj): the 1-structure inserted along the pairing.

        Returns:
            obj: a Structure with n + m - 2 bases.

        Raises:
            WrongType: child is a 0-structure.
            NotAPairing: pairing is not part of structure.
    """
    if child.kind != 1:
        raise exceptions.WrongType('Composition along a pairing needs a 1-structure.')

    left, right = pairing
    if (left, right) not in structure.pairings:
        raise exceptions.NotAPairing('({}, {}) is not a pairing.'.format(left, right))

    size = child.n
    leg = child.gap

    def shift(position):
        if position < left:
            return position
        if position < right:
            return position + leg - 1
        return position + size - 2

    def place(position):
        if position <= leg:
            return position + left - 1
        return position + right - 2

    pairings = [
        (shift(first), shift(second)) for first, second in structure.pairings
        if (first, second) != (left, right)
    ]
    pairings.extend((place(first), place(second)) for first, second in child.pairings)

    gap = structure.gap
    if gap is not None:
        if gap >= right:
            gap += size - 2
        elif gap >= left:
            gap += leg - 1

    return Structure(structure.n + size - 2, pairings, gap)


def compose_all(structure, children):
    """Composes simultaneously along every structural element.

        Parameters:
            structure (obj): the outer Structure.
            children (list): one Structure per element of
                ``element_order(structure)``; 0-structures for unpaired
                bases, 1-structures for pairings.

        Returns:
            obj: the composed Structure.

        Raises:
            ArityMismatch: wrong number of children.
            WrongType: a child has the wrong type for its element.
    """
    elements = element_order(structure)
    children = list(children)

    if len(children) != len(elements):
        raise exceptions.ArityMismatch(
            '{} children given for {} structural elements.'.format(len(children), len(elements))
        )

    # Number of output bases produced by each position of structure
    produced = [0] * (structure.n + 2)

    for element, child in zip(elements, children):
        if isinstance(element, UnpairedBase):
            if child.kind != 0:
                raise exceptions.WrongType('Base {} needs a 0-structure.'.format(element.position))
            produced[element.position] = child.n
        else:
            if child.kind != 1:
                raise exceptions.WrongType('Pairing {} needs a 1-structure.'.format(tuple(element)))
            produced[element.first] = child.gap
            produced[element.second] = child.n - child.gap

    start = [0] * (structure.n + 2)
    for position in range(2, structure.n + 2):
        start[position] = start[position - 1] + produced[position - 1]

    pairings = []

    for element, child in zip(elements, children):
        if isinstance(element, UnpairedBase):
            offset = start[element.position]
            pairings.extend(
                (first + offset, second + offset) for first, second in child.pairings
            )
            continue

        leg = child.gap

        def place(position, element=element, leg=leg):
            if position <= leg:
                return start[element.first] + position
            return start[element.second] + position - leg

        pairings.extend((place(first), place(second)) for first, second in child.pairings)

    gap = structure.gap
    if gap is not None:
        gap = start[gap + 1]

    return Structure(start[structure.n + 1], pairings, gap)


class Alphabet():
    """The letters of folded sequences plus a reserved blank symbol.

        Parameters:
            letters (str): the letters; defaults to ``ACGU``.
            blank (str): the blank symbol, not one of the letters.
    """
    def __init__(self, letters=DEFAULT_LETTERS, blank=DEFAULT_BLANK):
        self.letters = tuple(dict.fromkeys(letters))
        self.blank = blank

        if not self.letters:
            raise exceptions.StructureError('An alphabet needs at least one letter.')

        if blank in self.letters:
            raise exceptions.StructureError(
                'Blank {!r} must not be one of the letters.'.format(blank)
            )

    def __contains__(self, symbol):
        return symbol in self.letters

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented

        return (self.letters, self.blank) == (other.letters, other.blank)

    def __hash__(self):
        return hash((self.letters, self.blank))

    def __repr__(self):
        return 'Alphabet({!r})'.format(''.join(self.letters))


DEFAULT_ALPHABET = Alphabet()


class FoldedSequence():
    """A structure with one letter per base.

        Parameters:
            structure (obj): the Structure.
            word (str or tuple): the letters; two strings, one per leg,
                are accepted for 1-structures.
    """
    __slots__ = ('_structure', '_letters')

    def __init__(self, structure, word):
        if isinstance(word, (tuple, list)):
            if structure.kind != 1 or len(word) != 2:
                raise exceptions.StructureError('Two words are only valid for a 1-structure.')
            if len(word[0]) != structure.gap:
                raise exceptions.StructureError(
                    'Left word has {} letters, the left leg {} bases.'.format(len(word[0]), structure.gap)
                )
            word = ''.join(word)

        if len(word) != structure.n:
            raise exceptions.StructureError(
                'Word has {} letters, the structure {} bases.'.format(len(word), structure.n)
            )

        self._structure = structure
        self._letters = word

    @property
    def structure(self):
        """obj: the Structure."""
        return self._structure

    @property
    def letters(self):
        """str: all letters in base order, across the gap."""
        return self._letters

    @property
    def word(self):
        """str or tuple: the word, split at the gap for 1-structures."""
        if self._structure.kind == 0:
            return self._letters

        gap = self._structure.gap
        return (self._letters[:gap], self._letters[gap:])

    @property
    def n(self):  # pylint: disable=invalid-name
        """int: number of bases."""
        return self._structure.n

    def letter(self, position):
        """Returns the letter at a 1-based position."""
        return self._letters[position - 1]

    def check_alphabet(self, alphabet):
        """Raises UnknownLetter unless every letter belongs to alphabet."""
        for index, letter in enumerate(self._letters, start=1):
            if letter not in alphabet:
                raise exceptions.UnknownLetter(
                    'Letter {!r} at base {} is not in {!r}.'.format(letter, index, alphabet)
                )

    def __eq__(self, other):
        if not isinstance(other, FoldedSequence):
            return NotImplemented

        return (self._structure, self._letters) == (other.structure, other.letters)

    def __hash__(self):
        return hash((self._structure, self._letters))

    def __repr__(self):
        return 'FoldedSequence({!r}, {!r})'.format(self._structure, self.word)


def _check_interval(interval, n):
    """Returns the canonical form of interval, checked against [1, n]."""
    interval = make_interval(*interval)

    if not interval.is_empty and (interval.first < 1 or interval.last > n):
        raise exceptions.OutOfRange('Interval {!r} is outside [1, {}].'.format(interval, n))

    return interval


def _subsequence(folded, positions, gap=None):
    """Returns the folded sequence induced on the given kept positions."""
    index = {position: rank for rank, position in enumerate(positions, start=1)}
    structure = folded.structure
    pairings = [
        (index[first], index[second]) for first, second in structure.pairings
        if first in index and second in index
    ]
    letters = ''.join(folded.letter(position) for position in positions)

    return FoldedSequence(Structure(len(positions), pairings, gap), letters)


def restrict(folded, first, second=None):
    """Restricts a folded sequence to one interval or an interval pair.

        Unpaired bases inside the interval(s) are kept, and so are
        pairings with both ends inside. Pairings with an end outside are
        removed together with both their bases.

        Parameters:
            folded (obj): the FoldedSequence.
            first (tuple): the interval I.
            second (tuple): the optional interval J after I; when
                present the result is a 1-sequence with its gap
                between I and J.

        Returns:
            obj: the restricted FoldedSequence.

        Raises:
            OutOfRange: an interval reaches outside the structure.
            OverlappingIntervals: J does not lie after I.
    """
    structure = folded.structure
    first = _check_interval(first, structure.n)
    intervals = [first]

    if second is not None:
        second = _check_interval(second, structure.n)
        if not first.is_empty and not second.is_empty and first.last >= second.first:
            raise exceptions.OverlappingIntervals(
                'Interval {!r} must end before {!r}.'.format(first, second)
            )
        intervals.append(second)

    inside = set()
    for interval in intervals:
        inside.update(interval.positions())

    def kept(position):
        partner = structure.partner(position)
        return partner is None or partner in inside

    left = [position for position in first.positions() if kept(position)]

    if second is None:
        return _subsequence(folded, left)

    right = [position for position in second.positions() if kept(position)]

    return _subsequence(folded, left + right, gap=len(left))


def remove_pairings(folded, pairings):
    """Removes pairings together with both their bases.

        Raises:
            UnknownPairing: a pairing is not part of the structure.
    """
    structure = folded.structure
    removed = set()

    for first, second in pairings:
        if (first, second) not in structure.pairings:
            raise exceptions.UnknownPairing('({}, {}) is not a pairing.'.format(first, second))
        removed.update((first, second))

    positions = [position for position in range(1, structure.n + 1) if position not in removed]

    gap = structure.gap
    if gap is not None:
        gap -= sum(1 for position in removed if position <= gap)

    return _subsequence(folded, positions, gap)


def project(structure, word, blank=DEFAULT_BLANK):
    """Projects a blank-extended word on a structure to a folded sequence.

        Bases holding a blank are removed; so are pairings whose two
        bases hold blanks.

        Raises:
            HalfBlankPairing: a pairing has exactly one blank end.
    """
    if len(word) != structure.n:
        raise exceptions.StructureError(
            'Word has {} symbols, the structure {} bases.'.format(len(word), structure.n)
        )

    for first, second in structure.sorted_pairings():
        if (word[first - 1] == blank) != (word[second - 1] == blank):
            raise exceptions.HalfBlankPairing(
                'Pairing ({}, {}) has exactly one blank end.'.format(first, second)
            )

    positions = [
        position for position in range(1, structure.n + 1) if word[position - 1] != blank
    ]

    gap = structure.gap
    if gap is not None:
        gap = sum(1 for position in positions if position <= gap)

    folded = FoldedSequence(structure, ''.join(word))

    return _subsequence(folded, positions, gap)


class Alignment():
    """A common structure over the blank-extended alphabet with two words.

        Parameters:
            structure (obj): the Structure of the alignment.
            top (str): the word t1 for the first sequence.
            bottom (str): the word t2 for the second sequence.
            blank (str): the blank symbol used in the words.
    """
    __slots__ = ('structure', 'top', 'bottom', 'blank')

    def __init__(self, structure, top, bottom, blank=DEFAULT_BLANK):
        top = ''.join(top)
        bottom = ''.join(bottom)

        if len(top) != structure.n or len(bottom) != structure.n:
            raise exceptions.StructureError(
                'Alignment words must both have {} symbols.'.format(structure.n)
            )

        self.structure = structure
        self.top = top
        self.bottom = bottom
        self.blank = blank

    def __eq__(self, other):
        if not isinstance(other, Alignment):
            return NotImplemented

        return (self.structure, self.top, self.bottom, self.blank) == (
            other.structure, other.top, other.bottom, other.blank
        )

    def __hash__(self):
        return hash((self.structure, self.top, self.bottom, self.blank))

    def __repr__(self):
        return 'Alignment({!r}, {!r}, {!r})'.format(self.structure, self.top, self.bottom)
