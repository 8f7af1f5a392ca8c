"""Score schemes, all-gap weights and pair deletion tables.

    Scores are exact non-negative integers. Text inputs with decimals are
    multiplied by a power of ten declared with ``scale`` when parsed, and
    reports divide it out again with ``format_score``.
"""
from decimal import Decimal, InvalidOperation, ROUND_HALF_UP
from fractions import Fraction
from itertools import product
import logging

import numpy as np

from pseudoknots import core, exceptions


logger = logging.getLogger(__name__)

WILDCARD = '*'

# Number of letters in the key of each table
TABLE_ARITY = {
    'base_sub': 2,
    'base_del': 1,
    'base_ins': 1,
    'pair_sub': 4,
    'pair_del': 2,
    'pair_ins': 2,
}

DELETION = 1
INSERTION = 2


class ScoreScheme():
    """Validated score tables for the six edit operations.

        Every table is complete over the alphabet. Use
        ``validate_scheme`` or ``parse_scheme`` to build one.

        Parameters:
            alphabet (obj): the Alphabet the tables are keyed by.
            tables (dict): table name to a dict of letter tuples to int.
            scale (int): the decimal scaling factor of the values.
            name (str): optional label used in reports.
    """
    def __init__(self, alphabet, tables, scale=1, name=None):
        self.alphabet = alphabet
        self.scale = scale
        self.name = name
        self.base_sub = tables['base_sub']
        self.base_del = tables['base_del']
        self.base_ins = tables['base_ins']
        self.pair_sub = tables['pair_sub']
        self.pair_del = tables['pair_del']
        self.pair_ins = tables['pair_ins']

    def base_indel(self, letter, role):
        """Returns the base deletion (role 1) or insertion (role 2) score."""
        if role == DELETION:
            return self.base_del[(letter,)]
        return self.base_ins[(letter,)]

    def pair_indel(self, left, right, role):
        """Returns the pair deletion (role 1) or insertion (role 2) score."""
        if role == DELETION:
            return self.pair_del[(left, right)]
        return self.pair_ins[(left, right)]

    def is_symmetric(self):
        """Returns whether swapping the two sequences leaves every score unchanged."""
        return (
            self.base_del == self.base_ins
            and self.pair_del == self.pair_ins
            and all(self.base_sub[(x, y)] == self.base_sub[(y, x)] for x, y in self.base_sub)
            and all(
                self.pair_sub[key] == self.pair_sub[key[2:] + key[:2]] for key in self.pair_sub
            )
        )

    def __repr__(self):
        return 'ScoreScheme({!r}, scale={})'.format(self.name or 'custom', self.scale)


def _as_decimal(value):
    """Converts a raw table value to Decimal."""
    try:
        return Decimal(str(value))
    except InvalidOperation:
        raise exceptions.ScoreError('{!r} is not a number.'.format(value))


def _scaled(value, scale):
    """Returns value * scale as an int, failing when it is not integral."""
    scaled = _as_decimal(value) * scale

    if scaled != scaled.to_integral_value():
        raise exceptions.ScoreError(
            '{} is not a whole number at scale {}.'.format(value, scale)
        )

    return int(scaled)


def _located(error, origin):
    """Tags error with the (line, column) of the text its entry came from."""
    error.line, error.column = origin or (None, None)

    return error


def _is_identity(table, key):
    """Returns whether key substitutes a letter or pair by itself."""
    if table == 'base_sub':
        return key[0] == key[1]
    if table == 'pair_sub':
        return key[:2] == key[2:]
    return False


def _expand(table, key, letters):
    """Yields the concrete keys matched by a key with wildcards.

        Wildcard keys never produce identity substitutions, so a line
        such as ``base_sub * * 1`` leaves the diagonal at zero.
    """
    if WILDCARD not in key:
        yield key
        return

    choices = [letters if symbol == WILDCARD else (symbol,) for symbol in key]

    for concrete in product(*choices):
        if not _is_identity(table, concrete):
            yield concrete


def validate_scheme(raw, alphabet=core.DEFAULT_ALPHABET, scale=1, name=None, origins=None):
    """Validates raw score tables and returns a ScoreScheme.

        Parameters:
            raw (dict): table name to a dict of key tuples to values;
                keys may contain ``*``. Entries are applied in order so
                later entries override earlier ones.
            alphabet (obj): the Alphabet of the tables.
            scale (int): factor applied to every value.
            name (str): optional label.
            origins (dict): optional (table, key) to the (line, column)
                the entry was read from; errors about an entry carry
                its ``line`` and ``column``.

        Returns:
            obj: the ScoreScheme.

        Raises:
            NegativeScore: a value is negative.
            NonZeroIdentity: an identity substitution is not zero.
            ScoreError: unknown table, bad key or missing entries.
    """
    letters = alphabet.letters
    origins = origins or {}
    tables = {table: {} for table in TABLE_ARITY}
    sources = {table: {} for table in TABLE_ARITY}

    for table, entries in raw.items():
        if table not in TABLE_ARITY:
            raise exceptions.ScoreError('Unknown score table {!r}.'.format(table))

        for key, value in entries.items():
            key = tuple(key)
            origin = origins.get((table, key))

            if len(key) != TABLE_ARITY[table]:
                raise _located(exceptions.ScoreError(
                    '{} needs {} letters, got {!r}.'.format(table, TABLE_ARITY[table], key)
                ), origin)

            for symbol in key:
                if symbol != WILDCARD and symbol not in alphabet:
                    raise _located(exceptions.UnknownLetter(
                        'Letter {!r} of {} is not in {!r}.'.format(symbol, table, alphabet)
                    ), origin)

            try:
                score = _scaled(value, scale)
            except exceptions.ScoreError as error:
                raise _located(error, origin)

            if score < 0:
                raise _located(exceptions.NegativeScore(
                    '{} {} is negative ({}).'.format(table, ' '.join(key), value)
                ), origin)

            for concrete in _expand(table, key, letters):
                tables[table][concrete] = score
                sources[table][concrete] = origin

    for table, arity in TABLE_ARITY.items():
        for key in product(letters, repeat=arity):
            if _is_identity(table, key):
                if tables[table].setdefault(key, 0) != 0:
                    raise _located(exceptions.NonZeroIdentity(
                        '{} {} must be 0.'.format(table, ' '.join(key))
                    ), sources[table].get(key))
            elif key not in tables[table]:
                raise exceptions.ScoreError(
                    'Missing score for {} {}.'.format(table, ' '.join(key))
                )

    return ScoreScheme(alphabet, tables, scale=scale, name=name)


def unit_tables():
    """Raw tables of the ``unit`` preset (approximation constant 4)."""
    return {
        'base_sub': {('*', '*'): 1},
        'base_del': {('*',): 1},
        'base_ins': {('*',): 1},
        'pair_sub': {('*', '*', '*', '*'): 1},
        'pair_del': {('*', '*'): 2},
        'pair_ins': {('*', '*'): 2},
    }


def additive_tables():
    """Raw tables of the ``additive`` preset (approximation constant 1)."""
    tables = unit_tables()
    tables['pair_sub'] = {('*', '*', '*', '*'): 4}

    return tables


PRESETS = {
    'unit': unit_tables,
    'additive': additive_tables,
}


def preset_scheme(name, alphabet=core.DEFAULT_ALPHABET):
    """Returns the named preset ScoreScheme over alphabet."""
    try:
        tables = PRESETS[name]()
    except KeyError:
        raise exceptions.ScoreError('Unknown score preset {!r}.'.format(name))

    return validate_scheme(tables, alphabet, name=name)


# Line keyword: (table names, number of letters)
SCORE_LINES = {
    'base_sub': (('base_sub',), 2),
    'base_indel': (('base_del', 'base_ins'), 1),
    'base_del': (('base_del',), 1),
    'base_ins': (('base_ins',), 1),
    'pair_sub': (('pair_sub',), 4),
    'pair_indel': (('pair_del', 'pair_ins'), 2),
    'pair_del': (('pair_del',), 2),
    'pair_ins': (('pair_ins',), 2),
}


def parse_scheme(text, alphabet=core.DEFAULT_ALPHABET, name=None):
    """Parses a score scheme document.

        Each line is one of ``base_sub x y v``, ``base_indel x v``,
        ``pair_sub x1 x2 y1 y2 v``, ``pair_indel x1 x2 v`` (or the
        one-sided ``base_del``, ``base_ins``, ``pair_del``,
        ``pair_ins``), ``scale N`` or ``preset NAME``. ``*`` matches
        every letter and later lines override earlier ones. Values
        start from the ``unit`` preset. Blank lines and ``#`` comments
        are ignored.

        Parameters:
            text (str): the document.
            alphabet (obj): the Alphabet of the tables.
            name (str): optional label for the scheme.

        Returns:
            obj: the ScoreScheme.

        Raises:
            BadScoreLine: a line is malformed or holds an invalid score;
                carries the line and column of the offending entry.
    """
    raw = unit_tables()
    origins = {}
    scale = 1

    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()

        if not fields:
            continue

        keyword = fields[0]

        if keyword == 'scale':
            if len(fields) != 2 or not fields[1].isdigit() or fields[1].strip('0') != '1':
                raise exceptions.BadScoreLine(
                    'scale must be a power of ten.', line=number, column=1
                )
            scale = int(fields[1])
            continue

        if keyword == 'preset':
            if len(fields) != 2 or fields[1] not in PRESETS:
                raise exceptions.BadScoreLine(
                    'preset must be one of {}.'.format(', '.join(sorted(PRESETS))),
                    line=number, column=1,
                )
            raw = PRESETS[fields[1]]()
            origins = {}
            continue

        if keyword not in SCORE_LINES:
            raise exceptions.BadScoreLine(
                'Unknown keyword {!r}.'.format(keyword), line=number, column=1
            )

        targets, arity = SCORE_LINES[keyword]

        if len(fields) != arity + 2:
            raise exceptions.BadScoreLine(
                '{} takes {} letters and a value.'.format(keyword, arity), line=number, column=1
            )

        key = tuple(fields[1:-1])
        column = line.index(fields[-1], len(keyword)) + 1

        try:
            value = Decimal(fields[-1])
        except InvalidOperation:
            raise exceptions.BadScoreLine(
                '{!r} is not a number.'.format(fields[-1]), line=number, column=column
            )

        for target in targets:
            entries = raw.setdefault(target, {})
            # Re-inserting moves the key to the end so it overrides
            entries.pop(key, None)
            entries[key] = value
            origins[(target, key)] = (number, column)

    try:
        scheme = validate_scheme(raw, alphabet, scale=scale, name=name, origins=origins)
    except (exceptions.ScoreError, exceptions.UnknownLetter) as error:
        raise exceptions.BadScoreLine(
            str(error), line=getattr(error, 'line', None), column=getattr(error, 'column', None)
        )

    logger.debug(
        'Parsed score scheme %s at scale %s (symmetric: %s)',
        name or 'custom', scale, scheme.is_symmetric(),
    )

    return scheme


def format_score(value, scale=1):
    """Formats an integer score at the given decimal scale.

        Parameters:
            value (int): the scaled score.
            scale (int): the power of ten the score was scaled by.

        Returns:
            str: the score with as many fractional digits as the scale
                declares.
    """
    digits = len(str(scale)) - 1
    decimal_value = (Decimal(value) / Decimal(scale)).quantize(
        Decimal(10) ** -digits, rounding=ROUND_HALF_UP,
    )

    return str(decimal_value)


def format_ratio(ratio):
    """Formats an exact ratio as ``p`` or ``p/q``."""
    if ratio.denominator == 1:
        return str(ratio.numerator)

    return '{}/{}'.format(ratio.numerator, ratio.denominator)


def approximation_constant(scheme):
    """Returns c, the largest (pair deletion + insertion) / substitution ratio.

        Raises:
            UnboundedRatio: a mismatching pair substitution costs zero.
    """
    constant = Fraction(1)

    for key, substitution in scheme.pair_sub.items():
        if key[:2] == key[2:]:
            continue

        indel = scheme.pair_del[key[:2]] + scheme.pair_ins[key[2:]]

        if substitution == 0:
            raise exceptions.UnboundedRatio(
                'pair_sub {} costs 0, no approximation constant exists.'.format(' '.join(key))
            )

        constant = max(constant, Fraction(indel, substitution))

    return constant


def all_gap_weight(folded, scheme, role=DELETION):
    """Returns the score of aligning a folded sequence entirely to blanks.

        Parameters:
            folded (obj): the FoldedSequence.
            scheme (obj): the ScoreScheme.
            role (int): 1 uses deletion tables, 2 insertion tables.
    """
    structure = folded.structure
    weight = 0

    for position in range(1, structure.n + 1):
        if structure.is_unpaired(position):
            weight += scheme.base_indel(folded.letter(position), role)

    for first, second in structure.pairings:
        weight += scheme.pair_indel(folded.letter(first), folded.letter(second), role)

    return weight


class PairDeletionTable():
    """Answers R[I;J], the weight of pairings from I to J, in constant time.

        Parameters:
            matrix (obj): (n + 1) x (n + 1) array holding the weight of
                pairing (i, j) at row i, column j (i < j).
    """
    def __init__(self, matrix):
        self._sums = matrix.cumsum(axis=0).cumsum(axis=1).tolist()

    def rectangle(self, rows, columns):
        """Returns the total weight at rows x columns."""
        if rows.is_empty or columns.is_empty:
            return 0

        sums = self._sums
        top, bottom = rows.first - 1, rows.last
        left, right = columns.first - 1, columns.last

        return sums[bottom][right] - sums[top][right] - sums[bottom][left] + sums[top][left]

    def __call__(self, first, second):
        """Returns R[first;second] for an interval pair, first before second."""
        return self.rectangle(first, second)


class GapWeightTable():
    """Answers all-gap weights W of intervals and interval pairs.

        Only bases alive in the region count: an unpaired base, or a
        pairing with both ends inside.

        Parameters:
            unpaired (list): per-position weight of unpaired bases.
            pairs (obj): the PairDeletionTable of the pairings.
    """
    def __init__(self, unpaired, pairs):
        self._prefix = np.concatenate(([0], np.cumsum(unpaired, dtype=np.int64))).tolist()
        self.pairs = pairs

    def unpaired(self, interval):
        """Returns the weight of the unpaired bases of interval."""
        if interval.is_empty:
            return 0

        return self._prefix[interval.last] - self._prefix[interval.first - 1]

    def inner(self, interval):
        """Returns the weight of the pairings inside interval."""
        return self.pairs.rectangle(interval, interval)

    def weight(self, first, second=None):
        """Returns W[first] or W[first;second]."""
        weight = self.unpaired(first) + self.inner(first)

        if second is not None:
            weight += self.unpaired(second) + self.inner(second) + self.pairs(first, second)

        return weight


def _pair_matrix(structure, weigh):
    """Returns the (n + 1) x (n + 1) matrix of pairing weights."""
    matrix = np.zeros((structure.n + 1, structure.n + 1), dtype=np.int64)

    for first, second in structure.pairings:
        matrix[first, second] = weigh(first, second)

    return matrix


def _require_type0(folded):
    if folded.structure.kind != 0:
        raise exceptions.TypeMismatch('Weight tables need a folded 0-sequence.')


def precompute_R(folded, scheme, role=DELETION):  # pylint: disable=invalid-name
    """Returns the PairDeletionTable of a folded 0-sequence for a role."""
    _require_type0(folded)

    return PairDeletionTable(_pair_matrix(
        folded.structure,
        lambda first, second: scheme.pair_indel(folded.letter(first), folded.letter(second), role),
    ))


def precompute_W(folded, scheme, role=DELETION):  # pylint: disable=invalid-name
    """Returns the GapWeightTable of a folded 0-sequence for a role."""
    _require_type0(folded)
    structure = folded.structure
    unpaired = [
        scheme.base_indel(folded.letter(position), role) if structure.is_unpaired(position) else 0
        for position in range(1, structure.n + 1)
    ]

    return GapWeightTable(unpaired, precompute_R(folded, scheme, role))


def score_alignment(alignment, scheme):
    """Returns the score of an alignment under a scheme.

        Raises:
            InvalidAlignment: a pairing has a blank at one end only, or
                a symbol is not in the scheme's alphabet.
    """
    structure = alignment.structure
    blank = alignment.blank
    top, bottom = alignment.top, alignment.bottom
    score = 0

    try:
        for position in range(1, structure.n + 1):
            if not structure.is_unpaired(position):
                continue

            upper, lower = top[position - 1], bottom[position - 1]

            if upper == blank and lower == blank:
                continue
            if upper == blank:
                score += scheme.base_ins[(lower,)]
            elif lower == blank:
                score += scheme.base_del[(upper,)]
            else:
                score += scheme.base_sub[(upper, lower)]

        for first, second in structure.sorted_pairings():
            upper = (top[first - 1], top[second - 1])
            lower = (bottom[first - 1], bottom[second - 1])

            for symbols in (upper, lower):
                if (symbols[0] == blank) != (symbols[1] == blank):
                    raise exceptions.InvalidAlignment(
                        'Pairing ({}, {}) has exactly one blank end.'.format(first, second)
                    )

            if upper[0] == blank and lower[0] == blank:
                continue
            if upper[0] == blank:
                score += scheme.pair_ins[lower]
            elif lower[0] == blank:
                score += scheme.pair_del[upper]
            else:
                score += scheme.pair_sub[upper + lower]
    except KeyError as error:
        raise exceptions.InvalidAlignment('Unknown symbol in alignment: {}.'.format(error))

    return score
