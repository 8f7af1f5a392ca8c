"""Dot-bracket documents and the ``pseudoknot-align`` command line.

    A document holds an optional ``>`` name line, a sequence line and a
    structure line of equal length. The structure uses ``.`` for unpaired
    bases and one bracket layer per set of mutually non-crossing pairings:
    ``()``, ``[]``, ``{}``, ``<>``, then ``Aa`` to ``Zz``. ``&`` marks the gap
    of a 1-sequence at the same column on both lines.
"""
from string import ascii_lowercase, ascii_uppercase
import sys

from pseudoknots import core, exceptions


LAYERS = [('(', ')'), ('[', ']'), ('{', '}'), ('<', '>')] + list(
    zip(ascii_uppercase, ascii_lowercase)
)
OPENERS = {opener: layer for layer, (opener, _) in enumerate(LAYERS)}
CLOSERS = {closer: layer for layer, (_, closer) in enumerate(LAYERS)}

UNPAIRED = '.'
GAP = '&'
BLANK = '-'
COMMENT_PREFIXES = ('>', '#')

SUBCOMMANDS = ('align', 'decomp', 'oracle', 'bench')


def _content_lines(text):
    """Returns (line number, line) for the lines that are not names or comments."""
    return [
        (number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith(COMMENT_PREFIXES)
    ]


def parse_structure_line(line, number=None):
    """Parses a structure line into (base count, pairings, gap).

        Raises:
            Unbalanced: a bracket has no partner.
            UnknownSymbol: the line holds an unexpected symbol.
    """
    stacks = [[] for _ in LAYERS]
    pairings = []
    gap = None
    position = 0

    for column, symbol in enumerate(line, start=1):
        if symbol == GAP:
            if gap is not None:
                raise exceptions.UnknownSymbol('Second gap marker.', line=number, column=column)
            gap = position
            continue

        position += 1

        if symbol == UNPAIRED:
            continue

        if symbol in OPENERS:
            stacks[OPENERS[symbol]].append((position, column))
        elif symbol in CLOSERS:
            stack = stacks[CLOSERS[symbol]]
            if not stack:
                raise exceptions.Unbalanced(
                    'Closing {!r} without opening bracket.'.format(symbol), line=number, column=column
                )
            pairings.append((stack.pop()[0], position))
        else:
            raise exceptions.UnknownSymbol(
                'Unknown structure symbol {!r}.'.format(symbol), line=number, column=column
            )

    for layer, stack in enumerate(stacks):
        if stack:
            raise exceptions.Unbalanced(
                'Opening {!r} is never closed.'.format(LAYERS[layer][0]),
                line=number, column=stack[-1][1],
            )

    return position, pairings, gap


def parse_dotbracket(text):
    """Parses a dot-bracket document into a FoldedSequence.

        Raises:
            FormatError: the document does not hold two lines.
            LengthMismatch: sequence and structure differ in length or
                put the gap at different columns.
            Unbalanced: a bracket has no partner.
            UnknownSymbol: an unexpected symbol.
    """
    lines = _content_lines(text)

    if len(lines) != 2:
        raise exceptions.FormatError(
            'Expected a sequence line and a structure line, found {} line(s).'.format(len(lines))
        )

    (sequence_number, sequence), (structure_number, structure_line) = lines

    if len(sequence) != len(structure_line):
        raise exceptions.LengthMismatch(
            'Structure has {} symbols, the sequence {}.'.format(len(structure_line), len(sequence)),
            line=structure_number,
        )

    if sequence.find(GAP) != structure_line.find(GAP) or sequence.count(GAP) > 1:
        raise exceptions.LengthMismatch(
            'Gap markers of sequence and structure are not in the same column.',
            line=sequence_number, column=(sequence.find(GAP) + 1) or None,
        )

    for column, symbol in enumerate(sequence, start=1):
        if symbol != GAP and not symbol.isalpha():
            raise exceptions.UnknownSymbol(
                'Unknown sequence symbol {!r}.'.format(symbol), line=sequence_number, column=column
            )

    count, pairings, gap = parse_structure_line(structure_line, structure_number)

    return core.FoldedSequence(core.Structure(count, pairings, gap), sequence.replace(GAP, ''))


def assign_layers(structure):
    """Assigns each pairing the first layer in which it crosses nothing.

        Returns:
            dict: pairing to layer index.

        Raises:
            FormatError: more crossing layers are needed than exist.
    """
    layers = [[] for _ in LAYERS]
    assignment = {}

    for pairing in structure.sorted_pairings():
        for layer, members in enumerate(layers):
            if all(core.classify_pair_relation(pairing, other) != core.CROSSED for other in members):
                members.append(pairing)
                assignment[pairing] = layer
                break
        else:
            raise exceptions.FormatError('Structure needs more than {} bracket layers.'.format(len(LAYERS)))

    return assignment


def structure_line(structure):
    """Returns the canonical structure line of a Structure."""
    symbols = [UNPAIRED] * structure.n

    for (first, second), layer in assign_layers(structure).items():
        symbols[first - 1], symbols[second - 1] = LAYERS[layer]

    if structure.gap is not None:
        symbols.insert(structure.gap, GAP)

    return ''.join(symbols)


def _with_gap(word, structure):
    if structure.gap is None:
        return word

    return word[:structure.gap] + GAP + word[structure.gap:]


def _markers(top, bottom, blank):
    markers = []

    for upper, lower in zip(top, bottom):
        if blank in (upper, lower):
            markers.append(' ')
        elif upper == lower:
            markers.append('|')
        else:
            markers.append(':')

    return ''.join(markers)


def serialize(value):
    """Renders a FoldedSequence or an Alignment as text.

        A folded sequence renders as its sequence and structure lines;
        an alignment as four lines: structure, first row, match markers
        (``|`` same letter, ``:`` substitution) and second row, with
        ``-`` for blanks.
    """
    structure = value.structure

    if isinstance(value, core.Alignment):
        top = value.top.replace(value.blank, BLANK)
        bottom = value.bottom.replace(value.blank, BLANK)
        lines = [
            structure_line(structure),
            _with_gap(top, structure),
            _with_gap(_markers(top, bottom, BLANK), structure),
            _with_gap(bottom, structure),
        ]
    else:
        lines = [_with_gap(value.letters, structure), structure_line(structure)]

    return '\n'.join(lines) + '\n'


def ensure_settings():
    """Configures a minimal Django project when running outside of one."""
    import django  # pylint: disable=import-outside-toplevel
    from django.conf import settings  # pylint: disable=import-outside-toplevel

    if not settings.configured:
        settings.configure(INSTALLED_APPS=['pseudoknots'])
        django.setup()


def run(argv=None, stdout=None, stderr=None):
    """Runs a subcommand and returns its exit code.

        Parameters:
            argv (list): subcommand and arguments, ``sys.argv[1:]`` by
                default.
            stdout (obj): stream for the report.
            stderr (obj): stream for warnings and errors.

        Returns:
            int: 0 on success, 1 on parse or validation errors, 2 when
                an input is too large for the oracle.
    """
    from django.core.management import call_command  # pylint: disable=import-outside-toplevel
    from django.core.management.base import CommandError  # pylint: disable=import-outside-toplevel

    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write('usage: pseudoknot-align {{{}}} ...\n'.format(','.join(SUBCOMMANDS)))
        return 1

    ensure_settings()

    try:
        call_command(*argv, stdout=stdout, stderr=stderr)
    except CommandError as error:
        stderr.write('error: {}\n'.format(error))
        return getattr(error, 'returncode', 1)

    return 0


def main():
    """Console script entry point."""
    sys.exit(run())
