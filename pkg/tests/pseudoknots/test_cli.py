"""Tests for the cli module."""
from io import StringIO
from pathlib import Path

import pytest

from pseudoknots import cli, core, exceptions, generators

from tests.factories import folded


DATA = Path(__file__).resolve().parent.parent / 'data'


def write(directory, name, text):
    """Writes a file and returns its path as a string."""
    path = directory / name
    path.write_text(text, encoding='utf-8')

    return str(path)


# DOT-BRACKET DOCUMENTS
# -----------------------------------------------------------------------------
def test__parse_dotbracket__nested():
    """Tests a nested stem."""
    result = cli.parse_dotbracket('GGAACC\n((..))\n')

    assert result == folded(6, [(1, 6), (2, 5)], 'GGAACC')


def test__parse_dotbracket__crossing_layers():
    """Tests two bracket layers forming a pseudoknot."""
    result = cli.parse_dotbracket('> knot\nACGU\n([)]\n')

    assert result == folded(4, [(1, 3), (2, 4)], 'ACGU')


def test__parse_dotbracket__gap():
    """Tests a 1-sequence with its gap marker."""
    result = cli.parse_dotbracket('GC&GC\n((&))\n')

    assert result.structure == core.make_structure(4, [(1, 4), (2, 3)], 2)
    assert result.word == ('GC', 'GC')


def test__parse_dotbracket__letter_layers():
    """Tests the upper and lower case layers."""
    result = cli.parse_dotbracket('GGCC\nABba\n')

    assert result.structure == core.make_structure(4, [(1, 4), (2, 3)])


def test__parse_dotbracket__unbalanced():
    """Tests that an unclosed bracket reports its position."""
    try:
        cli.parse_dotbracket('GGAC\n((.)\n')
    except exceptions.Unbalanced as error:
        assert error.line == 2
        assert error.column == 1
    else:
        assert False


def test__parse_dotbracket__unexpected_closer():
    """Tests that a closing bracket without opener is reported."""
    with pytest.raises(exceptions.Unbalanced):
        cli.parse_dotbracket('GAC\n.)(\n')


def test__parse_dotbracket__length_mismatch():
    """Tests that both lines need the same length."""
    with pytest.raises(exceptions.LengthMismatch):
        cli.parse_dotbracket('GGAC\n(..)..\n')


def test__parse_dotbracket__unknown_symbol():
    """Tests that unknown structure symbols report their column."""
    try:
        cli.parse_dotbracket('GGAC\n(.|)\n')
    except exceptions.UnknownSymbol as error:
        assert str(error) == "line 2, column 3: Unknown structure symbol '|'."
    else:
        assert False


def test__parse_dotbracket__missing_line():
    """Tests that a document needs two content lines."""
    with pytest.raises(exceptions.FormatError):
        cli.parse_dotbracket('> only a name\nGGAC\n')


def test__serialize__folded_sequence():
    """Tests that parse and serialize agree on a three layer knot."""
    text = 'GCAAGCAC\n([.{)].}\n'

    assert cli.serialize(cli.parse_dotbracket(text)) == text


def test__serialize__gap():
    """Tests that the gap marker is written back."""
    assert cli.serialize(cli.parse_dotbracket('GC&GC\n([&)]\n')) == 'GC&GC\n([&)]\n'


def test__serialize__alignment():
    """Tests the four lines of the hairpin alignment."""
    alignment = core.Alignment(core.make_structure(4, [(1, 4)]), 'G◦◦C', 'GAAC')

    assert cli.serialize(alignment) == '(..)\nG--C\n|  |\nGAAC\n'


def test__serialize__substitution_marker():
    """Tests the marker of a substituted letter."""
    alignment = core.Alignment(core.make_structure(2), 'AC', 'AG')

    assert cli.serialize(alignment).splitlines()[2] == '|:'


def test__assign_layers__five_pairing_knot():
    """Tests that the five pairing knot needs four layers."""
    structure = cli.parse_dotbracket((DATA / 'five_pairing_knot.fold').read_text()).structure

    assert max(cli.assign_layers(structure).values()) == 3
    assert cli.structure_line(structure) == '([{)(<])}>'


# CORPUS
# -----------------------------------------------------------------------------
@pytest.mark.parametrize('path', sorted((DATA / 'corpus').glob('*.fold')), ids=lambda path: path.stem)
def test__corpus__decomposable(path):
    """Tests that every transcribed pseudoknot is decomposable and re-composes exactly."""
    structure = cli.parse_dotbracket(path.read_text(encoding='utf-8')).structure

    assert not core.is_nested(structure)

    decomposable, tree = generators.is_decomposable(structure)

    assert decomposable
    assert tree.evaluate() == structure


def test__corpus__size():
    """Tests that the corpus holds at least five pseudoknots."""
    assert len(list((DATA / 'corpus').glob('*.fold'))) >= 5


# RUN
# -----------------------------------------------------------------------------
def test__run__align_identical_files(tmp_path):
    """Tests that identical files score zero."""
    path = write(tmp_path, 'a.fold', 'ACGU\n([)]\n')
    stdout = StringIO()

    code = cli.run(['align', path, path], stdout=stdout, stderr=StringIO())

    assert code == 0
    assert 'score: 0' in stdout.getvalue()
    assert 'guarantee: exact' in stdout.getvalue()


def test__run__align_traceback(tmp_path):
    """Tests that the traced alignment is printed."""
    first = write(tmp_path, 'a.fold', 'GC\n()\n')
    second = write(tmp_path, 'b.fold', 'GAAC\n(..)\n')
    stdout = StringIO()

    code = cli.run(['align', first, second, '--traceback'], stdout=stdout, stderr=StringIO())

    assert code == 0
    assert stdout.getvalue().splitlines()[-4:] == ['(..)', 'G--C', '|  |', 'GAAC']


def test__run__decomp_five_pairing_knot():
    """Tests the decomposability report of the five pairing knot."""
    stdout = StringIO()

    code = cli.run(['decomp', str(DATA / 'five_pairing_knot.fold')], stdout=stdout, stderr=StringIO())

    assert code == 0
    assert stdout.getvalue().splitlines()[0] == 'not decomposable'


def test__run__oracle_hairpins(tmp_path):
    """Tests the oracle on the hairpin pair."""
    first = write(tmp_path, 'a.fold', 'GC\n()\n')
    second = write(tmp_path, 'b.fold', 'GAAC\n(..)\n')
    stdout = StringIO()

    code = cli.run(['oracle', first, second], stdout=stdout, stderr=StringIO())

    assert code == 0
    assert stdout.getvalue().strip() == 'score: 2'


def test__run__oracle_too_large(tmp_path):
    """Tests that oversized oracle inputs exit with 2."""
    path = write(tmp_path, 'a.fold', 'GGAAGCAACCAAGC\n((..[[..))..]]\n')
    stderr = StringIO()

    code = cli.run(['oracle', path, path], stdout=StringIO(), stderr=stderr)

    assert code == 2
    assert 'limit is 16' in stderr.getvalue()


def test__run__parse_error(tmp_path):
    """Tests that malformed documents exit with 1."""
    path = write(tmp_path, 'a.fold', 'GGAC\n((.)\n')
    stderr = StringIO()

    code = cli.run(['align', path, path], stdout=StringIO(), stderr=stderr)

    assert code == 1
    assert 'line 2, column 1' in stderr.getvalue()


def test__run__missing_file(tmp_path):
    """Tests that unreadable files exit with 1."""
    stderr = StringIO()

    code = cli.run(['decomp', str(tmp_path / 'missing.fold')], stdout=StringIO(), stderr=stderr)

    assert code == 1
    assert stderr.getvalue().startswith('error: ')


def test__run__unknown_subcommand():
    """Tests that an unknown subcommand prints the usage."""
    stderr = StringIO()

    assert cli.run(['migrate'], stdout=StringIO(), stderr=stderr) == 1
    assert stderr.getvalue().startswith('usage: pseudoknot-align')
