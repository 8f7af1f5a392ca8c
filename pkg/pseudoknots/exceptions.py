"""Exceptions raised by django-pseudoknot-align."""


class PseudoknotError(Exception):
    """Base class for every error raised by the package."""


# STRUCTURE ERRORS
# -----------------------------------------------------------------------------
class StructureError(PseudoknotError, ValueError):
    """Invalid structure, sequence or composition argument."""


class IndexOutOfRange(StructureError):
    """A pairing end lies outside [1, n]."""


class NotIncreasing(StructureError):
    """A pairing (i, j) does not satisfy i < j."""


class SharedEndpoint(StructureError):
    """Two pairings share a base."""


class BadGap(StructureError):
    """The gap position is outside [0, n]."""


class BaseIsPaired(StructureError):
    """Composition along a base that belongs to a pairing."""


class WrongType(StructureError):
    """A 0-structure was given where a 1-structure is required or vice versa."""


class NotAPairing(StructureError):
    """The referenced pairing is not part of the structure."""


class ArityMismatch(StructureError):
    """Number of children differs from the number of structural elements."""


class OverlappingIntervals(StructureError):
    """Two intervals overlap or are given in the wrong order."""


class OutOfRange(StructureError):
    """An interval reaches outside the structure."""


class UnknownPairing(StructureError):
    """A pairing to remove is not part of the structure."""


class HalfBlankPairing(StructureError):
    """A pairing has a blank at one end and a letter at the other."""


class UnknownLetter(StructureError):
    """A word contains a symbol outside the alphabet."""


class TypeMismatch(StructureError):
    """An operation received folded sequences of the wrong type."""


# SCORE ERRORS
# -----------------------------------------------------------------------------
class ScoreError(PseudoknotError, ValueError):
    """Invalid score scheme."""


class NegativeScore(ScoreError):
    """A score table holds a negative value."""


class NonZeroIdentity(ScoreError):
    """Substituting a letter or pair by itself does not cost zero."""


class UnboundedRatio(ScoreError):
    """A mismatching pair substitution costs zero."""


# ALIGNMENT ERRORS
# -----------------------------------------------------------------------------
class AlignmentError(PseudoknotError):
    """Alignment could not be scored, reconstructed or enumerated."""


class InvalidAlignment(AlignmentError):
    """The alignment violates the letter/blank pairing condition."""


class MissingRecords(AlignmentError):
    """Traceback was requested for an entry without a recorded choice."""


class TooLarge(AlignmentError):
    """The inputs exceed the exhaustive enumeration limit."""

    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(
            'Inputs hold {} bases in total, the limit is {}.'.format(size, limit)
        )


# FORMAT ERRORS
# -----------------------------------------------------------------------------
class FormatError(PseudoknotError, ValueError):
    """A text document could not be parsed.

        Parameters:
            message (str): description of the problem.
            line (int): 1-based line of the problem (optional).
            column (int): 1-based column of the problem (optional).
    """
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self):
        if self.line is None:
            return self.message

        if self.column is None:
            return 'line {}: {}'.format(self.line, self.message)

        return 'line {}, column {}: {}'.format(self.line, self.column, self.message)


class Unbalanced(FormatError):
    """Brackets of one layer do not match up."""


class LengthMismatch(FormatError):
    """Sequence and structure lines differ in length."""


class UnknownSymbol(FormatError):
    """A structure line holds a symbol outside the bracket alphabet."""


class BadGeneratorLine(FormatError):
    """A generator definition line is malformed."""


class BadScoreLine(FormatError):
    """A score scheme line is malformed."""
