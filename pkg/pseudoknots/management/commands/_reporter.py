"""Text reports printed by the management commands."""
from pseudoknots import cli, core, exceptions, scoring


class Reporter():
    """Formats command output.

        Override in a project (see ``PKA_REPORTER_CLASS``) to change
        the report layout.

        Parameters:
            scheme (obj): the ScoreScheme scores are formatted with.
    """
    def __init__(self, scheme=None):
        self.scheme = scheme

    def score(self, value):
        """Returns the score line."""
        scale = self.scheme.scale if self.scheme else 1

        return 'score: {}'.format(scoring.format_score(value, scale))

    @staticmethod
    def decomposability(first, second):
        """Returns the line stating which inputs are decomposable."""
        return 'decomposable: first {}, second {}'.format(
            'yes' if first else 'no', 'yes' if second else 'no'
        )

    def guarantee(self, exact):
        """Returns the line describing how close the score is to the optimum."""
        if exact:
            return 'guarantee: exact'

        try:
            constant = scoring.approximation_constant(self.scheme)
        except exceptions.UnboundedRatio:
            return 'guarantee: upper bound only (unbounded ratio)'

        return 'guarantee: at most {} x optimum'.format(scoring.format_ratio(constant))

    def warning(self):
        """Returns the warning printed when neither input is decomposable."""
        return 'warning: neither input is decomposable; {}'.format(
            self.guarantee(False).split(': ', 1)[1]
        )

    @staticmethod
    def alignment(alignment):
        """Returns the four alignment lines."""
        return cli.serialize(alignment).rstrip('\n')

    @staticmethod
    def decomposition(structure, tree):
        """Returns the decomposability report of a structure."""
        lines = [
            'decomposable' if tree is not None else 'not decomposable',
            'nested: {}'.format('yes' if core.is_nested(structure) else 'no'),
            'crossings: {}'.format(len(core.crossing_pairs(structure))),
        ]

        if tree is not None:
            lines.append('witness: {}'.format(tree.render()))

        return '\n'.join(lines)

    @staticmethod
    def stats(stats):
        """Returns the memo statistics line."""
        return 'entries: S0 {s0_entries}, S1 {s1_entries}; splittings: {splittings}'.format(**stats)

    @staticmethod
    def bench_header():
        """Returns the header of the bench table."""
        return '{:>4} {:>10} {:>10} {:>12} {:>10}'.format('n', 'S0', 'S1', 'splittings', 'seconds')

    @staticmethod
    def bench_row(size, stats, seconds):
        """Returns one row of the bench table."""
        return '{:>4} {:>10} {:>10} {:>12} {:>10.3f}'.format(
            size, stats['s0_entries'], stats['s1_entries'], stats['splittings'], seconds
        )

    @staticmethod
    def slope(value):
        """Returns the fitted log-log slope line."""
        return 'log-log slope: {:.2f}'.format(value)
