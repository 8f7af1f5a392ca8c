"""Django management command to compute exact scores by enumeration."""
from pseudoknots import align
from pseudoknots.conf import SETTINGS
from pseudoknots.management.commands._base import PseudoknotCommand


class Command(PseudoknotCommand):
    """Django management command to compute exact scores by enumeration."""
    help = 'Prints the exact minimum alignment score of two small folded sequences.'

    def add_arguments(self, parser):
        parser.add_argument('first', help='dot-bracket file of the first sequence')
        parser.add_argument('second', help='dot-bracket file of the second sequence')
        parser.add_argument('--scores', help='score scheme file (default: configured preset)')
        parser.add_argument(
            '--max-size', type=int, default=None, help='largest total number of bases to enumerate'
        )

    def run_job(self, *args, **options):
        """Enumerates the alignments and writes the report."""
        first = self.load_sequence(options['first'])
        second = self.load_sequence(options['second'])
        scheme = self.load_scheme(options.get('scores'))
        reporter = self.get_reporter(scheme)

        size_limit = options.get('max_size') or SETTINGS['oracle_max_size']
        score, alignment = align.brute_force_min_alignment(first, second, scheme, size_limit)

        self.stdout.write(reporter.score(score))

        if options.get('traceback'):
            self.stdout.write(reporter.alignment(alignment))
