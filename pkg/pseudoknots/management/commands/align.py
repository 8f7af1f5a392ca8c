"""Django management command to align two dot-bracket files."""
import logging

from pseudoknots import align, generators
from pseudoknots.management.commands._base import PseudoknotCommand


logger = logging.getLogger(__name__)


class Command(PseudoknotCommand):
    """Django management command to align two dot-bracket files."""
    help = 'Prints the minimum structural alignment score of two folded sequences.'

    def add_arguments(self, parser):
        parser.add_argument('first', help='dot-bracket file of the first sequence')
        parser.add_argument('second', help='dot-bracket file of the second sequence')
        parser.add_argument('--scores', help='score scheme file (default: configured preset)')
        parser.add_argument(
            '--strict-proper', action='store_true', help='only split into proper, non-empty intervals'
        )
        parser.add_argument('--generators', dest='generator_file', help='file of extra generators')

    def run_job(self, *args, **options):
        """Aligns the two files and writes the report."""
        first = self.load_sequence(options['first'])
        second = self.load_sequence(options['second'])
        scheme = self.load_scheme(options.get('scores'))
        generator_set = self.load_generators(options.get('generator_file'))
        reporter = self.get_reporter(scheme)

        decomposable = [
            generators.is_decomposable(folded.structure, generator_set)[0] for folded in (first, second)
        ]

        if not any(decomposable):
            logger.warning('Neither %s nor %s is decomposable', options['first'], options['second'])
            self.stderr.write(reporter.warning())

        result = align.align(
            first, second, scheme, generator_set,
            mode=self.splitting_mode(options.get('strict_proper')),
            trace=options.get('traceback'),
        )

        self.stdout.write(reporter.score(result.score))
        self.stdout.write(reporter.decomposability(*decomposable))
        self.stdout.write(reporter.guarantee(any(decomposable)))

        if result.alignment is not None:
            self.stdout.write(reporter.alignment(result.alignment))
