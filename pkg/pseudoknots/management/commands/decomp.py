"""Django management command to test a structure for decomposability."""
from pseudoknots import generators
from pseudoknots.management.commands._base import PseudoknotCommand


class Command(PseudoknotCommand):
    """Django management command to test a structure for decomposability."""
    help = 'Prints whether a dot-bracket structure is decomposable and a witness tree.'

    def add_arguments(self, parser):
        parser.add_argument('structure', help='dot-bracket file')
        parser.add_argument('--generators', dest='generator_file', help='file of extra generators')

    def run_job(self, *args, **options):
        """Parses the structure and writes the decomposability report."""
        folded = self.load_sequence(options['structure'])
        generator_set = self.load_generators(options.get('generator_file'))

        _, tree = generators.is_decomposable(folded.structure, generator_set)

        self.stdout.write(self.get_reporter().decomposition(folded.structure, tree))
