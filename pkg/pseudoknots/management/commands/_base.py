"""Shared plumbing of the pseudoknot management commands."""
import importlib

from django.core.management.base import BaseCommand, CommandError

from pseudoknots import cli, exceptions, generators, scoring
from pseudoknots.conf import SETTINGS


class PseudoknotCommand(BaseCommand):
    """Base command turning package errors into exit codes.

        Subclasses implement ``run_job``. Parse and validation errors
        exit with 1, inputs too large for the oracle with 2.
    """

    def handle(self, *args, **options):
        """Runs the job and maps package errors to CommandError."""
        try:
            self.run_job(*args, **options)
        except exceptions.TooLarge as error:
            raise CommandError(str(error), returncode=2)
        except exceptions.PseudoknotError as error:
            raise CommandError(str(error), returncode=1)

    def run_job(self, *args, **options):
        """Performs the command's work."""
        raise NotImplementedError('Subclasses must implement run_job().')

    def get_reporter(self, scheme=None):
        """Returns an instance of the configured Reporter class."""
        Reporter = getattr(  # pylint: disable=invalid-name
            importlib.import_module(SETTINGS['reporter']['module']),
            SETTINGS['reporter']['class']
        )

        return Reporter(scheme)

    @staticmethod
    def read(path):
        """Returns the text of a file, failing with exit code 1."""
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                return handle.read()
        except OSError as error:
            raise CommandError('{}: {}'.format(path, error.strerror or error), returncode=1)

    def load_sequence(self, path):
        """Parses a dot-bracket file into a folded sequence."""
        try:
            return cli.parse_dotbracket(self.read(path))
        except exceptions.PseudoknotError as error:
            raise CommandError('{}: {}'.format(path, error), returncode=1)

    def load_scheme(self, path=None):
        """Returns the scheme of a score file, the configured preset without one."""
        alphabet = SETTINGS['alphabet']

        if path is None:
            return scoring.preset_scheme(SETTINGS['score_preset'], alphabet)

        try:
            return scoring.parse_scheme(self.read(path), alphabet, name=path)
        except exceptions.PseudoknotError as error:
            raise CommandError('{}: {}'.format(path, error), returncode=1)

    def load_generators(self, path=None):
        """Returns the built-in generators extended by the configured and given files."""
        generator_set = generators.builtin_generator_set()

        for source in (SETTINGS['generator_file'], path):
            if source is None:
                continue
            try:
                generator_set = generators.load_generator_set(self.read(source), generator_set)
            except exceptions.PseudoknotError as error:
                raise CommandError('{}: {}'.format(source, error), returncode=1)

        return generator_set

    @staticmethod
    def splitting_mode(strict_proper):
        """Returns the splitting mode for the --strict-proper flag."""
        return generators.STRICT_PROPER if strict_proper else SETTINGS['splitting_mode']
