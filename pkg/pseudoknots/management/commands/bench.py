"""Django management command to measure the dynamic program on random inputs."""
import random
import time

import numpy as np

from pseudoknots import align, core, generators
from pseudoknots.conf import SETTINGS
from pseudoknots.management.commands._base import PseudoknotCommand


class Command(PseudoknotCommand):
    """Django management command to measure the dynamic program on random inputs."""
    help = 'Aligns random decomposable sequences of growing size and prints memo statistics.'

    def add_arguments(self, parser):
        parser.add_argument('--start', type=int, default=4, help='smallest sequence length')
        parser.add_argument('--end', type=int, default=8, help='largest sequence length')
        parser.add_argument('--seed', type=int, default=0, help='random seed')
        parser.add_argument('--scores', help='score scheme file (default: configured preset)')
        parser.add_argument('--generators', dest='generator_file', help='file of extra generators')
        parser.add_argument(
            '--strict-proper', action='store_true', help='only split into proper, non-empty intervals'
        )

    def random_sequence(self, rng, size, generator_set):
        """Returns a random decomposable folded sequence with size bases."""
        structure = generators.random_decomposition(rng, size, generator_set).evaluate()
        letters = ''.join(rng.choice(SETTINGS['alphabet'].letters) for _ in range(size))

        return core.FoldedSequence(structure, letters)

    def run_job(self, *args, **options):
        """Aligns one random pair per size and writes a table row for each."""
        scheme = self.load_scheme(options.get('scores'))
        generator_set = self.load_generators(options.get('generator_file'))
        mode = self.splitting_mode(options.get('strict_proper'))
        reporter = self.get_reporter(scheme)
        rng = random.Random(options['seed'])

        sizes = []
        timings = []

        self.stdout.write(reporter.bench_header())

        for size in range(max(1, options['start']), options['end'] + 1):
            first = self.random_sequence(rng, size, generator_set)
            second = self.random_sequence(rng, size, generator_set)

            started = time.perf_counter()
            result = align.align(first, second, scheme, generator_set, mode=mode)
            seconds = time.perf_counter() - started

            sizes.append(size)
            timings.append(seconds)
            self.stdout.write(reporter.bench_row(size, result.stats, seconds))

        if len(sizes) > 1:
            slope = np.polyfit(np.log(sizes), np.log(np.maximum(timings, 1e-9)), 1)[0]
            self.stdout.write(reporter.slope(slope))
