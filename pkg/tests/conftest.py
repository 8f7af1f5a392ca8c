"""Configuration file for pytest."""
import django
from django.conf import settings

import pytest


def pytest_addoption(parser):
    """Adds the option enabling the slow sweeps."""
    parser.addoption('--runslow', action='store_true', default=False, help='run slow tests')


def pytest_configure(config):
    """Setups initial testing configuration."""
    config.addinivalue_line('markers', 'slow: exhaustive sweeps that take minutes')

    # Setup the bare minimum Django settings
    django_settings = {
        'INSTALLED_APPS': [
            'pseudoknots',
        ],
    }

    settings.configure(**django_settings)

    # Initiate Django
    django.setup()


def pytest_collection_modifyitems(config, items):
    """Skips slow tests unless --runslow is given."""
    if config.getoption('--runslow'):
        return

    skip_slow = pytest.mark.skip(reason='needs --runslow')

    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def unit_scheme():
    """Fixture returning the unit score preset over ACGU."""
    from pseudoknots import scoring  # pylint: disable=import-outside-toplevel

    return scoring.preset_scheme('unit')


@pytest.fixture
def generator_set():
    """Fixture returning the built-in generators."""
    from pseudoknots import generators  # pylint: disable=import-outside-toplevel

    return generators.builtin_generator_set()
