"""Functions for general package configuration."""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from pseudoknots.align import DEFAULT_ORACLE_LIMIT
from pseudoknots.core import Alphabet
from pseudoknots.generators import SPLITTING_MODES
from pseudoknots.scoring import PRESETS


def string_to_module_and_class(string):
    """Breaks a string to a module and class name component."""
    components = string.split('.')
    component_class = components.pop()
    component_module = '.'.join(components)

    return {
        'module': component_module,
        'class': component_class,
    }


def validate_alphabet(letters):
    """Validates the provided alphabet setting.

        Parameters:
            letters (str): the letters of folded sequences.

        Raises:
            ImproperlyConfigured: letters empty, repeated or not letters.
            TypeError: invalid parameter type provided.
    """
    if not isinstance(letters, str):
        raise TypeError(
            'Invalid PKA_ALPHABET type: {}. Must be str.'.format(type(letters))
        )

    if not letters.isalpha() or len(set(letters)) != len(letters):
        raise ImproperlyConfigured(
            '{} is not a supported PKA_ALPHABET value.'.format(letters)
        )


def validate_choice(name, value, choices):
    """Validates that a setting holds one of the allowed choices.

        Raises:
            ImproperlyConfigured: value is not one of choices.
    """
    if value not in choices:
        raise ImproperlyConfigured(
            '{} is not a supported {} value. Choose from: {}.'.format(
                value, name, ', '.join(sorted(choices))
            )
        )


def validate_oracle_max_size(size):
    """Validates the oracle size limit.

        Raises:
            ImproperlyConfigured: size is not positive.
            TypeError: size is not an int.
    """
    if isinstance(size, bool) or not isinstance(size, int):
        raise TypeError(
            'Invalid PKA_ORACLE_MAX_SIZE type: {}. Must be int.'.format(type(size))
        )

    if size < 1:
        raise ImproperlyConfigured('PKA_ORACLE_MAX_SIZE must be at least 1.')


def compile_settings():
    """Compiles and validates all package settings and defaults.

        Provides basic checks to ensure settings are valid and applies
        defaults for all missing settings.

        Returns:
            dict: All possible django-pseudoknot-align settings.
    """
    # ALPHABET SETTINGS
    # -------------------------------------------------------------------------
    letters = getattr(settings, 'PKA_ALPHABET', 'ACGU')
    validate_alphabet(letters)

    # ALIGNMENT SETTINGS
    # -------------------------------------------------------------------------
    score_preset = getattr(settings, 'PKA_SCORE_PRESET', 'unit')
    validate_choice('PKA_SCORE_PRESET', score_preset, PRESETS)

    splitting_mode = getattr(settings, 'PKA_SPLITTING_MODE', 'relaxed')
    validate_choice('PKA_SPLITTING_MODE', splitting_mode, SPLITTING_MODES)

    oracle_max_size = getattr(settings, 'PKA_ORACLE_MAX_SIZE', DEFAULT_ORACLE_LIMIT)
    validate_oracle_max_size(oracle_max_size)

    generator_file = getattr(settings, 'PKA_GENERATOR_FILE', None)
    if generator_file is not None and not isinstance(generator_file, str):
        raise TypeError(
            'Invalid PKA_GENERATOR_FILE type: {}. Must be str or None.'.format(type(generator_file))
        )

    # MANAGEMENT COMMANDS SETTINGS
    # ------------------------------------------------------------------------
    # Get module and class for the report formatting class
    reporter_object = getattr(
        settings,
        'PKA_REPORTER_CLASS',
        'pseudoknots.management.commands._reporter.Reporter',
    )
    reporter = string_to_module_and_class(reporter_object)

    return {
        'alphabet': Alphabet(letters),
        'score_preset': score_preset,
        'splitting_mode': splitting_mode,
        'oracle_max_size': oracle_max_size,
        'generator_file': generator_file,
        'reporter': reporter,
    }


SETTINGS = compile_settings()
