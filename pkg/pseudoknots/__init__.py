# pylint: disable=missing-docstring, invalid-name
import sys
import re
import warnings

__version__ = '0.1.0'

# Provide DeprecationWarning for the oldest supported Python version
if re.match(r'^3\.10\.', sys.version):
    warnings.warn(
        (
            'django-pseudoknot-align will stop supporting Python 3.10 '
            'once it reaches end-of-life (approximately October 2026). '
            'Ensure you have updated your Python version by then.'
        ),
        DeprecationWarning
    )

# Django configuration details
default_app_config = 'pseudoknots.apps.PseudoknotAlignConfig'
