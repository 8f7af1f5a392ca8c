"""Application configuration file for django-pseudoknot-align."""
from django.apps import AppConfig


class PseudoknotAlignConfig(AppConfig):
    """Configuration details for django-pseudoknot-align."""
    name = 'pseudoknots'
    verbose_name = 'django-pseudoknot-align'
