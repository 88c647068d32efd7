from .base import BaseCommand, CommandError, CommandParser, NamespacedCommand, SeedCommand  # noqa
from .main import Command, main  # noqa
