from .base import BaseApp, entry_point, run
