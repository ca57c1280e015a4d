"""
commands/__init__.py - Imports all command modules to register them.
"""

# Import all command modules to register them
from . import betti
from . import multibetti
from . import check
from . import info
from . import gens
from . import posets
