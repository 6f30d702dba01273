"""
Module: braid_deformations.verify

Single-digraph analysis reports, exhaustive verification harnesses, their
configuration, and the command line interface (`braid_deformations.verify.cli`).
"""

from .base import *
from .config import *
from .report import *
from .harness import *
