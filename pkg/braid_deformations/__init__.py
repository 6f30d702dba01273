"""
Deformations of the braid arrangement indexed by digraphs.

- objects: immutable value types (digraphs, signed graphs, hyperplanes, polynomials)
- digraph, signed_graph: the combinatorial conditions and numbering searches
- arrangement: construction, coning and localization of deformations
- charpoly: characteristic polynomials by finite-field point counting
- formats: text and JSON forms
- verify: analysis reports, verification harnesses and the CLI
"""

from .errors import *
from .objects import *
from .digraph import *
from .signed_graph import *
from .arrangement import *
from .charpoly import *
from .formats import *
