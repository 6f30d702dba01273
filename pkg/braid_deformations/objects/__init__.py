"""
Module: braid_deformations.objects

Value objects shared by every operation module.

- Digraph, VertexOrdering, ForbiddenPattern: `braid_deformations.objects.digraph`
- SignedGraph, MultiplicityMap: `braid_deformations.objects.signed_graph`
- Hyperplane, Arrangement: `braid_deformations.objects.arrangement`
- IntPolynomial, PrimeEvaluation: `braid_deformations.objects.polynomial`
"""

from .base import *
from .digraph import *
from .signed_graph import *
from .arrangement import *
from .polynomial import *
