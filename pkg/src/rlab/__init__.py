"""
Combinatorics and commutative algebra of projections of Richardson varieties:
Coxeter groups, parabolic quotients, P-Bruhat order, projected order
complexes and their shellings, Groebner degenerations of projected
Richardson ideals in type A Grassmannians, and finite-field point oracles.
"""

from .coxeter import CoxeterSystem, Element, make_system
from .parabolic import ParabolicQuotient
from .pbruhat import QClass, QPoset, class_rep, find_model, p_leq, q_poset
from .reforder import ReflectionOrder, build_reflection_order, increasing_chain
from .simpcomplex import SimplicialComplex, projected_complex, shelling_order

__all__ = [
    "CoxeterSystem",
    "Element",
    "make_system",
    "ParabolicQuotient",
    "QClass",
    "QPoset",
    "class_rep",
    "find_model",
    "p_leq",
    "q_poset",
    "ReflectionOrder",
    "build_reflection_order",
    "increasing_chain",
    "SimplicialComplex",
    "projected_complex",
    "shelling_order",
]

__version__ = "0.1.0"
