"""Exact Homfly-skein model of the type-A Hecke algebra.

Young-diagram quasi-idempotents, braid-closure invariants and the
hook-content formulas for alpha_lambda and sl(N) quantum dimensions.
"""
from .braid import BraidWord, Permutation, parse_braid_word
from .hecke import (
    HeckeElement,
    a_n,
    b_n,
    backend,
    closure_eval,
    e_lambda,
    homfly_of_braid,
    mul,
    normalized_homfly,
    partial_closure,
)
from .qdim import EvaluationContext, alpha, classical_dim, qdim
from .ring import LaurentPoly, RatFunc, qfact, qint
from .young import YoungDiagram, parse_partition

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "EvaluationContext",
    "HeckeElement",
    "LaurentPoly",
    "Permutation",
    "RatFunc",
    "YoungDiagram",
    "a_n",
    "alpha",
    "b_n",
    "backend",
    "classical_dim",
    "closure_eval",
    "e_lambda",
    "homfly_of_braid",
    "mul",
    "normalized_homfly",
    "parse_braid_word",
    "parse_partition",
    "partial_closure",
    "qdim",
    "qfact",
    "qint",
]
