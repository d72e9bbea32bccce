"""Exact decision procedures for Mathieu subspaces of finite-dimensional algebras."""

from .algebra import Algebra, Element, PowerCycle, make_algebra, multiply, power_cycle
from .builtins import builtin_algebra
from .decider import (Budget, MathieuVerdict, Method, classify_cyclic, enumerate_idempotents, is_local,
                      is_mathieu, is_quasi_stable, is_strong_mathieu, lemma_36_chain, sandwich_check)
from .errors import MathieuError
from .homs import AlgebraHom, hom_image, hom_preimage_subspace, make_hom, quotient_algebra
from .radical import (classify_element, cointegral_certificate, idempotent_predicates, is_in_radical,
                      tail_span, verify_lemma_lm31)
from .rings import RingSpec, Scalar
from .subspace import MathieuVariant, Subspace, largest_theta_ideal, span, theta_ideal

__all__ = [
    "Algebra", "AlgebraHom", "Budget", "Element", "MathieuError", "MathieuVariant", "MathieuVerdict",
    "Method", "PowerCycle", "RingSpec", "Scalar", "Subspace", "builtin_algebra", "classify_cyclic",
    "classify_element", "cointegral_certificate", "enumerate_idempotents", "hom_image",
    "hom_preimage_subspace", "idempotent_predicates", "is_in_radical", "is_local", "is_mathieu",
    "is_quasi_stable", "is_strong_mathieu", "largest_theta_ideal", "lemma_36_chain", "make_algebra",
    "make_hom", "multiply", "power_cycle", "quotient_algebra", "sandwich_check", "span", "tail_span",
    "theta_ideal", "verify_lemma_lm31",
]
