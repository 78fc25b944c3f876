"""Primitive-element machinery for prime fields: exact characteristic
functions, multiplicative character sums with Weil-bound checks, the
correlation algebra on F_p, and an exhaustive additive-decomposition search
with integer certificates."""

from .arith import (Factored, divisor_count, divisors, factorize, moebius,
                    squarefree_divisor_count, totient, totient_lower_bound)
from .characters import (CharacterSpec, WeilResult, characters_of_order,
                         principal_character, quadratic_character_spec,
                         sum_a, sum_b, sum_c, weil_check)
from .correlation import (FpFunction, IdentityCheck, QuadrupleBound,
                          check_inner_identity, check_quadruple_bound,
                          check_shkredov_identity, circ, correlation,
                          correlation_tensor, inner, norm2,
                          quadruple_bound_sweep)
from .decomp import (BoundReport, Decomposition, HCertificate, RCertificate,
                     SearchEntry, bound_report, certificate_document,
                     greedy_cover_a, h_certificate, maximal_a, normalize,
                     r_certificate, search, sumset, verify)
from .field import (PrimeField, PrimitiveSet, build_field,
                    characteristic_profile, characteristic_tolerance,
                    characteristic_via_characters, is_primitive,
                    primitive_set, quadratic_character)
from .poly import PolynomialOverFp
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "Factored", "factorize", "moebius", "totient", "divisor_count",
    "divisors", "squarefree_divisor_count", "totient_lower_bound",
    "PrimeField", "PrimitiveSet", "build_field", "primitive_set",
    "is_primitive", "quadratic_character", "characteristic_via_characters",
    "characteristic_profile", "characteristic_tolerance",
    "CharacterSpec", "characters_of_order", "principal_character",
    "quadratic_character_spec", "sum_a", "sum_b", "sum_c", "weil_check",
    "WeilResult", "PolynomialOverFp",
    "FpFunction", "circ", "correlation", "correlation_tensor", "inner",
    "norm2", "check_shkredov_identity", "check_inner_identity",
    "check_quadruple_bound", "quadruple_bound_sweep", "IdentityCheck",
    "QuadrupleBound",
    "Decomposition", "sumset", "verify", "normalize", "maximal_a", "search",
    "SearchEntry", "greedy_cover_a", "h_certificate", "r_certificate",
    "HCertificate", "RCertificate", "bound_report", "BoundReport",
    "certificate_document",
    "SplitMix64",
    "__version__",
]
