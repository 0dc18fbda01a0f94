"""Linear codes over the chain ring GF(q)[u]/(u^e).

Exact arithmetic, standard forms, Euclidean and Hermitian duality,
closed-form counts with brute-force censuses to back them, a constructive
generator for Hermitian self-dual codes, and the cyclotomic-class
machinery for counting quasi-abelian codes in semisimple-style
decompositions of group algebras with cyclic Sylow p-subgroup.
"""
from .gf import (DEFAULT_MAX_ORDER, Field, FieldElement, canonical_modulus,
                 factor_prime_power, field_make, is_irreducible, is_prime)
from .chainring import ChainRing, ChainRingElement, chain_ring
from .codes import (EUCLIDEAN, HERMITIAN, FieldCode, LinearCode, StandardForm,
                    code_from_json, code_to_json, dumps_code,
                    field_code_from_json, field_code_to_json, field_rref,
                    inner_product, loads_code)
from .counting import (CountResult, count_esd, count_hsd, count_linear,
                       gaussian_binomial, generalized_is_validated,
                       linear_count_sum, register_generalized_validation,
                       sigma_e, sigma_h)
from .census import (Census, DEFAULT_ORACLE_BOUND, code_fingerprint,
                     enumerate_field_codes, enumerate_field_self_dual,
                     enumerate_hsd_constructive, enumerate_sd_standard_forms,
                     enumerate_self_dual, enumerate_submodules,
                     field_subspaces, hermitian_sd_extend,
                     validate_generalized_count)
from .quasiabelian import (AbelianGroup, ClassFactor, CyclotomicClass,
                           DecompositionReport, GroupAlgebraElement,
                           algebra_elements, chain_to_cyclic,
                           coset_join, coset_representatives, coset_split,
                           count_qa, count_qa_esd, count_qa_hsd,
                           cyclic_to_chain, cyclotomic_class,
                           cyclotomic_classes, decompose, divisors,
                           is_good_pair, is_oddly_good_pair,
                           multiplicative_order, subgroup_closure)

__all__ = [
    "DEFAULT_MAX_ORDER", "Field", "FieldElement", "canonical_modulus",
    "factor_prime_power", "field_make", "is_irreducible", "is_prime",
    "ChainRing", "ChainRingElement", "chain_ring",
    "EUCLIDEAN", "HERMITIAN", "FieldCode", "LinearCode", "StandardForm",
    "code_from_json", "code_to_json", "dumps_code", "field_code_from_json",
    "field_code_to_json", "field_rref", "inner_product", "loads_code",
    "CountResult", "count_esd", "count_hsd", "count_linear",
    "gaussian_binomial", "generalized_is_validated", "linear_count_sum",
    "register_generalized_validation", "sigma_e", "sigma_h",
    "Census", "DEFAULT_ORACLE_BOUND", "code_fingerprint",
    "enumerate_field_codes", "enumerate_field_self_dual",
    "enumerate_hsd_constructive", "enumerate_sd_standard_forms",
    "enumerate_self_dual", "enumerate_submodules", "field_subspaces",
    "hermitian_sd_extend", "validate_generalized_count",
    "AbelianGroup", "ClassFactor", "CyclotomicClass", "DecompositionReport",
    "GroupAlgebraElement", "algebra_elements", "chain_to_cyclic",
    "coset_join", "coset_representatives", "coset_split", "count_qa",
    "count_qa_esd", "count_qa_hsd", "cyclic_to_chain", "cyclotomic_class",
    "cyclotomic_classes", "decompose", "divisors", "is_good_pair",
    "is_oddly_good_pair", "multiplicative_order", "subgroup_closure",
]
