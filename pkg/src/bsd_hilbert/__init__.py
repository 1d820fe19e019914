"""Generalized Hilbert metric on the classical bounded symmetric domains."""

from .config import TOL, Tolerances
from .domains import (TypeI, TypeII, TypeIII, TypeIV, contains, membership_violation, on_shilov,
                      parse_domain, sample_interior, sample_shilov, shilov_basepoints,
                      sigma_matrix, z0)
from .embeddings import cross_ratio, log_abs_cross_ratio, pairing
from .group_actions import (Moebius, NormalForm, PseudoOrtho, act, compose, identity,
                            normalize_pair, normalize_to_origin, random_automorphism,
                            stabilizer_element)
from .metrics import (MetricReport, bergman_norm, caratheodory_norm, disc_distance,
                      distance_from_normal_form, finsler_norm, hilbert_distance, metric_report)
from .numerics import svd
from .oracle import (OracleResult, VerificationReport, oracle_distance, value_at,
                     verify_invariance, verify_oracle_agreement, verify_semimetric)

__all__ = [
    "TOL", "Tolerances",
    "TypeI", "TypeII", "TypeIII", "TypeIV", "parse_domain", "contains", "membership_violation",
    "on_shilov", "sample_interior", "sample_shilov", "shilov_basepoints", "sigma_matrix", "z0",
    "pairing", "cross_ratio", "log_abs_cross_ratio",
    "Moebius", "PseudoOrtho", "NormalForm", "act", "compose", "identity",
    "normalize_pair", "normalize_to_origin", "random_automorphism", "stabilizer_element",
    "MetricReport", "disc_distance", "distance_from_normal_form", "hilbert_distance",
    "finsler_norm", "caratheodory_norm", "bergman_norm", "metric_report",
    "svd",
    "OracleResult", "VerificationReport", "oracle_distance", "value_at",
    "verify_semimetric", "verify_invariance", "verify_oracle_agreement",
]
