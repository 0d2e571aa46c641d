"""Branch-divisor enumeration, non-existence certificates, index coincidences."""

from .certificates import (ALIASES, CASES, CertificateError, NonexistenceCertificate,
                           OPEN_CASES, builtin_certificate, builtin_certificates,
                           resolve_case, wedge_obstruction, z_order)
from .shapes import (ConstraintVerdict, admissible_shapes, certificate_witnesses,
                     degree_report, partitions)
from .index import (PATTERN_OUTCOMES, IndexConditionError, brute_force, classify_pair,
                    gap_sets, index_condition)

__all__ = [
    "ALIASES", "CASES", "CertificateError", "NonexistenceCertificate", "OPEN_CASES",
    "builtin_certificate", "builtin_certificates", "resolve_case", "wedge_obstruction",
    "z_order", "ConstraintVerdict", "admissible_shapes", "certificate_witnesses",
    "degree_report", "partitions", "PATTERN_OUTCOMES", "IndexConditionError",
    "brute_force", "classify_pair", "gap_sets", "index_condition",
]
