"""
Pietsch Control Measures

Construction and sampled verification of explicit control measures for
derivations.
"""

from .certificate import (
    COMBINE_FACTOR,
    COMPONENT_TAGS,
    CertificateComponent,
    PietschCertificate,
    VerificationReport,
    alpha_term_ratio,
    build_certificate,
    closed_form_mass,
    combining_inequality_check,
    per_term_dominations,
    square_term_ratio,
    verify_certificate,
)

__all__ = [
    "COMBINE_FACTOR",
    "COMPONENT_TAGS",
    "CertificateComponent",
    "PietschCertificate",
    "VerificationReport",
    "alpha_term_ratio",
    "build_certificate",
    "closed_form_mass",
    "combining_inequality_check",
    "per_term_dominations",
    "square_term_ratio",
    "verify_certificate",
]
