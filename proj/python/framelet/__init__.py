# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The framelet Authors
"""Directional tight framelet filter banks: construction, exact checks, transforms."""

from ._core import (
    Bank,
    FrameletError,
    analyze,
    boxspline_bank,
    boxspline_fourier,
    boxspline_mask,
    cascade_phi,
    haar_bank,
    preimage_vertices,
    roundtrip_defects,
    sample_psi,
    synthesize,
    validate_matrix,
)

__all__ = [
    "Bank",
    "FrameletError",
    "analyze",
    "boxspline_bank",
    "boxspline_fourier",
    "boxspline_mask",
    "cascade_phi",
    "haar_bank",
    "preimage_vertices",
    "roundtrip_defects",
    "sample_psi",
    "synthesize",
    "validate_matrix",
]
