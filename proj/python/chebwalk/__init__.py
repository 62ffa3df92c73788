# Copyright 2026 The chebwalk Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Sparse Hermitian matrix algorithms on a simulated Chebyshev quantum walk."""

import numpy as np

from ._chebwalk import (
    DEFAULT_SEED,
    DEFAULT_SHOTS,
    ApplicationResult,
    NumericalError,
    PowerIterationTrace,
    ShotEstimate,
    SparseHermitianMatrix,
    ValidationError,
    WalkOperator,
    apply_matrix,
    estimate_rayleigh,
    frobenius_mixed_state,
    frobenius_via_product,
    power_iterate,
    sample_application,
    trace_entangled,
    trace_product,
    trace_relocation,
    verify_walk,
)

__version__ = "0.1.0"


def from_dense(a, sparsity=None):
    """Builds a SparseHermitianMatrix from a dense Hermitian array.

    The sparsity defaults to the widest row.
    """
    a = np.asarray(a, dtype=complex)
    rows, cols = np.nonzero(a)
    if sparsity is None:
        sparsity = max(1, int(np.count_nonzero(a, axis=1).max(initial=0)))
    entries = [(int(i), int(j), complex(a[i, j])) for i, j in zip(rows, cols) if i <= j]
    return SparseHermitianMatrix.from_entries(a.shape[0], sparsity, entries)


__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_SHOTS",
    "ApplicationResult",
    "NumericalError",
    "PowerIterationTrace",
    "ShotEstimate",
    "SparseHermitianMatrix",
    "ValidationError",
    "WalkOperator",
    "apply_matrix",
    "estimate_rayleigh",
    "frobenius_mixed_state",
    "frobenius_via_product",
    "from_dense",
    "power_iterate",
    "sample_application",
    "trace_entangled",
    "trace_product",
    "trace_relocation",
    "verify_walk",
]
