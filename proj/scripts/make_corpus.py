#!/usr/bin/env python3
# Copyright 2026 The chebwalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the example corpus and its dense-linear-algebra expected values."""

import argparse
import json
import pathlib

import numpy as np


def random_sparse_hermitian(rng, n, s):
    """Hermitian n x n, at most s nonzeros per row, entries in the unit disk."""
    a = np.zeros((n, n), dtype=complex)
    degree = np.zeros(n, dtype=int)
    for i in range(n):
        if degree[i] < s and rng.random() < 0.8:
            a[i, i] = rng.uniform(-1.0, 1.0)
            degree[i] += 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    for i, j in pairs:
        if degree[i] < s and degree[j] < s:
            r = np.sqrt(rng.random())
            v = r * np.exp(2j * np.pi * rng.random())
            a[i, j] = v
            a[j, i] = np.conj(v)
            degree[i] += 1
            degree[j] += 1
    return a


def write_qmat(path, a, s):
    n = a.shape[0]
    lines = ["qmat v1", f"{n} {s}"]
    for i in range(n):
        for j in range(i, n):
            if a[i, j] != 0:
                lines.append(f"{i} {j} {a[i, j].real:.17g} {a[i, j].imag:.17g}")
    path.write_text("\n".join(lines) + "\n")


def write_qvec(path, b):
    lines = ["qvec v1", str(b.size)]
    lines += [f"{z.real:.17g} {z.imag:.17g}" for z in b]
    path.write_text("\n".join(lines) + "\n")


def expected_values(a, s, b, other, s_other):
    n = a.shape[0]
    ab = a @ b
    eig = np.linalg.eigvalsh(a)
    return {
        "dimension": n,
        "sparsity": s,
        "trace": [np.trace(a).real, np.trace(a).imag],
        "frobenius": float(np.linalg.norm(a, "fro")),
        "mixed_state_probability": float(np.sum(eig**2) / (n * s * s)),
        "trace_product": [np.trace(a @ other).real, np.trace(a @ other).imag],
        "trace_product_sparsity_b": s_other,
        "apply_success_probability": float(np.vdot(ab, ab).real / s**2),
        "apply_output_norm": float(np.linalg.norm(ab)),
        "apply_output_state": [[z.real, z.imag] for z in ab / np.linalg.norm(ab)],
        "lambda_max": float(eig[-1]),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent / "data"))
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    (out / "expected").mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)

    matrices = {
        "id4": (np.eye(4, dtype=complex), 1),
        "diag4": (np.diag([1.0, 0.5, 0.5, 0.5]).astype(complex), 1),
        "rand8a": (random_sparse_hermitian(rng, 8, 2), 2),
        "rand8b": (random_sparse_hermitian(rng, 8, 3), 3),
    }
    for name, (a, s) in matrices.items():
        write_qmat(out / f"{name}.qmat", a, s)

    b8 = rng.normal(size=8) + 1j * rng.normal(size=8)
    b8 /= np.linalg.norm(b8)
    write_qvec(out / "b8.qvec", b8)
    b4 = np.full(4, 0.5, dtype=complex)

    partner = {"id4": "diag4", "diag4": "id4", "rand8a": "rand8b", "rand8b": "rand8a"}
    for name, (a, s) in matrices.items():
        other, s_other = matrices[partner[name]]
        b = b8 if a.shape[0] == 8 else b4
        record = expected_values(a, s, b, other, s_other)
        record["state"] = "b8.qvec" if a.shape[0] == 8 else "uniform"
        record["partner"] = partner[name]
        (out / "expected" / f"{name}.json").write_text(json.dumps(record, indent=2) + "\n")


if __name__ == "__main__":
    main()
