// Copyright 2026 The chebwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "chebwalk/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "chebwalk/error.hpp"

namespace chebwalk {

namespace {

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i";
  return os.str();
}

std::string pair_name(Index i, Index j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

} // namespace

bool is_power_of_two(Index n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(Index n) {
  int k = 0;
  while ((Index{1} << k) < n) {
    ++k;
  }
  return k;
}

SparseHermitianMatrix
SparseHermitianMatrix::from_entries(Index dimension, Index sparsity,
                                    std::span<const Entry> entries) {
  if (!is_power_of_two(dimension)) {
    throw ValidationError("dimension N=" + std::to_string(dimension) +
                          " is not a power of two");
  }
  if (sparsity == 0 || sparsity > dimension) {
    throw ValidationError("declared sparsity s=" + std::to_string(sparsity) +
                          " must satisfy 1 <= s <= N=" +
                          std::to_string(dimension));
  }

  std::map<std::pair<Index, Index>, Complex> stored;
  for (const Entry &e : entries) {
    if (e.row >= dimension || e.col >= dimension) {
      throw ValidationError("entry " + pair_name(e.row, e.col) +
                            " is out of range for N=" +
                            std::to_string(dimension));
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      throw ValidationError("entry " + pair_name(e.row, e.col) +
                            " is not finite");
    }
    if (std::abs(e.value) > 1.0 + kMagnitudeTolerance) {
      std::ostringstream os;
      os << "entry " << pair_name(e.row, e.col) << " has magnitude "
         << std::setprecision(17) << std::abs(e.value) << " > 1";
      throw ValidationError(os.str());
    }
    if (e.row == e.col && std::abs(e.value.imag()) > kHermitianTolerance) {
      throw ValidationError("diagonal entry " + pair_name(e.row, e.col) +
                            " = " + format_complex(e.value) +
                            " is not real (Hermiticity)");
    }
    if (!stored.emplace(std::pair{e.row, e.col}, e.value).second) {
      throw ValidationError("duplicate entry " + pair_name(e.row, e.col));
    }
  }

  SparseHermitianMatrix m;
  m.dimension_ = dimension;
  m.sparsity_ = sparsity;
  m.index_qubits_ = log2_exact(dimension);
  m.rows_.assign(dimension, {});

  for (const auto &[key, value] : stored) {
    const auto [i, j] = key;
    if (i == j) {
      if (value.real() != 0.0) {
        m.rows_[i].push_back({j, Complex(value.real(), 0.0)});
      }
      continue;
    }
    const auto mirror = stored.find({j, i});
    if (mirror != stored.end()) {
      if (std::abs(value - std::conj(mirror->second)) > kHermitianTolerance) {
        throw ValidationError(
            "non-Hermitian pair " + pair_name(std::min(i, j), std::max(i, j)) +
            "/" + pair_name(std::max(i, j), std::min(i, j)) + ": " +
            pair_name(i, j) + "=" + format_complex(value) + " but " +
            pair_name(j, i) + "=" + format_complex(mirror->second));
      }
      // Both halves present: the upper one is authoritative.
      if (i > j) {
        continue;
      }
    }
    if (value != Complex(0.0, 0.0)) {
      m.rows_[i].push_back({j, value});
      m.rows_[j].push_back({i, std::conj(value)});
    }
  }

  m.padded_.resize(dimension);
  for (Index i = 0; i < dimension; ++i) {
    auto &row = m.rows_[i];
    std::sort(row.begin(), row.end(),
              [](const RowEntry &a, const RowEntry &b) { return a.col < b.col; });
    if (row.size() > sparsity) {
      throw ValidationError("row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) +
                            " nonzeros, exceeding declared sparsity s=" +
                            std::to_string(sparsity) + " (last column " +
                            std::to_string(row.back().col) + ")");
    }
    auto &pattern = m.padded_[i];
    pattern.reserve(sparsity);
    for (const RowEntry &e : row) {
      pattern.push_back(e.col);
    }
    for (Index k = 0; pattern.size() < sparsity; ++k) {
      const bool present = std::any_of(
          row.begin(), row.end(), [k](const RowEntry &e) { return e.col == k; });
      if (!present) {
        pattern.push_back(k);
      }
    }
    std::sort(pattern.begin(), pattern.end());

    double row_sum = 0.0;
    for (const RowEntry &e : row) {
      row_sum += std::abs(e.value);
    }
    m.metadata_.max_row_sum = std::max(m.metadata_.max_row_sum, row_sum);
    m.metadata_.max_row_nonzeros =
        std::max<Index>(m.metadata_.max_row_nonzeros, row.size());
  }
  m.metadata_.scaled_norm_bound =
      m.metadata_.max_row_sum / static_cast<double>(sparsity);

  if (dimension <= kSpectralMetadataLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m.to_dense(), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd magnitudes = solver.eigenvalues().cwiseAbs();
    const double largest = magnitudes.maxCoeff();
    const double smallest = magnitudes.minCoeff();
    m.metadata_.spectral_norm = largest;
    m.metadata_.condition_number =
        smallest > 0.0 ? largest / smallest
                       : std::numeric_limits<double>::infinity();
  }
  return m;
}

Complex SparseHermitianMatrix::entry(Index i, Index j) const {
  if (i >= dimension_ || j >= dimension_) {
    throw ValidationError("query " + pair_name(i, j) +
                          " is out of range for N=" +
                          std::to_string(dimension_));
  }
  const auto &r = rows_[i];
  const auto it = std::lower_bound(
      r.begin(), r.end(), j,
      [](const RowEntry &e, Index col) { return e.col < col; });
  if (it != r.end() && it->col == j) {
    return it->value;
  }
  return {0.0, 0.0};
}

std::span<const RowEntry> SparseHermitianMatrix::row(Index i) const {
  if (i >= dimension_) {
    throw ValidationError("row " + std::to_string(i) + " is out of range");
  }
  return rows_[i];
}

std::span<const Index> SparseHermitianMatrix::padded_pattern(Index i) const {
  if (i >= dimension_) {
    throw ValidationError("row " + std::to_string(i) + " is out of range");
  }
  return padded_[i];
}

std::vector<Entry> SparseHermitianMatrix::entries() const {
  std::vector<Entry> out;
  for (Index i = 0; i < dimension_; ++i) {
    for (const RowEntry &e : rows_[i]) {
      out.push_back({i, e.col, e.value});
    }
  }
  return out;
}

SparseHermitianMatrix SparseHermitianMatrix::adjoint() const {
  std::vector<Entry> transposed;
  for (const Entry &e : entries()) {
    transposed.push_back({e.col, e.row, std::conj(e.value)});
  }
  return from_entries(dimension_, sparsity_, transposed);
}

Eigen::MatrixXcd SparseHermitianMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < dimension_; ++i) {
    for (const RowEntry &e : rows_[i]) {
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e.col)) =
          e.value;
    }
  }
  return dense;
}

Complex query_entry(const SparseHermitianMatrix &a, Index i, Index j) {
  return a.entry(i, j);
}

// qmat v1 -------------------------------------------------------------------

SparseHermitianMatrix parse_qmat(std::istream &in, const std::string &source) {
  std::string line;
  int line_no = 0;
  enum class Stage { Magic, Header, Body } stage = Stage::Magic;
  Index dimension = 0;
  Index sparsity = 0;
  std::vector<Entry> entries;
  // Unordered pair -> line it was stored on. The file lists each pair once.
  std::map<std::pair<Index, Index>, int> seen;

  auto fail = [&](const std::string &what) {
    throw ValidationError(source + ":" + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    switch (stage) {
    case Stage::Magic: {
      std::string magic, version, extra;
      fields >> magic >> version;
      if (magic != "qmat" || version != "v1" || (fields >> extra)) {
        fail("expected header 'qmat v1'");
      }
      stage = Stage::Header;
      break;
    }
    case Stage::Header: {
      long long n = -1, s = -1;
      std::string extra;
      if (!(fields >> n >> s) || (fields >> extra) || n <= 0 || s <= 0) {
        fail("expected 'N s' with positive integers");
      }
      dimension = static_cast<Index>(n);
      sparsity = static_cast<Index>(s);
      stage = Stage::Body;
      break;
    }
    case Stage::Body: {
      long long i = -1, j = -1;
      double re = 0.0, im = 0.0;
      std::string extra;
      if (!(fields >> i >> j >> re >> im) || (fields >> extra)) {
        fail("expected 'i j re im'");
      }
      if (i < 0 || j < 0) {
        fail("negative index in entry " + std::to_string(i) + " " +
             std::to_string(j));
      }
      const std::pair<Index, Index> key{static_cast<Index>(std::min(i, j)),
                                        static_cast<Index>(std::max(i, j))};
      if (const auto [it, fresh] = seen.emplace(key, line_no); !fresh) {
        fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
             ") repeats the pair stored on line " + std::to_string(it->second) +
             "; list (i,j) or (j,i), not both");
      }
      entries.push_back(
          {static_cast<Index>(i), static_cast<Index>(j), Complex(re, im)});
      break;
    }
    }
  }
  if (stage != Stage::Body) {
    throw ValidationError(source + ": truncated qmat file (missing " +
                          (stage == Stage::Magic ? "'qmat v1' header"
                                                 : "'N s' line") +
                          ")");
  }
  try {
    return SparseHermitianMatrix::from_entries(dimension, sparsity, entries);
  } catch (const ValidationError &e) {
    throw ValidationError(source + ": " + e.what());
  }
}

SparseHermitianMatrix load_matrix(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open matrix file '" + path + "'");
  }
  return parse_qmat(in, path);
}

void write_qmat(std::ostream &out, const SparseHermitianMatrix &a) {
  out << "qmat v1\n" << a.dimension() << " " << a.sparsity() << "\n";
  out << std::setprecision(17);
  for (const Entry &e : a.entries()) {
    if (e.col >= e.row) {
      out << e.row << " " << e.col << " " << e.value.real() << " "
          << e.value.imag() << "\n";
    }
  }
}

} // namespace chebwalk
