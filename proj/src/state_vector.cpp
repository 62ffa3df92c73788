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
#include "chebwalk/state_vector.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "chebwalk/error.hpp"

namespace chebwalk {

RegisterLayout::RegisterLayout(std::vector<Register> registers)
    : registers_(std::move(registers)) {
  for (std::size_t a = 0; a < registers_.size(); ++a) {
    if (registers_[a].qubits < 0) {
      throw ValidationError("register '" + registers_[a].name +
                            "' has a negative qubit count");
    }
    for (std::size_t b = a + 1; b < registers_.size(); ++b) {
      if (registers_[a].name == registers_[b].name) {
        throw ValidationError("duplicate register name '" +
                              registers_[a].name + "'");
      }
    }
  }
}

RegisterLayout RegisterLayout::index_register(int qubits) {
  return RegisterLayout({{"index", qubits}});
}

Index RegisterLayout::dimension() const { return Index{1} << total_qubits(); }

int RegisterLayout::total_qubits() const {
  int q = 0;
  for (const Register &r : registers_) {
    q += r.qubits;
  }
  return q;
}

std::size_t RegisterLayout::position(const std::string &name) const {
  for (std::size_t k = 0; k < registers_.size(); ++k) {
    if (registers_[k].name == name) {
      return k;
    }
  }
  throw ValidationError("register '" + name + "' is not in the layout");
}

bool RegisterLayout::contains(const std::string &name) const {
  for (const Register &r : registers_) {
    if (r.name == name) {
      return true;
    }
  }
  return false;
}

Index RegisterLayout::digit(Index flat, std::size_t pos) const {
  int shift = 0;
  for (std::size_t k = registers_.size(); k-- > pos + 1;) {
    shift += registers_[k].qubits;
  }
  return (flat >> shift) & (registers_[pos].dimension() - 1);
}

RegisterLayout RegisterLayout::prepend(Register reg) const {
  std::vector<Register> regs;
  regs.reserve(registers_.size() + 1);
  regs.push_back(std::move(reg));
  regs.insert(regs.end(), registers_.begin(), registers_.end());
  return RegisterLayout(std::move(regs));
}

StateVector::StateVector(RegisterLayout layout, Eigen::VectorXcd amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<Index>(amplitudes_.size()) != layout_.dimension()) {
    throw ValidationError("state has " + std::to_string(amplitudes_.size()) +
                          " amplitudes but its layout spans " +
                          std::to_string(layout_.dimension()));
  }
}

StateVector StateVector::basis(Index dimension, Index k) {
  if (!is_power_of_two(dimension)) {
    throw ValidationError("state dimension " + std::to_string(dimension) +
                          " is not a power of two");
  }
  if (k >= dimension) {
    throw ValidationError("basis index " + std::to_string(k) +
                          " is out of range for dimension " +
                          std::to_string(dimension));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension));
  v[static_cast<Eigen::Index>(k)] = 1.0;
  return {RegisterLayout::index_register(log2_exact(dimension)), std::move(v)};
}

StateVector StateVector::uniform(Index dimension) {
  if (!is_power_of_two(dimension)) {
    throw ValidationError("state dimension " + std::to_string(dimension) +
                          " is not a power of two");
  }
  const auto n = static_cast<Eigen::Index>(dimension);
  return {RegisterLayout::index_register(log2_exact(dimension)),
          Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)))};
}

StateVector StateVector::maximally_entangled(Index dimension) {
  if (!is_power_of_two(dimension)) {
    throw ValidationError("state dimension " + std::to_string(dimension) +
                          " is not a power of two");
  }
  const int q = log2_exact(dimension);
  const auto n = static_cast<Eigen::Index>(dimension);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i * n + i] = amp;
  }
  return {RegisterLayout({{"index", q}, {"copy", q}}), std::move(v)};
}

StateVector StateVector::normalized(const Eigen::VectorXcd &amplitudes) {
  const auto dim = static_cast<Index>(amplitudes.size());
  if (!is_power_of_two(dim)) {
    throw ValidationError("state dimension " + std::to_string(dim) +
                          " is not a power of two");
  }
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("state has zero or non-finite norm");
  }
  return {RegisterLayout::index_register(log2_exact(dim)), amplitudes / n};
}

void StateVector::require_unit_norm(const std::string &what) const {
  const double n = norm();
  if (!(std::abs(n - 1.0) <= kUnitNormTolerance)) {
    std::ostringstream os;
    os << what << " must have unit norm (got " << std::setprecision(17) << n
       << ")";
    throw ValidationError(os.str());
  }
}

Complex inner_product(const StateVector &a, const StateVector &b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("inner product of states with dimensions " +
                          std::to_string(a.dimension()) + " and " +
                          std::to_string(b.dimension()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

StateVector project_zero(const StateVector &psi,
                         const std::vector<std::string> &mask) {
  std::vector<std::size_t> positions;
  for (const std::string &name : mask) {
    if (!psi.layout().contains(name)) {
      throw ValidationError("projector mask names register '" + name +
                            "' which is not in the state layout");
    }
    positions.push_back(psi.layout().position(name));
  }
  Eigen::VectorXcd out = psi.amplitudes();
  for (Index flat = 0; flat < psi.dimension(); ++flat) {
    for (std::size_t pos : positions) {
      if (psi.layout().digit(flat, pos) != 0) {
        out[static_cast<Eigen::Index>(flat)] = 0.0;
        break;
      }
    }
  }
  return {psi.layout(), std::move(out)};
}

StateVector embed_ancilla_zero(const StateVector &psi, int qubits,
                               const std::string &name) {
  RegisterLayout layout = psi.layout().prepend({name, qubits});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(
      static_cast<Eigen::Index>(layout.dimension()));
  v.head(psi.amplitudes().size()) = psi.amplitudes();
  return {std::move(layout), std::move(v)};
}

LoadedState parse_qvec(std::istream &in, const std::string &source) {
  std::string line;
  int line_no = 0;
  bool have_magic = false;
  long long declared = -1;
  std::vector<Complex> values;

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
    std::string extra;
    if (!have_magic) {
      std::string magic, version;
      fields >> magic >> version;
      if (magic != "qvec" || version != "v1" || (fields >> extra)) {
        fail("expected header 'qvec v1'");
      }
      have_magic = true;
    } else if (declared < 0) {
      if (!(fields >> declared) || (fields >> extra) || declared <= 0) {
        fail("expected a positive dimension N");
      }
      if (!is_power_of_two(static_cast<Index>(declared))) {
        fail("dimension N=" + std::to_string(declared) +
             " is not a power of two");
      }
    } else {
      double re = 0.0, im = 0.0;
      if (!(fields >> re >> im) || (fields >> extra)) {
        fail("expected 're im'");
      }
      if (static_cast<long long>(values.size()) >= declared) {
        fail("more than N=" + std::to_string(declared) + " amplitudes");
      }
      values.emplace_back(re, im);
    }
  }
  if (declared < 0) {
    throw ValidationError(source + ": truncated qvec file");
  }
  if (static_cast<long long>(values.size()) != declared) {
    throw ValidationError(source + ": expected " + std::to_string(declared) +
                          " amplitudes, found " + std::to_string(values.size()));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = values[k];
  }
  const double original = v.norm();
  try {
    return {StateVector::normalized(v), original};
  } catch (const ValidationError &e) {
    throw ValidationError(source + ": " + e.what());
  }
}

LoadedState load_state(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open state file '" + path + "'");
  }
  return parse_qvec(in, path);
}

void write_qvec(std::ostream &out, const StateVector &psi) {
  out << "qvec v1\n" << psi.dimension() << "\n" << std::setprecision(17);
  for (Index k = 0; k < psi.dimension(); ++k) {
    out << psi[k].real() << " " << psi[k].imag() << "\n";
  }
}

} // namespace chebwalk
