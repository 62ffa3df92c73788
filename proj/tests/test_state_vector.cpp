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
#include <sstream>

#include <gtest/gtest.h>

#include "chebwalk/error.hpp"
#include "chebwalk/sampling.hpp"
#include "chebwalk/state_vector.hpp"
#include "support.hpp"

namespace chebwalk {
namespace {

TEST(StateVector, Factories) {
  const StateVector b = StateVector::basis(8, 5);
  EXPECT_EQ(b[5], Complex(1.0));
  EXPECT_EQ(b.layout().registers().front().name, "index");
  EXPECT_EQ(b.layout().total_qubits(), 3);
  EXPECT_THROW(StateVector::basis(8, 8), ValidationError);
  EXPECT_THROW(StateVector::basis(6, 0), ValidationError);

  const StateVector u = StateVector::uniform(4);
  for (Index k = 0; k < 4; ++k) {
    EXPECT_DOUBLE_EQ(u[k].real(), 0.5);
  }

  const StateVector e = StateVector::maximally_entangled(4);
  EXPECT_EQ(e.dimension(), 16u);
  EXPECT_EQ(e.layout().position("copy"), 1u);
  for (Index i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(e[i * 4 + i].real(), 0.5);
  }
  EXPECT_NEAR(e.norm(), 1.0, 1e-15);
}

TEST(StateVector, NormalizedAndUnitNormCheck) {
  Eigen::VectorXcd v(2);
  v << 3.0, Complex(0.0, 4.0);
  const StateVector psi = StateVector::normalized(v);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
  EXPECT_NO_THROW(psi.require_unit_norm("psi"));
  const StateVector raw(RegisterLayout::index_register(1), v);
  EXPECT_THROW(raw.require_unit_norm("psi"), ValidationError);
  EXPECT_THROW(StateVector::normalized(Eigen::VectorXcd::Zero(2)), ValidationError);
}

TEST(StateVector, LayoutDigitsAreBigEndian) {
  const RegisterLayout layout({{"a", 1}, {"b", 2}});
  EXPECT_EQ(layout.dimension(), 8u);
  // flat = a * 4 + b
  EXPECT_EQ(layout.digit(6, 0), 1u);
  EXPECT_EQ(layout.digit(6, 1), 2u);
  EXPECT_THROW(layout.position("c"), ValidationError);
  EXPECT_THROW(RegisterLayout({{"a", 1}, {"a", 1}}), ValidationError);
  EXPECT_EQ(layout.prepend({"z", 1}).position("a"), 1u);
}

TEST(StateVector, InnerProductIsConjugateLinearInFirst) {
  std::mt19937_64 rng(41);
  const auto a = testing::index_state(testing::random_unit_vector(rng, 8));
  const auto b = testing::index_state(testing::random_unit_vector(rng, 8));
  Complex direct = 0.0;
  for (Index k = 0; k < 8; ++k) {
    direct += std::conj(a[k]) * b[k];
  }
  EXPECT_NEAR(std::abs(inner_product(a, b) - direct), 0.0, 1e-15);
  EXPECT_THROW(inner_product(a, StateVector::uniform(4)), ValidationError);
}

TEST(StateVector, ProjectAndEmbed) {
  std::mt19937_64 rng(42);
  const auto phi = testing::index_state(testing::random_unit_vector(rng, 4));
  const StateVector emb = embed_ancilla_zero(phi, 2);
  EXPECT_EQ(emb.dimension(), 16u);
  EXPECT_EQ(emb.layout().position("ancilla"), 0u);
  EXPECT_EQ(emb.amplitudes().head(4), phi.amplitudes());
  EXPECT_EQ(emb.amplitudes().tail(12), Eigen::VectorXcd::Zero(12));

  const auto full = testing::index_state(testing::random_unit_vector(rng, 16));
  const StateVector two(RegisterLayout({{"ancilla", 2}, {"index", 2}}), full.amplitudes());
  const StateVector p = project_zero(two, {"ancilla"});
  EXPECT_EQ(p.amplitudes().head(4), full.amplitudes().head(4));
  EXPECT_EQ(p.amplitudes().tail(12), Eigen::VectorXcd::Zero(12));
  EXPECT_EQ(project_zero(two, {}).amplitudes(), two.amplitudes());
  EXPECT_THROW(project_zero(two, {"missing"}), ValidationError);
}

TEST(StateVector, QvecRoundTripRecordsOriginalNorm) {
  std::istringstream in("# comment\nqvec v1\n2\n3 0\n0 4\n");
  const LoadedState loaded = parse_qvec(in, "b.qvec");
  EXPECT_DOUBLE_EQ(loaded.original_norm, 5.0);
  EXPECT_NEAR(loaded.state[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(loaded.state[1].imag(), 0.8, 1e-15);

  std::ostringstream out;
  write_qvec(out, loaded.state);
  std::istringstream back(out.str());
  EXPECT_EQ(parse_qvec(back).state.amplitudes(), loaded.state.amplitudes());
}

TEST(StateVector, QvecErrors) {
  auto fails = [](const std::string &text) {
    std::istringstream in(text);
    try {
      parse_qvec(in, "b.qvec");
    } catch (const ValidationError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_FALSE(fails("qvec v1\n2\n1 0\n").empty());
  EXPECT_FALSE(fails("qvec v1\n3\n1 0\n0 0\n0 0\n").empty());
  EXPECT_FALSE(fails("qvec v1\n2\n0 0\n0 0\n").empty());
  EXPECT_NE(fails("qvec v1\n2\n1 x\n0 0\n").find(":3:"), std::string::npos);
  EXPECT_FALSE(fails("qmat v1\n2\n").empty());
}

TEST(Sampling, DeterministicAndSplittable) {
  ShotSampler a(7);
  ShotSampler b(7);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(a.binomial(1000, 0.3), b.binomial(1000, 0.3));
  }
  // A child stream does not depend on parent draws.
  ShotSampler fresh(7);
  EXPECT_EQ(a.split(3).binomial(1000, 0.5), fresh.split(3).binomial(1000, 0.5));
  EXPECT_NE(fresh.split(1).seed(), fresh.split(2).seed());
  EXPECT_EQ(ShotSampler(1).binomial(100, 1.0), 100u);
  EXPECT_EQ(ShotSampler(1).binomial(100, 0.0), 0u);
  EXPECT_EQ(ShotSampler(1).binomial(100, 1.0 + 1e-15), 100u);
}

TEST(Sampling, BinomialMoments) {
  ShotSampler s(99);
  const int runs = 4000;
  double sum = 0.0;
  double sq = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double k = static_cast<double>(s.binomial(400, 0.25));
    sum += k;
    sq += k * k;
  }
  const double mean = sum / runs;
  const double var = sq / runs - mean * mean;
  EXPECT_NEAR(mean, 100.0, 4.0 * std::sqrt(75.0 / runs));
  EXPECT_NEAR(var / 75.0, 1.0, 0.1);
}

TEST(Sampling, ShotsForAccuracy) {
  EXPECT_EQ(shots_for_accuracy(0.01), 90000u);
  EXPECT_EQ(shots_for_accuracy(0.3), 100u);
  EXPECT_THROW(shots_for_accuracy(0.0), ValidationError);
}

} // namespace
} // namespace chebwalk
