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
#include "chebwalk/relocation.hpp"
#include "chebwalk/sparse_matrix.hpp"
#include "support.hpp"

namespace chebwalk {
namespace {

using testing::random_instance;

SparseHermitianMatrix parse(const std::string &text) {
  std::istringstream in(text);
  return parse_qmat(in, "test.qmat");
}

std::string error_of(const std::string &text) {
  try {
    parse(text);
  } catch (const ValidationError &e) {
    return e.what();
  }
  return "";
}

TEST(SparseMatrix, IdentityFileLoads) {
  const auto a = parse("qmat v1\n4 1\n0 0 1 0\n1 1 1 0\n2 2 1 0\n3 3 1 0\n");
  EXPECT_EQ(a.dimension(), 4u);
  EXPECT_EQ(a.sparsity(), 1u);
  EXPECT_EQ(a.index_qubits(), 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a.to_dense() / 1.0);
  for (Eigen::Index k = 0; k < 4; ++k) {
    EXPECT_NEAR(eig.eigenvalues()(k), 1.0, 1e-15);
  }
}

TEST(SparseMatrix, CommentsAndBlankLinesAreSkipped) {
  const auto a = parse("# header comment\nqmat v1\n\n2 1\n# entries\n0 1 0.5 0.25\n");
  EXPECT_EQ(a.entry(0, 1), Complex(0.5, 0.25));
  EXPECT_EQ(a.entry(1, 0), Complex(0.5, -0.25));
}

TEST(SparseMatrix, HermiticityErrorNamesPair) {
  const std::vector<Entry> entries = {{0, 1, 0.5}, {1, 0, 0.2}};
  try {
    SparseHermitianMatrix::from_entries(2, 1, entries);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)/(1,0)"), std::string::npos) << e.what();
  }
}

TEST(SparseMatrix, CoordinateListMayHoldBothHalves) {
  const std::vector<Entry> entries = {{0, 1, Complex(0.5, 0.5)}, {1, 0, Complex(0.5, -0.5)}};
  const auto a = SparseHermitianMatrix::from_entries(2, 1, entries);
  EXPECT_EQ(a.entry(1, 0), Complex(0.5, -0.5));
}

TEST(SparseMatrix, FileListsEachPairOnce) {
  const std::string msg = error_of("qmat v1\n2 1\n0 1 0.5 0.5\n1 0 0.5 -0.5\n");
  EXPECT_NE(msg.find(":4:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(SparseMatrix, RejectsInvalidInput) {
  EXPECT_NE(error_of("qmat v1\n3 1\n").find("N=3"), std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 0 1.5 0\n").find("(0,0)"), std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 0 0.5 0.1\n").find("(0,0)"), std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 0 0.5 0\n0 0 0.5 0\n").find("repeats"),
            std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 2 0.5 0\n").find("(0,2)"), std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 0 0.5 0\n0 1 0.5 0\n").find("row 0"),
            std::string::npos);
  EXPECT_NE(error_of("qmat v2\n2 1\n").find(":1:"), std::string::npos);
  EXPECT_NE(error_of("qmat v1\n2 1\n0 0 abc 0\n").find(":3:"), std::string::npos);
  EXPECT_FALSE(error_of("qmat v1\n").empty());
}

TEST(SparseMatrix, QueryEntry) {
  const auto id = testing::identity(4);
  EXPECT_EQ(query_entry(id, 2, 2), Complex(1.0));
  EXPECT_EQ(query_entry(id, 0, 3), Complex(0.0));
  EXPECT_THROW(query_entry(id, 4, 0), ValidationError);

  std::mt19937_64 rng(11);
  const auto inst = random_instance(rng, 8, 3);
  for (Index i = 0; i < 8; ++i) {
    for (Index j = 0; j < 8; ++j) {
      EXPECT_EQ(query_entry(inst.matrix, i, j),
                inst.dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
}

TEST(SparseMatrix, PaddedPatternUsesSmallestMissingColumns) {
  const std::vector<Entry> entries = {{2, 3, 0.5}, {0, 0, 0.1}};
  const auto a = SparseHermitianMatrix::from_entries(4, 3, entries);
  const std::vector<Index> row2(a.padded_pattern(2).begin(), a.padded_pattern(2).end());
  EXPECT_EQ(row2, (std::vector<Index>{0, 1, 3}));
  const std::vector<Index> row1(a.padded_pattern(1).begin(), a.padded_pattern(1).end());
  EXPECT_EQ(row1, (std::vector<Index>{0, 1, 2}));
  for (Index i = 0; i < 4; ++i) {
    EXPECT_EQ(a.padded_pattern(i).size(), 3u);
  }
}

TEST(SparseMatrix, ScaledSpectralNormAtMostOne) {
  std::mt19937_64 rng(12);
  for (Index n : {2u, 4u, 8u, 16u, 32u}) {
    for (Index s : {1u, 2u, 3u}) {
      const auto inst = random_instance(rng, n, std::min(s, n));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(inst.dense);
      const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
      EXPECT_LE(norm / static_cast<double>(inst.sparsity), 1.0 + 1e-12);
      const auto &meta = inst.matrix.metadata();
      EXPECT_LE(meta.scaled_norm_bound, 1.0 + 1e-12);
      ASSERT_TRUE(meta.spectral_norm.has_value());
      EXPECT_NEAR(*meta.spectral_norm, norm, 1e-10);
      EXPECT_LE(norm, meta.max_row_sum + 1e-12);
    }
  }
}

TEST(SparseMatrix, ConditionNumberMetadata) {
  const auto a = testing::diagonal({0.5, 0.25, 1.0, -0.125});
  ASSERT_TRUE(a.metadata().condition_number.has_value());
  EXPECT_NEAR(*a.metadata().condition_number, 8.0, 1e-12);
  const auto singular = testing::diagonal({0.5, 0.0, 1.0, 0.0});
  EXPECT_TRUE(std::isinf(*singular.metadata().condition_number));
}

TEST(SparseMatrix, WriteParseRoundTrip) {
  std::mt19937_64 rng(13);
  const auto inst = random_instance(rng, 8, 3);
  std::ostringstream out;
  write_qmat(out, inst.matrix);
  const auto back = parse(out.str());
  EXPECT_EQ(back.sparsity(), inst.matrix.sparsity());
  EXPECT_LT((back.to_dense() - inst.dense).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SparseMatrix, MaterializeAndRevalidate) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_instance(rng, 8, 3);
    std::vector<Entry> entries;
    for (Index i = 0; i < 8; ++i) {
      for (Index j = 0; j < 8; ++j) {
        const Complex v = query_entry(inst.matrix, i, j);
        if (v != 0.0) {
          entries.push_back({i, j, v});
        }
      }
    }
    const auto again = SparseHermitianMatrix::from_entries(8, 3, entries);
    EXPECT_EQ(again.sparsity(), 3u);
    EXPECT_EQ(again.to_dense(), inst.matrix.to_dense());
  }
}

TEST(SparseMatrix, AdjointOfHermitianIsItself) {
  std::mt19937_64 rng(15);
  const auto inst = random_instance(rng, 8, 2);
  EXPECT_EQ(inst.matrix.adjoint().to_dense(), inst.dense.adjoint());
}

TEST(Relocation, DiagonalMovesToColumnZero) {
  const auto a = testing::diagonal({0.2, 0.4, 0.6, 0.8});
  const auto r = relocate_diagonal(a);
  for (Index i = 0; i < 4; ++i) {
    EXPECT_EQ(r.entry(i, 0), a.entry(i, i));
  }
  EXPECT_EQ(r.dilated_sparsity(), 4u);
}

TEST(Relocation, IdentityColumnSumsToTrace) {
  const auto r = relocate_diagonal(testing::identity(4));
  Complex sum = 0.0;
  for (Index i = 0; i < 4; ++i) {
    EXPECT_EQ(r.entry(i, 0), Complex(1.0));
    sum += r.entry(i, 0);
  }
  EXPECT_EQ(sum, Complex(4.0));
}

TEST(Relocation, RandomInstanceMatchesDenseTrace) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_instance(rng, 8, 3);
    const auto r = relocate_diagonal(inst.matrix);
    Complex sum = 0.0;
    for (Index i = 0; i < 8; ++i) {
      sum += r.entry(i, 0);
    }
    EXPECT_NEAR(std::abs(sum - inst.dense.trace()), 0.0, 1e-14);

    // Every query is a_{i, relocated_column(i, j)}, and the map is an involution.
    for (Index i = 0; i < 8; ++i) {
      for (Index j = 0; j < 8; ++j) {
        EXPECT_EQ(relocated_column(i, relocated_column(i, j)), j);
        EXPECT_EQ(r.entry(i, j), inst.matrix.entry(i, relocated_column(i, j)));
      }
    }
  }
}

TEST(Relocation, DilationIsHermitianWithSparsityBound) {
  std::mt19937_64 rng(17);
  const auto inst = random_instance(rng, 8, 3);
  const auto r = relocate_diagonal(inst.matrix);
  const Eigen::MatrixXcd h = r.dilation().to_dense();
  EXPECT_EQ(h.rows(), 16);
  EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::MatrixXcd a_prime(8, 8);
  for (Index i = 0; i < 8; ++i) {
    for (Index j = 0; j < 8; ++j) {
      a_prime(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r.entry(i, j);
    }
  }
  EXPECT_EQ(h.topRightCorner(8, 8), a_prime);
  EXPECT_EQ(h.topLeftCorner(8, 8), Eigen::MatrixXcd::Zero(8, 8));
  EXPECT_GE(r.dilated_sparsity(), inst.matrix.sparsity());
  Index widest = 0;
  for (Eigen::Index k = 0; k < 16; ++k) {
    widest = std::max<Index>(widest, (h.row(k).array() != Complex(0.0)).count());
  }
  EXPECT_GE(r.dilated_sparsity(), widest);
}

} // namespace
} // namespace chebwalk
