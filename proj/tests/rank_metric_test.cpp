#include <gtest/gtest.h>

#include "flagforge/rank_metric.hpp"
#include "oracles.hpp"

using namespace flagforge;

namespace {

FieldPtr gf(std::uint64_t q) { return make_field_of_order(q); }

// GF(8) = GF(2)[x]/(x^3 + x + 1), elements as 3-bit masks.
std::uint32_t gf8_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t acc = 0;
  for (int i = 0; i < 3; ++i) {
    if ((b >> i) & 1u) acc ^= a << i;
  }
  for (int bit = 4; bit >= 3; --bit) {
    if ((acc >> bit) & 1u) acc ^= 0b1011u << (bit - 3);
  }
  return acc;
}

// Row i holds the coordinates of a * x^i.
Matrix gf8_multiplication_matrix(std::uint32_t a) {
  auto f = gf(2);
  Matrix m(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::uint32_t image = gf8_mul(a, 1u << i);
    for (std::size_t c = 0; c < 3; ++c) m.set(i, c, (image >> c) & 1u);
  }
  return m;
}

}  // namespace

TEST(RankDistance, Examples) {
  auto f = gf(2);
  const Matrix a = Matrix::from_rows(f, {{0, 1}, {1, 1}});
  EXPECT_EQ(rank_distance(a, a), 0u);
  EXPECT_EQ(rank_distance(Matrix::identity(f, 2), Matrix(f, 2, 2)), 2u);
  EXPECT_EQ(rank_distance(Matrix::identity(f, 2), a), 2u);
  try {
    rank_distance(a, Matrix::identity(f, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Gabidulin, ScalarCode) {
  const auto words = enumerate_codewords(gabidulin_square(1, 1, gf(2)));
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], Matrix::from_rows(gf(2), {{0}}));
  EXPECT_EQ(words[1], Matrix::from_rows(gf(2), {{1}}));
}

TEST(Gabidulin, Gf4MultiplicationMatricesInCoefficientOrder) {
  auto f = gf(2);
  const MrdCode code = gabidulin_square(2, 2, f);
  EXPECT_EQ(std::vector<Element>(code.extension()->modulus().begin(), code.extension()->modulus().end()),
            (std::vector<Element>{1, 1, 1}));
  const auto words = enumerate_codewords(code);
  const Matrix a = Matrix::from_rows(f, {{0, 1}, {1, 1}});
  ASSERT_EQ(words.size(), 4u);
  EXPECT_EQ(words[0], Matrix(f, 2, 2));
  EXPECT_EQ(words[1], Matrix::identity(f, 2));
  EXPECT_EQ(words[2], a);
  EXPECT_EQ(words[3], a + Matrix::identity(f, 2));
}

TEST(Gabidulin, Gf8MatchesIndependentMultiplication) {
  const auto words = enumerate_codewords(gabidulin_square(3, 3, gf(2)));
  ASSERT_EQ(words.size(), 8u);
  for (std::uint32_t a = 0; a < 8; ++a) {
    EXPECT_EQ(words[a], gf8_multiplication_matrix(a)) << "a=" << a;
    if (a != 0) EXPECT_EQ(oracle::rank(words[a]), 3u);
  }
}

TEST(Gabidulin, TernaryCount) {
  const MrdCode code = gabidulin_square(2, 2, gf(3));
  EXPECT_EQ(code.dimension(), 2u);
  EXPECT_EQ(enumerate_codewords(code).size(), 9u);
}

TEST(Gabidulin, DimensionMatchesEnumeration) {
  for (auto [m, delta, q] : std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>{
           {3, 2, 2}, {3, 1, 2}, {2, 1, 3}, {4, 4, 2}, {4, 3, 2}, {2, 2, 4}}) {
    const MrdCode code = gabidulin_square(m, delta, gf(q));
    const auto words = enumerate_codewords(code);
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) expected *= q;
    EXPECT_EQ(words.size(), expected);
    EXPECT_EQ(code.dimension(), m * (m - delta + 1));
    EXPECT_EQ(min_rank_distance(words), delta) << "m=" << m << " delta=" << delta << " q=" << q;
  }
}

TEST(Gabidulin, DeltaOneIsEveryMatrix) {
  auto words = enumerate_codewords(gabidulin_square(2, 1, gf(2)));
  std::sort(words.begin(), words.end());
  EXPECT_EQ(std::unique(words.begin(), words.end()), words.end());
  EXPECT_EQ(words.size(), 16u);
}

TEST(Gabidulin, Errors) {
  try {
    gabidulin_square(2, 3, gf(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDelta);
  }
  EXPECT_THROW(gabidulin_square(2, 0, gf(2)), Error);
  try {
    enumerate_codewords(gabidulin_square(5, 1, gf(2)));  // 2^25 codewords
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  EXPECT_THROW(gabidulin_square(21, 21, gf(2)), Error);
}

TEST(Truncate, Examples) {
  auto f = gf(2);
  const auto words = enumerate_codewords(gabidulin_square(2, 2, f));
  EXPECT_EQ(truncate_code(words, 2), words);
  const auto rows = truncate_code(words, 1);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], Matrix::from_rows(f, {{0, 0}}));
  EXPECT_EQ(rows[1], Matrix::from_rows(f, {{1, 0}}));
  EXPECT_EQ(rows[2], Matrix::from_rows(f, {{0, 1}}));
  EXPECT_EQ(rows[3], Matrix::from_rows(f, {{1, 1}}));
  EXPECT_EQ(min_rank_distance(rows), 1u);
}

TEST(Truncate, ThreeByThreeToTwoRowsBruteForce) {
  const auto rows = truncate_code(enumerate_codewords(gabidulin_square(3, 3, gf(2))), 2);
  ASSERT_EQ(rows.size(), 8u);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].rows(), 2u);
    EXPECT_EQ(rows[i].cols(), 3u);
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      EXPECT_EQ(oracle::rank(rows[i] - rows[j]), 2u);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 28u);
}

TEST(Truncate, InvalidT) {
  const auto words = enumerate_codewords(gabidulin_square(2, 2, gf(2)));
  for (std::size_t t : {std::size_t{0}, std::size_t{3}}) {
    try {
      truncate_code(words, t);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidT);
    }
  }
}

TEST(VerifyMrd, Examples) {
  auto f = gf(2);
  EXPECT_TRUE(verify_mrd({Matrix(f, 2, 2)}, 2));
  const auto words = enumerate_codewords(gabidulin_square(2, 2, f));
  EXPECT_TRUE(verify_mrd(words, 2));
  EXPECT_FALSE(verify_mrd(words, 3));
  EXPECT_THROW(verify_mrd({Matrix(f, 2, 2), Matrix(f, 2, 3)}, 1), Error);
}

TEST(RankDistance, MetricAxiomsSampled) {
  const auto words = enumerate_codewords(gabidulin_square(2, 1, gf(3)));  // all 81 2x2 ternary matrices
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const std::size_t dij = rank_distance(words[i], words[j]);
      ASSERT_EQ(dij, rank_distance(words[j], words[i]));
      ASSERT_EQ(dij == 0, i == j);
      for (std::size_t l = 0; l < words.size(); l += 11) {
        ASSERT_LE(dij, rank_distance(words[i], words[l]) + rank_distance(words[l], words[j]));
      }
    }
  }
}
