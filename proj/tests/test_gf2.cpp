#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vlic/code.hpp"
#include "vlic/gf2.hpp"

using vlic::Errc;
using vlic::Error;
using namespace vlic::gf2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
  return v;
}

// Plain cubic elimination on vector<vector<bool>>, kept separate from the
// library code it checks.
std::size_t naive_rank(const BitMatrix& m) {
  std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] != a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(BitVector, StringRoundTripAndPadding) {
  auto v = BitVector::from_string("1011000000000000000000000000000000000000000000000000000000000000101");
  EXPECT_EQ(v.size(), 67u);
  EXPECT_EQ(v.count(), 5u);
  EXPECT_TRUE(v.test(66));
  EXPECT_EQ(v.to_string(), "1011000000000000000000000000000000000000000000000000000000000000101");
  v.resize(3);
  EXPECT_EQ(v.count(), 2u);
  v.resize(70);
  EXPECT_EQ(v.count(), 2u) << "shrinking must clear the dropped bits";
  EXPECT_THROW(BitVector::from_string("10x"), Error);
}

TEST(BitVector, XorDotAndIteration) {
  auto a = BitVector::from_string("1100");
  auto b = BitVector::from_string("0110");
  EXPECT_EQ((a ^ b).to_string(), "1010");
  EXPECT_EQ((a & b).to_string(), "0100");
  EXPECT_TRUE(a.dot(b));
  EXPECT_FALSE(a.dot(BitVector::from_string("1111")));
  EXPECT_EQ((a ^ b).set_bits(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(BitVector(5).first_set(), BitVector::npos);
  EXPECT_THROW(a ^= BitVector(5), Error);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(BitMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(BitMatrix::from_strings({"110", "011", "101"})), 2u);
  EXPECT_EQ(rank(BitMatrix(0, 5)), 0u);
  EXPECT_EQ(rank(BitMatrix(4, 0)), 0u);
}

TEST(Rref, Examples) {
  auto r = rref(BitMatrix::from_strings({"11", "01"}));
  EXPECT_EQ(r.matrix, BitMatrix::from_strings({"10", "01"}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));

  auto id = rref(BitMatrix::identity(4));
  EXPECT_EQ(id.matrix, BitMatrix::identity(4));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));

  auto z = rref(BitMatrix(2, 3));
  EXPECT_EQ(z.matrix, BitMatrix(2, 3));
  EXPECT_TRUE(z.pivots.empty());
}

TEST(SolveInSpan, Examples) {
  auto c = solve_in_span(BitMatrix::from_strings({"10", "01"}), BitVector::from_string("11"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->to_string(), "11");
  EXPECT_FALSE(solve_in_span(BitMatrix::from_strings({"11"}), BitVector::from_string("10")));
  EXPECT_THROW(solve_in_span(BitMatrix::from_strings({"11"}), BitVector::from_string("101")), Error);
}

TEST(SolveInSpan, WrapAroundChainOfPairCode) {
  // y_i + y_{i+4}, i = 1..16, over y_1..y_20. Target y_17 + y_1.
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= 16; ++i) rows.push_back({i, i + 4});
  const auto code = vlic::LinearCode::scalar(20, rows);
  BitVector target(20);
  target.set(16);
  target.set(0);
  auto c = solve_in_span(code.symbols(), target);
  ASSERT_TRUE(c);

  // Oracle: the rows are independent (rank 16), so the combination is unique;
  // brute force over all 2^16 subsets finds it.
  ASSERT_EQ(rank(code.symbols()), 16u);
  std::vector<std::uint32_t> hits;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    BitVector s(20);
    for (int r = 0; r < 16; ++r)
      if (mask >> r & 1U) s ^= code.symbols().row(r);
    if (s == target) hits.push_back(mask);
  }
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], (1u << 0) | (1u << 4) | (1u << 8) | (1u << 12));
  EXPECT_EQ(c->set_bits(), (std::vector<std::size_t>{0, 4, 8, 12}));
}

// Randomized properties under a fixed seed.

TEST(Gf2Properties, RankMatchesNaiveAndRref) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 65, cols = rng() % 65;
    const auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.1 : 0.5);
    const auto r = rank(m);
    EXPECT_EQ(r, naive_rank(m));
    const auto e = rref(m);
    EXPECT_EQ(rank(e.matrix), r);
    EXPECT_EQ(e.pivots.size(), r);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      for (std::size_t j = 0; j < e.matrix.rows(); ++j) EXPECT_EQ(e.matrix.get(j, e.pivots[i]), i == j);
    }
  }
}

TEST(Gf2Properties, RankInvariantUnderElementaryOperations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 70;
    auto m = random_matrix(rng, rows, cols, 0.3);
    const auto r = rank(m);
    for (int op = 0; op < 20; ++op) {
      const std::size_t a = rng() % rows, b = rng() % rows;
      if (rng() & 1U) {
        m.swap_rows(a, b);
      } else if (a != b) {
        m.row(a) ^= m.row(b);
      }
      ASSERT_EQ(rank(m), r);
    }
  }
}

TEST(Gf2Properties, SolveInSpanIffRankUnchanged) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 30, cols = 1 + rng() % 50;
    const auto m = random_matrix(rng, rows, cols, 0.4);
    BitVector target = random_vector(rng, cols);
    if (trial % 2 == 0 && rows > 0) {
      // Force a member of the span half the time.
      target = left_multiply(random_vector(rng, rows), m);
    }
    BitMatrix extended = m;
    extended.append_row(target);
    const auto c = solve_in_span(m, target);
    EXPECT_EQ(c.has_value(), rank(extended) == rank(m));
    if (c) {
      EXPECT_EQ(left_multiply(*c, m), target);
    }
  }
}

TEST(Gf2Properties, MultiplyIsLinear) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 20, 1 + rng() % 90);
    const auto u = random_vector(rng, m.cols());
    const auto v = random_vector(rng, m.cols());
    EXPECT_EQ(multiply(m, u ^ v), multiply(m, u) ^ multiply(m, v));
    EXPECT_TRUE(multiply(m, BitVector(m.cols())).none());
  }
}

TEST(BitMatrix, ShapeErrors) {
  BitMatrix m(0, 3);
  EXPECT_THROW(m.append_row(BitVector(4)), Error);
  try {
    m.append_row(BitVector(2));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape);
  }
  EXPECT_THROW(vstack(BitMatrix(1, 2), BitMatrix(1, 3)), Error);
  EXPECT_EQ(vstack(BitMatrix::identity(2), BitMatrix::from_strings({"11"})).rows(), 3u);
}
