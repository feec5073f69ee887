#include <random>

#include <gtest/gtest.h>

#include "eoa/error.hpp"
#include "eoa/linear_code.hpp"
#include "oracles.hpp"

namespace eoa {
namespace {

std::vector<oracle::Word> generator_columns(const LinearCode& c) {
  std::vector<oracle::Word> cols;
  for (std::size_t j = 0; j < c.dimension(); ++j) {
    const auto col = c.generator().column(j);
    cols.emplace_back(col.begin(), col.end());
  }
  return cols;
}

std::set<oracle::Word> closure(const LinearCode& c) {
  const auto& f = c.field();
  return oracle::span_by_closure(
      generator_columns(c), f.order(), [&](int a, int b) { return int(f.add(a, b)); },
      [&](int a, int b) { return int(f.mul(a, b)); });
}

std::set<oracle::Word> codeword_set(const LinearCode& c) {
  const auto words = codewords(c);
  std::set<oracle::Word> out;
  for (std::size_t j = 0; j < words.cols(); ++j) {
    const auto col = words.column(j);
    out.emplace(col.begin(), col.end());
  }
  return out;
}

const FieldTable& gf4() {
  static const auto f = FieldTable::create(2, 2);
  return f;
}

TEST(LinearCode, HammingOverGf4HasLengthFiveDimensionThree) {
  const auto c = hamming_code(gf4(), 2);
  EXPECT_EQ(c.length(), 5u);
  EXPECT_EQ(c.dimension(), 3u);
}

TEST(LinearCode, HammingOverGf4HasDistanceThree) {
  const auto c = hamming_code(gf4(), 2);
  EXPECT_EQ(oracle::min_weight(closure(c)), 3u);
  EXPECT_EQ(min_distance(c), 3u);
}

TEST(LinearCode, BinaryHamming74) {
  const auto c = hamming_code(FieldTable::create(2, 1), 3);
  EXPECT_EQ(c.length(), 7u);
  EXPECT_EQ(c.dimension(), 4u);
  EXPECT_EQ(oracle::min_weight(closure(c)), 3u);
  EXPECT_EQ(min_distance(c), 3u);
}

TEST(LinearCode, HammingParityCheckColumnsAreNormalizedProjectivePoints) {
  const auto h = hamming_parity_check(gf4(), 2);
  ASSERT_EQ(h.cols(), 5u);
  // (0,1), (1,0), (1,1), (1,w), (1,w+1) in lexicographic order.
  const std::vector<std::vector<Symbol>> expected{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}};
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(h.column(j), expected[j]);
}

TEST(LinearCode, DualOfHammingIsSimplexLikeWithWeightFour) {
  const auto dual = dual_code(hamming_code(gf4(), 2));
  EXPECT_EQ(dual.length(), 5u);
  EXPECT_EQ(dual.dimension(), 2u);
  const auto words = closure(dual);
  EXPECT_EQ(words.size(), 16u);
  for (const auto& w : words) {
    const auto wt = weight(std::vector<Symbol>(w.begin(), w.end()));
    EXPECT_TRUE(wt == 0 || wt == 4);
  }
  EXPECT_EQ(min_distance(dual), 4u);
}

TEST(LinearCode, DualOfHammingIsRowSpaceOfParityCheck) {
  const auto h = hamming_parity_check(gf4(), 2);
  std::vector<oracle::Word> rows;
  for (std::size_t r = 0; r < h.rows(); ++r) rows.emplace_back(h.row(r).begin(), h.row(r).end());
  const auto expected = oracle::span_by_closure(rows, 4, oracle::gf4_add, oracle::gf4_mul);
  EXPECT_EQ(codeword_set(dual_code(hamming_code(gf4(), 2))), expected);
}

TEST(LinearCode, BidualityPreservesCodewordSet) {
  const auto c = dual_code(hamming_code(gf4(), 2));
  EXPECT_EQ(codeword_set(dual_code(dual_code(c))), codeword_set(c));
}

TEST(LinearCode, DualWordsAreOrthogonalExhaustively) {
  const auto c = hamming_code(gf4(), 2);
  const auto dual = dual_code(c);
  const auto& f = gf4();
  const auto a = codewords(c), b = codewords(dual);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Symbol dot = 0;
      for (std::size_t r = 0; r < a.rows(); ++r) dot = f.add(dot, f.mul(a(r, i), b(r, j)));
      ASSERT_EQ(dot, 0);
    }
}

TEST(LinearCode, IdentityGeneratorHasDistanceOneAndEncodesIdentically) {
  const auto c = identity_code(gf4(), 3);
  EXPECT_EQ(min_distance(c), 1u);
  const std::vector<Symbol> m{3, 0, 2};
  EXPECT_EQ(c.encode(m), m);
  EXPECT_EQ(dual_distance(c), 4u);
}

TEST(LinearCode, CodewordListOrderAndSize) {
  const auto dual = dual_code(hamming_code(gf4(), 2));
  const auto words = codewords(dual);
  EXPECT_EQ(words.cols(), 16u);
  EXPECT_EQ(weight(words.column(0)), 0u);
}

TEST(LinearCode, CodewordListClosedUnderAddition) {
  const auto c = hamming_code(gf4(), 2);
  const auto words = codewords(c);
  const auto set = codeword_set(c);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, words.cols() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = words.column(pick(rng)), b = words.column(pick(rng));
    oracle::Word sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = gf4().add(a[i], b[i]);
    EXPECT_TRUE(set.count(sum));
  }
}

TEST(LinearCode, EncodeIsLinear) {
  const auto c = hamming_code(FieldTable::create(3, 1), 2);
  const auto& f = c.field();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> sym(0, f.order() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Symbol> m1(c.dimension()), m2(c.dimension()), sum(c.dimension());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      m1[i] = static_cast<Symbol>(sym(rng));
      m2[i] = static_cast<Symbol>(sym(rng));
      sum[i] = f.add(m1[i], m2[i]);
    }
    const auto c1 = c.encode(m1), c2 = c.encode(m2), cs = c.encode(sum);
    for (std::size_t r = 0; r < c.length(); ++r) EXPECT_EQ(cs[r], f.add(c1[r], c2[r]));
  }
  EXPECT_EQ(weight(c.encode(std::vector<Symbol>(c.dimension(), 0))), 0u);
}

TEST(LinearCode, EncodeRejectsDimensionMismatch) {
  const auto c = hamming_code(gf4(), 2);
  EXPECT_THROW(c.encode(std::vector<Symbol>{1, 2}), Error);
}

TEST(LinearCode, ConstructorRejectsRankDeficientAndBadShape) {
  SymbolMatrix g(3, 2, 0);
  g(0, 0) = 1;
  g(0, 1) = 1;  // both columns equal
  EXPECT_THROW(LinearCode(gf4(), g), Error);
  EXPECT_THROW(LinearCode(gf4(), SymbolMatrix(2, 3, 1)), Error);
  SymbolMatrix bad(2, 1, 0);
  bad(0, 0) = 7;
  EXPECT_THROW(LinearCode(gf4(), bad), Error);
}

TEST(LinearCode, HammingRejectsRedundancyOne) { EXPECT_THROW(hamming_code(gf4(), 1), Error); }

TEST(LinearCode, EnumerationCapIsEnforced) {
  const auto c = identity_code(FieldTable::create(2, 1), 21);
  EXPECT_THROW(min_distance(c), CapExceeded);
}

TEST(LinearCode, RankAndSingletonOnFamilies) {
  for (auto [q, m] : std::initializer_list<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    const auto f = FieldTable::create_order(static_cast<std::uint64_t>(q));
    const auto c = hamming_code(f, m);
    EXPECT_EQ(rank(f, c.generator()), c.dimension());
    const auto dual = dual_code(c);
    EXPECT_EQ(dual.dimension(), c.length() - c.dimension());
    const auto report = analyze(c);
    EXPECT_EQ(report.d_min, 3u);
    EXPECT_LE(report.d_min, report.n - report.k + 1);
    EXPECT_LE(min_distance(dual), dual.length() - dual.dimension() + 1);
  }
}

TEST(LinearCode, DualOfLargerGf4HammingHasConstantWeightSixteen) {
  const auto dual = dual_code(hamming_code(gf4(), 3));
  EXPECT_EQ(dual.length(), 21u);
  EXPECT_EQ(dual.dimension(), 3u);
  EXPECT_EQ(oracle::min_weight(closure(dual)), 16u);
  EXPECT_EQ(min_distance(dual), 16u);
  // Its dual is the Hamming code (4^18 words); found from row dependencies.
  EXPECT_EQ(dual_distance(dual), 3u);
  EXPECT_EQ(min_distance(hamming_code(gf4(), 3)), 3u);
}

TEST(LinearCode, DualDistanceMatchesDualEnumeration) {
  for (auto [q, m] : std::initializer_list<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}}) {
    const auto f = FieldTable::create_order(static_cast<std::uint64_t>(q));
    const auto c = hamming_code(f, m);
    const auto dual = dual_code(c);
    EXPECT_EQ(dual_distance(c), min_distance(dual));
    EXPECT_EQ(dual_distance(dual), min_distance(c));
  }
  // A repeated row is a weight-2 dual word.
  SymbolMatrix g(3, 2, 0);
  g(0, 0) = 1;
  g(1, 1) = 1;
  g(2, 0) = 1;
  EXPECT_EQ(dual_distance(LinearCode(gf4(), g)), 2u);
  // A zero row is a weight-1 dual word.
  g(2, 0) = 0;
  EXPECT_EQ(dual_distance(LinearCode(gf4(), g)), 1u);
}

TEST(LinearCode, CodewordsEqualClosureForSmallCodes) {
  for (int q : {2, 3, 4}) {
    const auto f = FieldTable::create_order(static_cast<std::uint64_t>(q));
    const auto c = hamming_code(f, 2);
    EXPECT_EQ(codeword_set(c), closure(c));
    const auto dual = dual_code(c);
    EXPECT_EQ(codeword_set(dual), closure(dual));
  }
}

TEST(LinearCode, MessageIndexRoundTrip) {
  for (std::uint64_t i = 0; i < 64; ++i)
    EXPECT_EQ(index_from_message(message_from_index(i, 3, 4), 4), i);
  EXPECT_EQ(message_from_index(1, 3, 4), (std::vector<Symbol>{0, 0, 1}));
}

}  // namespace
}  // namespace eoa
