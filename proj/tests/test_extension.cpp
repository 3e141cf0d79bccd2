#include <random>

#include <gtest/gtest.h>

#include "golden_support.hpp"
#include "vlic/constructions.hpp"
#include "vlic/extension.hpp"
#include "vlic/verifier.hpp"

using namespace vlic;

namespace {

LinearCode ex1_code() { return construct({CodeClass::delta_divides_k, 20, 4, std::nullopt}); }

std::vector<ComponentLabel> sorted(std::vector<ComponentLabel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

gf2::BitVector random_message(std::mt19937_64& rng, std::size_t n) {
  gf2::BitVector m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, rng() & 1U);
  return m;
}

}  // namespace

TEST(Substitute, FirstSymbols) {
  const auto code = ex1_code();
  EXPECT_EQ(sorted(substitute(code, 1).row_labels(0)),
            sorted({{1, 1}, {20, 2}, {5, 1}, {4, 2}}));
  EXPECT_EQ(sorted(substitute(code, 2).row_labels(0)),
            sorted({{1, 1}, {20, 2}, {19, 3}, {5, 1}, {4, 2}, {3, 3}}));
  EXPECT_EQ(substitute(code, 0), code);
}

TEST(Substitute, EveryComponentInExactlyOneSymbol) {
  for (int K : {5, 12, 19}) {
    for (int U = 0; U < K; ++U) {
      const SubstitutionMap map(K, U);
      std::vector<int> seen(static_cast<std::size_t>(K * (U + 1)), 0);
      for (int k = 1; k <= K; ++k) {
        for (auto c : map.components_of(k)) {
          ++seen[LinearCode::column(K, U + 1, c)];
          EXPECT_EQ(map.symbol_containing(c), k);
        }
      }
      for (int s : seen) EXPECT_EQ(s, 1);
    }
  }
}

TEST(Substitute, RejectsVectorInput) {
  const auto v = substitute(ex1_code(), 1);
  try {
    substitute(v, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_scalar);
  }
  EXPECT_THROW(substitute(ex1_code(), 20), Error);
}

TEST(FindSum, Examples) {
  const auto code = ex1_code();
  const auto p = one_sided_problem(20, 4);
  const auto w1 = find_sum(code, p, 1);
  EXPECT_EQ(w1.coeffs.set_bits(), std::vector<std::size_t>{0});
  EXPECT_EQ(w1.offsets, std::vector<int>{4});

  const auto w17 = find_sum(code, p, 17);
  EXPECT_EQ(w17.coeffs.set_bits(), (std::vector<std::size_t>{0, 4, 8, 12}));
  EXPECT_EQ(w17.offsets, std::vector<int>{4});

  const auto full = LinearCode::scalar(5, {{1, 2, 3, 4, 5}});
  const auto w = find_sum(full, one_sided_problem(5, 4), 3);
  EXPECT_EQ(w.coeffs.to_string(), "1");
  EXPECT_EQ(w.offsets, (std::vector<int>{1, 2, 3, 4}));
}

TEST(FindSum, K20Receiver17MatchesSubsetEnumeration) {
  // Oracle: every subset of code symbols whose sum is y_17 plus antidotes of
  // receiver 17 only. The code has full row rank, so there is exactly one.
  const auto code = ex1_code();
  const auto p = one_sided_problem(20, 4);
  gf2::BitVector allowed(20);
  for (int a : p.antidotes_of(17)) allowed.set(static_cast<std::size_t>(a - 1));
  std::vector<std::uint32_t> hits;
  for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
    gf2::BitVector s(20);
    for (int r = 0; r < 16; ++r)
      if (mask >> r & 1U) s ^= code.symbols().row(r);
    if (!s.test(16)) continue;
    s.flip(16);
    s.clear_where(allowed);
    if (s.none()) hits.push_back(mask);
  }
  ASSERT_EQ(hits.size(), 1u);
  std::vector<std::size_t> rows;
  for (int r = 0; r < 16; ++r)
    if (hits[0] >> r & 1U) rows.push_back(static_cast<std::size_t>(r));
  EXPECT_EQ(find_sum(code, p, 17).coeffs.set_bits(), rows);
}

TEST(FindSum, Undecodable) {
  const auto code = ex1_code().without_row(15);
  try {
    for (int k = 1; k <= 20; ++k) find_sum(code, one_sided_problem(20, 4), k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undecodable_receiver);
  }
}

TEST(BuildSchedule, StepsForFirstReceiver) {
  const auto s = build_schedule(ex1_code(), 1, one_sided_problem(20, 4));
  const auto& steps = s.steps_of(1);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].sum_index, 2);
  EXPECT_EQ(steps[0].recovers, (ComponentLabel{1, 2}));
  EXPECT_TRUE(steps[0].cancel.empty());
  EXPECT_EQ(steps[1].sum_index, 1);
  EXPECT_EQ(steps[1].recovers, (ComponentLabel{1, 1}));
  EXPECT_TRUE(steps[1].cancel.empty());
  EXPECT_EQ(s.problem, two_sided_problem(20, 1, 5));
}

TEST(BuildSchedule, UZeroIsScalarDecoding) {
  const auto code = ex1_code();
  const auto p = one_sided_problem(20, 4);
  const auto s = build_schedule(code, 0, p);
  EXPECT_EQ(s.code, code);
  for (int k = 1; k <= 20; ++k) {
    ASSERT_EQ(s.steps_of(k).size(), 1u);
    EXPECT_EQ(s.steps_of(k)[0].coeffs, find_sum(code, p, k).coeffs);
    EXPECT_EQ(s.steps_of(k)[0].recovers, (ComponentLabel{k, 1}));
  }
}

TEST(BuildSchedule, CancellationsWhenOffsetsAreSmall) {
  // Class 5, K=21, delta=4, lambda=1 has receivers with offset 1 in their sum,
  // so U=2 needs earlier recoveries cancelled.
  const auto s = build_schedule(construct({CodeClass::delta_divides_k_minus_lambda, 21, 4, 1}), 2,
                                one_sided_problem(21, 4));
  std::size_t cancels = 0;
  for (int k = 1; k <= 21; ++k)
    for (const auto& st : s.steps_of(k)) cancels += st.cancel.size();
  EXPECT_GT(cancels, 0u);
}

TEST(BuildSchedule, Errors) {
  const auto code = ex1_code();
  try {
    build_schedule(code, 8, one_sided_problem(20, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::antidote_count);
  }
  try {
    build_schedule(code, 1, two_sided_problem(20, 1, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_problem);
  }
}

TEST(Encode, Linearity) {
  const auto v = substitute(ex1_code(), 1);
  EXPECT_TRUE(encode(v, gf2::BitVector(v.width())).none());
  const auto e11 = gf2::BitVector::unit(v.width(), v.column({1, 1}));
  const auto cw = encode(v, e11);
  for (std::size_t r = 0; r < v.length(); ++r) EXPECT_EQ(cw.test(r), v.symbols().get(r, v.column({1, 1})));
  EXPECT_EQ(cw.count(), 1u);  // only y_1 + y_5 contains x_{1,1}
  std::mt19937_64 rng(3);
  const auto a = random_message(rng, v.width());
  const auto b = random_message(rng, v.width());
  EXPECT_EQ(encode(v, a ^ b), encode(v, a) ^ encode(v, b));
  EXPECT_THROW(encode(v, gf2::BitVector(3)), Error);
}

TEST(Decode, ZeroMessage) {
  const auto s = build_schedule(ex1_code(), 1, one_sided_problem(20, 4));
  const gf2::BitVector zero(s.code.width());
  for (int k = 1; k <= 20; ++k) {
    EXPECT_TRUE(decode_with_schedule(s, encode(s.code, zero), side_information_for(s, zero, k), k).none());
  }
}

TEST(Decode, Receiver7RandomRoundTrips) {
  const auto s = build_schedule(ex1_code(), 1, one_sided_problem(20, 4));
  ASSERT_EQ(s.problem, two_sided_problem(20, 1, 5));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto msg = random_message(rng, s.code.width());
    const auto got = decode_with_schedule(s, encode(s.code, msg), side_information_for(s, msg, 7), 7);
    EXPECT_EQ(got.test(0), msg.test(s.code.column({7, 1})));
    EXPECT_EQ(got.test(1), msg.test(s.code.column({7, 2})));
  }
}

TEST(Decode, UZeroMatchesScalarWitness) {
  const auto code = ex1_code();
  const auto p = one_sided_problem(20, 4);
  const auto s = build_schedule(code, 0, p);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto msg = random_message(rng, 20);
    const auto cw = encode(code, msg);
    for (int k = 1; k <= 20; ++k) {
      const auto w = find_sum(code, p, k);
      bool v = w.coeffs.dot(cw);
      for (int a : w.offsets) v ^= msg.test(static_cast<std::size_t>(wrap_index(k + a, 20) - 1));
      EXPECT_EQ(decode_with_schedule(s, cw, side_information_for(s, msg, k), k).test(0), v);
    }
  }
}

TEST(Decode, RejectsWrongSideInformation) {
  const auto s = build_schedule(ex1_code(), 1, one_sided_problem(20, 4));
  const gf2::BitVector msg(s.code.width());
  auto side = side_information_for(s, msg, 3);
  try {
    decode_with_schedule(s, encode(s.code, msg), side, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::schedule_mismatch);
  }
  EXPECT_THROW(decode_with_schedule(s, gf2::BitVector(3), side, 3), Error);
}

TEST(Mirror, TwoSidedWithMoreAntidotesAbove) {
  // U=5 above, D=1 below: mirror of the (1, 5) schedule.
  const auto s = build_two_sided(ex1_code(), 5, 1);
  EXPECT_EQ(s.problem, two_sided_problem(20, 5, 1));
  EXPECT_TRUE(all_decodable(decodable(s.problem, s.code)));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto msg = random_message(rng, s.code.width());
    const auto cw = encode(s.code, msg);
    for (int k = 1; k <= 20; ++k) {
      const auto got = decode_with_schedule(s, cw, side_information_for(s, msg, k), k);
      for (int i = 1; i <= 2; ++i) ASSERT_EQ(got.test(i - 1), msg.test(s.code.column({k, i})));
    }
  }
  EXPECT_EQ(build_two_sided(ex1_code(), 1, 5).problem, two_sided_problem(20, 1, 5));
}

// Properties over every class instance with K <= 24 and U <= 3.
TEST(ScheduleProperties, SoundnessAndOneUnknownPerStep) {
  for (int K = 3; K <= 24; ++K) {
    for (int d = 1; d < K; ++d) {
      for (const auto& m : applicable_classes(K, d)) {
        if (!m.constructible) continue;
        const std::optional<int> l = m.lambdas.empty() ? std::nullopt : std::optional<int>(m.lambdas.front());
        const auto scalar = construct({m.cls, K, d, l});
        for (int U = 0; U <= 3 && U + d + U < K; ++U) {
          const auto s = build_schedule(scalar, U, one_sided_problem(K, d));
          ASSERT_EQ(s.code.length(), scalar.length());
          for (std::size_t r = 0; r < s.code.length(); ++r) {
            ASSERT_EQ(s.code.symbols().row(r).count(), scalar.symbols().row(r).count() * static_cast<std::size_t>(U + 1));
          }
          for (int k = 1; k <= K; ++k) {
            std::set<ComponentLabel> known;
            gf2::BitVector side(s.code.width());
            for (int a : s.problem.antidotes_of(k))
              for (int i = 1; i <= U + 1; ++i) side.set(s.code.column({a, i}));
            for (const auto& st : s.steps_of(k)) {
              for (const auto& c : st.cancel) ASSERT_TRUE(known.count(c)) << "K=" << K << " d=" << d << " k=" << k;
              auto sum = gf2::left_multiply(st.coeffs, s.code.symbols());
              sum.clear_where(side);
              for (const auto& c : known) sum.set(s.code.column(c), false);
              ASSERT_EQ(sum.count(), 1u);
              ASSERT_TRUE(sum.test(s.code.column(st.recovers)));
              ASSERT_FALSE(known.count(st.recovers));
              known.insert(st.recovers);
            }
            ASSERT_EQ(known.size(), static_cast<std::size_t>(U + 1));
          }
        }
      }
    }
  }
}
