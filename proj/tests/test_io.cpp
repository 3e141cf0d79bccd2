#include <gtest/gtest.h>

#include "golden_support.hpp"
#include "vlic/constructions.hpp"
#include "vlic/extension.hpp"
#include "vlic/io.hpp"

using namespace vlic;

namespace {
LinearCode ex1_code() { return construct({CodeClass::delta_divides_k, 20, 4, std::nullopt}); }
}  // namespace

TEST(CodeJson, RoundTrip) {
  const auto c = substitute(ex1_code(), 2);
  const auto j = io::to_json(c);
  EXPECT_EQ(j["K"], 20);
  EXPECT_EQ(j["t"], 3);
  EXPECT_EQ(j["rows"][0].size(), 6u);
  EXPECT_EQ(io::code_from_json(io::parse_json(io::dump(j))), c);
  EXPECT_EQ(io::dump(io::to_json(c)), io::dump(io::to_json(io::code_from_json(j))));
}

TEST(CodeJson, KeyOrderIsFixed) {
  const auto text = io::dump(io::to_json(ex1_code()));
  EXPECT_LT(text.find("\"K\""), text.find("\"t\""));
  EXPECT_LT(text.find("\"t\""), text.find("\"rows\""));
}

TEST(CodeJson, Errors) {
  auto code_of = [](const std::string& s) { return io::code_from_json(io::parse_json(s)); };
  EXPECT_THROW(io::parse_json("{\"K\": 3,"), Error);
  EXPECT_THROW(code_of("{\"t\": 1, \"rows\": []}"), Error);
  EXPECT_THROW(code_of("{\"K\": 3, \"t\": 1, \"rows\": [[[4, 1]]]}"), Error);
  EXPECT_THROW(code_of("{\"K\": 3, \"t\": 1, \"rows\": [[[1]]]}"), Error);
  EXPECT_THROW(code_of("{\"K\": \"3\", \"t\": 1, \"rows\": []}"), Error);
  try {
    code_of("{\"K\": 3, \"t\": 1, \"rows\": [[[1, 1], [1, 1]]]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
  }
}

TEST(ProblemJson, RoundTripAndValidation) {
  const auto p = two_sided_problem(19, 2, 7);
  const auto q = io::problem_from_json(io::to_json(p));
  EXPECT_EQ(q, p);
  EXPECT_EQ(q.label, p.label);
  auto j = io::to_json(p);
  j["wants"][0] = 2;
  EXPECT_THROW(io::problem_from_json(j), Error);
}

TEST(MatrixText, RoundTrip) {
  const auto c = ex1_code();
  const auto text = io::to_matrix_text(c);
  EXPECT_EQ(text.substr(0, 21), "10001000000000000000\n");  // y1 + y5
  EXPECT_EQ(io::code_from_matrix_text(text), c);
  const auto v = substitute(c, 1);
  EXPECT_EQ(io::code_from_matrix_text(io::to_matrix_text(v), 2), v);
  EXPECT_EQ(io::code_from_matrix_text("# comment\n101\n\n011\n"), LinearCode::scalar(3, {{1, 3}, {2, 3}}));
  EXPECT_THROW(io::code_from_matrix_text("101\n01\n"), Error);
  EXPECT_THROW(io::code_from_matrix_text("1x1\n"), Error);
  EXPECT_THROW(io::code_from_matrix_text("101\n", 2), Error);
  EXPECT_THROW(io::code_from_matrix_text(""), Error);
}

TEST(CodeText, SniffsFormat) {
  const auto c = ex1_code();
  EXPECT_EQ(io::code_from_text(io::dump(io::to_json(c)), "x"), c);
  EXPECT_EQ(io::code_from_text(io::to_matrix_text(c), "x"), c);
}

TEST(ScheduleJson, RoundTrip) {
  const auto s = build_schedule(construct({CodeClass::delta_divides_k_minus_lambda, 21, 4, 1}), 2,
                                one_sided_problem(21, 4));
  const auto j = io::to_json(s);
  const auto& step = j["receivers"][0]["steps"][0];
  EXPECT_TRUE(step.contains("sum_index"));
  EXPECT_TRUE(step.contains("coeffs"));
  EXPECT_TRUE(step.contains("cancel"));
  EXPECT_TRUE(step.contains("recovers"));
  const auto back = io::schedule_from_json(io::parse_json(io::dump(j)));
  EXPECT_EQ(back.code, s.code);
  EXPECT_EQ(back.problem, s.problem);
  ASSERT_EQ(back.receivers.size(), s.receivers.size());
  for (std::size_t k = 0; k < s.receivers.size(); ++k) {
    for (std::size_t l = 0; l < s.receivers[k].size(); ++l) {
      EXPECT_EQ(back.receivers[k][l].coeffs, s.receivers[k][l].coeffs);
      EXPECT_EQ(back.receivers[k][l].cancel, s.receivers[k][l].cancel);
      EXPECT_EQ(back.receivers[k][l].side, s.receivers[k][l].side);
      EXPECT_EQ(back.receivers[k][l].recovers, s.receivers[k][l].recovers);
    }
  }
  EXPECT_EQ(io::dump(io::to_json(back)), io::dump(j));
}

TEST(GoldenData, ManifestAndErrataLoad) {
  const auto m = fixtures::manifest();
  EXPECT_EQ(m.size(), 22u);
  for (const auto& e : m) {
    const auto g = fixtures::golden(e.id);
    EXPECT_EQ(g.K, e.K);
    EXPECT_EQ(g.t, e.U + 1);
    EXPECT_EQ(g.rows.size(), static_cast<std::size_t>(e.K - e.delta)) << e.id;
  }
  const auto errata = fixtures::errata();
  ASSERT_EQ(errata.size(), 2u);
  for (const auto& x : errata) {
    const auto g = fixtures::golden(x.example);
    ASSERT_LT(x.row, g.rows.size());
    EXPECT_EQ(g.rows[x.row], x.printed);
    EXPECT_FALSE(x.note.empty());
  }
}

TEST(ReportJson, Fields) {
  VerificationReport r = check_optimality({20, 0, 4}, ex1_code());
  const auto j = io::to_json(r);
  EXPECT_EQ(j["rate"], "1/16");
  EXPECT_EQ(j["capacity"], "1/16");
  EXPECT_EQ(j["optimal"], true);
  EXPECT_EQ(j["receivers"].size(), 20u);
}
