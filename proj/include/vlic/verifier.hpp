#pragma once

// Independent checks: span-based decodability, rate against capacity, an
// exhaustive minrank search for small instances, and comparison of generated
// codes with printed listings.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "vlic/code.hpp"
#include "vlic/constructions.hpp"
#include "vlic/error.hpp"
#include "vlic/gf2.hpp"
#include "vlic/problem.hpp"
#include "vlic/rational.hpp"

namespace vlic {

struct ReceiverResult {
  int receiver = 0;
  bool decodable = false;
  /// One entry per wanted component: coefficients over the code rows whose
  /// sum equals that component plus side information. Empty if undecodable.
  std::vector<gf2::BitVector> witnesses;
  std::vector<int> missing;  ///< components that are not recoverable
};

/// Receiver k decodes when every component of its wanted block lies in the
/// span of the code rows plus the unit vectors of its antidote components.
/// Projecting the antidote columns out of the rows gives the same test with
/// witnesses over the code rows only.
inline std::vector<ReceiverResult> decodable(const ProblemSpec& problem, const LinearCode& code) {
  if (problem.K != code.K()) {
    throw Error(Errc::shape, "problem has K=" + std::to_string(problem.K) + ", code has K=" + std::to_string(code.K()));
  }
  problem.validate();
  const int t = code.t();
  std::vector<ReceiverResult> out;
  out.reserve(static_cast<std::size_t>(problem.K));
  for (int k = 1; k <= problem.K; ++k) {
    gf2::BitVector side(code.width());
    for (int a : problem.antidotes_of(k)) {
      for (int i = 1; i <= t; ++i) side.set(code.column({a, i}));
    }
    gf2::SpanBasis span(code.width());
    for (const auto& r : code.symbols().row_span()) {
      gf2::BitVector p = r;
      p.clear_where(side);
      span.insert(p);
    }
    ReceiverResult res;
    res.receiver = k;
    for (int i = 1; i <= t; ++i) {
      const ComponentLabel target{problem.wanted_by(k), i};
      auto combo = span.express(gf2::BitVector::unit(code.width(), code.column(target)));
      if (combo) {
        res.witnesses.push_back(std::move(*combo));
      } else {
        res.missing.push_back(i);
      }
    }
    res.decodable = res.missing.empty();
    if (!res.decodable) res.witnesses.clear();
    out.push_back(std::move(res));
  }
  return out;
}

inline bool all_decodable(const std::vector<ReceiverResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const ReceiverResult& r) { return r.decodable; });
}

struct VerificationReport {
  std::string problem_id;
  std::string code_id;
  std::vector<ReceiverResult> receivers;
  bool decodable = false;
  Rational rate;
  std::optional<Rational> capacity;  ///< only for symmetric problems
  bool optimal = false;
  std::vector<std::string> notes;
};

/// (U, D) such that `problem` is two_sided_problem(K, U, D), if any.
inline std::optional<SymmetricParams> symmetric_params(const ProblemSpec& problem) {
  if (problem.K < 1 || problem.antidotes.size() != static_cast<std::size_t>(problem.K)) return std::nullopt;
  const int total = static_cast<int>(problem.antidotes_of(1).size());
  for (int U = 0; U <= total; ++U) {
    const SymmetricParams p{problem.K, U, total - U};
    if (p.antidote_total() >= problem.K) return std::nullopt;
    if (two_sided_problem(p.K, p.U, p.D) == problem) return p;
  }
  return std::nullopt;
}

/// Rate of `code` against the symmetric capacity, with full decodability.
inline VerificationReport check_optimality(const SymmetricParams& params, const LinearCode& code) {
  VerificationReport report;
  const ProblemSpec problem = two_sided_problem(params.K, params.U, params.D);
  report.problem_id = problem.label;
  report.receivers = decodable(problem, code);
  report.decodable = all_decodable(report.receivers);
  report.rate = code.rate();
  report.capacity = capacity(params.K, params.U, params.D);
  report.optimal = report.decodable && report.rate == *report.capacity;
  if (report.decodable && report.rate > *report.capacity) {
    // A decodable linear code can not beat capacity; this flags a bad bound.
    report.notes.push_back("rate " + report.rate.to_string() + " exceeds capacity " + report.capacity->to_string());
  }
  if (!report.decodable) report.notes.push_back("not decodable for every receiver");
  return report;
}

/// Report for an arbitrary problem; capacity is filled in when the problem
/// turns out to be symmetric.
inline VerificationReport verify(const ProblemSpec& problem, const LinearCode& code) {
  if (auto params = symmetric_params(problem)) {
    VerificationReport r = check_optimality(*params, code);
    r.problem_id = problem.label;
    return r;
  }
  VerificationReport report;
  report.problem_id = problem.label;
  report.receivers = decodable(problem, code);
  report.decodable = all_decodable(report.receivers);
  report.rate = code.rate();
  report.notes.push_back("problem is not symmetric cyclic; no capacity reference");
  if (!report.decodable) report.notes.push_back("not decodable for every receiver");
  return report;
}

namespace detail {

/// Gaussian binomial [n choose k]_2, saturating at `cap`.
inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  // [n,k] = prod_{i<k} (2^{n-i} - 1) / (2^{i+1} - 1), exact at each prefix.
  unsigned __int128 v = 1;
  for (int i = 0; i < k; ++i) {
    v = v * ((static_cast<unsigned __int128>(1) << (n - i)) - 1);
    v = v / ((static_cast<unsigned __int128>(1) << (i + 1)) - 1);
    if (v > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(v);
}

/// Scalar decodability on bitmask rows, written independently of SpanBasis.
inline bool mask_decodable(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> side,
                           std::span<const int> wanted) {
  // Basis kept sorted by descending top bit, all top bits distinct, so a single
  // pass of v = min(v, v ^ b) fully reduces v.
  std::uint64_t basis[64];
  for (std::size_t k = 0; k < side.size(); ++k) {
    int n = 0;
    for (std::uint64_t r : rows) {
      std::uint64_t v = r & ~side[k];
      for (int j = 0; j < n; ++j) v = std::min(v, v ^ basis[j]);
      if (v == 0) continue;
      int j = n++;
      for (; j > 0 && basis[j - 1] < v; --j) basis[j] = basis[j - 1];
      basis[j] = v;
    }
    std::uint64_t target = std::uint64_t{1} << (wanted[k] - 1);
    for (int j = 0; j < n; ++j) target = std::min(target, target ^ basis[j]);
    if (target != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Limit on the number of candidate row spaces the oracle will visit.
inline constexpr std::uint64_t minrank_budget = std::uint64_t{1} << 24;

/// Smallest l <= max_len such that some l-row scalar code decodes `problem`,
/// or nullopt. Candidates are row spaces, one reduced echelon matrix each,
/// so the search is exhaustive up to row operations.
inline std::optional<int> minrank_oracle(const ProblemSpec& problem, int max_len, unsigned threads = 0) {
  problem.validate();
  const int K = problem.K;
  if (K > 63) throw Error(Errc::instance_too_large, "K = " + std::to_string(K) + " exceeds the oracle's word size");
  max_len = std::min(max_len, K);
  std::uint64_t total = 0;
  for (int l = 1; l <= max_len; ++l) {
    total += detail::gaussian_binomial(K, l, minrank_budget);
    if (total > minrank_budget) {
      throw Error(Errc::instance_too_large, "K=" + std::to_string(K) + ", max_len=" + std::to_string(max_len) +
                                                " needs more than 2^24 candidate codes");
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::uint64_t> side(static_cast<std::size_t>(K), 0);
  std::vector<int> wanted(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    for (int a : problem.antidotes_of(k)) side[k - 1] |= std::uint64_t{1} << (a - 1);
    wanted[k - 1] = problem.wanted_by(k);
  }

  for (int l = 1; l <= max_len; ++l) {
    // Jobs are pivot sets; each job walks all fillings of its free entries.
    std::vector<std::vector<int>> pivot_sets;
    std::vector<int> pick(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) pick[i] = i;
    while (true) {
      pivot_sets.push_back(pick);
      int i = l - 1;
      while (i >= 0 && pick[i] == K - l + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    auto worker = [&] {
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(l));
      std::vector<std::pair<int, int>> free;  // (row, column)
      for (std::size_t job = next++; job < pivot_sets.size() && !found; job = next++) {
        const auto& piv = pivot_sets[job];
        std::uint64_t pivot_mask = 0;
        for (int p : piv) pivot_mask |= std::uint64_t{1} << p;
        free.clear();
        for (int r = 0; r < l; ++r) {
          for (int c = piv[r] + 1; c < K; ++c) {
            if (!(pivot_mask >> c & 1U)) free.emplace_back(r, c);
          }
        }
        const std::uint64_t fillings = std::uint64_t{1} << free.size();
        for (std::uint64_t f = 0; f < fillings; ++f) {
          if ((f & 0xFFF) == 0 && found) break;
          for (int r = 0; r < l; ++r) rows[r] = std::uint64_t{1} << piv[r];
          for (std::size_t b = 0; b < free.size(); ++b) {
            if (f >> b & 1U) rows[free[b].first] |= std::uint64_t{1} << free[b].second;
          }
          if (detail::mask_decodable(rows, side, wanted)) {
            found = true;
            break;
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, pivot_sets.size()));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    pool.clear();
    if (found) return l;
  }
  return std::nullopt;
}

/// A listing as printed: message indices may fall outside 1..K.
struct GoldenCode {
  std::string id;
  int K = 0;
  int t = 1;
  std::vector<std::vector<ComponentLabel>> rows;
};

/// Wraps every message index into 1..K.
inline LinearCode normalize(const GoldenCode& g) {
  std::vector<std::vector<ComponentLabel>> rows = g.rows;
  for (auto& row : rows) {
    for (auto& c : row) c.message = wrap_index(c.message, g.K);
  }
  return LinearCode::from_rows(g.K, g.t, rows);
}

struct Erratum {
  std::string example;
  std::size_t row = 0;  ///< 0-based index into the printed listing
  std::vector<ComponentLabel> printed;
  std::vector<ComponentLabel> normalized;
  std::string note;
};

struct GoldenDiff {
  std::string id;
  bool identical = false;  ///< same row set after index normalization alone
  bool accepted = false;   ///< identical, or every mismatch covered by an erratum with decodability kept
  std::vector<std::vector<ComponentLabel>> only_generated;
  std::vector<std::vector<ComponentLabel>> only_golden;
  std::vector<Erratum> applied;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<ComponentLabel> labels_of(const LinearCode& code, const gf2::BitVector& row) {
  std::vector<ComponentLabel> out;
  for (std::size_t c : row.set_bits()) out.push_back(code.label(c));
  return out;
}

inline gf2::BitVector row_of(const LinearCode& code, const std::vector<ComponentLabel>& labels) {
  gf2::BitVector v(code.width());
  for (auto c : labels) v.flip(LinearCode::column(code.K(), code.t(), {wrap_index(c.message, code.K()), c.component}));
  return v;
}

}  // namespace detail

/// Row-set comparison after mod-K normalization. A residual mismatch is
/// accepted only when each differing printed row has an erratum whose
/// corrected row accounts for it and both the generated code and the
/// corrected listing are decodable on `problem` (when given).
inline GoldenDiff compare_golden(const LinearCode& generated, const GoldenCode& golden,
                                 std::span<const Erratum> errata = {}, const ProblemSpec* problem = nullptr) {
  if (generated.K() != golden.K || generated.t() != golden.t) {
    throw Error(Errc::shape, "golden " + golden.id + " has K=" + std::to_string(golden.K) + ", t=" +
                                 std::to_string(golden.t) + "; generated code has K=" + std::to_string(generated.K()) +
                                 ", t=" + std::to_string(generated.t()));
  }
  GoldenDiff diff;
  diff.id = golden.id;
  const LinearCode printed = normalize(golden);

  std::multiset<gf2::BitVector> gen(generated.symbols().row_span().begin(), generated.symbols().row_span().end());
  std::multiset<gf2::BitVector> gold(printed.symbols().row_span().begin(), printed.symbols().row_span().end());
  std::multiset<gf2::BitVector> only_gen;
  std::multiset<gf2::BitVector> only_gold;
  std::set_difference(gen.begin(), gen.end(), gold.begin(), gold.end(), std::inserter(only_gen, only_gen.end()));
  std::set_difference(gold.begin(), gold.end(), gen.begin(), gen.end(), std::inserter(only_gold, only_gold.end()));
  for (const auto& r : only_gen) diff.only_generated.push_back(detail::labels_of(generated, r));
  for (const auto& r : only_gold) diff.only_golden.push_back(detail::labels_of(printed, r));
  diff.identical = only_gen.empty() && only_gold.empty();

  // Entries whose printed indices were out of range are recorded even when
  // normalization alone already matched.
  gf2::BitMatrix corrected = printed.symbols();
  bool covered = true;
  for (const auto& e : errata) {
    if (e.example != golden.id) continue;
    if (e.row >= golden.rows.size() || detail::row_of(printed, golden.rows[e.row]) != detail::row_of(printed, e.printed)) {
      diff.notes.push_back("erratum for row " + std::to_string(e.row) + " does not match the listing");
      covered = false;
      continue;
    }
    corrected.row(e.row) = detail::row_of(printed, e.normalized);
    diff.applied.push_back(e);
    diff.notes.push_back("row " + std::to_string(e.row) + ": " + e.note);
  }
  if (diff.identical) {
    diff.accepted = covered;
    return diff;
  }

  std::multiset<gf2::BitVector> fixed(corrected.row_span().begin(), corrected.row_span().end());
  if (fixed != gen) {
    diff.notes.push_back("mismatched rows not covered by errata");
    return diff;
  }
  if (problem == nullptr) {
    diff.notes.push_back("no problem given; errata can not be checked for decodability");
    return diff;
  }
  const bool gen_ok = all_decodable(decodable(*problem, generated));
  const bool fixed_ok = all_decodable(decodable(*problem, LinearCode(golden.K, golden.t, corrected)));
  if (!all_decodable(decodable(*problem, printed))) diff.notes.push_back("printed listing is not decodable as printed");
  if (!gen_ok) diff.notes.push_back("generated code is not decodable");
  if (!fixed_ok) diff.notes.push_back("corrected listing is not decodable");
  diff.accepted = covered && gen_ok && fixed_ok;
  return diff;
}

}  // namespace vlic
