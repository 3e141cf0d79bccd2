#pragma once

// Scalar-to-vector extension.
//
// Composite symbols y_k = x_{k,1} + x_{k-1,2} + ... + x_{k-U,U+1} pack the
// K(U+1) message components into K symbols. Substituting them into a scalar
// code for the one-sided (K, D) problem gives a code of the same length for
// the two-sided problem with U antidote blocks up and D+U down.
//
// Decoding is constructive: receiver k recovers its components from last to
// first. Step l uses the scalar decoding sum of receiver k+U+1-l, which
// contains x_{k,U+2-l} plus components of block k already recovered in
// earlier steps; everything else in it is side information.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlic/code.hpp"
#include "vlic/error.hpp"
#include "vlic/gf2.hpp"
#include "vlic/problem.hpp"

namespace vlic {

class SubstitutionMap {
 public:
  SubstitutionMap(int K, int U) : K_(K), U_(U) {
    if (K < 1 || U < 0 || U + 1 > K) {
      throw Error(Errc::shape, "substitution needs 0 <= U < K, got K=" + std::to_string(K) + ", U=" + std::to_string(U));
    }
  }

  int K() const noexcept { return K_; }
  int U() const noexcept { return U_; }
  int block() const noexcept { return U_ + 1; }

  /// Components of y_k, ordered by component index.
  std::vector<ComponentLabel> components_of(int k) const {
    std::vector<ComponentLabel> out;
    for (int i = 1; i <= U_ + 1; ++i) out.push_back({wrap_index(k + 1 - i, K_), i});
    return out;
  }

  /// The y index whose expansion contains component (message, i).
  int symbol_containing(ComponentLabel c) const { return wrap_index(c.message + c.component - 1, K_); }

 private:
  int K_;
  int U_;
};

/// Replaces every y_k in a scalar code by its U+1 components.
inline LinearCode substitute(const LinearCode& scalar, int U) {
  if (!scalar.is_scalar()) {
    throw Error(Errc::not_scalar, "substitution input has t = " + std::to_string(scalar.t()));
  }
  const SubstitutionMap map(scalar.K(), U);
  const int t = map.block();
  gf2::BitMatrix m(0, static_cast<std::size_t>(scalar.K()) * static_cast<std::size_t>(t));
  for (std::size_t r = 0; r < scalar.length(); ++r) {
    gf2::BitVector row(m.cols());
    for (std::size_t y : scalar.symbols().row(r).set_bits()) {
      for (const auto& c : map.components_of(static_cast<int>(y) + 1)) {
        row.flip(LinearCode::column(scalar.K(), t, c));
      }
    }
    m.append_row(std::move(row));
  }
  return LinearCode(scalar.K(), t, std::move(m));
}

/// A combination of code symbols equal to y_k + sum_j y_{k + offsets[j]}.
struct SumWitness {
  int receiver = 0;
  gf2::BitVector coeffs;     ///< over the scalar code's rows
  std::vector<int> offsets;  ///< ascending, each in 1..D for the one-sided seed
};

/// Decoding sum for receiver k of a scalar code: solves over the code rows
/// augmented with the unit vectors of k's antidotes. Offsets are the antidotes
/// that appear in the sum, relative to k.
inline SumWitness find_sum(const LinearCode& scalar, const ProblemSpec& problem, int k) {
  if (!scalar.is_scalar()) throw Error(Errc::not_scalar, "find_sum needs a scalar code");
  if (scalar.K() != problem.K) {
    throw Error(Errc::shape, "code has K=" + std::to_string(scalar.K()) + ", problem has K=" + std::to_string(problem.K));
  }
  if (k < 1 || k > problem.K) throw Error(Errc::shape, "receiver " + std::to_string(k) + " out of range");
  const auto& antidotes = problem.antidotes_of(k);
  const std::size_t l = scalar.length();

  gf2::SpanBasis span(scalar.width());
  for (const auto& r : scalar.symbols().row_span()) span.insert(r);
  for (int a : antidotes) span.insert(gf2::BitVector::unit(scalar.width(), static_cast<std::size_t>(a - 1)));

  const int wanted = problem.wanted_by(k);
  auto combo = span.express(gf2::BitVector::unit(scalar.width(), static_cast<std::size_t>(wanted - 1)));
  if (!combo) throw Error(Errc::undecodable_receiver, "undecodable receiver " + std::to_string(k));

  SumWitness w;
  w.receiver = k;
  w.coeffs = gf2::BitVector(l);
  for (std::size_t i = 0; i < l; ++i) w.coeffs.set(i, combo->test(i));
  // The code part alone equals the wanted unit plus the antidote units used.
  for (std::size_t j = 0; j < antidotes.size(); ++j) {
    if (combo->test(l + j)) w.offsets.push_back(wrap_index(antidotes[j] - k, problem.K));
  }
  std::sort(w.offsets.begin(), w.offsets.end());

  gf2::BitVector expected = gf2::BitVector::unit(scalar.width(), static_cast<std::size_t>(wanted - 1));
  for (int a : w.offsets) expected.flip(static_cast<std::size_t>(wrap_index(k + a, problem.K) - 1));
  if (gf2::left_multiply(w.coeffs, scalar.symbols()) != expected) {
    throw std::logic_error("find_sum: witness does not reproduce the decoding sum");
  }
  return w;
}

struct DecodingStep {
  int sum_index = 0;                   ///< scalar receiver whose sum is used
  gf2::BitVector coeffs;               ///< over the vector code's rows
  std::vector<ComponentLabel> cancel;  ///< own components recovered earlier
  std::vector<ComponentLabel> side;    ///< side-information components in the sum
  ComponentLabel recovers;
};

struct DecodingSchedule {
  int K = 0;
  int U = 0;
  LinearCode code;      ///< the extended vector code
  ProblemSpec problem;  ///< the problem it decodes
  std::vector<std::vector<DecodingStep>> receivers;

  int block() const noexcept { return code.t(); }
  const std::vector<DecodingStep>& steps_of(int k) const { return receivers.at(static_cast<std::size_t>(k - 1)); }
};

namespace detail {

inline int seed_window(const ProblemSpec& seed) {
  const int K = seed.K;
  const int D = static_cast<int>(seed.antidotes_of(1).size());
  if (!(seed == one_sided_problem(K, D))) {
    throw Error(Errc::invalid_problem, "decoding schedules are built from a one-sided symmetric seed problem");
  }
  return D;
}

inline gf2::BitVector antidote_mask(const ProblemSpec& problem, int t, int k) {
  gf2::BitVector mask(static_cast<std::size_t>(problem.K) * static_cast<std::size_t>(t));
  for (int a : problem.antidotes_of(k)) {
    for (int i = 1; i <= t; ++i) mask.set(LinearCode::column(problem.K, t, {a, i}));
  }
  return mask;
}

}  // namespace detail

/// Builds the constructive schedule for the code obtained by substituting
/// blocks of U+1 into `scalar`, which must decode the one-sided `seed`.
/// Every step is checked: its sum must reduce to exactly one unknown own
/// component once side information and earlier recoveries are removed.
inline DecodingSchedule build_schedule(const LinearCode& scalar, int U, const ProblemSpec& seed) {
  const int K = scalar.K();
  const int D = detail::seed_window(seed);
  if (U < 0 || U + (D + U) >= K) {
    throw Error(Errc::antidote_count, "extension needs U + (D+U) < K, got U=" + std::to_string(U) +
                                          ", D=" + std::to_string(D) + ", K=" + std::to_string(K));
  }

  std::vector<SumWitness> sums;
  sums.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) sums.push_back(find_sum(scalar, seed, k));

  DecodingSchedule schedule;
  schedule.K = K;
  schedule.U = U;
  schedule.code = substitute(scalar, U);
  schedule.problem = extended_problem(K, U, D);
  const int t = U + 1;

  for (int k = 1; k <= K; ++k) {
    const gf2::BitVector side_mask = detail::antidote_mask(schedule.problem, t, k);
    std::vector<bool> known(static_cast<std::size_t>(t) + 1, false);
    auto& steps = schedule.receivers.emplace_back();
    for (int l = 1; l <= t; ++l) {
      const int j = wrap_index(k + U + 1 - l, K);
      const SumWitness& w = sums[static_cast<std::size_t>(j - 1)];
      DecodingStep step;
      step.sum_index = j;
      step.coeffs = w.coeffs;
      step.recovers = {k, U + 2 - l};
      for (int a : w.offsets) {
        if (a <= l - 1) step.cancel.push_back({k, U + 2 - l + a});
      }

      const gf2::BitVector sum = gf2::left_multiply(step.coeffs, schedule.code.symbols());
      for (std::size_t col : sum.set_bits()) {
        const ComponentLabel c = schedule.code.label(col);
        if (c.message == k) {
          if (c == step.recovers) continue;
          if (!known[static_cast<std::size_t>(c.component)] ||
              std::find(step.cancel.begin(), step.cancel.end(), c) == step.cancel.end()) {
            throw Error(Errc::interference, "receiver " + std::to_string(k) + " step " + std::to_string(l) +
                                                ": " + to_string(c) + " is not yet known");
          }
        } else if (side_mask.test(col)) {
          step.side.push_back(c);
        } else {
          throw Error(Errc::interference, "receiver " + std::to_string(k) + " step " + std::to_string(l) + ": " +
                                              to_string(c) + " is neither wanted nor side information");
        }
      }
      if (!sum.test(schedule.code.column(step.recovers))) {
        throw std::logic_error("build_schedule: step sum lost its target component");
      }
      for (const auto& c : step.cancel) {
        if (!sum.test(schedule.code.column(c))) {
          throw std::logic_error("build_schedule: cancellation term " + to_string(c) + " absent from the sum");
        }
      }
      known[static_cast<std::size_t>(step.recovers.component)] = true;
      steps.push_back(std::move(step));
    }
  }
  return schedule;
}

/// Relabels a schedule under message k -> -k, turning a (U up, D down)
/// schedule into one for (D up, U down).
inline DecodingSchedule mirror(const DecodingSchedule& s) {
  auto flip = [&](ComponentLabel c) { return ComponentLabel{wrap_index(-c.message, s.K), c.component}; };
  DecodingSchedule out;
  out.K = s.K;
  out.U = s.U;
  out.code = mirror(s.code);
  out.problem = mirror(s.problem);
  out.receivers.resize(s.receivers.size());
  for (int k = 1; k <= s.K; ++k) {
    auto& dst = out.receivers[static_cast<std::size_t>(wrap_index(-k, s.K) - 1)];
    for (const auto& step : s.steps_of(k)) {
      DecodingStep m = step;
      m.sum_index = wrap_index(-step.sum_index, s.K);
      m.recovers = flip(step.recovers);
      for (auto& c : m.cancel) c = flip(c);
      for (auto& c : m.side) c = flip(c);
      std::sort(m.side.begin(), m.side.end());
      dst.push_back(std::move(m));
    }
  }
  return out;
}

/// Vector code and schedule for the two-sided (K, U, D) problem from a scalar
/// code for the one-sided (K, |D-U|) problem. U > D is handled by building
/// the (D, U) instance and mirroring.
inline DecodingSchedule build_two_sided(const LinearCode& scalar, int U, int D) {
  SymmetricParams{scalar.K(), U, D}.validate();
  const int lo = std::min(U, D);
  const ProblemSpec seed = one_sided_problem(scalar.K(), std::abs(D - U));
  DecodingSchedule s = build_schedule(scalar, lo, seed);
  return U > D ? mirror(s) : s;
}

/// Codeword = symbols * message, message indexed like the code's columns.
inline gf2::BitVector encode(const LinearCode& code, const gf2::BitVector& message) {
  if (message.size() != code.width()) {
    throw Error(Errc::shape, "message has " + std::to_string(message.size()) + " components, code expects " +
                                 std::to_string(code.width()));
  }
  return gf2::multiply(code.symbols(), message);
}

/// What one receiver already knows: values on the components marked in `known`.
struct SideInformation {
  gf2::BitVector values;
  gf2::BitVector known;
};

/// Side information of receiver k for a full message: exactly its antidote blocks.
inline SideInformation side_information_for(const DecodingSchedule& s, const gf2::BitVector& message, int k) {
  SideInformation info;
  info.known = detail::antidote_mask(s.problem, s.block(), k);
  info.values = message & info.known;
  return info;
}

/// Runs receiver k's schedule. Uses only the codeword, the side information
/// and components recovered in earlier steps. Returns components 1..U+1 of
/// block k (bit i-1 = component i).
inline gf2::BitVector decode_with_schedule(const DecodingSchedule& s, const gf2::BitVector& codeword,
                                           const SideInformation& side, int k) {
  if (k < 1 || k > s.K || s.receivers.size() != static_cast<std::size_t>(s.K)) {
    throw Error(Errc::schedule_mismatch, "receiver " + std::to_string(k) + " not in schedule");
  }
  if (codeword.size() != s.code.length()) {
    throw Error(Errc::shape, "codeword has " + std::to_string(codeword.size()) + " symbols, code has " +
                                 std::to_string(s.code.length()));
  }
  if (side.known.size() != s.code.width() || side.values.size() != s.code.width()) {
    throw Error(Errc::shape, "side information width does not match the code");
  }
  if (side.known != detail::antidote_mask(s.problem, s.block(), k)) {
    throw Error(Errc::schedule_mismatch, "side information is not receiver " + std::to_string(k) + "'s antidote set");
  }

  gf2::BitVector recovered(static_cast<std::size_t>(s.block()));
  for (const auto& step : s.steps_of(k)) {
    if (step.recovers.message != k) {
      throw Error(Errc::schedule_mismatch, "step recovers " + to_string(step.recovers) + " for receiver " + std::to_string(k));
    }
    bool value = step.coeffs.dot(codeword);
    for (const auto& c : step.side) value ^= side.values.test(s.code.column(c));
    for (const auto& c : step.cancel) value ^= recovered.test(static_cast<std::size_t>(c.component - 1));
    recovered.set(static_cast<std::size_t>(step.recovers.component - 1), value);
  }
  return recovered;
}

}  // namespace vlic
