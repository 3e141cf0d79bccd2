#pragma once

// Multiple-unicast index coding instances and the cyclic symmetric antidote
// patterns. Messages and receivers are numbered 1..K; all index arithmetic
// wraps modulo K onto that range.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "vlic/error.hpp"

namespace vlic {

/// Canonical representative of i modulo K in 1..K.
constexpr int wrap_index(long long i, int K) {
  const long long r = ((i - 1) % K + K) % K;
  return static_cast<int>(r) + 1;
}

struct ProblemSpec {
  int K = 0;
  std::vector<int> wants;                   ///< wants[k-1]: message demanded by receiver k
  std::vector<std::vector<int>> antidotes;  ///< sorted side-information sets
  std::string label;

  const std::vector<int>& antidotes_of(int receiver) const { return antidotes.at(receiver - 1); }
  int wanted_by(int receiver) const { return wants.at(receiver - 1); }

  /// Throws Errc::invalid_problem on any broken invariant.
  void validate() const {
    auto fail = [](const std::string& why) { throw Error(Errc::invalid_problem, why); };
    if (K < 1) fail("K must be positive");
    if (wants.size() != static_cast<std::size_t>(K) || antidotes.size() != static_cast<std::size_t>(K)) {
      fail("expected " + std::to_string(K) + " receivers");
    }
    std::vector<bool> demanded(K + 1, false);
    for (int k = 1; k <= K; ++k) {
      const int w = wants[k - 1];
      if (w < 1 || w > K) fail("receiver " + std::to_string(k) + " wants message " + std::to_string(w));
      if (demanded[w]) fail("message " + std::to_string(w) + " demanded twice");
      demanded[w] = true;
      const auto& a = antidotes[k - 1];
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 1 || a[j] > K) fail("antidote " + std::to_string(a[j]) + " out of range");
        if (a[j] == w) fail("receiver " + std::to_string(k) + " has its wanted message as side information");
        if (j > 0 && a[j - 1] >= a[j]) fail("antidote set of receiver " + std::to_string(k) + " is not a sorted set");
      }
    }
  }

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
    return a.K == b.K && a.wants == b.wants && a.antidotes == b.antidotes;
  }
};

/// K messages, U antidotes before and D after each receiver's own message.
struct SymmetricParams {
  int K = 0;
  int U = 0;
  int D = 0;

  int antidote_total() const noexcept { return U + D; }
  int delta() const noexcept { return std::abs(D - U); }

  void validate() const {
    if (U < 0 || D < 0) throw Error(Errc::antidote_count, "U and D must be non-negative");
    if (U + D >= K) {
      throw Error(Errc::antidote_count, "U + D = " + std::to_string(U + D) + " must be below K = " + std::to_string(K));
    }
  }
};

inline ProblemSpec two_sided_problem(int K, int U, int D) {
  SymmetricParams{K, U, D}.validate();
  ProblemSpec p;
  p.K = K;
  p.label = "two-sided K=" + std::to_string(K) + " U=" + std::to_string(U) + " D=" + std::to_string(D);
  for (int k = 1; k <= K; ++k) {
    p.wants.push_back(k);
    std::vector<int> a;
    for (int u = 1; u <= U; ++u) a.push_back(wrap_index(k - u, K));
    for (int d = 1; d <= D; ++d) a.push_back(wrap_index(k + d, K));
    std::sort(a.begin(), a.end());
    p.antidotes.push_back(std::move(a));
  }
  return p;
}

inline ProblemSpec one_sided_problem(int K, int D) {
  ProblemSpec p = two_sided_problem(K, 0, D);
  p.label = "one-sided K=" + std::to_string(K) + " D=" + std::to_string(D);
  return p;
}

/// The two-sided problem solved by extending a one-sided (K, D) scalar code
/// to blocks of U+1 components: U antidotes up, D+U down.
inline ProblemSpec extended_problem(int K, int U, int D) {
  if (U == 0) return one_sided_problem(K, D);
  ProblemSpec p = two_sided_problem(K, U, D + U);
  p.label = "extended K=" + std::to_string(K) + " U=" + std::to_string(U) + " D=" + std::to_string(D + U) +
            " blocks=" + std::to_string(U + 1) + " seed D=" + std::to_string(D);
  return p;
}

/// Relabels message k as -k (mod K). Swaps the roles of U and D.
inline ProblemSpec mirror(const ProblemSpec& p) {
  ProblemSpec out;
  out.K = p.K;
  out.label = p.label.empty() ? "mirrored" : "mirrored " + p.label;
  out.wants.resize(p.K);
  out.antidotes.resize(p.K);
  for (int k = 1; k <= p.K; ++k) {
    const int mk = wrap_index(-k, p.K);
    out.wants[mk - 1] = wrap_index(-p.wanted_by(k), p.K);
    auto& a = out.antidotes[mk - 1];
    for (int x : p.antidotes_of(k)) a.push_back(wrap_index(-x, p.K));
    std::sort(a.begin(), a.end());
  }
  return out;
}

}  // namespace vlic
