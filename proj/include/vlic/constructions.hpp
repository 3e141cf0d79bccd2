#pragma once

// Capacity of the symmetric cyclic problems and the explicit optimal scalar
// codes for one-sided instances with K messages and delta antidotes.
//
// Every construction emits exactly K - delta symbols. Message indices are
// wrapped into 1..K before the row is formed.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vlic/code.hpp"
#include "vlic/error.hpp"
#include "vlic/problem.hpp"
#include "vlic/rational.hpp"

namespace vlic {

/// Symmetric capacity per message for U antidotes up and D down.
inline Rational capacity(int K, int U, int D) {
  SymmetricParams{K, U, D}.validate();
  if (U + D == K - 1) return Rational(1);
  const int lo = std::min(U, D);
  const int hi = std::max(U, D);
  return Rational(lo + 1, K + lo - hi);
}

/// Divisibility classes, numbered as in the catalogue (1..10). Class 4 is
/// recognized but has no explicit construction.
enum class CodeClass : int {
  delta_divides_k = 1,                    // delta | K
  complement_divides_k = 2,               // K-delta | K
  half_gap_divides_delta = 3,             // K/2-delta | delta
  excess_divides_half = 4,                // delta-K/2 | K/2
  delta_divides_k_minus_lambda = 5,       // delta | K-lambda, lambda | delta
  complement_divides_k_minus_lambda = 6,  // K-delta | K-lambda, lambda | K-delta
  delta_plus_lambda_divides_k = 7,        // delta+lambda | K, lambda | delta
  complement_plus_lambda_divides_k = 8,   // K-delta+lambda | K, lambda | K-delta
  delta_divides_k_plus_lambda = 9,        // delta | K+lambda, lambda | delta
  complement_divides_k_plus_lambda = 10,  // K-delta | K+lambda, lambda | K-delta
};

inline constexpr CodeClass all_classes[] = {
    CodeClass::delta_divides_k,
    CodeClass::complement_divides_k,
    CodeClass::half_gap_divides_delta,
    CodeClass::excess_divides_half,
    CodeClass::delta_divides_k_minus_lambda,
    CodeClass::complement_divides_k_minus_lambda,
    CodeClass::delta_plus_lambda_divides_k,
    CodeClass::complement_plus_lambda_divides_k,
    CodeClass::delta_divides_k_plus_lambda,
    CodeClass::complement_divides_k_plus_lambda,
};

constexpr int class_id(CodeClass c) noexcept { return static_cast<int>(c); }

inline CodeClass class_from_id(int id) {
  if (id < 1 || id > 10) throw Error(Errc::class_condition, "no class " + std::to_string(id) + " (valid: 1..10)");
  return static_cast<CodeClass>(id);
}

constexpr bool takes_lambda(CodeClass c) noexcept { return class_id(c) >= 5; }
constexpr bool constructible(CodeClass c) noexcept { return c != CodeClass::excess_divides_half; }

/// Derived quantities used by the individual constructions. Fields a class
/// does not use stay zero.
struct DerivedQuantities {
  int m = 0;
  int n = 0;
  int p = 0;
  int q = 0;
  int s = 0;
};

struct ConstructionParams {
  CodeClass cls = CodeClass::delta_divides_k;
  int K = 0;
  int delta = 0;
  std::optional<int> lambda;
};

namespace detail {

inline bool divides(long long a, long long b) { return a > 0 && b % a == 0; }

inline std::string not_divides(long long a, long long b) {
  return std::to_string(a) + " does not divide " + std::to_string(b);
}

/// Empty when the class condition holds for (K, delta, lambda), otherwise
/// the first failing clause.
inline std::optional<std::string> condition_failure(CodeClass c, int K, int d, int lambda) {
  auto need = [](long long a, long long b) -> std::optional<std::string> {
    if (divides(a, b)) return std::nullopt;
    return not_divides(a, b);
  };
  std::optional<std::string> f;
  switch (c) {
    case CodeClass::delta_divides_k:
      return need(d, K);
    case CodeClass::complement_divides_k:
      return need(K - d, K);
    case CodeClass::half_gap_divides_delta:
      if (K % 2 != 0) return "K = " + std::to_string(K) + " is odd";
      return need(K / 2 - d, d);
    case CodeClass::excess_divides_half:
      if (K % 2 != 0) return "K = " + std::to_string(K) + " is odd";
      return need(d - K / 2, K / 2);
    case CodeClass::delta_divides_k_minus_lambda:
      if ((f = need(d, K - lambda)) || (f = need(lambda, d))) return f;
      if ((K - lambda) / d <= 1) return "(K-lambda)/delta must exceed 1";
      return std::nullopt;
    case CodeClass::complement_divides_k_minus_lambda:
      if ((f = need(K - d, K - lambda)) || (f = need(lambda, K - d))) return f;
      return std::nullopt;
    case CodeClass::delta_plus_lambda_divides_k:
      if ((f = need(d + lambda, K)) || (f = need(lambda, d))) return f;
      return std::nullopt;
    case CodeClass::complement_plus_lambda_divides_k:
      if ((f = need(K - d + lambda, K)) || (f = need(lambda, K - d))) return f;
      return std::nullopt;
    case CodeClass::delta_divides_k_plus_lambda:
      if ((f = need(d, K + lambda)) || (f = need(lambda, d))) return f;
      if ((K + lambda) / d <= 2) return "(K+lambda)/delta must exceed 2";
      return std::nullopt;
    case CodeClass::complement_divides_k_plus_lambda:
      if ((f = need(K - d, K + lambda)) || (f = need(lambda, K - d))) return f;
      // lambda = K-delta leaves the first family with a negative tail length.
      if (lambda >= K - d) return "lambda must be below K-delta";
      return std::nullopt;
  }
  return "unknown class";
}

}  // namespace detail

/// Every lambda in 1..K for which the class condition holds.
inline std::vector<int> valid_lambdas(CodeClass c, int K, int delta) {
  std::vector<int> out;
  if (!takes_lambda(c)) return out;
  for (int lambda = 1; lambda <= K; ++lambda) {
    if (!detail::condition_failure(c, K, delta, lambda)) out.push_back(lambda);
  }
  return out;
}

struct ClassMatch {
  CodeClass cls;
  std::vector<int> lambdas;  ///< empty for classes without lambda
  bool constructible = true;
};

/// All classes whose condition holds for (K, delta), with their lambda
/// witnesses. Class 4 is listed with constructible = false.
inline std::vector<ClassMatch> applicable_classes(int K, int delta) {
  std::vector<ClassMatch> out;
  if (delta <= 0 || delta >= K) return out;
  for (CodeClass c : all_classes) {
    if (takes_lambda(c)) {
      auto ls = valid_lambdas(c, K, delta);
      if (!ls.empty()) out.push_back({c, std::move(ls), true});
    } else if (!detail::condition_failure(c, K, delta, 0)) {
      out.push_back({c, {}, constructible(c)});
    }
  }
  return out;
}

inline DerivedQuantities derive(const ConstructionParams& params) {
  const int K = params.K;
  const int d = params.delta;
  const int lambda = params.lambda.value_or(0);
  DerivedQuantities q;
  switch (params.cls) {
    case CodeClass::delta_divides_k:
      q.n = K / d;
      break;
    case CodeClass::complement_divides_k:
      q.m = K - d;
      q.n = K / q.m;
      break;
    case CodeClass::half_gap_divides_delta:
      q.m = K / 2 - d;
      q.n = K / q.m;
      q.p = d / q.m;
      break;
    case CodeClass::excess_divides_half:
      q.m = d - K / 2;
      break;
    case CodeClass::delta_divides_k_minus_lambda:
      q.n = (K - lambda) / d;
      break;
    case CodeClass::complement_divides_k_minus_lambda:
      q.m = K - d;
      q.q = (K - lambda) / q.m;
      break;
    case CodeClass::delta_plus_lambda_divides_k:
      q.p = d / lambda;
      q.n = K / (d + lambda);
      break;
    case CodeClass::complement_plus_lambda_divides_k:
      q.p = K / (K - d + lambda);
      q.m = (K - d) / lambda;
      break;
    case CodeClass::delta_divides_k_plus_lambda:
      q.n = (K + lambda) / d;
      q.p = d - lambda;
      break;
    case CodeClass::complement_divides_k_plus_lambda:
      q.m = K - d;
      q.p = q.m - lambda;
      q.q = (K + lambda) / q.m;
      q.s = q.m / lambda;
      break;
  }
  return q;
}

namespace detail {

using Rows = std::vector<std::vector<int>>;

inline std::vector<int> progression(int start, int step, int terms) {
  std::vector<int> r;
  for (int t = 0; t < terms; ++t) r.push_back(start + t * step);
  return r;
}

// Consecutive pairs along the chains i, i+d, i+2d, ...; chain position j
// outermost.
inline void append_chain_pairs(Rows& rows, int d, int pairs_per_chain) {
  for (int j = 1; j <= pairs_per_chain; ++j) {
    for (int i = 1; i <= d; ++i) rows.push_back({i + (j - 1) * d, i + j * d});
  }
}

inline Rows build_rows(const ConstructionParams& params, const DerivedQuantities& q) {
  const int K = params.K;
  const int d = params.delta;
  const int lambda = params.lambda.value_or(0);
  Rows rows;
  switch (params.cls) {
    case CodeClass::delta_divides_k:
      append_chain_pairs(rows, d, q.n - 1);
      break;

    case CodeClass::complement_divides_k:
      for (int i = 1; i <= q.m; ++i) rows.push_back(progression(i, q.m, q.n));
      break;

    case CodeClass::half_gap_divides_delta:
      // Windows of p+1 terms with stride m, sliding by m.
      for (int j = 0; j <= q.p + 1; ++j) {
        for (int i = 1; i <= q.m; ++i) rows.push_back(progression(i + j * q.m, q.m, q.p + 1));
      }
      break;

    case CodeClass::delta_divides_k_minus_lambda:
      append_chain_pairs(rows, d, q.n - 1);
      for (int r = 1; r <= lambda; ++r) rows.push_back(progression(K - lambda + r, -lambda, d / lambda + 1));
      break;

    case CodeClass::complement_divides_k_minus_lambda:
      for (int i = 1; i <= q.m; ++i) {
        auto row = progression(i, q.m, q.q);
        row.push_back(q.q * q.m + 1 + (i - 1) % lambda);
        rows.push_back(std::move(row));
      }
      break;

    case CodeClass::delta_plus_lambda_divides_k:
      // Window starts run over 1..K-delta so the length is K-delta.
      for (int j = 0; j <= (K - d - lambda) / lambda; ++j) {
        for (int i = 1; i <= lambda; ++i) rows.push_back(progression(i + j * lambda, lambda, q.p + 1));
      }
      break;

    case CodeClass::complement_plus_lambda_divides_k: {
      const int m = K - d;
      for (int i = 1; i <= m; ++i) {
        std::vector<int> row;
        for (int t = 0; t < q.p; ++t) {
          row.push_back(i + t * lambda + t * m);
          row.push_back(i + (t + 1) * lambda + t * m);
        }
        rows.push_back(std::move(row));
      }
      break;
    }

    case CodeClass::delta_divides_k_plus_lambda:
      append_chain_pairs(rows, d, q.n - 2);
      for (int i = 0; i < q.p; ++i) {
        rows.push_back({K - 2 * d + 1 + lambda + i, K - d + 1 + i, K - lambda + 1 + i % lambda});
      }
      break;

    case CodeClass::complement_divides_k_plus_lambda: {
      const int m = q.m;
      for (int k = 1; k <= lambda; ++k) {
        auto row = progression(k, m, q.q);
        for (int u = 1; u <= q.s - 2; ++u) row.push_back(k + (q.q - 1) * m + u * lambda);
        rows.push_back(std::move(row));
      }
      for (int k = lambda + 1; k <= q.p; ++k) {
        auto row = progression(k, m, q.q - 1);
        row.push_back(k + (q.q - 1) * m - lambda);
        rows.push_back(std::move(row));
      }
      for (int k = q.p + 1; k <= m; ++k) {
        auto row = progression(k, m, q.q - 1);
        for (int u = 1; u <= q.s - 1; ++u) row.push_back(k + (q.q - 2) * m + u * lambda);
        rows.push_back(std::move(row));
      }
      break;
    }

    case CodeClass::excess_divides_half:
      break;
  }
  return rows;
}

}  // namespace detail

/// Explicit optimal scalar code over y_1..y_K for the one-sided problem with
/// `delta` antidotes. Lambda classes always need an explicit lambda; the
/// error lists the admissible values.
inline LinearCode construct(const ConstructionParams& params) {
  const int K = params.K;
  const int d = params.delta;
  const int id = class_id(params.cls);
  if (d <= 0 || d >= K) {
    throw Error(Errc::class_condition, "delta = " + std::to_string(d) + " must satisfy 0 < delta < K = " + std::to_string(K));
  }
  if (!constructible(params.cls)) {
    throw Error(Errc::class_condition, "class 4 has no explicit construction; import such codes from a file");
  }
  if (takes_lambda(params.cls)) {
    if (!params.lambda) {
      const auto ls = valid_lambdas(params.cls, K, d);
      if (ls.empty()) {
        throw Error(Errc::class_condition, "no lambda satisfies class " + std::to_string(id) + " for K=" +
                                               std::to_string(K) + ", delta=" + std::to_string(d));
      }
      std::string list;
      for (int l : ls) list += (list.empty() ? "" : ", ") + std::to_string(l);
      throw Error(Errc::lambda_required, "class " + std::to_string(id) + " needs --lambda, one of {" + list + "}");
    } else if (*params.lambda < 1) {
      throw Error(Errc::class_condition, "lambda must be positive");
    }
  } else if (params.lambda) {
    throw Error(Errc::class_condition, "class " + std::to_string(id) + " takes no lambda");
  }

  if (auto why = detail::condition_failure(params.cls, K, d, params.lambda.value_or(0))) {
    throw Error(Errc::class_condition, *why);
  }

  const auto rows = detail::build_rows(params, derive(params));
  for (const auto& r : rows) {
    std::vector<int> wrapped;
    for (int k : r) wrapped.push_back(wrap_index(k, K));
    std::sort(wrapped.begin(), wrapped.end());
    if (std::adjacent_find(wrapped.begin(), wrapped.end()) != wrapped.end()) {
      throw std::logic_error("construct: repeated message in a symbol for class " + std::to_string(id));
    }
  }
  LinearCode code = LinearCode::scalar(K, rows);
  if (code.length() != static_cast<std::size_t>(K - d)) {
    throw std::logic_error("construct: class " + std::to_string(id) + " produced " + std::to_string(code.length()) +
                           " symbols, expected " + std::to_string(K - d));
  }
  return code;
}

}  // namespace vlic
