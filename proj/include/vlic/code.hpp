#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vlic/error.hpp"
#include "vlic/gf2.hpp"
#include "vlic/problem.hpp"
#include "vlic/rational.hpp"

namespace vlic {

/// Message symbol x_{message,component}; both 1-based.
struct ComponentLabel {
  int message = 0;
  int component = 0;

  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

inline std::string to_string(const ComponentLabel& c) {
  return "x" + std::to_string(c.message) + "," + std::to_string(c.component);
}

/// A linear index code: each row of the bit matrix is one transmitted symbol,
/// a GF(2) sum of message components. Column (k, i) sits at (k-1)*t + (i-1).
/// Scalar codes have t = 1.
class LinearCode {
 public:
  LinearCode() = default;

  LinearCode(int K, int t, gf2::BitMatrix symbols) : K_(K), t_(t), symbols_(std::move(symbols)) {
    validate();
  }

  /// Each row lists the components summed into one symbol. Repeated labels
  /// cancel (GF(2)), which makes a zero row and is rejected.
  static LinearCode from_rows(int K, int t, const std::vector<std::vector<ComponentLabel>>& rows) {
    check_dimensions(K, t);
    gf2::BitMatrix m(0, static_cast<std::size_t>(K) * static_cast<std::size_t>(t));
    for (const auto& row : rows) {
      gf2::BitVector v(m.cols());
      for (const auto& label : row) v.flip(column(K, t, label));
      m.append_row(std::move(v));
    }
    return LinearCode(K, t, std::move(m));
  }

  /// Scalar code from lists of message indices (wrapped mod K).
  static LinearCode scalar(int K, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<ComponentLabel>> labelled;
    labelled.reserve(rows.size());
    for (const auto& r : rows) {
      auto& out = labelled.emplace_back();
      for (int k : r) out.push_back({wrap_index(k, K), 1});
    }
    return from_rows(K, 1, labelled);
  }

  static std::size_t column(int K, int t, ComponentLabel label) {
    if (label.message < 1 || label.message > K || label.component < 1 || label.component > t) {
      throw Error(Errc::shape, "label " + to_string(label) + " outside K=" + std::to_string(K) +
                                   ", t=" + std::to_string(t));
    }
    return static_cast<std::size_t>(label.message - 1) * static_cast<std::size_t>(t) +
           static_cast<std::size_t>(label.component - 1);
  }

  int K() const noexcept { return K_; }
  int t() const noexcept { return t_; }
  bool is_scalar() const noexcept { return t_ == 1; }
  std::size_t length() const noexcept { return symbols_.rows(); }
  std::size_t width() const noexcept { return symbols_.cols(); }
  const gf2::BitMatrix& symbols() const noexcept { return symbols_; }

  std::size_t column(ComponentLabel label) const { return column(K_, t_, label); }

  ComponentLabel label(std::size_t col) const {
    const auto t = static_cast<std::size_t>(t_);
    return {static_cast<int>(col / t) + 1, static_cast<int>(col % t) + 1};
  }

  std::vector<ComponentLabel> row_labels(std::size_t r) const {
    std::vector<ComponentLabel> out;
    for (std::size_t c : symbols_.row(r).set_bits()) out.push_back(label(c));
    return out;
  }

  /// Components per message per transmission: t / length.
  Rational rate() const {
    if (length() == 0) throw Error(Errc::shape, "rate of an empty code");
    return Rational(t_, static_cast<std::int64_t>(length()));
  }

  LinearCode without_row(std::size_t r) const {
    gf2::BitMatrix m = symbols_;
    m.remove_row(r);
    return LinearCode(K_, t_, std::move(m));
  }

  LinearCode with_extra_row(gf2::BitVector row) const {
    gf2::BitMatrix m = symbols_;
    m.append_row(std::move(row));
    return LinearCode(K_, t_, std::move(m));
  }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  static void check_dimensions(int K, int t) {
    if (K < 1 || t < 1) {
      throw Error(Errc::shape, "code needs K >= 1 and t >= 1, got K=" + std::to_string(K) + ", t=" + std::to_string(t));
    }
  }

  void validate() const {
    check_dimensions(K_, t_);
    if (symbols_.cols() != static_cast<std::size_t>(K_) * static_cast<std::size_t>(t_)) {
      throw Error(Errc::shape, "code matrix has " + std::to_string(symbols_.cols()) + " columns, expected K*t = " +
                                   std::to_string(K_ * t_));
    }
    for (std::size_t r = 0; r < symbols_.rows(); ++r) {
      if (symbols_.row(r).none()) throw Error(Errc::shape, "code symbol " + std::to_string(r) + " is zero");
    }
  }

  int K_ = 0;
  int t_ = 1;
  gf2::BitMatrix symbols_;
};

/// Relabels message k as -k (mod K), keeping component indices.
inline LinearCode mirror(const LinearCode& code) {
  gf2::BitMatrix m(0, code.width());
  for (std::size_t r = 0; r < code.length(); ++r) {
    gf2::BitVector v(code.width());
    for (const auto& l : code.row_labels(r)) {
      v.set(code.column({wrap_index(-l.message, code.K()), l.component}));
    }
    m.append_row(std::move(v));
  }
  return LinearCode(code.K(), code.t(), std::move(m));
}

}  // namespace vlic
