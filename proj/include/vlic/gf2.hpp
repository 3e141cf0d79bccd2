#pragma once

// Dense linear algebra over GF(2).
//
// Vectors are packed into 64-bit words, least significant bit first. Bits past
// size() in the last word are always zero, so word-wise equality and popcount
// are exact.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlic/error.hpp"

namespace vlic::gf2 {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  /// Parses a string of '0'/'1' characters; index 0 is the first character.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw Error(Errc::parse, "bit string contains '" + std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Grows with zeros or truncates.
  void resize(std::size_t size) {
    words_.resize(word_count(size), 0);
    size_ = size;
    if (const std::size_t tail = size_ % word_bits; tail != 0) {
      words_.back() &= (word_type{1} << tail) - 1;
    }
  }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }

  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  BitVector& operator^=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  BitVector& operator&=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  /// Clears every bit that is set in `mask`.
  void clear_where(const BitVector& mask) {
    require_same_size(mask);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~mask.words_[w];
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Inner product over GF(2).
  bool dot(const BitVector& other) const {
    require_same_size(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  /// Lowest set index, or npos.
  std::size_t first_set() const noexcept { return next_set(0); }

  /// Lowest set index >= from, or npos.
  std::size_t next_set(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first_set(); i != npos; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  std::span<const word_type> words() const noexcept { return words_; }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = first_set(); i != npos; i = next_set(i + 1)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Lexicographic on the packed words; only meant for ordered containers.
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

  void require_same_size(const BitVector& other) const {
    if (other.size_ != size_) {
      throw Error(Errc::shape, "bit vectors of length " + std::to_string(size_) + " and " +
                                   std::to_string(other.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// Builds from explicit rows; an empty list needs `cols` to fix the width.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
    BitMatrix m(0, cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
  }

  static BitMatrix from_strings(std::initializer_list<std::string_view> rows, std::size_t cols = 0) {
    BitMatrix m(0, rows.size() == 0 ? cols : rows.begin()->size());
    for (auto r : rows) m.append_row(BitVector::from_string(r));
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  BitVector& row(std::size_t r) { return rows_.at(r); }
  std::span<const BitVector> row_span() const noexcept { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }

  void append_row(BitVector row) {
    if (row.size() != cols_) {
      throw Error(Errc::shape, "row of length " + std::to_string(row.size()) +
                                   " appended to matrix with " + std::to_string(cols_) + " columns");
    }
    rows_.push_back(std::move(row));
  }

  void remove_row(std::size_t r) { rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r)); }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_.at(a), rows_.at(b)); }

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows_) {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Incremental row-echelon basis that remembers, for every stored row, which
/// inserted vectors were summed to produce it. Insert order fixes the witness:
/// each new vector is reduced against the existing pivots (lowest column
/// first) and, if nonzero, becomes a new row pivoted at its lowest set column.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, none) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t inserted() const noexcept { return inserted_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Returns true when `v` was independent of everything inserted so far.
  bool insert(const BitVector& v) {
    const std::size_t index = inserted_++;
    for (auto& r : rows_) r.combo.resize(inserted_);
    Row row{v, BitVector(inserted_)};
    row.combo.set(index);
    reduce_in_place(row.value, &row.combo);
    const std::size_t pivot = row.value.first_set();
    if (pivot == BitVector::npos) return false;
    pivot_row_[pivot] = rows_.size();
    insert_pivot(pivot);
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(BitVector v) const {
    reduce_in_place(v, nullptr);
    return v.none();
  }

  /// Coefficients c (one per inserted vector) with sum c_i v_i = target.
  std::optional<BitVector> express(BitVector target) const {
    BitVector combo(inserted_);
    reduce_in_place(target, &combo);
    if (target.any()) return std::nullopt;
    return combo;
  }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  struct Row {
    BitVector value;
    BitVector combo;
  };

  void insert_pivot(std::size_t pivot) {
    pivots_.insert(std::lower_bound(pivots_.begin(), pivots_.end(), pivot), pivot);
  }

  void reduce_in_place(BitVector& v, BitVector* combo) const {
    if (v.size() != cols_) {
      throw Error(Errc::shape, "vector of length " + std::to_string(v.size()) +
                                   " reduced against basis of width " + std::to_string(cols_));
    }
    // A stored row has no bits left of its pivot, so one ascending pass suffices.
    for (std::size_t p : pivots_) {
      if (!v.test(p)) continue;
      const Row& r = rows_[pivot_row_[p]];
      v ^= r.value;
      if (combo != nullptr) *combo ^= r.combo;
    }
  }

  std::size_t cols_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::size_t> pivots_;
};

/// c * m, where c selects rows of m.
inline BitVector left_multiply(const BitVector& coeffs, const BitMatrix& m) {
  if (coeffs.size() != m.rows()) {
    throw Error(Errc::shape, "coefficient vector of length " + std::to_string(coeffs.size()) +
                                 " for a matrix with " + std::to_string(m.rows()) + " rows");
  }
  BitVector out(m.cols());
  for (std::size_t r = coeffs.first_set(); r != BitVector::npos; r = coeffs.next_set(r + 1)) {
    out ^= m.row(r);
  }
  return out;
}

/// m * v.
inline BitVector multiply(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw Error(Errc::shape, "vector of length " + std::to_string(v.size()) +
                                 " for a matrix with " + std::to_string(m.cols()) + " columns");
  }
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, m.row(r).dot(v));
  return out;
}

inline std::size_t rank(const BitMatrix& m) {
  SpanBasis basis(m.cols());
  for (const auto& r : m.row_span()) basis.insert(r);
  return basis.rank();
}

struct RowEchelon {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape
/// matches the input.
inline RowEchelon rref(const BitMatrix& m) {
  RowEchelon out{m, {}};
  BitMatrix& a = out.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pick = lead;
    while (pick < a.rows() && !a.get(pick, col)) ++pick;
    if (pick == a.rows()) continue;
    a.swap_rows(lead, pick);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != lead && a.get(r, col)) a.row(r) ^= a.row(lead);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

/// Finds c with c * basis = target, or nullopt when target is outside the row
/// span. The witness is the one produced by SpanBasis in row order.
inline std::optional<BitVector> solve_in_span(const BitMatrix& basis, const BitVector& target) {
  if (target.size() != basis.cols()) {
    throw Error(Errc::shape, "target of length " + std::to_string(target.size()) +
                                 " for a basis with " + std::to_string(basis.cols()) + " columns");
  }
  SpanBasis span(basis.cols());
  for (const auto& r : basis.row_span()) span.insert(r);
  auto coeffs = span.express(target);
  if (coeffs && left_multiply(*coeffs, basis) != target) {
    throw std::logic_error("solve_in_span: witness does not reproduce the target");
  }
  return coeffs;
}

inline BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(Errc::shape, "cannot stack matrices of width " + std::to_string(top.cols()) +
                                 " and " + std::to_string(bottom.cols()));
  }
  BitMatrix out = top;
  for (const auto& r : bottom.row_span()) out.append_row(r);
  return out;
}

}  // namespace vlic::gf2
