#pragma once

// Dense GF(2) vectors, matrices and polynomial matrices over GF(2)[D].

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// BitVector
// ---------------------------------------------------------------------------

/// Ordered sequence of GF(2) elements. Bit 0 is the leftmost character when
/// rendered, so "110" has bits (1,1,0).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : bits_(n, 0) {}
  BitVector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
      if (b != 0 && b != 1) throw Error("BitVector: element is not 0 or 1");
      bits_.push_back(static_cast<std::uint8_t>(b));
    }
  }

  /// Parses '0'/'1' characters; spaces and underscores are separators.
  static BitVector from_string(std::string_view s) {
    BitVector v;
    for (char c : s) {
      if (c == '0' || c == '1') {
        v.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c != ' ' && c != '_') {
        throw Error(std::string("illegal bit character '") + c + "'");
      }
    }
    return v;
  }

  /// First bit is the most significant, so integer order equals lexicographic
  /// order for equal widths.
  static BitVector from_uint(std::uint64_t value, std::size_t width) {
    BitVector v(width);
    for (std::size_t i = 0; i < width; ++i) v.bits_[i] = (value >> (width - 1 - i)) & 1U;
    return v;
  }

  std::uint64_t to_uint() const {
    if (bits_.size() > 64) throw Error("BitVector::to_uint: more than 64 bits");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool at(std::size_t i) const {
    if (i >= bits_.size()) throw Error("BitVector: index out of range");
    return bits_[i] != 0;
  }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void flip(std::size_t i) { bits_.at(i) ^= 1U; }
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }
  bool is_zero() const noexcept { return weight() == 0; }

  BitVector slice(std::size_t pos, std::size_t len) const {
    if (pos + len > bits_.size()) throw Error("BitVector::slice out of range");
    BitVector out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                     bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
  }

  void append(const BitVector& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }

  BitVector& operator^=(const BitVector& rhs) {
    if (rhs.size() != size()) throw Error("BitVector: length mismatch in addition");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
    return *this;
  }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  // GF(2) addition; same as XOR.
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  /// Inner product over GF(2).
  bool dot(const BitVector& rhs) const {
    if (rhs.size() != size()) throw Error("BitVector: length mismatch in dot product");
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) acc ^= bits_[i] & rhs.bits_[i];
    return acc != 0;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  /// "(1,0)" style used for states.
  std::string to_tuple() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i) s.push_back(',');
      s.push_back(static_cast<char>('0' + bits_[i]));
    }
    s.push_back(')');
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// A sequence of n-bit symbols, e.g. a received word z_1 ... z_N.
using Sequence = std::vector<BitVector>;

inline BitVector flatten(std::span<const BitVector> seq) {
  BitVector out;
  for (const auto& s : seq) out.append(s);
  return out;
}

inline Sequence split_symbols(const BitVector& bits, std::size_t width) {
  if (width == 0) throw Error("symbol width must be positive");
  if (bits.size() % width != 0) {
    throw Error("length " + std::to_string(bits.size()) + " is not a multiple of " +
                std::to_string(width));
  }
  Sequence out;
  for (std::size_t pos = 0; pos < bits.size(); pos += width) out.push_back(bits.slice(pos, width));
  return out;
}

/// Space-separated symbol groups: "111 110 010".
inline std::string render_sequence(std::span<const BitVector> seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s.push_back(' ');
    s += seq[i].to_string();
  }
  return s;
}

inline Sequence parse_sequence(std::string_view text, std::size_t width) {
  return split_symbols(BitVector::from_string(text), width);
}

inline Sequence zero_sequence(std::size_t length, std::size_t width) {
  return Sequence(length, BitVector(width));
}

inline std::size_t hamming_weight(std::span<const BitVector> seq) {
  std::size_t w = 0;
  for (const auto& s : seq) w += s.weight();
  return w;
}

inline Sequence add(std::span<const BitVector> a, std::span<const BitVector> b) {
  if (a.size() != b.size()) throw Error("sequence length mismatch");
  Sequence out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

inline Sequence reversed(std::span<const BitVector> seq) { return Sequence(seq.rbegin(), seq.rend()); }

// ---------------------------------------------------------------------------
// BitMatrix
// ---------------------------------------------------------------------------

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Each string is one row, leftmost character = column 0.
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::vector<std::string_view>(rows));
  }
  static BitMatrix from_rows(const std::vector<std::string_view>& rows) {
    if (rows.empty()) return {};
    std::vector<BitVector> parsed;
    for (auto r : rows) parsed.push_back(BitVector::from_string(r));
    return from_row_vectors(parsed);
  }
  static BitMatrix from_row_vectors(std::span<const BitVector> rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("BitMatrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) {
    if (i >= rows_ || j >= cols_) throw Error("BitMatrix: index out of range");
    data_[i * cols_ + j] = v ? 1 : 0;
  }

  BitVector row(std::size_t i) const {
    BitVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.set(j, (*this)(i, j));
    return v;
  }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t b) { return b == 0; });
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  BitMatrix& operator+=(const BitMatrix& rhs) {
    if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw Error("BitMatrix: dimension mismatch in addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= rhs.data_[i];
    return *this;
  }
  friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) { return lhs += rhs; }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("BitMatrix: dimension mismatch in product");
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l)
        if (a(i, l))
          for (std::size_t j = 0; j < b.cols_; ++j) c.data_[i * c.cols_ + j] ^= b.data_[l * b.cols_ + j];
    return c;
  }

  /// Row vector times matrix: v·A.
  friend BitVector operator*(const BitVector& v, const BitMatrix& a) {
    if (v.size() != a.rows_) throw Error("BitMatrix: dimension mismatch in vector product");
    BitVector out(a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (!v[i]) continue;
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j)) out.flip(j);
    }
    return out;
  }

  /// A·vᵀ, returned as a row vector.
  BitVector apply(const BitVector& v) const {
    if (v.size() != cols_) throw Error("BitMatrix: dimension mismatch in apply");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint8_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc ^= data_[i * cols_ + j] & static_cast<std::uint8_t>(v[j]);
      out.set(i, acc != 0);
    }
    return out;
  }

  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("BitMatrix::block out of range");
    BitMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.set(i, j, (*this)(r0 + i, c0 + j));
    return b;
  }

  /// Adds (GF(2)) `b` into the sub-block whose top-left corner is (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const BitMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error("BitMatrix::add_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] ^= b.data_[i * b.cols_ + j];
  }

  /// Reduced row echelon form; also reports pivot columns.
  std::pair<BitMatrix, std::vector<std::size_t>> rref() const {
    BitMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
      std::size_t p = lead;
      while (p < rows_ && !m(p, c)) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, lead);
      for (std::size_t i = 0; i < rows_; ++i)
        if (i != lead && m(i, c)) m.xor_row_into(lead, i);
      pivots.push_back(c);
      ++lead;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of {x : A·xᵀ = 0}.
  std::vector<BitVector> nullspace() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      BitVector x(cols_);
      x.set(free, true);
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if (m(i, free)) x.set(pivots[i], true);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += row(i).to_string();
      s.push_back('\n');
    }
    return s;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }
  void xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t j = 0; j < cols_; ++j) data_[dst * cols_ + j] ^= data_[src * cols_ + j];
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// ---------------------------------------------------------------------------
// PolyMatrix
// ---------------------------------------------------------------------------

/// Matrix over GF(2)[D] stored as P_0 + P_1 D + ... + P_deg D^deg.
/// The zero matrix has degree 0 with P_0 = 0.
class PolyMatrix {
 public:
  PolyMatrix() = default;

  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), coeffs_{BitMatrix(rows, cols)} {}

  explicit PolyMatrix(std::vector<BitMatrix> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("PolyMatrix: no coefficient matrices");
    rows_ = coeffs_.front().rows();
    cols_ = coeffs_.front().cols();
    for (const auto& c : coeffs_)
      if (c.rows() != rows_ || c.cols() != cols_) throw Error("PolyMatrix: coefficient dimension mismatch");
    trim();
  }

  /// Entries are LSB-first coefficient strings: "101" = 1 + D^2.
  static PolyMatrix from_strings(const std::vector<std::vector<std::string>>& entries) {
    if (entries.empty()) throw Error("polynomial matrix has no rows");
    const std::size_t cols = entries.front().size();
    if (cols == 0) throw Error("polynomial matrix has no columns");
    std::size_t deg = 0;
    for (const auto& row : entries) {
      if (row.size() != cols) throw Error("polynomial matrix has ragged rows");
      for (const auto& e : row) {
        if (e.empty()) throw Error("empty polynomial entry string");
        for (char c : e)
          if (c != '0' && c != '1') throw Error(std::string("illegal character '") + c + "' in polynomial entry");
        deg = std::max(deg, e.size() - 1);
      }
    }
    std::vector<BitMatrix> coeffs(deg + 1, BitMatrix(entries.size(), cols));
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t p = 0; p < entries[i][j].size(); ++p)
          if (entries[i][j][p] == '1') coeffs[p].set(i, j, true);
    return PolyMatrix(std::move(coeffs));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

  /// P_i, or the zero matrix when i exceeds the degree.
  BitMatrix coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BitMatrix(rows_, cols_); }
  const std::vector<BitMatrix>& coefficients() const noexcept { return coeffs_; }

  /// Degree of entry (i, j); -1 for the zero polynomial.
  int entry_degree(std::size_t i, std::size_t j) const {
    for (std::size_t p = coeffs_.size(); p-- > 0;)
      if (coeffs_[p](i, j)) return static_cast<int>(p);
    return -1;
  }

  /// Maximum entry degree in row i; -1 for an all-zero row.
  int row_degree(std::size_t i) const {
    int d = -1;
    for (std::size_t j = 0; j < cols_; ++j) d = std::max(d, entry_degree(i, j));
    return d;
  }

  std::string entry_string(std::size_t i, std::size_t j) const {
    const int d = entry_degree(i, j);
    if (d < 0) return "0";
    std::string s;
    for (int p = 0; p <= d; ++p) s.push_back(coeffs_[static_cast<std::size_t>(p)](i, j) ? '1' : '0');
    return s;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(entry_string(i, j));
    return out;
  }

  /// Reverses the coefficient list: P~_i = P_{deg-i}.
  PolyMatrix reciprocal() const {
    return PolyMatrix(std::vector<BitMatrix>(coeffs_.rbegin(), coeffs_.rend()));
  }

  /// Reverses each row against its own row degree: row i becomes
  /// D^{deg_i} p_i(1/D). Equals reciprocal() when every row has full degree.
  PolyMatrix row_reciprocal() const {
    std::vector<BitMatrix> out(coeffs_.size(), BitMatrix(rows_, cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      const int d = row_degree(i);
      for (int p = 0; p <= d; ++p)
        for (std::size_t j = 0; j < cols_; ++j)
          out[static_cast<std::size_t>(d - p)].set(i, j, coeffs_[static_cast<std::size_t>(p)](i, j));
    }
    return PolyMatrix(std::move(out));
  }

  PolyMatrix transpose() const {
    std::vector<BitMatrix> t;
    for (const auto& c : coeffs_) t.push_back(c.transpose());
    return PolyMatrix(std::move(t));
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("PolyMatrix: dimension mismatch in product");
    std::vector<BitMatrix> c(a.coeffs_.size() + b.coeffs_.size() - 1, BitMatrix(a.rows_, b.cols_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyMatrix(std::move(c));
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitMatrix> coeffs_;
};

/// Free-function form of PolyMatrix::coefficients, returning [P_0..P_deg].
inline std::vector<BitMatrix> coefficient_expansion(const PolyMatrix& p) { return p.coefficients(); }

inline PolyMatrix reciprocal(const PolyMatrix& p) { return p.reciprocal(); }

/// True when G(D)·H(D)ᵀ is the zero matrix.
inline bool is_dual_pair(const PolyMatrix& g, const PolyMatrix& h) {
  if (g.cols() != h.cols()) return false;
  return (g * h.transpose()).is_zero();
}

}  // namespace tbt
