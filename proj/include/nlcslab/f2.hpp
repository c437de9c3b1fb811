#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nlcs {

/// Bit vector over F2 packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  std::size_t popcount() const;
  bool any() const;
  /// popcount(a & b) mod 2 — the F2 dot product.
  static bool dot(const BitVec& a, const BitVec& b);

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitVec& o) const;

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct RrefResult;

/// Dense bit matrix over F2, row-major packed storage.
/// Immutable usage pattern: all queries are const; mutating helpers are for
/// construction only. Degenerate shapes (0 rows or 0 cols) are legal.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}
  BinaryMatrix(std::size_t rows, std::size_t cols,
               std::initializer_list<int> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, const BitVec& v);
  void append_row(const BitVec& v);
  void xor_row_into(std::size_t dst, std::size_t src) {
    data_[dst] ^= data_[src];
  }

  /// Reduced row echelon form: leftmost pivot, topmost row elimination.
  RrefResult rref() const;
  std::size_t rank() const;

  /// Rows form a basis of ker(M); row count = cols - rank.
  BinaryMatrix kernel_basis() const;

  /// True iff v is an F2 combination of the rows. Throws on length mismatch.
  bool in_row_span(const BitVec& v) const;

  /// Kronecker product over F2.
  static BinaryMatrix tensor(const BinaryMatrix& a, const BinaryMatrix& b);

  BitVec mul_vec(const BitVec& v) const;
  BinaryMatrix transpose() const;

  bool operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  /// Parity-check matrix file format:
  /// line 1 = "<rows> <cols>", then `rows` lines of `cols` chars in {0,1}.
  static BinaryMatrix read(std::istream& in);
  void write(std::ostream& out) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVec> data_;
};

struct RrefResult {
  BinaryMatrix r;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Particular solution of A x = b over F2, or nullopt if inconsistent.
/// The full solution set is x + ker(A).
std::optional<BitVec> solve_linear(const BinaryMatrix& a, const BitVec& b);

}  // namespace nlcs
