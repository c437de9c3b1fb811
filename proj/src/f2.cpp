#include "nlcslab/f2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nlcs {

BitVec& BitVec::operator^=(const BitVec& o) {
  if (n_ != o.n_) {
    throw std::invalid_argument("BitVec xor: length mismatch");
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    w_[i] ^= o.w_[i];
  }
  return *this;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto x : w_) {
    c += static_cast<std::size_t>(std::popcount(x));
  }
  return c;
}

bool BitVec::any() const {
  for (auto x : w_) {
    if (x != 0) return true;
  }
  return false;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("BitVec dot: length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    acc ^= a.w_[i] & b.w_[i];
  }
  return std::popcount(acc) & 1;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  // Lexicographic by bit index: bit 0 is the most significant tie-breaker.
  for (std::size_t i = 0; i < n_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return b;  // 0 < 1
  }
  return false;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols,
                           std::initializer_list<int> entries)
    : BinaryMatrix(rows, cols) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("BinaryMatrix: entry count mismatch");
  }
  std::size_t i = 0;
  for (int e : entries) {
    set(i / cols, i % cols, e != 0);
    ++i;
  }
}

void BinaryMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("BinaryMatrix::set_row: length mismatch");
  }
  data_[r] = v;
}

void BinaryMatrix::append_row(const BitVec& v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("BinaryMatrix::append_row: length mismatch");
  }
  data_.push_back(v);
  ++rows_;
}

RrefResult BinaryMatrix::rref() const {
  RrefResult res;
  res.r = *this;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && !res.r.get(sel, col)) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row) std::swap(res.r.data_[sel], res.r.data_[pivot_row]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pivot_row && res.r.get(r, col)) {
        res.r.xor_row_into(r, pivot_row);
      }
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::size_t BinaryMatrix::rank() const { return rref().rank; }

BinaryMatrix BinaryMatrix::kernel_basis() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  BinaryMatrix basis(0, cols_);
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVec v(cols_);
    v.set(free_col, true);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      if (rr.r.get(i, free_col)) v.set(rr.pivot_cols[i], true);
    }
    basis.append_row(v);
  }
  return basis;
}

bool BinaryMatrix::in_row_span(const BitVec& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("in_row_span: vector length mismatch");
  }
  RrefResult rr = rref();
  BitVec residual = v;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (residual.get(rr.pivot_cols[i])) {
      residual ^= rr.r.row(i);
    }
  }
  return !residual.any();
}

BinaryMatrix BinaryMatrix::tensor(const BinaryMatrix& a,
                                  const BinaryMatrix& b) {
  BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      for (std::size_t ca = 0; ca < a.cols(); ++ca) {
        if (!a.get(ra, ca)) continue;
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          if (b.get(rb, cb)) {
            out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
          }
        }
      }
    }
  }
  return out;
}

BitVec BinaryMatrix::mul_vec(const BitVec& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("mul_vec: vector length mismatch");
  }
  BitVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.set(r, BitVec::dot(data_[r], v));
  }
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(c, r, true);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::read(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) {
    throw std::runtime_error("matrix file: bad header, expected <rows> <cols>");
  }
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line) || line.size() != cols) {
      throw std::runtime_error("matrix file: bad row " + std::to_string(r + 1));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] != '0' && line[c] != '1') {
        throw std::runtime_error("matrix file: invalid character in row " +
                                 std::to_string(r + 1));
      }
      m.set(r, c, line[c] == '1');
    }
  }
  return m;
}

void BinaryMatrix::write(std::ostream& out) const {
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out << (get(r, c) ? '1' : '0');
    }
    out << '\n';
  }
}

std::optional<BitVec> solve_linear(const BinaryMatrix& a, const BitVec& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  }
  // RREF of the augmented matrix [A | b].
  BinaryMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) aug.set(r, c, true);
    }
    if (b.get(r)) aug.set(r, a.cols(), true);
  }
  RrefResult rr = aug.rref();
  BitVec x(a.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
    if (rr.r.get(i, a.cols())) x.set(rr.pivot_cols[i], true);
  }
  return x;
}

std::string BinaryMatrix::to_string() const {
  std::ostringstream ss;
  write(ss);
  return ss.str();
}

}  // namespace nlcs
