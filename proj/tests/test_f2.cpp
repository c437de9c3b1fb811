#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "nlcslab/f2.hpp"
#include "nlcslab/rng.hpp"

using nlcs::BinaryMatrix;
using nlcs::BitVec;

namespace {

BinaryMatrix from_rows(std::size_t cols,
                       const std::vector<std::vector<int>>& rows) {
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, rows[i][j] != 0);
    }
  }
  return m;
}

BinaryMatrix random_matrix(std::size_t r, std::size_t c, nlcs::CounterRng& rng) {
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m.set(i, j, rng.coin());
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rref identity and frozen examples") {
  auto id3 = from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto res = id3.rref();
  CHECK(res.rank == 3);
  CHECK(res.r == id3);

  // h = [[1,0,0],[0,1,1]] is already reduced.
  auto h = from_rows(3, {{1, 0, 0}, {0, 1, 1}});
  auto hres = h.rref();
  CHECK(hres.rank == 2);
  CHECK(hres.r == h);
  CHECK(hres.pivot_cols == std::vector<std::size_t>{0, 1});

  auto dup = from_rows(2, {{1, 1}, {1, 1}});
  auto dres = dup.rref();
  CHECK(dres.rank == 1);
  CHECK(dres.r == from_rows(2, {{1, 1}, {0, 0}}));
}

TEST_CASE("kernel_basis examples") {
  auto id2 = from_rows(2, {{1, 0}, {0, 1}});
  CHECK(id2.kernel_basis().rows() == 0);

  auto h = from_rows(3, {{1, 0, 0}, {0, 1, 1}});
  auto k = h.kernel_basis();
  REQUIRE(k.rows() == 1);
  CHECK(k.get(0, 0) == false);
  CHECK(k.get(0, 1) == true);
  CHECK(k.get(0, 2) == true);

  BinaryMatrix zero(2, 3);
  CHECK(zero.kernel_basis().rows() == 3);
}

TEST_CASE("kernel rows annihilated; rank-nullity on random matrices") {
  nlcs::CounterRng rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng.below(16);
    std::size_t c = 1 + rng.below(16);
    auto m = random_matrix(r, c, rng);
    auto ker = m.kernel_basis();
    CHECK(m.rank() + ker.rows() == c);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      CHECK_FALSE(m.mul_vec(ker.row(i)).any());
    }
    CHECK(ker.rank() == ker.rows());  // independence
  }
}

TEST_CASE("in_row_span vs exhaustive enumeration") {
  auto m = from_rows(3, {{1, 1, 0}, {0, 1, 1}});
  BitVec v(3);
  CHECK(m.in_row_span(v));  // zero vector
  v.set(0, true);
  v.set(2, true);
  CHECK(m.in_row_span(v));  // sum of both rows

  auto m1 = from_rows(3, {{1, 1, 0}});
  BitVec w(3);
  w.set(0, true);
  CHECK_FALSE(m1.in_row_span(w));

  nlcs::CounterRng rng(12, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto m2 = random_matrix(1 + rng.below(6), 1 + rng.below(8), rng);
    BitVec t(m2.cols());
    for (std::size_t j = 0; j < m2.cols(); ++j) t.set(j, rng.coin());
    bool expected = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m2.rows()); ++mask) {
      BitVec acc(m2.cols());
      for (std::size_t i = 0; i < m2.rows(); ++i) {
        if ((mask >> i) & 1) acc ^= m2.row(i);
      }
      if (acc == t) {
        expected = true;
        break;
      }
    }
    CHECK(m2.in_row_span(t) == expected);
  }
}

TEST_CASE("tensor product") {
  auto one = from_rows(1, {{1}});
  auto b = from_rows(3, {{1, 0, 1}, {0, 1, 1}});
  CHECK(BinaryMatrix::tensor(one, b) == b);

  auto a = from_rows(2, {{1, 1}});
  auto id2 = from_rows(2, {{1, 0}, {0, 1}});
  CHECK(BinaryMatrix::tensor(a, id2) ==
        from_rows(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("tensor kernel matches dual tensor relation by brute force") {
  // ker(h0 (x) h1) == (rowspan(h0) (x) rowspan(h1))^perp, over F2^9.
  nlcs::CounterRng rng(13, 0);
  for (int trial = 0; trial < 5; ++trial) {
    auto h0 = random_matrix(2, 3, rng);
    auto h1 = random_matrix(2, 3, rng);
    auto t = BinaryMatrix::tensor(h0, h1);
    // span(h0) (x) span(h1) generators: a_i (x) b_j over all row pairs.
    for (std::size_t v = 0; v < 512; ++v) {
      BitVec x(9);
      for (std::size_t j = 0; j < 9; ++j) x.set(j, (v >> j) & 1);
      bool in_ker = !t.mul_vec(x).any();
      bool orth = true;
      for (std::size_t i = 0; i < h0.rows() && orth; ++i) {
        for (std::size_t j = 0; j < h1.rows() && orth; ++j) {
          BitVec gen(9);
          for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = 0; q < 3; ++q) {
              gen.set(3 * p + q, h0.get(i, p) && h1.get(j, q));
            }
          }
          if (BitVec::dot(gen, x)) orth = false;
        }
      }
      CHECK(in_ker == orth);
    }
  }
}

TEST_CASE("solve_linear finds particular solutions and detects inconsistency") {
  nlcs::CounterRng rng(14, 0);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(1 + rng.below(8), 1 + rng.below(8), rng);
    BitVec x(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) x.set(j, rng.coin());
    BitVec b = a.mul_vec(x);
    auto sol = nlcs::solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.mul_vec(*sol) == b);
  }
  auto bad = from_rows(2, {{1, 0}, {1, 0}});
  BitVec b(2);
  b.set(0, true);
  CHECK_FALSE(nlcs::solve_linear(bad, b).has_value());
}

TEST_CASE("matrix text round-trip") {
  auto m = from_rows(3, {{1, 0, 0}, {0, 1, 1}});
  std::stringstream ss;
  m.write(ss);
  CHECK(ss.str() == "2 3\n100\n011\n");
  auto back = BinaryMatrix::read(ss);
  CHECK(back == m);
}

TEST_CASE("degenerate shapes are legal") {
  BinaryMatrix empty(0, 4);
  auto res = empty.rref();
  CHECK(res.rank == 0);
  CHECK(empty.kernel_basis().rows() == 4);
  BinaryMatrix nocols(3, 0);
  CHECK(nocols.rref().rank == 0);
}
