#include <random>

#include <catch_amalgamated.hpp>

#include "dflow/smith.hpp"

using namespace dflow;

namespace {

// Bareiss fraction-free elimination; independent of the Smith reduction.
Integer determinant(IntegerMatrix m) {
  const Eigen::Index n = m.rows();
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntegerMatrix m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void require_valid(const IntegerMatrix& m) {
  const auto s = smith_normal_form(m);
  REQUIRE(IntegerMatrix(s.u * m * s.v) == s.d);
  REQUIRE(IntegerMatrix(s.u * s.u_inverse) == IntegerMatrix::Identity(m.rows(), m.rows()));
  if (m.rows() > 0) REQUIRE(abs(determinant(s.u)) == 1);
  if (m.cols() > 0) REQUIRE(abs(determinant(s.v)) == 1);
  for (Eigen::Index i = 0; i < s.d.rows(); ++i)
    for (Eigen::Index j = 0; j < s.d.cols(); ++j)
      if (i != j) REQUIRE(s.d(i, j) == 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    REQUIRE(diag[i] >= 0);
    REQUIRE((diag[i] != 0) == (static_cast<Eigen::Index>(i) < s.rank));
    if (i + 1 < diag.size() && diag[i] != 0) REQUIRE(diag[i + 1] % diag[i] == 0);
  }
}

}  // namespace

TEST_CASE("smith form of a 2x2 example") {
  const IntegerMatrix m = from_rows({{2, 4}, {6, 8}});
  // gcd of the entries is 2 and |det| = 8, so the invariants are 2 and 4
  REQUIRE(abs(determinant(m)) == 8);
  const auto s = smith_normal_form(m);
  REQUIRE(s.diagonal() == std::vector<Integer>{2, 4});
  require_valid(m);
}

TEST_CASE("smith form of zero and identity") {
  const IntegerMatrix zero = IntegerMatrix::Zero(3, 2);
  auto s = smith_normal_form(zero);
  REQUIRE(s.rank == 0);
  REQUIRE(s.d == zero);
  const IntegerMatrix id = IntegerMatrix::Identity(3, 3);
  s = smith_normal_form(id);
  REQUIRE(s.d == id);
  require_valid(zero);
  require_valid(id);
}

TEST_CASE("smith form on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-9, 9), dim(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    require_valid(m);
  }
}

TEST_CASE("integer solving and kernels") {
  const IntegerMatrix m = from_rows({{2, 0}, {0, 3}});
  REQUIRE(solve_integer<Integer>(m, IntegerVector::Constant(2, 6)).has_value());
  IntegerVector b(2);
  b << 1, 3;
  REQUIRE_FALSE(solve_integer<Integer>(m, b).has_value());

  const IntegerMatrix d = from_rows({{1, -1, 0}, {0, 1, -1}});
  const IntegerMatrix k = kernel_basis<Integer>(d);
  REQUIRE(k.cols() == 1);
  REQUIRE((IntegerMatrix(d * k).array() == Integer(0)).all());
  REQUIRE(abs(k(0, 0)) == 1);
}
