#include "kwall/linear_map.hpp"

#include "kwall/errors.hpp"

#include <doctest.h>

#include <random>

using namespace kwall;

namespace {

// Test-local cofactor determinant: an invertibility oracle independent of
// the elimination code it checks.
Rational tl_det(const Mat& m) {
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det(0);
  int sign = 1;
  for (Index j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    det += Rational(sign) * m(0, j) * tl_det(minor);
    sign = -sign;
  }
  return det;
}

Mat random_square(std::mt19937_64& rng, Index n) {
  Mat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = Rational(static_cast<long long>(rng() % 9) - 4);
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(make_mat({{0, 2}, {0, -2}})) == 1);
  CHECK(rank(Mat::Identity(4, 4)) == 4);
  CHECK(rank(Mat::Zero(3, 5)) == 0);
  CHECK(rank(Mat(0, 0)) == 0);
  CHECK(rank(make_mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::Identity(3, 3)).empty());
  const auto ker = kernel_basis(make_mat({{1, 0, -1}, {0, 1, 2}}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0](0) == Rational(1));
  CHECK(ker[0](1) == Rational(-2));
  CHECK(ker[0](2) == Rational(1));
}

TEST_CASE("inverse examples") {
  const Mat involution = make_mat({{1, 2}, {0, -1}});
  CHECK(exact_equal(inverse(involution), involution));
  CHECK(exact_equal(involution * involution, Mat::Identity(2, 2)));
  CHECK_THROWS_AS(inverse(make_mat({{1, 1}, {1, 1}})), Singular);
  CHECK_THROWS_AS(inverse(Mat::Zero(2, 3)), Singular);
  CHECK(exact_equal(inverse(Mat(0, 0)), Mat(0, 0)));
}

TEST_CASE("solve_exact") {
  const Mat a = make_mat({{1, 2}, {0, -1}, {3, 0}});
  const Mat x = make_mat({{5}, {-2}});
  const Mat b = a * x;
  CHECK(exact_equal(solve_exact(a, b), x));
  CHECK_THROWS_AS(solve_exact(make_mat({{1}, {0}}), make_mat({{0}, {1}})),
                  ShapeError);
}

TEST_CASE("rank, kernel and inverse against determinant oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = static_cast<Index>(rng() % 5);
    const Mat m = random_square(rng, n);
    const bool invertible_oracle = tl_det(m) != Rational(0);
    const auto rk = rank(m);
    const auto ker = kernel_basis(m);

    CHECK(rk + static_cast<Index>(ker.size()) == n);
    CHECK(is_invertible(m) == invertible_oracle);
    CHECK((rk == n) == invertible_oracle);
    CHECK(ker.empty() == invertible_oracle);
    for (const auto& v : ker) CHECK(is_zero_matrix(m * v));
    if (invertible_oracle) {
      const Mat mi = inverse(m);
      CHECK(exact_equal(mi * m, Mat::Identity(n, n)));
      CHECK(exact_equal(m * mi, Mat::Identity(n, n)));
    } else {
      CHECK_THROWS_AS(inverse(m), Singular);
    }
  }
}

TEST_CASE("linear map labels and composition") {
  const LinearMap f(make_mat({{1, 0}, {0, 1}, {1, 1}}), {"a", "b"},
                    {"x", "y", "z"});
  CHECK(f.rows() == 3);
  CHECK(f.cols() == 2);
  CHECK_THROWS_AS(LinearMap(Mat::Identity(2, 2), {"a"}, {"x", "y"}),
                  ShapeError);
  CHECK_THROWS_AS(LinearMap(Mat::Identity(2, 2), {"a", "a"}, {"x", "y"}),
                  ShapeError);

  const LinearMap g(make_mat({{2, 0, 1}}), {"x", "y", "z"}, {"w"});
  const LinearMap gf = g * f;
  CHECK(gf.rows() == 1);
  CHECK(gf.cols() == 2);
  CHECK(gf.domain_basis == std::vector<std::string>{"a", "b"});
  CHECK(gf.codomain_basis == std::vector<std::string>{"w"});
  CHECK_THROWS_AS(f * g * g, ShapeError);

  CHECK(invert(LinearMap(make_mat({{1, 2}, {0, -1}}))) ==
        LinearMap(make_mat({{1, 2}, {0, -1}})));
  CHECK_THROWS_AS(invert(LinearMap(make_mat({{1, 1}, {1, 1}}))), Singular);
}

TEST_CASE("empty shapes compose") {
  const LinearMap a(Mat(2, 0));
  const LinearMap b(Mat(0, 3));
  const LinearMap ab = a * b;
  CHECK(ab.rows() == 2);
  CHECK(ab.cols() == 3);
  CHECK(is_zero_matrix(ab.entries));
  CHECK(direct_sum(a, b).rows() == 2);
  CHECK(direct_sum(a, b).cols() == 3);
}
