#pragma once

#include "kwall/rational.hpp"

#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <vector>

namespace kwall {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

Mat make_mat(std::initializer_list<std::initializer_list<long long>> rows);

bool exact_equal(const Mat& a, const Mat& b);
bool is_zero_matrix(const Mat& a);

// Exact Gaussian elimination kernels.
Index rank(const Mat& m);
std::vector<Vec> kernel_basis(const Mat& m);
std::vector<Index> pivot_columns(const Mat& m);
bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);  // throws Singular
// Any exact solution X of a * x = b, for b with columns in the column space
// of a (unique when a has full column rank).  Throws on inconsistency.
Mat solve_exact(const Mat& a, const Mat& b);

std::vector<std::string> default_labels(Index n);

// Exact rational matrix with named domain and codomain bases.  Basis labels
// are presentation data: composition and equality look at entries only.
struct LinearMap {
  Mat entries;
  std::vector<std::string> domain_basis;
  std::vector<std::string> codomain_basis;

  LinearMap() : entries(0, 0) {}
  explicit LinearMap(Mat m);
  LinearMap(Mat m, std::vector<std::string> domain,
            std::vector<std::string> codomain);

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }

  static LinearMap identity(Index n);
  static LinearMap identity(Index n, const std::vector<std::string>& basis);
  static LinearMap zero(Index rows, Index cols);

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return exact_equal(a.entries, b.entries);
  }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) {
    return !(a == b);
  }
};

inline Index rank(const LinearMap& m) { return rank(m.entries); }
inline std::vector<Vec> kernel_basis(const LinearMap& m) {
  return kernel_basis(m.entries);
}
LinearMap invert(const LinearMap& m);  // throws Singular on rank deficiency

// Block-diagonal sum.
LinearMap direct_sum(const LinearMap& a, const LinearMap& b);

}  // namespace kwall
