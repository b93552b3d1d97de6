#include "kwall/linear_map.hpp"

#include "kwall/errors.hpp"

#include <set>
#include <utility>

namespace kwall {

namespace {

struct Rref {
  Mat m;
  std::vector<Index> pivots;
};

Rref rref(Mat a) {
  Rref out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index pr = 0;
  for (Index c = 0; c < cols && pr < rows; ++c) {
    Index sel = -1;
    for (Index r = pr; r < rows; ++r) {
      if (a(r, c) != Rational(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) a.row(pr).swap(a.row(sel));
    const Rational piv = a(pr, c);
    for (Index j = c; j < cols; ++j) a(pr, j) /= piv;
    for (Index r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Rational f = a(r, c);
      if (f == Rational(0)) continue;
      for (Index j = c; j < cols; ++j) a(r, j) -= f * a(pr, j);
    }
    out.pivots.push_back(c);
    ++pr;
  }
  out.m = std::move(a);
  return out;
}

void check_label_list(const std::vector<std::string>& labels, Index n,
                      const char* side) {
  if (static_cast<Index>(labels.size()) != n)
    throw ShapeError(std::string("LinearMap: ") + side +
                     " basis size does not match matrix shape");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<Index>(seen.size()) != n)
    throw ShapeError(std::string("LinearMap: duplicate label in ") + side +
                     " basis");
}

}  // namespace

Mat make_mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  Index c = 0;
  for (const auto& row : rows) {
    c = static_cast<Index>(row.size());
    break;
  }
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw ShapeError("make_mat: ragged rows");
    Index j = 0;
    for (long long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

bool exact_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero_matrix(const Mat& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Rational(0)) return false;
  return true;
}

Index rank(const Mat& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

std::vector<Index> pivot_columns(const Mat& m) { return rref(m).pivots; }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Rref rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vec> basis;
  for (Index j = 0; j < m.cols(); ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    Vec v = Vec::Zero(m.cols());
    v(j) = Rational(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v(rr.pivots[i]) = -rr.m(static_cast<Index>(i), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols())
    throw Singular("inverse: matrix is not square");
  const Index n = m.rows();
  Mat aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = Mat::Identity(n, n);
  const Rref rr = rref(std::move(aug));
  if (static_cast<Index>(rr.pivots.size()) != n ||
      (n > 0 && rr.pivots.back() >= n))
    throw Singular("inverse: matrix has rank < " + std::to_string(n));
  return rr.m.block(0, n, n, n);
}

Mat solve_exact(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw ShapeError("solve_exact: row counts differ");
  Mat aug(a.rows(), a.cols() + b.cols());
  aug.block(0, 0, a.rows(), a.cols()) = a;
  aug.block(0, a.cols(), b.rows(), b.cols()) = b;
  const Rref rr = rref(std::move(aug));
  Mat x = Mat::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    const Index p = rr.pivots[i];
    if (p >= a.cols())
      throw ShapeError("solve_exact: inconsistent system");
    x.row(p) = rr.m.block(static_cast<Index>(i), a.cols(), 1, b.cols());
  }
  return x;
}

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

LinearMap::LinearMap(Mat m)
    : entries(std::move(m)),
      domain_basis(default_labels(entries.cols())),
      codomain_basis(default_labels(entries.rows())) {}

LinearMap::LinearMap(Mat m, std::vector<std::string> domain,
                     std::vector<std::string> codomain)
    : entries(std::move(m)),
      domain_basis(std::move(domain)),
      codomain_basis(std::move(codomain)) {
  check_label_list(domain_basis, entries.cols(), "domain");
  check_label_list(codomain_basis, entries.rows(), "codomain");
}

LinearMap LinearMap::identity(Index n) {
  return LinearMap(Mat::Identity(n, n));
}

LinearMap LinearMap::identity(Index n, const std::vector<std::string>& basis) {
  return LinearMap(Mat::Identity(n, n), basis, basis);
}

LinearMap LinearMap::zero(Index rows, Index cols) {
  return LinearMap(Mat::Zero(rows, cols));
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.cols() != b.rows())
    throw ShapeError("LinearMap: composition shape mismatch (" +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
  return LinearMap(a.entries * b.entries, b.domain_basis, a.codomain_basis);
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("LinearMap: addition shape mismatch");
  return LinearMap(a.entries + b.entries, a.domain_basis, a.codomain_basis);
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("LinearMap: subtraction shape mismatch");
  return LinearMap(a.entries - b.entries, a.domain_basis, a.codomain_basis);
}

LinearMap invert(const LinearMap& m) {
  if (m.rows() != m.cols())
    throw Singular("invert: map is not square");
  return LinearMap(inverse(m.entries), m.codomain_basis, m.domain_basis);
}

LinearMap direct_sum(const LinearMap& a, const LinearMap& b) {
  Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.block(0, 0, a.rows(), a.cols()) = a.entries;
  m.block(a.rows(), a.cols(), b.rows(), b.cols()) = b.entries;
  return LinearMap(std::move(m));
}

}  // namespace kwall
