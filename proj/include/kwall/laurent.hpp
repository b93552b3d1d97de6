#pragma once

#include "kwall/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kwall {

// Laurent polynomial in one variable t over Rational, finite support, no
// zero coefficients stored.  Equality is equality of coefficient maps.
class Laurent {
 public:
  using Exponent = std::int64_t;

  Laurent() = default;
  Laurent(std::initializer_list<std::pair<Exponent, Rational>> terms) {
    for (const auto& [e, c] : terms) add(e, c);
  }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0); }
  static Laurent monomial(Exponent e, Rational c = Rational(1)) {
    Laurent r;
    r.add(e, c);
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(Exponent e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  // Degree bounds; only meaningful on nonzero values.
  Exponent min_degree() const { return coeffs_.begin()->first; }
  Exponent max_degree() const { return coeffs_.rbegin()->first; }
  Exponent span() const { return max_degree() - min_degree(); }
  std::size_t term_count() const { return coeffs_.size(); }

  std::vector<Exponent> support() const {
    std::vector<Exponent> s;
    s.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) s.push_back(e);
    return s;
  }
  const std::map<Exponent, Rational>& terms() const { return coeffs_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
    return r;
  }
  friend Laurent operator*(const Rational& c, const Laurent& a) {
    Laurent r;
    for (const auto& [e, ac] : a.coeffs_) r.add(e, c * ac);
    return r;
  }
  Laurent operator-() const { return Rational(-1) * *this; }

  // Multiplication by t^k.
  Laurent shifted(Exponent k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

 private:
  void add(Exponent e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  std::map<Exponent, Rational> coeffs_;
};

// "t^-1 - 2 + t" style rendering, terms in ascending degree.
std::string to_string(const Laurent& p);

// Exact quotient f/g in the Laurent ring, or nullopt when g does not
// divide f (or g = 0).
std::optional<Laurent> divide_exact(const Laurent& f, const Laurent& g);

// Unique representative r of p modulo (q) supported on the exponent window
// [lo, lo+width-1].  Requires span(q) == width >= 1 and extreme coefficients
// of q equal to +-1; the returned value satisfies q | p - r, re-verified by
// exact division before returning.
Laurent window_reduce(const Laurent& p, const Laurent& q,
                      std::int64_t lo, std::int64_t width);

}  // namespace kwall
