#include "kwall/laurent.hpp"

#include "kwall/errors.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace kwall;

namespace {

// Test-local convolution, kept independent of Laurent::operator* so that
// quotient witnesses from the library can be checked against it.
std::map<std::int64_t, Rational> tl_mul(const Laurent& a, const Laurent& b) {
  std::map<std::int64_t, Rational> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      auto& slot = out[ea + eb];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(ea + eb);
    }
  return out;
}

bool tl_equal(const std::map<std::int64_t, Rational>& m, const Laurent& p) {
  return m == p.terms();
}

// Divisibility with an independently verified witness.
bool divides_with_witness(const Laurent& q, const Laurent& f) {
  const auto quotient = divide_exact(f, q);
  if (!quotient) return false;
  return tl_equal(tl_mul(*quotient, q), f);
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }
  Laurent modulus() {
    Laurent q = Laurent::monomial(range(-3, 3), Rational(range(0, 1) ? 1 : -1));
    const auto f = range(1, 3);
    for (std::int64_t i = 0; i < f; ++i)
      q = q * (Laurent::one() - Laurent::monomial(range(1, 3)));
    return q;
  }
  Laurent poly() {
    Laurent p;
    const auto n = range(0, 6);
    for (std::int64_t i = 0; i < n; ++i)
      p += Laurent::monomial(range(-6, 6), Rational(range(-5, 5)));
    return p;
  }
};

const Laurent t = Laurent::monomial(1);
const Laurent t_inv = Laurent::monomial(-1);

}  // namespace

TEST_CASE("laurent multiplication") {
  const Laurent one_minus_t = Laurent::one() - t;
  CHECK(one_minus_t * one_minus_t ==
        Laurent{{0, 1}, {1, -2}, {2, 1}});
  CHECK(t_inv * (one_minus_t * one_minus_t) ==
        Laurent{{-1, 1}, {0, -2}, {1, 1}});
  CHECK((Laurent{{-2, 3}, {5, 7}} * Laurent::zero()).is_zero());
  CHECK(Laurent::zero() * Laurent::zero() == Laurent::zero());
}

TEST_CASE("laurent equality is equality of coefficient maps") {
  CHECK(Laurent{{0, 1}, {1, -1}} == Laurent{{1, -1}, {0, 1}});
  CHECK(Laurent{{0, 1}} != Laurent{{0, 2}});
  CHECK((Laurent{{3, 1}} - Laurent{{3, 1}}).is_zero());
}

TEST_CASE("to_string") {
  CHECK(to_string(Laurent::zero()) == "0");
  CHECK(to_string(Laurent{{-1, 1}, {0, -2}, {1, 1}}) == "t^-1 - 2 + t");
  CHECK(to_string(Laurent{{0, 1}, {1, -2}, {2, 1}}) == "1 - 2*t + t^2");
  CHECK(to_string(Laurent{{-2, -1}, {0, 1}}) == "-t^-2 + 1");
}

TEST_CASE("window_reduce examples") {
  const Laurent q_minus = (Laurent::one() - t) * (Laurent::one() - t);
  const Laurent q_plus = Laurent::one() - Laurent::monomial(-2);

  // t = 2 - t^-1 modulo (1-t)^2 on [-1, 0].
  CHECK(window_reduce(t, q_minus, -1, 2) == Laurent{{-1, -1}, {0, 2}});
  // t^-2 = 1 modulo 1 - t^-2, so t^-1 = t on [0, 1].
  CHECK(window_reduce(t_inv, q_plus, 0, 2) == t);

  const Laurent inside = Laurent{{-1, 3}, {0, -4}};
  CHECK(window_reduce(inside, q_minus, -1, 2) == inside);
  CHECK(window_reduce(Laurent::zero(), q_minus, -1, 2).is_zero());
}

TEST_CASE("window_reduce rejects bad moduli") {
  const Laurent q = (Laurent::one() - t) * (Laurent::one() - t);
  CHECK_THROWS_AS(window_reduce(t, q, -1, 3), WidthMismatch);
  CHECK_THROWS_AS(window_reduce(t, q, -1, 0), WidthMismatch);
  CHECK_THROWS_AS(window_reduce(t, Laurent::zero(), 0, 1), WidthMismatch);
  const Laurent bad = Laurent::one() - Laurent::monomial(1, Rational(2));
  CHECK_THROWS_AS(window_reduce(t, bad, 0, 1), NonUnitExtremes);
}

TEST_CASE("divide_exact") {
  const Laurent q = (Laurent::one() - t) * (Laurent::one() - t);
  CHECK(divide_exact(q * Laurent{{-3, 2}, {1, 5}}, q).has_value());
  CHECK(*divide_exact(q, Laurent::one() - t) == Laurent::one() - t);
  CHECK(!divide_exact(Laurent::one() - t, q).has_value());
  CHECK(!divide_exact(t, Laurent::zero()).has_value());
  CHECK(divide_exact(Laurent::zero(), q)->is_zero());
}

TEST_CASE("window_reduce randomized properties") {
  Gen gen(20260810);
  for (int trial = 0; trial < 400; ++trial) {
    const Laurent q = gen.modulus();
    const Laurent p1 = gen.poly();
    const Laurent p2 = gen.poly();
    const auto lo = gen.range(-4, 4);
    const auto width = q.span();

    const Laurent r1 = window_reduce(p1, q, lo, width);
    const Laurent r2 = window_reduce(p2, q, lo, width);

    for (auto e : r1.support()) {
      CHECK(e >= lo);
      CHECK(e <= lo + width - 1);
    }
    CHECK(divides_with_witness(q, p1 - r1));

    // Adding a multiple of q never changes the representative.
    const Laurent shifted_in = p1 + q.shifted(gen.range(-3, 3));
    CHECK(window_reduce(shifted_in, q, lo, width) == r1);

    const Rational a(gen.range(-3, 3));
    const Rational b(gen.range(-3, 3));
    CHECK(window_reduce(a * p1 + b * p2, q, lo, width) == a * r1 + b * r2);
    CHECK(window_reduce(r1, q, lo, width) == r1);
  }
}

TEST_CASE("rational normalization") {
  const Rational r(Int(4), Int(6));
  CHECK(r.numerator() == 2);
  CHECK(r.denominator() == 3);
  const Rational s(Int(3), Int(-6));
  CHECK(s.numerator() == -1);
  CHECK(s.denominator() == 2);
  CHECK(Rational(Int(0), Int(-5)) == Rational(0));
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational("7/2") == Rational(Int(7), Int(2)));
  CHECK(Rational(Int(5), Int(1)).is_integer());
  CHECK(!Rational(Int(5), Int(2)).is_integer());
}
