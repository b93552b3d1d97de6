#include "kwall/laurent.hpp"

#include "kwall/errors.hpp"

#include <sstream>

namespace kwall {

std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit = (a == Rational(1));
    if (e == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::optional<Laurent> divide_exact(const Laurent& f, const Laurent& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return Laurent::zero();

  // Shift to ordinary polynomials and divide from the top.
  const auto f_shift = f.min_degree();
  const auto g_shift = g.min_degree();
  Laurent rem = f.shifted(-f_shift);
  const Laurent den = g.shifted(-g_shift);
  const Rational lead = den.coeff(den.max_degree());

  Laurent quot;
  while (!rem.is_zero()) {
    const auto step = rem.max_degree() - den.max_degree();
    if (step < 0) return std::nullopt;
    const Rational ratio = rem.coeff(rem.max_degree()) / lead;
    quot += Laurent::monomial(step, ratio);
    rem -= Rational(ratio) * den.shifted(step);
  }
  return quot.shifted(f_shift - g_shift);
}

Laurent window_reduce(const Laurent& p, const Laurent& q,
                      std::int64_t lo, std::int64_t width) {
  if (q.is_zero())
    throw WidthMismatch("window_reduce: modulus is zero");
  if (width < 1)
    throw WidthMismatch("window_reduce: width must be >= 1, got " +
                        std::to_string(width));
  if (q.span() != width)
    throw WidthMismatch("window_reduce: modulus spans " +
                        std::to_string(q.span()) + " but width is " +
                        std::to_string(width));
  const Rational top = q.coeff(q.max_degree());
  const Rational bot = q.coeff(q.min_degree());
  if (!is_plus_minus_one(top) || !is_plus_minus_one(bot))
    throw NonUnitExtremes(
        "window_reduce: extreme coefficients of the modulus must be +-1");

  const std::int64_t hi = lo + width - 1;
  Laurent r = p;
  // Exponents above the window fold down via the top term of a shift of q;
  // each step replaces t^e by terms in [e-width, e-1].
  while (!r.is_zero() && r.max_degree() > hi) {
    const auto e = r.max_degree();
    const Rational c = r.coeff(e) / top;
    r -= c * q.shifted(e - q.max_degree());
  }
  // Exponents below fold up via the bottom term; new terms land in
  // [e+1, e+width] which never overshoots hi.
  while (!r.is_zero() && r.min_degree() < lo) {
    const auto e = r.min_degree();
    const Rational c = r.coeff(e) / bot;
    r -= c * q.shifted(e - q.min_degree());
  }

  if (!divide_exact(p - r, q))
    throw InternalInvariantViolation(
        "window_reduce: residue is not divisible by the modulus");
  return r;
}

}  // namespace kwall
