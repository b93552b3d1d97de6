#include "kwall/self_check.hpp"

#include "kwall/errors.hpp"
#include "kwall/laurent.hpp"
#include "kwall/linear_map.hpp"
#include "kwall/perverse.hpp"
#include "kwall/wall.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace kwall {

namespace {

// mt19937_64 raw draws only, so a fixed seed reproduces bit-for-bit on any
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(n));
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return (gen_() & 1u) != 0; }

 private:
  std::mt19937_64 gen_;
};

std::string weights_tag(const std::vector<std::int64_t>& w, std::int64_t k0) {
  std::ostringstream os;
  os << "weights=(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ") k0=" << k0;
  return os.str();
}

Laurent random_modulus(Rng& rng) {
  Laurent q = Laurent::monomial(rng.range(-3, 3),
                                Rational(rng.coin() ? 1 : -1));
  const auto factors = rng.range(1, 3);
  for (std::int64_t i = 0; i < factors; ++i)
    q = q * (Laurent::one() - Laurent::monomial(rng.range(1, 3)));
  return q;
}

Laurent random_laurent(Rng& rng) {
  Laurent p;
  const auto terms = rng.range(0, 6);
  for (std::int64_t i = 0; i < terms; ++i)
    p += Laurent::monomial(rng.range(-6, 6), Rational(rng.range(-5, 5)));
  return p;
}

Mat random_matrix(Rng& rng, Index rows, Index cols, std::int64_t bound) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = Rational(rng.range(-bound, bound));
  return m;
}

Mat random_invertible(Rng& rng, Index n) {
  // Product of elementary operations: integer entries, always invertible.
  Mat m = Mat::Identity(n, n);
  if (n == 0) return m;
  const auto ops = rng.range(2, 5);
  for (std::int64_t k = 0; k < ops; ++k) {
    const Index i = rng.below(n);
    Index j = rng.below(n);
    switch (rng.below(3)) {
      case 0:
        if (i != j) m.row(i) += Rational(rng.range(-2, 2)) * m.row(j).eval();
        break;
      case 1:
        if (i != j) m.row(i).swap(m.row(j));
        break;
      default:
        m.row(i) *= Rational(-1);
        break;
    }
  }
  return m;
}

GGMDiagram random_valid_ggm(Rng& rng, Index max_dim = 3) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Index d0 = rng.below(max_dim + 1);
    const Index d1 = rng.below(max_dim + 1);
    GGMDiagram g(LinearMap(random_matrix(rng, d0, d1, 3)),
                 LinearMap(random_matrix(rng, d1, d0, 3)));
    if (validate_ggm(g)) return g;
  }
  const Index d = rng.below(max_dim + 1);
  return GGMDiagram(LinearMap(Mat::Zero(d, d)), LinearMap(Mat::Zero(d, d)));
}

KSDiagram conjugate(const KSDiagram& k, const Mat& p, const Mat& q,
                    const Mat& r) {
  const Mat p_inv = inverse(p);
  const Mat q_inv = inverse(q);
  const Mat r_inv = inverse(r);
  return KSDiagram(LinearMap(p * k.f_minus.entries * q_inv),
                   LinearMap(p * k.f_plus.entries * r_inv),
                   LinearMap(q * k.g_minus.entries * p_inv),
                   LinearMap(r * k.g_plus.entries * p_inv));
}

std::vector<std::int64_t> random_weights(Rng& rng) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    const auto n = rng.range(2, 8);
    std::vector<std::int64_t> w;
    std::int64_t sum = 0;
    bool pos = false;
    bool neg = false;
    for (std::int64_t i = 0; i < n; ++i) {
      const auto a = rng.range(-4, 4);
      w.push_back(a);
      sum += a;
      pos = pos || a > 0;
      neg = neg || a < 0;
    }
    if (sum == 0 && pos && neg) return w;
  }
  return {1, -1};
}

struct Suite {
  std::vector<CheckResult> results;
  std::map<std::string, std::size_t> index;

  CheckResult& family(const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) {
      index.emplace(name, results.size());
      results.push_back(CheckResult{name, 0, {}});
      return results.back();
    }
    return results[it->second];
  }

  void tally(const std::string& name, bool ok, const std::string& detail) {
    CheckResult& r = family(name);
    ++r.trials;
    if (!ok) r.failures.push_back(detail);
  }
};

void check_window_reduce(Suite& suite, Rng& rng) {
  const Laurent q = random_modulus(rng);
  const Laurent p1 = random_laurent(rng);
  const Laurent p2 = random_laurent(rng);
  const auto lo = rng.range(-4, 4);
  const auto width = q.span();
  const auto hi = lo + width - 1;
  const std::string tag = "q=" + to_string(q) + " p=" + to_string(p1) +
                          " lo=" + std::to_string(lo);

  const Laurent r1 = window_reduce(p1, q, lo, width);
  const Laurent r2 = window_reduce(p2, q, lo, width);

  bool supported = true;
  for (const auto e : r1.support()) supported = supported && e >= lo && e <= hi;
  suite.tally("exact_algebra.window_reduce.support", supported, tag);

  const auto quotient = divide_exact(p1 - r1, q);
  suite.tally("exact_algebra.window_reduce.divisibility",
              quotient.has_value() && *quotient * q == p1 - r1, tag);

  const Rational a(rng.range(-3, 3));
  const Rational b(rng.range(-3, 3));
  const Laurent combo = a * p1 + b * p2;
  suite.tally("exact_algebra.window_reduce.linearity",
              window_reduce(combo, q, lo, width) == a * r1 + b * r2, tag);
  suite.tally("exact_algebra.window_reduce.idempotence",
              window_reduce(r1, q, lo, width) == r1, tag);
}

void check_matrix_kernels(Suite& suite, Rng& rng) {
  const Index n = rng.below(6);
  const Mat m = random_matrix(rng, n, n, 4);
  const auto rk = rank(m);
  const auto ker = kernel_basis(m);
  std::ostringstream tag;
  tag << n << "x" << n << " matrix, rank " << rk;

  suite.tally("exact_algebra.rank_nullity",
              rk + static_cast<Index>(ker.size()) == n, tag.str());
  const bool inv = is_invertible(m);
  suite.tally("exact_algebra.invertibility",
              inv == (rk == n) && inv == ker.empty(), tag.str());
  if (inv) {
    const Mat mi = inverse(m);
    suite.tally("exact_algebra.inverse_identity",
                exact_equal(mi * m, Mat::Identity(n, n)) &&
                    exact_equal(m * mi, Mat::Identity(n, n)),
                tag.str());
  }
  bool kernel_annihilated = true;
  for (const auto& v : ker)
    kernel_annihilated = kernel_annihilated && is_zero_matrix(m * v);
  suite.tally("exact_algebra.kernel_vectors", kernel_annihilated, tag.str());
}

void check_perverse(Suite& suite, Rng& rng) {
  // Two-sided validity on arbitrary shape-consistent data.
  {
    const Index d0 = rng.below(4);
    const Index d1 = rng.below(4);
    const Mat u = random_matrix(rng, d0, d1, 3);
    const Mat v = random_matrix(rng, d1, d0, 3);
    const bool on_d1 =
        is_invertible(v * u + Mat::Identity(d1, d1));
    const bool on_d0 =
        is_invertible(u * v + Mat::Identity(d0, d0));
    suite.tally("perverse.two_sided_validity", on_d1 == on_d0,
                "d0=" + std::to_string(d0) + " d1=" + std::to_string(d1));
  }

  const GGMDiagram g = random_valid_ggm(rng);
  const std::string tag =
      "d0=" + std::to_string(g.d0()) + " d1=" + std::to_string(g.d1());

  const KSDiagram k = ggm_to_ks(g);
  suite.tally("perverse.block_model_valid", validate_ks(k), tag);

  const KSToGGMResult round = ks_to_ggm(k);
  suite.tally("perverse.roundtrip_exact",
              round.diagram.u == g.u && round.diagram.v == g.v, tag);
  suite.tally("perverse.certificate",
              verify_certificate(k, round.diagram, round.certificate), tag);

  // A conjugated diagram exercises the nontrivial splitting path.
  const KSDiagram moved =
      conjugate(k, random_invertible(rng, k.e0()),
                random_invertible(rng, k.e_minus()),
                random_invertible(rng, k.e_plus()));
  bool moved_ok = validate_ks(moved);
  suite.tally("perverse.conjugated_valid", moved_ok, tag);
  if (moved_ok) {
    const KSToGGMResult extracted = ks_to_ggm(moved);
    suite.tally("perverse.conjugated_roundtrip",
                verify_certificate(moved, extracted.diagram,
                                   extracted.certificate) &&
                    defect_report(extracted.diagram) == defect_report(g),
                tag);

    const auto [m_minus, m_plus] = monodromies(moved);
    const LinearMap intertwiner = moved.g_minus * moved.f_plus;
    suite.tally("perverse.monodromy_conjugacy",
                intertwiner * m_plus == m_minus * intertwiner &&
                    is_invertible(m_minus.entries) &&
                    is_invertible(m_plus.entries),
                tag);
  }

  const DefectReport dg = defect_report(g);
  suite.tally("perverse.defect_nonnegative", dg.skyscraper_count >= 0, tag);

  const GGMDiagram h = random_valid_ggm(rng);
  const DefectReport dh = defect_report(h);
  const DefectReport dsum = defect_report(direct_sum(g, h));
  suite.tally("perverse.defect_additive",
              dsum.vanishing_dim == dg.vanishing_dim + dh.vanishing_dim &&
                  dsum.nearby_rank_drop ==
                      dg.nearby_rank_drop + dh.nearby_rank_drop &&
                  dsum.skyscraper_count ==
                      dg.skyscraper_count + dh.skyscraper_count,
              tag);

  const Index n = rng.range(1, 4);
  const LinearMap m(random_invertible(rng, n));
  const GGMDiagram ic = ic_from_monodromy(m);
  suite.tally("perverse.ic_has_no_defect",
              validate_ggm(ic) && defect_report(ic).skyscraper_count == 0,
              "n=" + std::to_string(n));
}

void check_wall_model(Suite& suite, Rng& rng,
                      const std::vector<std::int64_t>& weights,
                      std::int64_t k0) {
  const std::string tag = weights_tag(weights, k0);
  const WallModel model = build_model(weights, k0);
  for (const auto& check : run_wall_checks(model))
    suite.tally("kgit." + check.name, check.ok, tag + ": " + check.detail);

  // Verdicts and matrices are stable under window relabeling and weight
  // permutation.
  const SphericalData sph = spherical_data(model);
  const CriterionResult ic = ic_criterion(model);
  const CriterionResult dual = dual_ic_criterion(model);
  const ParityResult parity = parity_check(model);

  const auto alt_k0 = rng.range(-3, 3);
  const WallModel shifted = build_model(weights, alt_k0);
  bool stable = ic == ic_criterion(shifted) &&
                dual == dual_ic_criterion(shifted) &&
                parity == parity_check(shifted) &&
                sph.m_plus == spherical_data(shifted).m_plus;

  std::vector<std::int64_t> permuted = weights;
  for (std::size_t i = permuted.size(); i > 1; --i)
    std::swap(permuted[i - 1],
              permuted[static_cast<std::size_t>(rng.below(
                  static_cast<std::int64_t>(i)))]);
  const WallModel reordered = build_model(permuted, k0);
  const SphericalData sph2 = spherical_data(reordered);
  stable = stable && ic == ic_criterion(reordered) &&
           dual == dual_ic_criterion(reordered) &&
           parity == parity_check(reordered) && sph.m_plus == sph2.m_plus &&
           sph.k_s == sph2.k_s && sph.m_prime == sph2.m_prime;
  suite.tally("kgit.verdict_stability", stable, tag);
}

void check_paper_families(Suite& suite) {
  const auto expect = [&](bool ok, const std::string& what) {
    suite.tally("kgit.paper_families", ok, what);
  };

  {
    const WallModel m = build_model({1, 1, -2}, -1);
    const WallReport r = full_report(m);
    expect(r.model.eta == 2 && r.model.codim_z == 3, "local P1 window data");
    expect(r.m_plus.entries == make_mat({{1, 2}, {0, -1}}),
           "local P1 twist matrix");
    expect(r.m_prime == Rational(-1), "local P1 cotwist scalar");
    expect(r.ic_primary.saturated && r.defect == 0, "local P1 saturation");
    expect(r.parity.prediction, "local P1 parity prediction");
  }
  {
    const WallModel m = build_model({1, 1, -1, -1}, -1);
    const WallReport r = full_report(m);
    expect(is_zero_matrix(r.k_s.entries), "conifold K(S) = 0");
    expect(r.m_plus == LinearMap::identity(2), "conifold trivial twist");
    expect(!r.ic_primary.saturated && r.defect == 1, "conifold defect");
    expect(!r.parity.prediction, "conifold parity silent");
  }
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(2 * n), 1);
    w.push_back(-2 * n);
    const WallReport r = full_report(build_model(w));
    expect(r.parity.prediction && r.ic_primary.saturated,
           "local P^odd n=" + std::to_string(n));
  }
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(d), 1);
    w.insert(w.end(), static_cast<std::size_t>(d), -1);
    const WallModel m = build_model(w);
    const WallReport r = full_report(m);
    expect(is_zero_matrix(r.k_s.entries) && !r.ic_primary.saturated &&
               r.defect == 1,
           "standard flop d=" + std::to_string(d));
    const Rational sign(d % 2 == 0 ? 1 : -1);
    const Laurent lhs = koszul_class(m, Side::Minus, 0);
    const Laurent rhs =
        sign * koszul_class(m, Side::Plus, 0).shifted(d);
    expect(lhs == rhs, "standard flop d=" + std::to_string(d) +
                           " Koszul sign identity");
  }
}

}  // namespace

std::vector<CheckResult> run_self_check(int trials, std::uint64_t seed) {
  Suite suite;
  Rng rng(seed);

  // Fix the family order up front so the output layout is independent of
  // which failures occur.
  for (const char* name :
       {"exact_algebra.window_reduce.support",
        "exact_algebra.window_reduce.divisibility",
        "exact_algebra.window_reduce.linearity",
        "exact_algebra.window_reduce.idempotence",
        "exact_algebra.rank_nullity", "exact_algebra.invertibility",
        "exact_algebra.inverse_identity", "exact_algebra.kernel_vectors",
        "perverse.two_sided_validity", "perverse.block_model_valid",
        "perverse.roundtrip_exact", "perverse.certificate",
        "perverse.conjugated_valid", "perverse.conjugated_roundtrip",
        "perverse.monodromy_conjugacy", "perverse.defect_nonnegative",
        "perverse.defect_additive", "perverse.ic_has_no_defect",
        "kgit.dimension_ledger", "kgit.res_adjunctions",
        "kgit.sod_orthogonality", "kgit.iota_adjunctions", "kgit.twist_route",
        "kgit.cotwist_scalar", "kgit.pk_scalars", "kgit.kp_diagram",
        "kgit.pk_diagram", "kgit.defect_consistency",
        "kgit.parity_implication", "kgit.verdict_stability",
        "kgit.paper_families"})
    suite.family(name);

  for (int t = 0; t < trials; ++t) {
    check_window_reduce(suite, rng);
    check_matrix_kernels(suite, rng);
    check_perverse(suite, rng);
    check_wall_model(suite, rng, random_weights(rng), rng.range(-3, 3));
  }

  // The bundled wall families run every time, whatever the trial count.
  check_wall_model(suite, rng, {1, 1, -2}, -1);
  check_wall_model(suite, rng, {1, 1, -1, -1}, -1);
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(2 * n), 1);
    w.push_back(-2 * n);
    check_wall_model(suite, rng, w, 0);
  }
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(d), 1);
    w.insert(w.end(), static_cast<std::size_t>(d), -1);
    check_wall_model(suite, rng, w, 0);
  }
  check_paper_families(suite);

  return suite.results;
}

}  // namespace kwall
