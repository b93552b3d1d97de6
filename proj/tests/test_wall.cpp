#include "kwall/wall.hpp"

#include "kwall/errors.hpp"

#include <doctest.h>

using namespace kwall;

namespace {

const Laurent t = Laurent::monomial(1);

WallModel local_p1() { return build_model({1, 1, -2}, -1); }
WallModel conifold() { return build_model({1, 1, -1, -1}, -1); }

std::vector<std::int64_t> podd_weights(int n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(2 * n), 1);
  w.push_back(-2 * n);
  return w;
}

std::vector<std::int64_t> flop_weights(int d) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(d), 1);
  w.insert(w.end(), static_cast<std::size_t>(d), -1);
  return w;
}

}  // namespace

TEST_CASE("build_model derives the wall data") {
  const WallModel m = local_p1();
  CHECK(m.eta == 2);
  CHECK(m.codim_z == 3);
  CHECK(m.positive_count == 2);
  CHECK(m.negative_count == 1);
  CHECK(m.q_minus == Laurent{{0, 1}, {1, -2}, {2, 1}});
  CHECK(m.q_plus == Laurent{{0, 1}, {-2, -1}});

  const WallModel c = conifold();
  CHECK(c.eta == 2);
  CHECK(c.codim_z == 4);

  const WallModel z = build_model({1, 0, -1});
  CHECK(z.eta == 1);
  CHECK(z.codim_z == 2);

  CHECK_THROWS_AS(build_model({1, 1, -3}), NotCalabiYau);
  CHECK_THROWS_AS(build_model({1, 1}), NoWall);
  CHECK_THROWS_AS(build_model({-2, -1, 0}), NoWall);
  CHECK_THROWS_AS(build_model({}), NoWall);
  CHECK_THROWS_AS(build_model({0, 0}), NoWall);
}

TEST_CASE("window bases") {
  const WindowBases b = window_bases(local_p1());
  CHECK(b.c == std::vector<std::int64_t>{-1, 0, 1});
  CHECK(b.g_minus == std::vector<std::int64_t>{-1, 0});
  CHECK(b.g_plus == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("koszul classes") {
  const WallModel m = local_p1();
  CHECK(koszul_class(m, Side::Minus, -1) == Laurent{{-1, 1}, {0, -2}, {1, 1}});
  CHECK(koszul_class(m, Side::Plus, 1) == Laurent{{1, 1}, {-1, -1}});

  for (int d = 1; d <= 4; ++d) {
    const WallModel flop = build_model(flop_weights(d));
    const Rational sign(d % 2 == 0 ? 1 : -1);
    CHECK(koszul_class(flop, Side::Minus, 0) ==
          sign * koszul_class(flop, Side::Plus, d));
  }
}

TEST_CASE("structure maps of local P1") {
  const StructureMaps s = structure_maps(local_p1());
  // res-(t) = 2 - t^-1 in the basis {t^-1, 1}.
  CHECK(exact_equal(s.res_minus.entries, make_mat({{1, 0, -1}, {0, 1, 2}})));
  // res+(t^-1) = t in the basis {1, t}.
  CHECK(exact_equal(s.res_plus.entries, make_mat({{0, 1, 0}, {1, 0, 1}})));
  CHECK(s.res_minus.domain_basis ==
        std::vector<std::string>{"O(-1)", "O(0)", "O(1)"});
  CHECK(s.res_minus.codomain_basis == std::vector<std::string>{"O(-1)", "O(0)"});

  CHECK(s.res_minus * s.res_minus_star == LinearMap::identity(2));
  CHECK(s.res_plus * s.res_plus_star == LinearMap::identity(2));
  CHECK(s.res_minus * s.star_res_minus == LinearMap::identity(2));
  CHECK(s.res_plus * s.star_res_plus == LinearMap::identity(2));
}

TEST_CASE("iota maps of local P1") {
  const IotaMaps io = iota_maps(local_p1());
  CHECK(exact_equal(io.iota_minus.entries, make_mat({{1}, {-2}, {1}})));
  CHECK(exact_equal(io.iota_plus.entries, make_mat({{-1}, {0}, {1}})));

  CHECK(io.iota_minus_star * io.iota_minus == LinearMap::identity(1));
  CHECK(io.star_iota_minus * io.iota_minus == LinearMap::identity(1));
  CHECK(io.iota_plus_star * io.iota_plus == LinearMap::identity(1));
  CHECK(io.star_iota_plus * io.iota_plus == LinearMap::identity(1));
  // Cross adjunction picks up the shift sign of the odd-codimension stratum.
  CHECK((io.iota_plus_star * io.iota_minus).entries(0, 0) == Rational(-1));
}

TEST_CASE("spherical data of local P1") {
  const SphericalData sph = spherical_data(local_p1());
  CHECK(exact_equal(sph.k_s.entries, make_mat({{-2}, {2}})));
  CHECK(exact_equal(sph.k_s_star.entries, make_mat({{0, 1}})));
  CHECK(exact_equal(sph.m_plus.entries, make_mat({{1, 2}, {0, -1}})));
  CHECK(sph.m_prime == Rational(-1));

  const StructureMaps s = structure_maps(local_p1());
  const LinearMap flop_flop =
      s.res_plus * s.res_minus_star * s.res_minus * s.res_plus_star;
  CHECK(flop_flop == sph.m_plus);
}

TEST_CASE("spherical data of the conifold") {
  const SphericalData sph = spherical_data(conifold());
  CHECK(is_zero_matrix(sph.k_s.entries));
  CHECK(sph.m_plus == LinearMap::identity(2));
  CHECK(sph.m_prime == Rational(1));
}

TEST_CASE("assembled large-window diagram") {
  const KSDiagram kp = assemble_kp(local_p1());
  CHECK(kp.e_minus() == 2);
  CHECK(kp.e0() == 3);
  CHECK(kp.e_plus() == 2);
  CHECK(validate_ks(kp));
  const auto [m_minus, m_plus] = monodromies(kp);
  CHECK(exact_equal(m_plus.entries, make_mat({{1, 2}, {0, -1}})));
  CHECK(is_invertible((kp.g_minus * kp.f_plus).entries));
  CHECK(is_invertible((kp.g_plus * kp.f_minus).entries));

  const KSToGGMResult extracted = ks_to_ggm(kp);
  CHECK(extracted.diagram.d0() == 1);
  CHECK(extracted.diagram.d1() == 2);
  CHECK(defect_report(extracted.diagram).skyscraper_count == 0);

  const auto [cm_minus, cm_plus] = monodromies(assemble_kp(conifold()));
  CHECK(cm_plus == LinearMap::identity(2));
  CHECK(cm_minus == LinearMap::identity(2));
  const KSToGGMResult cono = ks_to_ggm(assemble_kp(conifold()));
  CHECK(defect_report(cono.diagram).skyscraper_count == 1);
}

TEST_CASE("assembled dual diagram") {
  const KSDiagram pk = assemble_pk(local_p1());
  CHECK(pk.e_minus() == 1);
  CHECK(pk.e0() == 3);
  CHECK(pk.e_plus() == 1);
  CHECK(validate_ks(pk));
  const auto [m_minus, m_plus] = monodromies(pk);
  CHECK(m_minus.entries(0, 0) == Rational(-1));
  // g-f+ = (-1)^p and g+f- = (-1)^n.
  CHECK((pk.g_minus * pk.f_plus).entries(0, 0) == Rational(1));
  CHECK((pk.g_plus * pk.f_minus).entries(0, 0) == Rational(-1));

  const KSDiagram cpk = assemble_pk(conifold());
  CHECK(validate_ks(cpk));
  CHECK(monodromies(cpk).first.entries(0, 0) == Rational(1));
}

TEST_CASE("ic criterion") {
  CHECK(ic_criterion(local_p1()) == CriterionResult{1, 1, true});
  CHECK(ic_criterion(conifold()) == CriterionResult{0, 1, false});
  for (int n = 1; n <= 3; ++n)
    CHECK(ic_criterion(build_model(podd_weights(n))).saturated);
}

TEST_CASE("dual ic criterion") {
  CHECK(dual_ic_criterion(local_p1()) == CriterionResult{1, 2, false});
  CHECK(dual_ic_criterion(conifold()) == CriterionResult{0, 2, false});
  // eta = 1 forces weights (c, -c) up to zeros, where codim 2 kills the
  // cotwist: exhaust small c.
  for (std::int64_t c = 1; c <= 4; ++c) {
    const WallModel m = build_model({c, -c});
    CHECK(spherical_data(m).m_prime == Rational(1));
    CHECK_FALSE(dual_ic_criterion(m).saturated);
  }
}

TEST_CASE("parity check") {
  CHECK(parity_check(local_p1()) == ParityResult{true, true, true});
  CHECK(parity_check(conifold()) == ParityResult{true, false, false});

  const WallModel m = build_model({2, 1, -3});
  CHECK(m.codim_z == 3);
  CHECK(parity_check(m).prediction);
  CHECK(ic_criterion(m).saturated);
}

TEST_CASE("parity is one-directional") {
  // Even codimension with a nontrivial twist: saturated without prediction.
  const WallModel m = build_model({1, 1, 1, 1, -2, -2});
  CHECK(m.eta == 4);
  CHECK_FALSE(parity_check(m).prediction);
  CHECK(ic_criterion(m).saturated);
}

TEST_CASE("full reports") {
  const WallReport p1 = full_report(local_p1());
  CHECK(p1.defect == 0);
  CHECK(p1.ic_primary.saturated);

  const WallReport cono = full_report(conifold());
  CHECK(cono.defect == 1);
  CHECK_FALSE(cono.ic_primary.saturated);

  for (int d = 1; d <= 4; ++d) {
    const WallReport flop = full_report(build_model(flop_weights(d)));
    CHECK(flop.defect == 1);
    CHECK(is_zero_matrix(flop.k_s.entries));
  }
}

TEST_CASE("wall checks pass on assorted models") {
  for (const auto& weights :
       {std::vector<std::int64_t>{1, 1, -2}, {1, 1, -1, -1}, {2, 1, -3},
        {1, 0, -1}, {4, -1, -3}, {3, 2, 2, -4, -3}, {1, 1, 1, 1, -2, -2}}) {
    for (const std::int64_t k0 : {-2, 0, 3}) {
      const WallModel m = build_model(weights, k0);
      for (const auto& check : run_wall_checks(m)) {
        INFO(check.name, " ", check.detail);
        CHECK(check.ok);
      }
    }
  }
}

TEST_CASE("verdicts are window and ordering independent") {
  const std::vector<std::int64_t> weights{2, -1, 0, -3, 2};
  const WallModel base = build_model(weights, 0);
  const SphericalData sph = spherical_data(base);
  for (const std::int64_t k0 : {-3, -1, 2}) {
    const WallModel moved = build_model(weights, k0);
    CHECK(spherical_data(moved).m_plus == sph.m_plus);
    CHECK(ic_criterion(moved) == ic_criterion(base));
    CHECK(dual_ic_criterion(moved) == dual_ic_criterion(base));
    CHECK(parity_check(moved) == parity_check(base));
  }
  const WallModel permuted = build_model({-1, 2, 2, -3, 0}, 0);
  CHECK(spherical_data(permuted).m_plus == sph.m_plus);
  CHECK(spherical_data(permuted).k_s == sph.k_s);
  CHECK(ic_criterion(permuted) == ic_criterion(base));
}

TEST_CASE("report JSON round trip") {
  const WallReport report = full_report(local_p1());
  const Json j = wall_report_to_json(report);
  const WallReport back = wall_report_from_json(j);
  CHECK(back.m_plus == report.m_plus);
  CHECK(back.k_s == report.k_s);
  CHECK(back.m_prime == report.m_prime);
  CHECK(back.defect == report.defect);
  CHECK(back.ic_primary == report.ic_primary);
  CHECK(back.ic_dual == report.ic_dual);
  CHECK(back.parity == report.parity);
  CHECK(wall_report_to_json(back).dump(2) == j.dump(2));

  CHECK(j.at("maps").at("iota_minus").at("entries") == Json({1, -2, 1}));
  CHECK(j.at("maps").at("iota_plus").at("entries") == Json({-1, 0, 1}));
  CHECK(j.at("m_plus").at("entries") == Json({1, 2, 0, -1}));
  CHECK(j.at("m_prime") == Json(-1));
}
