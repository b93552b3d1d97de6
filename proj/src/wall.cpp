#include "kwall/wall.hpp"

#include "kwall/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kwall {

namespace {

std::string weights_str(const std::vector<std::int64_t>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ")";
  return os.str();
}

std::vector<std::int64_t> exponent_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> r;
  for (std::int64_t e = lo; e <= hi; ++e) r.push_back(e);
  return r;
}

std::vector<std::string> exponent_labels(const std::vector<std::int64_t>& es) {
  std::vector<std::string> labels;
  labels.reserve(es.size());
  for (auto e : es) labels.push_back(exponent_label(e));
  return labels;
}

// Coordinates of p in the ordered exponent basis; p must be supported there.
Vec coords_in(const Laurent& p, const std::vector<std::int64_t>& exponents) {
  Vec v = Vec::Zero(static_cast<Index>(exponents.size()));
  for (const auto& [e, c] : p.terms()) {
    const auto it = std::find(exponents.begin(), exponents.end(), e);
    if (it == exponents.end())
      throw InternalInvariantViolation(
          "class " + to_string(p) + " is not supported on the expected window");
    v(static_cast<Index>(it - exponents.begin())) = c;
  }
  return v;
}

// Matrix of t^e |-> window_reduce(t^e, q, lo, width) over the given domain
// exponents, expressed in the window's own exponent basis.
Mat reduction_matrix(const std::vector<std::int64_t>& domain, const Laurent& q,
                     std::int64_t lo, std::int64_t width,
                     const std::vector<std::int64_t>& target) {
  Mat m(static_cast<Index>(target.size()), static_cast<Index>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Laurent r = window_reduce(Laurent::monomial(domain[j]), q, lo, width);
    m.col(static_cast<Index>(j)) = coords_in(r, target);
  }
  return m;
}

Mat inclusion_matrix(const std::vector<std::int64_t>& sub,
                     const std::vector<std::int64_t>& big) {
  Mat m = Mat::Zero(static_cast<Index>(big.size()),
                    static_cast<Index>(sub.size()));
  for (std::size_t j = 0; j < sub.size(); ++j)
    m.col(static_cast<Index>(j)) =
        coords_in(Laurent::monomial(sub[j]), big);
  return m;
}

// Row functional picking the coefficient of one exponent, times a sign.
Mat coefficient_row(const std::vector<std::int64_t>& basis, std::int64_t e,
                    int sign) {
  Mat m = Mat::Zero(1, static_cast<Index>(basis.size()));
  const auto it = std::find(basis.begin(), basis.end(), e);
  if (it == basis.end())
    throw InternalInvariantViolation("coefficient functional outside window");
  m(0, static_cast<Index>(it - basis.begin())) = Rational(sign);
  return m;
}

Rational parity_sign(std::int64_t count) {
  return count % 2 == 0 ? Rational(1) : Rational(-1);
}

std::string z_label(std::int64_t weight) {
  return "O_Z(" + std::to_string(weight) + ")";
}

Json linear_map_to_json(const LinearMap& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = matrix_to_json(m.entries);
  return j;
}

LinearMap linear_map_from_json(const Json& j,
                               std::vector<std::string> domain,
                               std::vector<std::string> codomain) {
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  return LinearMap(matrix_from_json(j.at("entries"), rows, cols),
                   std::move(domain), std::move(codomain));
}

}  // namespace

std::string exponent_label(std::int64_t e) {
  return "O(" + std::to_string(e) + ")";
}

WallModel build_model(const std::vector<std::int64_t>& weights,
                      std::int64_t window_base) {
  bool has_positive = false;
  bool has_negative = false;
  for (auto a : weights) {
    has_positive = has_positive || a > 0;
    has_negative = has_negative || a < 0;
  }
  if (!has_positive || !has_negative)
    throw NoWall("weights " + weights_str(weights) +
                 " admit no wall crossing: need a positive and a negative "
                 "weight");
  std::int64_t sum = 0;
  for (auto a : weights) sum += a;
  if (sum != 0)
    throw NotCalabiYau("weights " + weights_str(weights) + " sum to " +
                       std::to_string(sum) + ", expected 0");

  WallModel model;
  model.weights = weights;
  model.window_base = window_base;
  model.q_minus = Laurent::one();
  model.q_plus = Laurent::one();
  for (auto a : weights) {
    if (a == 0) continue;
    ++model.codim_z;
    const Laurent factor = Laurent::one() - Laurent::monomial(a);
    if (a > 0) {
      model.eta += a;
      ++model.positive_count;
      model.q_minus = model.q_minus * factor;
    } else {
      ++model.negative_count;
      model.q_plus = model.q_plus * factor;
    }
  }

  if (model.eta < 1 || model.q_minus.min_degree() != 0 ||
      model.q_minus.max_degree() != model.eta ||
      model.q_minus.coeff(0) != Rational(1) ||
      model.q_plus.min_degree() != -model.eta ||
      model.q_plus.max_degree() != 0 ||
      model.q_plus.coeff(0) != Rational(1))
    throw InternalInvariantViolation(
        "build_model: Koszul classes have unexpected shape for weights " +
        weights_str(weights));
  return model;
}

WindowBases window_bases(const WallModel& model) {
  const auto k0 = model.window_base;
  WindowBases b;
  b.c = exponent_range(k0, k0 + model.eta);
  b.g_minus = exponent_range(k0, k0 + model.eta - 1);
  b.g_plus = exponent_range(k0 + 1, k0 + model.eta);
  return b;
}

Laurent koszul_class(const WallModel& model, Side side, std::int64_t twist) {
  const Laurent& q = side == Side::Minus ? model.q_minus : model.q_plus;
  return q.shifted(twist);
}

StructureMaps structure_maps(const WallModel& model) {
  const WindowBases b = window_bases(model);
  const auto k0 = model.window_base;
  const auto eta = model.eta;
  const auto c_labels = exponent_labels(b.c);
  const auto gm_labels = exponent_labels(b.g_minus);
  const auto gp_labels = exponent_labels(b.g_plus);

  StructureMaps maps;
  maps.res_minus =
      LinearMap(reduction_matrix(b.c, model.q_minus, k0, eta, b.g_minus),
                c_labels, gm_labels);
  maps.res_plus =
      LinearMap(reduction_matrix(b.c, model.q_plus, k0 + 1, eta, b.g_plus),
                c_labels, gp_labels);
  maps.res_minus_star =
      LinearMap(inclusion_matrix(b.g_minus, b.c), gm_labels, c_labels);
  maps.res_plus_star =
      LinearMap(inclusion_matrix(b.g_plus, b.c), gp_labels, c_labels);
  // Left adjoints embed via the opposite window of the same modulus.
  maps.star_res_minus =
      LinearMap(reduction_matrix(b.g_minus, model.q_minus, k0 + 1, eta, b.c),
                gm_labels, c_labels);
  maps.star_res_plus =
      LinearMap(reduction_matrix(b.g_plus, model.q_plus, k0, eta, b.c),
                gp_labels, c_labels);
  return maps;
}

IotaMaps iota_maps(const WallModel& model) {
  const WindowBases b = window_bases(model);
  const auto k0 = model.window_base;
  const auto top = k0 + model.eta;
  const auto c_labels = exponent_labels(b.c);
  const std::vector<std::string> d_minus{z_label(k0)};
  const std::vector<std::string> d_plus{z_label(top)};
  const int sign_p = model.positive_count % 2 == 0 ? 1 : -1;
  const int sign_n = model.negative_count % 2 == 0 ? 1 : -1;

  IotaMaps maps;
  Mat im(static_cast<Index>(b.c.size()), 1);
  im.col(0) = coords_in(koszul_class(model, Side::Minus, k0), b.c);
  maps.iota_minus = LinearMap(std::move(im), d_minus, c_labels);

  Mat ip(static_cast<Index>(b.c.size()), 1);
  ip.col(0) = coords_in(koszul_class(model, Side::Plus, top), b.c);
  maps.iota_plus = LinearMap(std::move(ip), d_plus, c_labels);

  maps.star_iota_minus =
      LinearMap(coefficient_row(b.c, k0, 1), c_labels, d_minus);
  maps.iota_minus_star =
      LinearMap(coefficient_row(b.c, top, sign_p), c_labels, d_minus);
  maps.star_iota_plus =
      LinearMap(coefficient_row(b.c, top, 1), c_labels, d_plus);
  maps.iota_plus_star =
      LinearMap(coefficient_row(b.c, k0, sign_n), c_labels, d_plus);
  return maps;
}

SphericalData spherical_data(const WallModel& model) {
  const StructureMaps s = structure_maps(model);
  const IotaMaps i = iota_maps(model);

  SphericalData data;
  data.k_s = s.res_plus * i.iota_minus;
  data.k_s_star = i.iota_minus_star * s.res_plus_star;
  data.m_plus =
      LinearMap::identity(model.eta, s.res_plus.codomain_basis) -
      data.k_s * data.k_s_star;
  data.m_prime = Rational(1) - (data.k_s_star * data.k_s).entries(0, 0);
  return data;
}

KSDiagram assemble_kp(const WallModel& model) {
  const StructureMaps s = structure_maps(model);
  return KSDiagram(s.res_minus_star, s.res_plus_star, s.res_minus, s.res_plus);
}

KSDiagram assemble_pk(const WallModel& model) {
  const IotaMaps i = iota_maps(model);
  return KSDiagram(i.iota_minus, i.iota_plus, i.iota_minus_star,
                   i.iota_plus_star);
}

CriterionResult ic_criterion(const WallModel& model) {
  const SphericalData data = spherical_data(model);
  CriterionResult r;
  r.rank = rank(data.m_plus.entries -
                Mat::Identity(model.eta, model.eta));
  r.bound = 1;  // the fixed-locus K-group has rank one in the linear model
  r.saturated = r.rank == r.bound;
  return r;
}

CriterionResult dual_ic_criterion(const WallModel& model) {
  const SphericalData data = spherical_data(model);
  CriterionResult r;
  r.rank = data.m_prime == Rational(1) ? 0 : 1;
  r.bound = model.eta;
  r.saturated = r.rank == r.bound;
  return r;
}

ParityResult parity_check(const WallModel& model) {
  std::int64_t det_weight = 0;
  for (auto a : model.weights)
    if (a != 0) det_weight += a;
  ParityResult r;
  r.lemma_conditions = det_weight == 0;
  r.codim_odd = model.codim_z % 2 == 1;
  r.prediction = r.lemma_conditions && r.codim_odd;
  return r;
}

std::vector<InvariantCheck> run_wall_checks(const WallModel& model) {
  std::vector<InvariantCheck> checks;
  const auto record = [&](const std::string& name, bool ok,
                          const std::string& detail = "") {
    checks.push_back(InvariantCheck{name, ok, detail});
  };

  const WindowBases b = window_bases(model);
  const StructureMaps s = structure_maps(model);
  const IotaMaps io = iota_maps(model);
  const SphericalData sph = spherical_data(model);
  const KSDiagram kp = assemble_kp(model);
  const KSDiagram pk = assemble_pk(model);
  const auto eta = model.eta;
  const LinearMap id_eta = LinearMap::identity(eta);
  const LinearMap id_one = LinearMap::identity(1);

  record("dimension_ledger",
         static_cast<std::int64_t>(b.c.size()) == eta + 1 &&
             static_cast<std::int64_t>(b.g_minus.size()) == eta &&
             static_cast<std::int64_t>(b.g_plus.size()) == eta && eta >= 1,
         "window sizes eta+1 / eta / eta");

  record("res_adjunctions",
         s.res_minus * s.res_minus_star == id_eta &&
             s.res_plus * s.res_plus_star == id_eta &&
             s.res_minus * s.star_res_minus == id_eta &&
             s.res_plus * s.star_res_plus == id_eta,
         "res o res* and res o *res are identities");

  record("sod_orthogonality",
         is_zero_matrix((s.res_minus * io.iota_minus).entries) &&
             is_zero_matrix((s.res_plus * io.iota_plus).entries),
         "res- o iota- = 0 and res+ o iota+ = 0");

  record("iota_adjunctions",
         io.star_iota_minus * io.iota_minus == id_one &&
             io.iota_minus_star * io.iota_minus == id_one &&
             io.star_iota_plus * io.iota_plus == id_one &&
             io.iota_plus_star * io.iota_plus == id_one,
         "*iota o iota = 1 = iota* o iota");

  const LinearMap flop_flop =
      s.res_plus * s.res_minus_star * s.res_minus * s.res_plus_star;
  record("twist_route", flop_flop == sph.m_plus,
         "res+ res-* res- res+* equals 1 - K(S) K(S*)");

  const Rational cotwist_expected = parity_sign(model.codim_z);
  record("cotwist_scalar", sph.m_prime == cotwist_expected,
         "1 - K(S*) K(S) equals (-1)^codim_z");

  const Mat gm_fp = (pk.g_minus * pk.f_plus).entries;
  const Mat gp_fm = (pk.g_plus * pk.f_minus).entries;
  record("pk_scalars",
         gm_fp(0, 0) == parity_sign(model.positive_count) &&
             gp_fm(0, 0) == parity_sign(model.negative_count) &&
             gm_fp(0, 0) * gp_fm(0, 0) == cotwist_expected,
         "cross products of the dual diagram are the stratum parities");

  bool kp_ok = validate_ks(kp);
  std::string kp_detail = "large-window diagram is a KS diagram";
  if (kp_ok) {
    const auto [m_minus, m_plus] = monodromies(kp);
    const LinearMap intertwiner = kp.g_minus * kp.f_plus;
    kp_ok = m_plus == sph.m_plus &&
            intertwiner * m_plus == m_minus * intertwiner;
    kp_detail = "monodromy of the large-window diagram matches the twist";
  }
  record("kp_diagram", kp_ok, kp_detail);

  bool pk_ok = validate_ks(pk);
  std::string pk_detail = "dual diagram is a KS diagram";
  if (pk_ok) {
    const auto [m_minus, m_plus] = monodromies(pk);
    pk_ok = m_minus.entries(0, 0) == sph.m_prime;
    pk_detail = "monodromy of the dual diagram matches the cotwist scalar";
  }
  record("pk_diagram", pk_ok, pk_detail);

  const CriterionResult ic = ic_criterion(model);
  bool defect_ok = false;
  if (kp_ok) {
    const KSToGGMResult extracted = ks_to_ggm(kp);
    const DefectReport dr = defect_report(extracted.diagram);
    const std::int64_t defect = 1 - ic.rank;
    defect_ok = dr.vanishing_dim == 1 && dr.skyscraper_count == defect &&
                (defect == 0 || defect == 1) &&
                (defect == 0) == ic.saturated && dr.is_ic == ic.saturated;
  }
  record("defect_consistency", defect_ok,
         "skyscraper count of the extracted diagram equals 1 - rk(m-1)");

  const ParityResult parity = parity_check(model);
  record("parity_implication", !parity.prediction || ic.saturated,
         "parity prediction forces saturation");

  return checks;
}

WallReport full_report(const WallModel& model) {
  for (const auto& check : run_wall_checks(model)) {
    if (!check.ok)
      throw InternalInvariantViolation(
          "cross-check '" + check.name + "' failed for weights " +
          weights_str(model.weights) + " (" + check.detail + ")");
  }

  WallReport report;
  report.model = model;
  report.bases = window_bases(model);
  report.structure = structure_maps(model);
  report.iota = iota_maps(model);
  const SphericalData sph = spherical_data(model);
  report.k_s = sph.k_s;
  report.k_s_star = sph.k_s_star;
  report.m_plus = sph.m_plus;
  report.m_prime = sph.m_prime;
  report.ic_primary = ic_criterion(model);
  report.ic_dual = dual_ic_criterion(model);
  report.parity = parity_check(model);
  report.defect = 1 - report.ic_primary.rank;
  return report;
}

Json wall_report_to_json(const WallReport& r) {
  Json j;
  j["weights"] = r.model.weights;
  j["window_base"] = r.model.window_base;
  j["eta"] = r.model.eta;
  j["codim_z"] = r.model.codim_z;
  j["bases"] = {{"c", r.bases.c},
                {"g_minus", r.bases.g_minus},
                {"g_plus", r.bases.g_plus}};
  j["maps"] = {{"res_minus", linear_map_to_json(r.structure.res_minus)},
               {"res_plus", linear_map_to_json(r.structure.res_plus)},
               {"res_minus_star", linear_map_to_json(r.structure.res_minus_star)},
               {"res_plus_star", linear_map_to_json(r.structure.res_plus_star)},
               {"iota_minus", linear_map_to_json(r.iota.iota_minus)},
               {"iota_plus", linear_map_to_json(r.iota.iota_plus)},
               {"star_iota_minus", linear_map_to_json(r.iota.star_iota_minus)},
               {"iota_minus_star", linear_map_to_json(r.iota.iota_minus_star)},
               {"star_iota_plus", linear_map_to_json(r.iota.star_iota_plus)},
               {"iota_plus_star", linear_map_to_json(r.iota.iota_plus_star)},
               {"K_S", linear_map_to_json(r.k_s)},
               {"K_S_star", linear_map_to_json(r.k_s_star)}};
  j["m_plus"] = linear_map_to_json(r.m_plus);
  if (r.m_prime.is_integer())
    j["m_prime"] = static_cast<std::int64_t>(r.m_prime.numerator());
  else
    j["m_prime"] = r.m_prime.str();
  j["ic_primary"] = {{"rank", r.ic_primary.rank},
                     {"bound", r.ic_primary.bound},
                     {"saturated", r.ic_primary.saturated}};
  j["ic_dual"] = {{"rank", r.ic_dual.rank},
                  {"bound", r.ic_dual.bound},
                  {"saturated", r.ic_dual.saturated}};
  j["parity"] = {{"lemma_conditions", r.parity.lemma_conditions},
                 {"codim_odd", r.parity.codim_odd},
                 {"prediction", r.parity.prediction}};
  j["defect"] = r.defect;
  return j;
}

WallReport wall_report_from_json(const Json& j) {
  WallReport r;
  r.model = build_model(j.at("weights").get<std::vector<std::int64_t>>(),
                        j.at("window_base").get<std::int64_t>());
  if (j.at("eta").get<std::int64_t>() != r.model.eta ||
      j.at("codim_z").get<std::int64_t>() != r.model.codim_z)
    throw ScenarioError("report JSON disagrees with its own weight data");
  r.bases = window_bases(r.model);
  if (j.at("bases").at("c").get<std::vector<std::int64_t>>() != r.bases.c ||
      j.at("bases").at("g_minus").get<std::vector<std::int64_t>>() !=
          r.bases.g_minus ||
      j.at("bases").at("g_plus").get<std::vector<std::int64_t>>() !=
          r.bases.g_plus)
    throw ScenarioError("report JSON bases disagree with the window data");

  const auto c_labels = exponent_labels(r.bases.c);
  const auto gm_labels = exponent_labels(r.bases.g_minus);
  const auto gp_labels = exponent_labels(r.bases.g_plus);
  const std::vector<std::string> d_minus{z_label(r.model.window_base)};
  const std::vector<std::string> d_plus{
      z_label(r.model.window_base + r.model.eta)};

  const Json& maps = j.at("maps");
  r.structure.res_minus =
      linear_map_from_json(maps.at("res_minus"), c_labels, gm_labels);
  r.structure.res_plus =
      linear_map_from_json(maps.at("res_plus"), c_labels, gp_labels);
  r.structure.res_minus_star =
      linear_map_from_json(maps.at("res_minus_star"), gm_labels, c_labels);
  r.structure.res_plus_star =
      linear_map_from_json(maps.at("res_plus_star"), gp_labels, c_labels);
  // The opposite-window adjoints are not part of the report schema; they are
  // a function of the model.
  const StructureMaps s = structure_maps(r.model);
  r.structure.star_res_minus = s.star_res_minus;
  r.structure.star_res_plus = s.star_res_plus;
  r.iota.iota_minus =
      linear_map_from_json(maps.at("iota_minus"), d_minus, c_labels);
  r.iota.iota_plus =
      linear_map_from_json(maps.at("iota_plus"), d_plus, c_labels);
  r.iota.star_iota_minus =
      linear_map_from_json(maps.at("star_iota_minus"), c_labels, d_minus);
  r.iota.iota_minus_star =
      linear_map_from_json(maps.at("iota_minus_star"), c_labels, d_minus);
  r.iota.star_iota_plus =
      linear_map_from_json(maps.at("star_iota_plus"), c_labels, d_plus);
  r.iota.iota_plus_star =
      linear_map_from_json(maps.at("iota_plus_star"), c_labels, d_plus);
  r.k_s = linear_map_from_json(maps.at("K_S"), d_minus, gp_labels);
  r.k_s_star = linear_map_from_json(maps.at("K_S_star"), gp_labels, d_minus);
  r.m_plus = linear_map_from_json(j.at("m_plus"), gp_labels, gp_labels);
  const Json& mp = j.at("m_prime");
  r.m_prime = mp.is_string() ? Rational(mp.get<std::string>())
                             : Rational(mp.get<std::int64_t>());
  r.ic_primary = CriterionResult{j.at("ic_primary").at("rank").get<std::int64_t>(),
                                 j.at("ic_primary").at("bound").get<std::int64_t>(),
                                 j.at("ic_primary").at("saturated").get<bool>()};
  r.ic_dual = CriterionResult{j.at("ic_dual").at("rank").get<std::int64_t>(),
                              j.at("ic_dual").at("bound").get<std::int64_t>(),
                              j.at("ic_dual").at("saturated").get<bool>()};
  r.parity = ParityResult{j.at("parity").at("lemma_conditions").get<bool>(),
                          j.at("parity").at("codim_odd").get<bool>(),
                          j.at("parity").at("prediction").get<bool>()};
  r.defect = j.at("defect").get<std::int64_t>();
  return r;
}

}  // namespace kwall
