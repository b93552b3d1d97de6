#include "kwall/perverse.hpp"

#include "kwall/errors.hpp"

#include <string>
#include <utility>

namespace kwall {

GGMDiagram::GGMDiagram() = default;

GGMDiagram::GGMDiagram(LinearMap u_map, LinearMap v_map)
    : u(std::move(u_map)), v(std::move(v_map)) {
  if (u.rows() != v.cols() || u.cols() != v.rows())
    throw ShapeError("GGMDiagram: u is " + std::to_string(u.rows()) + "x" +
                     std::to_string(u.cols()) + " but v is " +
                     std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
}

KSDiagram::KSDiagram() = default;

KSDiagram::KSDiagram(LinearMap fm, LinearMap fp, LinearMap gm, LinearMap gp)
    : f_minus(std::move(fm)),
      f_plus(std::move(fp)),
      g_minus(std::move(gm)),
      g_plus(std::move(gp)) {
  const Index n0 = f_minus.rows();
  if (f_plus.rows() != n0 || g_minus.cols() != n0 || g_plus.cols() != n0)
    throw ShapeError("KSDiagram: inconsistent E0 dimension");
  if (g_minus.rows() != f_minus.cols())
    throw ShapeError("KSDiagram: inconsistent E- dimension");
  if (g_plus.rows() != f_plus.cols())
    throw ShapeError("KSDiagram: inconsistent E+ dimension");
}

bool validate_ggm(const GGMDiagram& g) {
  const Mat m = g.v.entries * g.u.entries + Mat::Identity(g.d1(), g.d1());
  return is_invertible(m);
}

bool validate_ks(const KSDiagram& k) {
  const Mat id_minus = Mat::Identity(k.e_minus(), k.e_minus());
  const Mat id_plus = Mat::Identity(k.e_plus(), k.e_plus());
  if (!exact_equal(k.g_minus.entries * k.f_minus.entries, id_minus))
    return false;
  if (!exact_equal(k.g_plus.entries * k.f_plus.entries, id_plus)) return false;
  if (!is_invertible(k.g_minus.entries * k.f_plus.entries)) return false;
  if (!is_invertible(k.g_plus.entries * k.f_minus.entries)) return false;
  return true;
}

KSDiagram ggm_to_ks(const GGMDiagram& g) {
  if (!validate_ggm(g))
    throw InvalidInput("ggm_to_ks: vu + 1 is not invertible");
  const Index d0 = g.d0();
  const Index d1 = g.d1();
  const Index e0 = d0 + d1;

  Mat fm = Mat::Zero(e0, d1);
  fm.block(0, 0, d0, d1) = g.u.entries;
  fm.block(d0, 0, d1, d1) = Mat::Identity(d1, d1);

  Mat fp = Mat::Zero(e0, d1);
  fp.block(d0, 0, d1, d1) = Mat::Identity(d1, d1);

  Mat gm = Mat::Zero(d1, e0);
  gm.block(0, d0, d1, d1) = Mat::Identity(d1, d1);

  Mat gp = Mat::Zero(d1, e0);
  gp.block(0, 0, d1, d0) = g.v.entries;
  gp.block(0, d0, d1, d1) = Mat::Identity(d1, d1);

  return KSDiagram(LinearMap(std::move(fm)), LinearMap(std::move(fp)),
                   LinearMap(std::move(gm)), LinearMap(std::move(gp)));
}

bool verify_certificate(const KSDiagram& k, const GGMDiagram& g,
                        const KSCertificate& cert) {
  if (!validate_ggm(g)) return false;
  const KSDiagram block = ggm_to_ks(g);
  const Mat& a = cert.alpha.entries;
  const Mat& psi = cert.psi.entries;
  if (a.rows() != block.e0() || a.cols() != k.e0()) return false;
  if (!is_invertible(a) || !is_invertible(psi)) return false;
  // alpha intertwines k with the block model, with identity on E- and psi
  // on E+.
  if (!exact_equal(a * k.f_minus.entries, block.f_minus.entries)) return false;
  if (!exact_equal(block.g_minus.entries * a, k.g_minus.entries)) return false;
  if (!exact_equal(a * k.f_plus.entries, block.f_plus.entries * psi))
    return false;
  if (!exact_equal(block.g_plus.entries * a, psi * k.g_plus.entries))
    return false;
  return true;
}

KSToGGMResult ks_to_ggm(const KSDiagram& k) {
  if (!validate_ks(k))
    throw InvalidInput("ks_to_ggm: diagram fails the KS conditions");
  const Index e0 = k.e0();
  const Index em = k.e_minus();
  const Index ep = k.e_plus();
  const Index d0 = e0 - em;  // g- is split surjective

  // Basis of ker(g-), then the splitting E0 = ker(g-) (+) im(f+).
  const std::vector<Vec> ker = kernel_basis(k.g_minus.entries);
  Mat n(e0, d0);
  for (Index j = 0; j < d0; ++j) n.col(j) = ker[static_cast<std::size_t>(j)];

  Mat split(e0, d0 + ep);
  split.block(0, 0, e0, d0) = n;
  split.block(0, d0, e0, ep) = k.f_plus.entries;
  const Mat split_inv = inverse(split);

  // Coordinates of f- in the split basis: top block is u, bottom block the
  // discarded E+ component.
  const Mat coords = split_inv * k.f_minus.entries;
  const Mat u = coords.block(0, 0, d0, em);

  const Mat psi = k.g_minus.entries * k.f_plus.entries;  // E+ -> D1
  const Mat v = psi * (k.g_plus.entries * n);

  GGMDiagram g{LinearMap(u), LinearMap(v)};

  Mat blockdiag = Mat::Zero(d0 + em, d0 + ep);
  blockdiag.block(0, 0, d0, d0) = Mat::Identity(d0, d0);
  blockdiag.block(d0, d0, em, ep) = psi;
  KSCertificate cert{LinearMap(blockdiag * split_inv), LinearMap(psi)};

  if (!verify_certificate(k, g, cert))
    throw CertificateFailure("ks_to_ggm: certificate does not intertwine");
  return KSToGGMResult{std::move(g), std::move(cert)};
}

std::pair<LinearMap, LinearMap> monodromies(const KSDiagram& k) {
  if (!validate_ks(k))
    throw InvalidInput("monodromies: diagram fails the KS conditions");
  LinearMap m_minus = k.g_minus * k.f_plus * k.g_plus * k.f_minus;
  LinearMap m_plus = k.g_plus * k.f_minus * k.g_minus * k.f_plus;
  return {std::move(m_minus), std::move(m_plus)};
}

GGMDiagram ic_from_monodromy(const LinearMap& m) {
  if (m.rows() != m.cols())
    throw Singular("ic_from_monodromy: monodromy must be square");
  if (!is_invertible(m.entries))
    throw Singular("ic_from_monodromy: monodromy is not invertible");
  const Index n = m.rows();
  const Mat a = m.entries - Mat::Identity(n, n);
  const std::vector<Index> pivots = pivot_columns(a);
  const Index r = static_cast<Index>(pivots.size());

  Mat v(n, r);
  for (Index j = 0; j < r; ++j)
    v.col(j) = a.col(pivots[static_cast<std::size_t>(j)]);
  // u expresses a = m - 1 in the pivot-column basis, so vu = m - 1.
  const Mat u = solve_exact(v, a);
  return GGMDiagram(LinearMap(u), LinearMap(v));
}

GGMDiagram skyscraper() {
  return GGMDiagram(LinearMap(Mat(1, 0)), LinearMap(Mat(0, 1)));
}

GGMDiagram direct_sum(const GGMDiagram& a, const GGMDiagram& b) {
  return GGMDiagram(direct_sum(a.u, b.u), direct_sum(a.v, b.v));
}

DefectReport defect_report(const GGMDiagram& g) {
  if (!validate_ggm(g))
    throw InvalidInput("defect_report: vu + 1 is not invertible");
  DefectReport report;
  report.vanishing_dim = g.d0();
  report.nearby_rank_drop = rank(g.v.entries * g.u.entries);
  report.skyscraper_count = report.vanishing_dim - report.nearby_rank_drop;
  report.is_ic = report.skyscraper_count == 0;
  return report;
}

Json matrix_to_json(const Mat& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational& r = m(i, j);
      if (r.is_integer())
        entries.push_back(static_cast<std::int64_t>(r.numerator()));
      else
        entries.push_back(r.str());
    }
  }
  return entries;
}

Mat matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols)
    throw ScenarioError("matrix entries do not match the declared shape");
  Mat m(rows, cols);
  Index k = 0;
  for (const auto& cell : j) {
    const Index i = k / cols;
    const Index c = k % cols;
    if (cell.is_number_integer())
      m(i, c) = Rational(static_cast<long long>(cell.get<std::int64_t>()));
    else if (cell.is_string())
      m(i, c) = Rational(cell.get<std::string>());
    else
      throw ScenarioError("matrix entries must be integers or strings");
    ++k;
  }
  return m;
}

Json to_json(const GGMDiagram& g) {
  Json j;
  j["dims"] = {{"d0", g.d0()}, {"d1", g.d1()}};
  j["matrices"] = {{"u", matrix_to_json(g.u.entries)},
                   {"v", matrix_to_json(g.v.entries)}};
  return j;
}

Json to_json(const KSDiagram& k) {
  Json j;
  j["dims"] = {{"e_minus", k.e_minus()}, {"e0", k.e0()}, {"e_plus", k.e_plus()}};
  j["matrices"] = {{"f_minus", matrix_to_json(k.f_minus.entries)},
                   {"f_plus", matrix_to_json(k.f_plus.entries)},
                   {"g_minus", matrix_to_json(k.g_minus.entries)},
                   {"g_plus", matrix_to_json(k.g_plus.entries)}};
  return j;
}

GGMDiagram ggm_from_json(const Json& j) {
  const Index d0 = j.at("dims").at("d0").get<Index>();
  const Index d1 = j.at("dims").at("d1").get<Index>();
  return GGMDiagram(
      LinearMap(matrix_from_json(j.at("matrices").at("u"), d0, d1)),
      LinearMap(matrix_from_json(j.at("matrices").at("v"), d1, d0)));
}

KSDiagram ks_from_json(const Json& j) {
  const Index em = j.at("dims").at("e_minus").get<Index>();
  const Index e0 = j.at("dims").at("e0").get<Index>();
  const Index ep = j.at("dims").at("e_plus").get<Index>();
  return KSDiagram(
      LinearMap(matrix_from_json(j.at("matrices").at("f_minus"), e0, em)),
      LinearMap(matrix_from_json(j.at("matrices").at("f_plus"), e0, ep)),
      LinearMap(matrix_from_json(j.at("matrices").at("g_minus"), em, e0)),
      LinearMap(matrix_from_json(j.at("matrices").at("g_plus"), ep, e0)));
}

}  // namespace kwall
