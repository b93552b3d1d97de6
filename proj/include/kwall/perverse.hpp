#pragma once

#include "kwall/linear_map.hpp"

#include <json.hpp>

#include <cstdint>
#include <utility>

namespace kwall {

using Json = nlohmann::ordered_json;

// Vanishing/nearby-cycles presentation of a perverse sheaf on the disk:
// spaces D0, D1 with u : D1 -> D0 and v : D0 -> D1, valid when vu + 1 is
// invertible on D1.
struct GGMDiagram {
  LinearMap u;  // d0 x d1
  LinearMap v;  // d1 x d0

  GGMDiagram();
  GGMDiagram(LinearMap u_map, LinearMap v_map);  // throws ShapeError

  Index d0() const { return u.rows(); }
  Index d1() const { return u.cols(); }

  friend bool operator==(const GGMDiagram& a, const GGMDiagram& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Two-arc skeleton presentation: spaces E-, E0, E+ with embeddings f+- and
// projections g+-, valid when g+-f+- = 1 and the cross terms g-f+ and g+f-
// are invertible.
struct KSDiagram {
  LinearMap f_minus;  // e0 x e-
  LinearMap f_plus;   // e0 x e+
  LinearMap g_minus;  // e- x e0
  LinearMap g_plus;   // e+ x e0

  KSDiagram();
  KSDiagram(LinearMap fm, LinearMap fp, LinearMap gm,
            LinearMap gp);  // throws ShapeError

  Index e_minus() const { return f_minus.cols(); }
  Index e0() const { return f_minus.rows(); }
  Index e_plus() const { return f_plus.cols(); }
};

// Composition-factor accounting: how far a diagram is from the intersection
// cohomology extension of its generic-fibre local system.
struct DefectReport {
  std::int64_t vanishing_dim = 0;     // dim D0
  std::int64_t nearby_rank_drop = 0;  // rk(m - 1) on D1
  std::int64_t skyscraper_count = 0;  // vanishing_dim - nearby_rank_drop
  bool is_ic = false;

  friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

// Witness that a KS diagram is isomorphic to the block model of the GGM
// diagram extracted from it: alpha : E0 -> D0 (+) D1 and psi = g-f+ on the
// E+ side, with the identity on E-.
struct KSCertificate {
  LinearMap alpha;
  LinearMap psi;
};

struct KSToGGMResult {
  GGMDiagram diagram;
  KSCertificate certificate;
};

bool validate_ggm(const GGMDiagram& g);
bool validate_ks(const KSDiagram& k);

// Block-model equivalence on E0 = D0 (+) D1: f- = (u; 1), g- = (0 1),
// f+ = (0; 1), g+ = (v 1).
KSDiagram ggm_to_ks(const GGMDiagram& g);  // throws InvalidInput

// Inverse direction.  D1 := E-, D0 := ker(g-), with E0 split along im(f+).
// The returned certificate is checked against ggm_to_ks of the result before
// returning; CertificateFailure signals a library bug.
KSToGGMResult ks_to_ggm(const KSDiagram& k);  // throws InvalidInput

bool verify_certificate(const KSDiagram& k, const GGMDiagram& g,
                        const KSCertificate& cert);

// (m-, m+) = (g-f+g+f-, g+f-g-f+); both invertible on valid input.
std::pair<LinearMap, LinearMap> monodromies(const KSDiagram& k);

// Intersection cohomology extension of the local system with fibre the
// domain of m: D1 = F, D0 = im(m - 1) on its pivot-column basis, u the
// corestriction of m - 1 and v the inclusion.
GGMDiagram ic_from_monodromy(const LinearMap& m);  // throws Singular

// The simple diagram C <-> 0 supported at the origin.
GGMDiagram skyscraper();

GGMDiagram direct_sum(const GGMDiagram& a, const GGMDiagram& b);

DefectReport defect_report(const GGMDiagram& g);  // throws InvalidInput

// JSON: {dims, matrices as row-major integer arrays}.
Json to_json(const GGMDiagram& g);
Json to_json(const KSDiagram& k);
GGMDiagram ggm_from_json(const Json& j);
KSDiagram ks_from_json(const Json& j);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j, Index rows, Index cols);

}  // namespace kwall
