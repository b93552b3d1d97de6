#pragma once

#include "kwall/laurent.hpp"
#include "kwall/perverse.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kwall {

// One-parameter torus weight data for a simple balanced wall crossing on
// affine space.  Weights must sum to zero and include at least one positive
// and one negative entry; zero weights are allowed and contribute nothing to
// the derived data.
struct WallModel {
  std::vector<std::int64_t> weights;
  std::int64_t window_base = 0;  // lowest exponent of the large window

  // Derived.
  std::int64_t eta = 0;      // sum of positive weights
  std::int64_t codim_z = 0;  // number of nonzero weights
  std::int64_t positive_count = 0;
  std::int64_t negative_count = 0;
  Laurent q_minus;  // prod over positive weights of (1 - t^a), support [0, eta]
  Laurent q_plus;   // prod over negative weights of (1 - t^a), support [-eta, 0]
};

// throws NoWall (no sign change) or NotCalabiYau (nonzero weight sum)
WallModel build_model(const std::vector<std::int64_t>& weights,
                      std::int64_t window_base = 0);

struct WindowBases {
  std::vector<std::int64_t> c;        // [k0 .. k0+eta]
  std::vector<std::int64_t> g_minus;  // [k0 .. k0+eta-1]
  std::vector<std::int64_t> g_plus;   // [k0+1 .. k0+eta]
};

WindowBases window_bases(const WallModel& model);

enum class Side { Minus, Plus };

// t^twist * q_side.
Laurent koszul_class(const WallModel& model, Side side, std::int64_t twist);

// Window restrictions and their adjoint inclusions, as matrices between the
// exponent bases above.
struct StructureMaps {
  LinearMap res_minus;       // K(C) -> K(X//-): reduce mod q- into g- window
  LinearMap res_plus;        // K(C) -> K(X//+): reduce mod q+ into g+ window
  LinearMap res_minus_star;  // inclusion of the g- window into K(C)
  LinearMap res_plus_star;   // inclusion of the g+ window into K(C)
  LinearMap star_res_minus;  // left adjoint: reduce mod q- into [k0+1, k0+eta]
  LinearMap star_res_plus;   // left adjoint: reduce mod q+ into [k0, k0+eta-1]
};

StructureMaps structure_maps(const WallModel& model);

// Embeddings of the rank-one fixed-locus K-groups and their adjoints.  The
// right adjoints carry the sign (-1)^codim of the embedding's stratum,
// pinned by the adjunction identities.
struct IotaMaps {
  LinearMap iota_minus;       // 1 -> t^k0 q-
  LinearMap iota_plus;        // 1 -> t^(k0+eta) q+
  LinearMap star_iota_minus;  // coefficient of t^k0
  LinearMap iota_minus_star;  // (-1)^p * coefficient of t^(k0+eta)
  LinearMap star_iota_plus;   // coefficient of t^(k0+eta)
  LinearMap iota_plus_star;   // (-1)^n * coefficient of t^k0
};

IotaMaps iota_maps(const WallModel& model);

// K-theory shadow of the spherical functor res+ o iota- and of its twist
// and cotwist.
struct SphericalData {
  LinearMap k_s;       // eta x 1
  LinearMap k_s_star;  // 1 x eta
  LinearMap m_plus;    // 1 - K(S) K(S*)
  Rational m_prime;    // 1 - K(S*) K(S)
};

SphericalData spherical_data(const WallModel& model);

// Large-window KS diagram with E+- the two quotient K-groups (f = res*,
// g = res).
KSDiagram assemble_kp(const WallModel& model);
// Dual diagram with rank-one E+- (f = iota, g = iota*).
KSDiagram assemble_pk(const WallModel& model);

struct CriterionResult {
  std::int64_t rank = 0;
  std::int64_t bound = 0;
  bool saturated = false;

  friend bool operator==(const CriterionResult&,
                         const CriterionResult&) = default;
};

// rk(m_plus - 1) against dim of the rank-one fixed-locus K-group.
CriterionResult ic_criterion(const WallModel& model);
// rk(m_prime - 1) against dim K(X//+) = eta.
CriterionResult dual_ic_criterion(const WallModel& model);

struct ParityResult {
  bool lemma_conditions = false;  // normal-bundle determinant weight is zero
  bool codim_odd = false;
  bool prediction = false;

  friend bool operator==(const ParityResult&, const ParityResult&) = default;
};

ParityResult parity_check(const WallModel& model);

struct WallReport {
  WallModel model;
  WindowBases bases;
  StructureMaps structure;
  IotaMaps iota;
  LinearMap k_s;
  LinearMap k_s_star;
  LinearMap m_plus;
  Rational m_prime;
  CriterionResult ic_primary;
  CriterionResult ic_dual;
  ParityResult parity;
  std::int64_t defect = 0;  // skyscraper factors, 1 - rk(m_plus - 1)
};

// Aggregates everything above after re-verifying the engine's internal
// identities; throws InternalInvariantViolation if any fails.
WallReport full_report(const WallModel& model);

// One named internal identity, used by full_report and the self-check
// suites.
struct InvariantCheck {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<InvariantCheck> run_wall_checks(const WallModel& model);

Json wall_report_to_json(const WallReport& report);
WallReport wall_report_from_json(const Json& j);

std::string exponent_label(std::int64_t e);

}  // namespace kwall
