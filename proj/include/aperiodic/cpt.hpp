#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aperiodic/graph.hpp"
#include "aperiodic/tiling.hpp"

namespace aperiodic {

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using LatticeTuple = std::array<std::int64_t, 6>;  // first n entries used

/// Cut-and-project scheme: Z^n -> physical R^d through the rows of `phys`,
/// with acceptance in the internal space spanned by the orthonormal rows of
/// `internal`.  The window is the canonical one, pi_perp([0,1)^n), centred
/// and shifted by a small generic offset so no lattice projection can hit
/// the boundary.
class CptScheme {
 public:
  std::string name;
  int n = 0, d = 0;
  std::vector<std::vector<double>> phys;      // d rows, length n
  std::vector<std::vector<double>> internal;  // n-d orthonormal rows

  /// Builds window data and verifies basis orthogonality to 1e-12.
  void finish();

  /// e_k* = pi(e_k).
  std::vector<double> projected_basis(int k) const;
  std::vector<double> project_physical(const LatticeTuple& x) const;
  std::vector<double> project_internal(const LatticeTuple& x) const;

  /// Window membership; throws GenericityError when the internal projection
  /// comes within 1e-9 of the window boundary.
  bool accept(const LatticeTuple& x) const;

  /// Smallest |pi(c)| over nonzero integer vectors with |c_k| <= bound;
  /// the injectivity proxy passes when this exceeds 1e-9.
  double min_physical_norm(int bound) const;

  double window_diameter() const;
  const std::vector<std::vector<double>>& window_normals() const { return win_normals_; }
  /// Per window normal u, the admissible interval of u . pi_perp(x).
  std::vector<std::pair<double, double>> window_spans() const;

 private:
  std::vector<std::vector<double>> gens_;       // g_k = pi_perp(e_k)
  std::vector<std::vector<double>> win_normals_;
  std::vector<double> win_hi_, win_lo_;         // u.z in [-lo, hi] on the centred zonotope
  std::vector<double> delta_;                   // generic offset
  std::vector<double> centre_;
};

/// The four named schemes: "fibonacci" (2->1), "penrose5" (5->2),
/// "ammann_beenker" (4->2), "icosahedral" (6->3).
CptScheme builtin_scheme(const std::string& name);

/// User-defined scheme from {"name","n","d","phys":[[...],...]}; the internal
/// basis is completed as the orthonormal complement.
CptScheme scheme_from_json(const nlohmann::json& j);

struct CptVertex {
  LatticeTuple tuple{};
  std::array<double, 3> pos{};
};

struct CptEdge {
  int a = 0, b = 0;  // vertex ids, a's tuple + e_cls = b's tuple
  int cls = 0;
};

struct CptFace {
  std::array<int, 4> v{};  // x, x+ej, x+ej+ek, x+ek
  int cj = 0, ck = 0;
};

struct CptPatch {
  CptScheme scheme;
  double radius = 0;
  std::vector<CptVertex> vertices;
  std::vector<CptEdge> edges;
  std::vector<CptFace> faces;

  int find_vertex(const LatticeTuple& t) const;
  Graph graph() const;
  Tiling to_tiling() const;
};

/// Enumerates accepted lattice points whose physical projection lies within
/// `radius` of the origin, with single-step edges and unit-square 2-faces.
/// max_cells guards runaway enumeration.
CptPatch generate_cpt(const CptScheme& scheme, double radius,
                      std::int64_t max_cells = 1000000);

/// Coordinate-difference cochain Delta_k on the patch graph.
DirectedEdgeCochain lattice_cochain(const CptPatch& patch, int k);

/// max over vertices of | pos - sum_k x_k e_k* |.
double reconstruction_check_cpt(const CptPatch& patch);

/// Smallest R in 1..max_radius at which the radius-R configuration class of
/// every interior directed edge determines its lattice step; nullopt if none.
std::optional<int> pattern_equivariance_radius(const CptPatch& patch, int max_radius);

/// Distinct radius-R edge-configuration classes on the patch interior.
int distinct_edge_classes(const CptPatch& patch, double r_ball);

enum class CfStatus { kPass, kProxyPass, kFail };

struct CfResult {
  CfStatus status = CfStatus::kFail;
  std::string evidence;
};

struct ConservationReport {
  std::string scheme;
  int rank = 0;
  int recognition_gap_rank = 0;
  std::array<CfResult, 5> cf;  // CF1..CF5
  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Desk-scale CF1-CF5 checks: CF1 exact face sums; CF2 pattern equivariance
/// at R <= 2; CF3 height growth over three nested radii; CF4 independence
/// proxy over |c_k| <= 5; CF5 reported as a proxy citing the external rank
/// result.  Rank = n on pass.
ConservationReport conservation_report(const CptScheme& scheme, const CptPatch& patch);

}  // namespace aperiodic
