#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gp/ball.hpp"
#include "gp/coset.hpp"

namespace gp {

struct VerifierConfig {
  int radius = 3;
  int cap = 2;
  int sample_radius = 4;
  int jobs = 1;
  std::uint64_t seed = 1;
  int slim_triangles = 2000;  // sampled triangles per eligible subgraph
  std::size_t ball_budget = 500'000;
  // Widening applied when a paper inequality is stated against a whole
  // relative-projection set but checked against sampled anchors.
  int rho_tolerance = 2;

  int hierarchy_constant(const DefiningGraph& g) const {
    return std::max(18, g.vertex_count());
  }
};

struct CheckReport {
  std::string name;
  std::string universe;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  double elapsed_s = 0.0;

  bool pass() const { return violations.empty(); }
  std::string summary() const;
};

// Ball-restricted universe: all parallelism classes with representative in
// the radius ball (representatives are canonical, so always inside).
struct Universe {
  explicit Universe(SylBall b) : ball(std::move(b)) {}
  SylBall ball;
  std::vector<DomainClass> domains;
};

Universe build_universe(const DefiningGraph& g, const VerifierConfig& cfg);

// Test seams for fault injection: overrides substitute a corrupted gate image
// or relative-projection sample set for selected arguments.
using GateOverride = std::function<std::optional<NormalForm>(
    const DomainClass&, const NormalForm&)>;
using RhoOverride = std::function<std::optional<std::vector<NormalForm>>(
    const DomainClass& source, const DomainClass& target)>;

CheckReport check_projection_axiom(const DefiningGraph& g,
                                   const VerifierConfig& cfg,
                                   const GateOverride& fault = nullptr);
CheckReport check_consistency(const DefiningGraph& g,
                              const VerifierConfig& cfg);
CheckReport check_bounded_geodesic_image(const DefiningGraph& g,
                                         const VerifierConfig& cfg,
                                         const RhoOverride& fault = nullptr);
CheckReport check_large_links(const DefiningGraph& g,
                              const VerifierConfig& cfg);
CheckReport check_partial_realization(const DefiningGraph& g,
                                      const VerifierConfig& cfg);
CheckReport check_uniqueness(const DefiningGraph& g,
                             const VerifierConfig& cfg);
CheckReport check_hyperbolicity_slim(const DefiningGraph& g,
                                     const VerifierConfig& cfg);
CheckReport check_bottleneck(const DefiningGraph& g,
                             const VerifierConfig& cfg);
CheckReport check_finite_complexity_and_containers(const DefiningGraph& g,
                                                   const VerifierConfig& cfg);
CheckReport check_diameter_classification(const DefiningGraph& g,
                                          const VerifierConfig& cfg);
CheckReport check_equivariance(const DefiningGraph& g,
                               const VerifierConfig& cfg);

struct DistanceFormulaFit {
  long K = 1;
  long L = 0;
  double worst_ratio = 0.0;
  CheckReport report;
};

// Extremal two-sided fit of the distance-formula constants at threshold
// sigma (requires sigma >= 2E+1). On desk-scale balls every projection gap
// sits below sigma, so the fit is derived from the Lipschitz bound and
// re-verified on a seeded sample of pairs.
DistanceFormulaFit fit_distance_formula(const DefiningGraph& g,
                                        const VerifierConfig& cfg,
                                        long sigma);

// Names: projection, consistency, bgi, large-links, partial-realization,
// uniqueness, slim, bottleneck, containers, diameter, equivariance,
// distance-formula. "all" runs everything.
std::vector<CheckReport> run_suite(const DefiningGraph& g,
                                   const VerifierConfig& cfg,
                                   const std::vector<std::string>& suites,
                                   long sigma = 37);

std::string reports_to_json_text(const std::vector<CheckReport>& reports);

}  // namespace gp
