#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgs/distance_index.hpp"
#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rational.hpp"

namespace wgs {

struct DissatisfiedPair {
  int u, v, dist;
  auto operator<=>(const DissatisfiedPair&) const = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<DissatisfiedPair> dissatisfied;  // sorted lexicographically
  double max_outdegree = 0;
  int64_t pairs_checked = 0;
};

std::string serialize_report(const VerificationReport& rep);

enum class StrictMode { full, plus };

// (*) for every pair at distance 2..r, u has an out-neighbor in gate(u,v) or
// v has an out-neighbor in gate(v,u)
VerificationReport verify_weak(const Graph& g, const DistanceIndex& idx,
                               const PartialOrientation& h, int r);

// guidance / plus-guidance: every pair at distance l in the mode's range has
// B(u,a) and B(v,b) meeting for some a+b=l
VerificationReport verify_strict(const Graph& g, const DistanceIndex& idx,
                                 const PartialOrientation& h, int r, StrictMode mode);

// gate-mass covering constraint, sum >= 1 - tol per qualifying pair
VerificationReport verify_fractional(const Graph& g, const DistanceIndex& idx,
                                     const FractionalOrientation& p, int r, double tol);

// y-weights on vertex pairs at distance 2..r (u < v canonical)
struct DualEntry {
  int u, v;
  double w;
};
struct DualCertificate {
  std::vector<DualEntry> y;
  double value = 0;
};

struct DualEntryExact {
  int u, v;
  Rational w;
};
struct DualCertificateExact {
  std::vector<DualEntryExact> y;
  Rational value;
};

DualCertificate to_double(const DualCertificateExact& c);

// x_u = max over neighbors z of sum_{v in R_r(u,z)} y_uv; value = sum(y)/sum(x),
// with 0/0 = 0. The value lower-bounds the maximum outdegree of every
// fractional or weak r-guidance system.
DualCertificate evaluate_dual(const Graph& g, const DistanceIndex& idx, int r,
                              const std::vector<DualEntry>& y);
DualCertificateExact evaluate_dual_exact(const Graph& g, const DistanceIndex& idx, int r,
                                         const std::vector<DualEntryExact>& y);

// y_uv = 1/(deg_{G[Z]}(z) - 1) on distance-2 pairs inside Z whose unique
// common neighbor z lies in Z; evaluates to |E(G[Z])| / |Z|
DualCertificateExact girth5_certificate(const Graph& g, const DistanceIndex& idx,
                                        const std::vector<int>& z_set);

enum class GuidanceNotion { weak, strict_plus, strict_full };

struct BruteForceResult {
  bool exceeds_cap = false;
  int value = 0;  // meaningful when !exceeds_cap
};

struct SearchBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive oracle: minimum over partial orientations of the maximum
// outdegree (restricted to `focus` when given) subject to validity under
// `notion`. Arcs leaving non-focus vertices are free and all included.
// Throws SearchBudgetError when the node budget is exhausted.
BruteForceResult brute_force_optimum(const Graph& g, const DistanceIndex& idx, int r,
                                     int max_outdegree_cap,
                                     GuidanceNotion notion = GuidanceNotion::weak,
                                     const std::vector<int>* focus = nullptr,
                                     int64_t node_budget = 50'000'000);

// max over u of the VC-dimension of {gate(u,v) : 2 <= dist(u,v) <= r},
// exhaustive shattering search capped at `cap`
int vc_dimension(const Graph& g, const DistanceIndex& idx, int r, int cap = 6);

}  // namespace wgs
