#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wgs/distance_index.hpp"
#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rng.hpp"
#include "wgs/tree_model.hpp"

namespace wgs {

struct RoundingTrace {
  std::vector<int64_t> dissatisfied;  // X_0, X_1, ..., per completed round
  int rounds_budget = 0;              // ceil(4 c ln n)
  double c = 0;
};

// Derandomized rounding by the method of conditional probabilities. Runs up
// to ceil(4*c*ln n) rounds, each adding an outdegree-<=1 sub-orientation that
// shrinks the dissatisfied pair set by a factor of at least (1 - 1/(2c));
// stops early once no pair is dissatisfied. Fully deterministic.
PartialOrientation round_fractional(const Graph& g, const DistanceIndex& idx,
                                    const FractionalOrientation& p, int r, double c,
                                    RoundingTrace* trace = nullptr);

// neighbor v with probability p(u,v)/d+_p(u), uniform when d+_p(u) = 0
int p_random_neighbor(const Graph& g, const FractionalOrientation& p, int u, Rng& rng);

enum class HittingStrategy { greedy, epsilon_net };

// Elements of the ground set are 0..w.size()-1; every member of `system` must
// be a nonempty sorted subset. The epsilon-net strategy samples proportional
// to w with geometrically growing sample size until a verified hit; greedy is
// the deterministic fallback.
std::vector<int> hitting_set(const std::vector<std::vector<int>>& system,
                             const std::vector<double>& w, HittingStrategy strategy,
                             Rng& rng);

// Per-vertex hitting sets over the heavy gate systems (gate mass >= 1/2).
PartialOrientation vc_round(const Graph& g, const DistanceIndex& idx,
                            const FractionalOrientation& p, int r, uint64_t seed,
                            HittingStrategy strategy = HittingStrategy::epsilon_net);

// completes a weak system to a full guidance system along a degeneracy order
PartialOrientation complete_to_guidance(const Graph& g, const DistanceIndex& idx,
                                        const PartialOrientation& h, int r);

struct PowerLift {
  Graph power;
  PartialOrientation f;
  double outdegree_bound = 0;  // 2c^k for c >= 2, else the exact geometric sum
};

// distance-power lift: needs a weak k*r-guidance system on g (verified here)
PowerLift power_lift(const Graph& g, const DistanceIndex& idx, const PartialOrientation& h,
                     int k, int r);

struct Interval {
  double lo, hi;
};

struct IntervalGuidance {
  Graph graph;
  PartialOrientation h;  // outdegree <= 2, weak r-guidance for every r
};

IntervalGuidance interval_guidance(const std::vector<Interval>& intervals);

struct CutPartition {
  std::vector<int> a, b;
};

// classes of the relation: same side and identical neighborhoods across the cut
std::vector<std::vector<int>> equivalence_classes(const Graph& g, const CutPartition& cut);

// hA and hB are weak r-guidance systems of G[A] and G[B] given on global
// vertex ids (arcs inside A resp. B); both are verified before composing
PartialOrientation cut_compose(const Graph& g, const DistanceIndex& idx,
                               const CutPartition& cut, const PartialOrientation& ha,
                               const PartialOrientation& hb, int r);

struct TreeModelGuidance {
  Graph graph;
  PartialOrientation h;
  double outdegree_bound = 0;             // r^3 m^r (d+1)^{r^2} d
  std::vector<std::vector<int>> b_sets;   // per tree node, for structural audits
};

struct TypeBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TreeModelGuidance tree_model_guidance(const TreeModel& model, int r,
                                      int64_t tuple_budget = 50'000'000);

}  // namespace wgs
