#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wgs/distance_index.hpp"
#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rational.hpp"

namespace wgs {

struct DominationResult {
  std::vector<int> d_set;  // r-dominating, verified before return
  std::vector<int> a_set;  // 2r-independent, verified before return
  double ratio = 0;        // |D| / |A|
  std::optional<double> bound_b;
  std::optional<bool> bound_satisfied;  // |D| <= bound_b * |A| (exact arithmetic)
};

// Greedy domination driven by a full 2r-guidance system (verified). The
// picked set A' is checked for 2r-independence directly and falls back to the
// conflict-graph extraction when the check fails.
DominationResult dominate_via_guidance(const Graph& g, const DistanceIndex& idx,
                                       const PartialOrientation& h, int r);

// sigma(1) = 0, sigma(p) = c^(2r+1) (sigma(p-1) + 1)
BigInt sigma_constant(int p, int c, int r);

// b = c^(r+1) (c^(2r+1) sigma(k+1) + 1)
BigInt domination_bound_b(int c, int r, int k);

// Greedy domination from a weak 2r-guidance system of outdegree <= c,
// extracting A as the largest color class of a degeneracy-order coloring of
// the <=2r conflict graph on A'. Reports whether |D| <= b|A| held.
DominationResult dominate_weak(const Graph& g, const DistanceIndex& idx,
                               const PartialOrientation& h, int r, int c, int k);

struct HalfgraphWitness {
  std::vector<int> u;  // u_1..u_k
  std::vector<int> v;  // v_1..v_k
};

enum class HalfgraphStatus { found, none, budget_exhausted };

struct HalfgraphResult {
  HalfgraphStatus status = HalfgraphStatus::none;
  HalfgraphWitness witness;  // populated when status == found
  int64_t nodes_visited = 0;
};

// Backtracking search for the (r,k)-halfgraph distance pattern. "none" with a
// completed search proves (r,k)-stability; budget exhaustion is reported
// separately and proves nothing.
HalfgraphResult find_halfgraph(const Graph& g, const DistanceIndex& idx, int r, int k,
                               int64_t budget = 10'000'000);

}  // namespace wgs
