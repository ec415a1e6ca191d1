#ifndef CUTLAB_TREEGROWTH_HPP
#define CUTLAB_TREEGROWTH_HPP

#include <optional>

#include "cutlab/core.hpp"
#include "cutlab/cutsets.hpp"
#include "cutlab/groups.hpp"

namespace cutlab {

// Shortlex-minimal spanning tree of a Cayley window: every vertex carries
// the length-minimal, then lexicographically minimal word under the
// generator order, and its parent drops the last letter. Geodesic by
// construction: depth == graph distance.
struct SpanningTreeWindow {
  const GraphWindow* window = nullptr;
  std::vector<VertexId> parent;           // -1 at the root
  std::vector<std::vector<int>> word;     // generator indices
  std::vector<int> depth;
  std::vector<std::vector<VertexId>> children;  // in discovery order

  VertexId root() const { return window->origin(); }
};

SpanningTreeWindow build_shortlex_tree(const GraphWindow& w);

// Ball sizes |B_0| .. |B_n_max| from the window's origin distances.
std::vector<long long> growth_sequence(const GraphWindow& w, int n_max);
// Same from tree depths; equal to the graph growth because the tree is
// geodesic.
std::vector<long long> tree_growth_sequence(const SpanningTreeWindow& t,
                                            int n_max);

// Depth-preserving injective tree-map of the depth-truncated subtree at x
// into the tree with x mapped to the root. NOT-FOUND is inconclusive on a
// window (never a refutation).
struct EmbeddingWitness {
  std::vector<std::pair<VertexId, VertexId>> map;  // (subtree vertex, image)
};
std::optional<EmbeddingWitness> check_subperiodic(const SpanningTreeWindow& t,
                                                  VertexId x, int depth);

// Size of the union of finite tree components hanging off each vertex away
// from the root (window proxy: finite == avoids S_R), plus the strict-record
// set S.
struct BranchWeightTable {
  std::vector<long long> weight;      // |F_x| per vertex
  std::vector<char> uncertain;        // some child branch touches S_R
  std::vector<VertexId> record_set;   // S: strict records by distance
};
BranchWeightTable finite_branch_weights(const SpanningTreeWindow& t);

// Size-n minimal cutset counts over growing windows, with the stabilization
// radius and the core-ball radius (smallest r with >= n+1 disjoint rays
// starting on the sphere S_r).
struct FinitenessRow {
  int radius = 0;
  long long count = 0;
};
struct FinitenessReport {
  std::vector<FinitenessRow> rows;
  std::optional<int> stabilized_at;  // smallest listed R from which constant
  std::optional<int> core_ball_radius;
};
FinitenessReport finiteness_experiment(
    std::shared_ptr<const GraphProvider> provider, int n,
    const std::vector<int>& radii, const EnumerationLimits& lim = {},
    std::size_t vertex_cap = 1000000);

}  // namespace cutlab

#endif
