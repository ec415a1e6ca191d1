#ifndef CUTLAB_CUTSETS_HPP
#define CUTLAB_CUTSETS_HPP

#include <functional>

#include "cutlab/core.hpp"

namespace cutlab {

// A minimal cutset separating the origin from the boundary sphere, carried
// together with its certificate: the finite origin-side component K with
// edges == edge_boundary(K), every other component touching S_R.
struct Cutset {
  std::vector<Edge> edges;          // sorted
  std::vector<VertexId> component;  // K, sorted, contains the origin
  bool exact = true;                // K inside B_{R-2}, certificate window-exact

  int size() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Cutset& a, const Cutset& b) {
    return a.edges == b.edges;
  }
  friend bool operator<(const Cutset& a, const Cutset& b) {
    if (a.edges.size() != b.edges.size())
      return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  }
};

enum class EdgeDistanceConvention {
  kEndpoint,     // min over endpoint pairs of the vertex distance
  kSubdivision,  // endpoint distance + 1 for distinct edges
};

std::string convention_name(EdgeDistanceConvention c);
EdgeDistanceConvention convention_from_name(const std::string& name);

struct ClosenessReport {
  int value = 0;
  std::vector<int> side_a;  // indices into Y
  std::vector<int> side_b;
  EdgeDistanceConvention convention = EdgeDistanceConvention::kSubdivision;
  bool degenerate = false;  // |Y| < 2: no nontrivial bipartition
};

struct EnumerationLimits {
  long long node_cap = 200000000;  // search-tree nodes before giving up
  int flow_check_interval = 1;     // run the mincut prune every k-th include
};

// All minimal cutsets with |edges| <= n_max whose component lies inside
// B_{R-2}; deterministic canonical order.
std::vector<Cutset> enumerate_min_cutsets_up_to(
    const GraphWindow& w, int n_max, const EnumerationLimits& lim = {});
// The size-n slice of the above.
std::vector<Cutset> enumerate_min_cutsets(const GraphWindow& w, int n,
                                          const EnumerationLimits& lim = {});

struct CutsetCountTable {
  std::vector<long long> count;     // count[n] for n = 0..n_max
  double alpha = 0.0;               // fitted per-edge growth constant
  int fit_lo = 0, fit_hi = 0;       // n-range used for the fit (inclusive)
};
CutsetCountTable count_min_cutsets(const GraphWindow& w, int n_max,
                                   const EnumerationLimits& lim = {});

struct MinimalityCertificate {
  bool minimal = false;
  bool exact = false;
  std::string reason;               // set when not minimal
  std::vector<VertexId> component;  // origin component after removal
};
MinimalityCertificate is_minimal_cutset(const GraphWindow& w,
                                        const std::vector<Edge>& Y);

// Exact closeness C(Y) of an edge set: the largest, over nontrivial
// bipartitions, of the minimum cross-distance; computed as the bottleneck
// edge of a minimum spanning tree on the pairwise distance graph. Throws
// MarginError when the window cannot certify the value as exact.
ClosenessReport closeness(const GraphWindow& w, const std::vector<Edge>& Y,
                          EdgeDistanceConvention convention,
                          DistanceCache* cache = nullptr);
// Vertex-set variant (plain graph distance between vertices).
ClosenessReport closeness_vertices(const GraphWindow& w,
                                   const std::vector<VertexId>& Y,
                                   DistanceCache* cache = nullptr);

// Oracle: iterate all 2^{|Y|-1}-1 bipartitions (|Y| <= 20).
ClosenessReport closeness_bruteforce(const GraphWindow& w,
                                     const std::vector<Edge>& Y,
                                     EdgeDistanceConvention convention,
                                     DistanceCache* cache = nullptr);

// Certified lower bound on C(Y) from one candidate bipartition of Y (given
// as the index set of one side): min cross distance, lower-bounded through
// the window exactness margin. Usable on windows too small for the exact
// computation.
int closeness_lower_bound(const GraphWindow& w, const std::vector<Edge>& Y,
                          const std::vector<int>& side_a,
                          EdgeDistanceConvention convention);

// Certified lower bound on C(Y) without a candidate bipartition: the MST
// bottleneck over per-pair certified lower-bound weights. Never throws for
// margin reasons; equals the exact value when the whole computation is
// window-exact.
int closeness_floor(const GraphWindow& w, const std::vector<Edge>& Y,
                    EdgeDistanceConvention convention,
                    DistanceCache* cache = nullptr);

// Certified minimum distance between two vertex sets.
PairDistance set_distance(const GraphWindow& w, const std::vector<VertexId>& A,
                          const std::vector<VertexId>& B);

struct SupClosenessRow {
  int n = 0;
  long long count = 0;
  int max_closeness = -1;  // -1 when no cutset of this size exists
  int running_max = -1;
  Cutset witness;          // cutset attaining max_closeness (if any)
};
std::vector<SupClosenessRow> sup_closeness(const GraphWindow& w, int n_max,
                                           EdgeDistanceConvention convention,
                                           const EnumerationLimits& lim = {});

// The minimal cutset separating N_n(X) from the sphere: N_n(X) plus every
// swallowed finite component, certified. X must be connected and contain o.
Cutset neighborhood_cutset(const GraphWindow& w, const std::vector<VertexId>& X,
                           int n);

// ---- connected-subset counting (depth-first-walk certificates) ----

// Exact count of connected n-vertex subsets containing the origin; the
// visitor, when given, sees each subset once in canonical order.
using SubsetVisitor = std::function<void(const std::vector<VertexId>&)>;
long long count_connected_subsets(const GraphWindow& w, int n,
                                  const SubsetVisitor& visitor = nullptr);

// Walk certificate over a spanning tree of the subset: a sequence of
// adjacency positions (alphabet <= degree bound) of length <= 2(|K|-1)
// whose decoding reproduces the subset.
std::vector<int> encode_subset_walk(const GraphWindow& w,
                                    const std::vector<VertexId>& K);
std::vector<VertexId> decode_subset_walk(const GraphWindow& w,
                                         const std::vector<int>& walk);

}  // namespace cutlab

#endif
