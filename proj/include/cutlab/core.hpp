#ifndef CUTLAB_CORE_HPP
#define CUTLAB_CORE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cutlab {

// Canonical serialized vertex coordinate. Two keys are equal iff they denote
// the same vertex of the infinite graph; string order gives the total order
// used for deterministic iteration.
using VertexKey = std::string;
using VertexId = int;

class MarginError : public std::runtime_error {
 public:
  explicit MarginError(const std::string& what) : std::runtime_error(what) {}
};

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A checked runtime claim failed (e.g. a pinned reference value regressed).
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// Window edge, canonical orientation u < v (ids are assigned in key order,
// so id order and key order agree).
struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Neighbor oracle for an infinite bounded-degree graph. Implementations must
// be symmetric (u in neighbors(v) iff v in neighbors(u)), deterministic, and
// respect degree_bound().
class GraphProvider {
 public:
  virtual ~GraphProvider() = default;

  virtual std::vector<VertexKey> neighbors(const VertexKey& v) const = 0;
  virtual int degree_bound() const = 0;
  virtual VertexKey origin() const = 0;
  virtual std::string family() const = 0;

  // Smallest radius from which "touches the boundary sphere" certifies a
  // component as infinite for sets kept inside B_{R-2}. All shipped
  // providers satisfy this with a small constant.
  virtual int boundary_connected_radius() const { return 2; }
};

struct PairDistance {
  int value;        // distance inside the window (upper bound on the true one)
  bool exact;       // true when the window certifies value == true distance
  int lower_bound;  // certified lower bound on the true distance
};

// Exact induced ball B_R(o) of a provider, with per-vertex distance from the
// origin and the boundary sphere S_R marked. Immutable after construction.
class GraphWindow {
 public:
  const GraphProvider& provider() const { return *provider_; }
  std::shared_ptr<const GraphProvider> provider_ptr() const {
    return provider_;
  }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(keys_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexId origin() const { return origin_; }

  const std::vector<VertexKey>& keys() const { return keys_; }
  const VertexKey& key_of(VertexId v) const { return keys_[v]; }
  std::optional<VertexId> find(const VertexKey& k) const;
  VertexId id_of(const VertexKey& k) const;  // throws if absent

  const std::vector<std::vector<VertexId>>& adjacency() const { return adj_; }
  const std::vector<VertexId>& neighbors_of(VertexId v) const {
    return adj_[v];
  }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  const std::vector<int>& dist_from_origin() const { return dist_o_; }
  int dist_o(VertexId v) const { return dist_o_[v]; }
  bool on_sphere(VertexId v) const { return dist_o_[v] == radius_; }
  const std::vector<VertexId>& sphere() const { return sphere_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int eid) const { return edges_[eid]; }
  std::optional<int> edge_id(VertexId a, VertexId b) const;
  int edge_id_checked(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const {
    return edge_id(a, b).has_value();
  }

  // Multi-source BFS distance field; -1 where unreachable.
  std::vector<int> bfs(const std::vector<VertexId>& sources) const;

  // True-distance certification margin: window distance d(u,v) equals the
  // infinite-graph distance whenever d(u,v) <= 2R - dist_o(u) - dist_o(v).
  int exactness_threshold(VertexId u, VertexId v) const {
    return 2 * radius_ - dist_o_[u] - dist_o_[v];
  }
  PairDistance pair_distance(VertexId u, VertexId v) const;

  std::vector<VertexId> ids_of(const std::vector<VertexKey>& ks) const;

  friend GraphWindow build_window(std::shared_ptr<const GraphProvider>,
                                  int radius, std::size_t vertex_cap);

 private:
  std::shared_ptr<const GraphProvider> provider_;
  int radius_ = 0;
  VertexId origin_ = 0;
  std::vector<VertexKey> keys_;
  std::unordered_map<VertexKey, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> dist_o_;
  std::vector<VertexId> sphere_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
};

GraphWindow build_window(std::shared_ptr<const GraphProvider> provider,
                         int radius, std::size_t vertex_cap = 1000000);

// Memoized per-source BFS rows over one window.
class DistanceCache {
 public:
  explicit DistanceCache(const GraphWindow& w) : w_(&w) {}
  const std::vector<int>& row(VertexId source);
  int dist(VertexId u, VertexId v) { return row(u)[v]; }

 private:
  const GraphWindow* w_;
  std::unordered_map<VertexId, std::vector<int>> rows_;
};

// ---- set-valued operations (X given as sorted-or-not id vectors) ----

// N_n(X) = vertices at window distance <= n from X. Requires the working set
// to stay clear of S_R: max dist_o(X) + n <= R - 1, else MarginError.
std::vector<VertexId> neighborhood(const GraphWindow& w,
                                   const std::vector<VertexId>& X, int n);

// External boundary: vertices not in X adjacent to X. Requires X disjoint
// from S_R.
std::vector<VertexId> external_boundary(const GraphWindow& w,
                                        const std::vector<VertexId>& X);
// Inner boundary: vertices of X adjacent to the complement.
std::vector<VertexId> inner_boundary(const GraphWindow& w,
                                     const std::vector<VertexId>& X);
// Edges with exactly one endpoint in X.
std::vector<Edge> edge_boundary(const GraphWindow& w,
                                const std::vector<VertexId>& X);

struct Component {
  std::vector<VertexId> vertices;
  bool touches_sphere = false;  // window proxy for "infinite"
};

std::vector<Component> components_after_removal(
    const GraphWindow& w, const std::vector<VertexId>& removed_vertices,
    const std::vector<Edge>& removed_edges);

// Maximum number of pairwise vertex-disjoint paths from the external
// boundary of X to S_R avoiding X (window stand-in for disjoint infinite
// rays). Requires X disjoint from S_R.
int disjoint_ray_count(const GraphWindow& w, const std::vector<VertexId>& X);

// Same computation returning the Menger certificate pair: explicit disjoint
// paths and a separating vertex set of equal size.
struct RayCertificate {
  int count = 0;
  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> separator;
};
RayCertificate disjoint_ray_certificate(const GraphWindow& w,
                                        const std::vector<VertexId>& X);

// Minimum number of edges separating `sources` from `sinks` inside the
// window, computed by unit-capacity augmentation; stops early and returns
// limit+1 once the cut provably exceeds `limit`.
int edge_mincut_at_most(const GraphWindow& w, const std::vector<char>& source,
                        const std::vector<char>& sink, int limit);

// ---- dumps ----

// One line per vertex: key<TAB>dist<TAB>neighbor,neighbor,...
std::string dump_window(const GraphWindow& w);
std::string dump_dot(const GraphWindow& w);

// ---- small helpers shared across modules ----

std::vector<VertexId> sorted_unique(std::vector<VertexId> xs);
std::vector<char> make_mask(const GraphWindow& w,
                            const std::vector<VertexId>& xs);

}  // namespace cutlab

#endif
