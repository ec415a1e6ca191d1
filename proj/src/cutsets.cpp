#include "cutlab/cutsets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace cutlab {

std::string convention_name(EdgeDistanceConvention c) {
  return c == EdgeDistanceConvention::kEndpoint ? "endpoint" : "subdivision";
}

EdgeDistanceConvention convention_from_name(const std::string& name) {
  if (name == "endpoint") return EdgeDistanceConvention::kEndpoint;
  if (name == "subdivision") return EdgeDistanceConvention::kSubdivision;
  throw ConfigError("unknown distance convention: " + name);
}

namespace {

// Reusable min edge-cut solver over one window: template capacities built
// once, per-query source/sink opened by mask.
class EdgeCutSolver {
 public:
  explicit EdgeCutSolver(const GraphWindow& w) : n_(w.size()) {
    head_.assign(n_ + 2, -1);
    for (const Edge& e : w.edges()) {
      add(e.u, e.v, 1);
      add(e.v, e.u, 1);
    }
    s_arc_.resize(n_);
    t_arc_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      s_arc_[v] = add(n_, v, 0);
      t_arc_[v] = add(v, n_ + 1, 0);
    }
    cap0_ = cap_;
    prev_.resize(n_ + 2);
  }

  int mincut_at_most(const std::vector<char>& src,
                     const std::vector<char>& snk, int limit) {
    cap_ = cap0_;
    for (int v = 0; v < n_; ++v) {
      if (src[v]) cap_[s_arc_[v]] = limit + 1;
      if (snk[v]) cap_[t_arc_[v]] = limit + 1;
    }
    int flow = 0;
    while (flow <= limit && augment()) ++flow;
    return flow;
  }

 private:
  int add(int a, int b, int c) {
    to_.push_back(b);
    cap_.push_back(c);
    nxt_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
    int id = static_cast<int>(to_.size()) - 1;
    to_.push_back(a);
    cap_.push_back(0);
    nxt_.push_back(head_[b]);
    head_[b] = static_cast<int>(to_.size()) - 1;
    return id;
  }

  bool augment() {
    int s = n_, t = n_ + 1;
    std::fill(prev_.begin(), prev_.end(), -2);
    std::deque<int> q{s};
    prev_[s] = -1;
    while (!q.empty() && prev_[t] == -2) {
      int v = q.front();
      q.pop_front();
      for (int e = head_[v]; e != -1; e = nxt_[e]) {
        if (cap_[e] > 0 && prev_[to_[e]] == -2) {
          prev_[to_[e]] = e;
          q.push_back(to_[e]);
        }
      }
    }
    if (prev_[t] == -2) return false;
    for (int v = t; v != s;) {
      int e = prev_[v];
      --cap_[e];
      ++cap_[e ^ 1];
      v = to_[e ^ 1];
    }
    return true;
  }

  int n_;
  std::vector<int> head_, nxt_, to_, cap_, cap0_, s_arc_, t_arc_, prev_;
};

// Binary-partition enumeration of connected vertex sets containing o: every
// connected set inside the allowed region is reached by exactly one
// include/exclude decision sequence (pivot = smallest undecided frontier
// vertex). Branches are cut once the committed boundary or the min cut to
// the forbidden/outside region exceeds n_max.
class MinCutsetEnumerator {
 public:
  MinCutsetEnumerator(const GraphWindow& w, int n_max,
                      const EnumerationLimits& lim)
      : w_(w), n_max_(n_max), lim_(lim), solver_(w) {
    allowed_.assign(w.size(), 0);
    for (VertexId v = 0; v < w.size(); ++v)
      allowed_[v] = w.dist_o(v) <= w.radius() - 2;
    in_k_.assign(w.size(), 0);
    forbidden_.assign(w.size(), 0);
    sink_.assign(w.size(), 0);
    for (VertexId v = 0; v < w.size(); ++v) sink_[v] = !allowed_[v];
    comp_mark_.assign(w.size(), -1);
  }

  std::vector<Cutset> run() {
    VertexId o = w_.origin();
    if (!allowed_[o])
      throw MarginError("window too small: origin is not inside B_{R-2}");
    include(o);
    evaluate();
    rec();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  struct IncludeUndo {
    VertexId v;
    int frontier_added_from;
    int boundary_delta;
    int committed_delta;
  };

  void include(VertexId v) {
    frontier_.erase(v);
    in_k_[v] = 1;
    k_.push_back(v);
    int to_k = 0, to_bad = 0;
    for (VertexId u : w_.neighbors_of(v)) {
      if (in_k_[u]) {
        ++to_k;
      } else if (forbidden_[u] || !allowed_[u]) {
        ++to_bad;
      } else if (!frontier_.count(u)) {
        frontier_.insert(u);
        frontier_log_.push_back(u);
      }
    }
    boundary_ += w_.degree(v) - 2 * to_k;
    committed_ += to_bad;
  }

  void undo_include(const IncludeUndo& undo) {
    VertexId v = undo.v;
    in_k_[v] = 0;
    k_.pop_back();
    while (static_cast<int>(frontier_log_.size()) > undo.frontier_added_from) {
      frontier_.erase(frontier_log_.back());
      frontier_log_.pop_back();
    }
    frontier_.insert(v);
    boundary_ -= undo.boundary_delta;
    committed_ -= undo.committed_delta;
  }

  void evaluate() {
    if (boundary_ > n_max_) return;
    // certificate: every component of the window minus K touches S_R
    ++epoch_;
    for (VertexId s = 0; s < w_.size(); ++s) {
      if (in_k_[s] || comp_mark_[s] == epoch_) continue;
      bool touches = false;
      bfs_queue_.clear();
      bfs_queue_.push_back(s);
      comp_mark_[s] = epoch_;
      for (std::size_t qi = 0; qi < bfs_queue_.size(); ++qi) {
        VertexId x = bfs_queue_[qi];
        if (w_.on_sphere(x)) touches = true;
        for (VertexId u : w_.neighbors_of(x)) {
          if (!in_k_[u] && comp_mark_[u] != epoch_) {
            comp_mark_[u] = epoch_;
            bfs_queue_.push_back(u);
          }
        }
      }
      if (!touches) return;  // a finite piece other than K: not minimal
    }
    Cutset c;
    c.component = k_;
    std::sort(c.component.begin(), c.component.end());
    for (VertexId v : c.component)
      for (VertexId u : w_.neighbors_of(v))
        if (!in_k_[u]) c.edges.push_back(make_edge(u, v));
    std::sort(c.edges.begin(), c.edges.end());
    c.exact = true;
    out_.push_back(std::move(c));
  }

  bool flow_prune() {
    // sink = forbidden or outside B_{R-2}
    int cut = solver_.mincut_at_most(in_k_, sink_, n_max_);
    return cut > n_max_;
  }

  void rec() {
    if (++nodes_ > lim_.node_cap)
      throw ResourceLimitError("cutset enumeration node cap exceeded");
    if (frontier_.empty()) return;
    VertexId v = *frontier_.begin();

    {  // include branch
      IncludeUndo undo{v, static_cast<int>(frontier_log_.size()), 0, 0};
      int b0 = boundary_, c0 = committed_;
      include(v);
      undo.boundary_delta = boundary_ - b0;
      undo.committed_delta = committed_ - c0;
      evaluate();
      bool prune = committed_ > n_max_;
      if (!prune && ++includes_since_flow_ >= lim_.flow_check_interval) {
        includes_since_flow_ = 0;
        prune = flow_prune();
      }
      if (!prune) rec();
      undo_include(undo);
    }

    {  // exclude branch
      frontier_.erase(v);
      forbidden_[v] = 1;
      sink_[v] = 1;
      int delta = 0;
      for (VertexId u : w_.neighbors_of(v))
        if (in_k_[u]) ++delta;
      committed_ += delta;
      if (committed_ <= n_max_) rec();
      committed_ -= delta;
      forbidden_[v] = 0;
      sink_[v] = 0;
      frontier_.insert(v);
    }
  }

  const GraphWindow& w_;
  int n_max_;
  EnumerationLimits lim_;
  EdgeCutSolver solver_;
  std::vector<char> allowed_, in_k_, forbidden_, sink_;
  std::vector<VertexId> k_;
  std::set<VertexId> frontier_;
  std::vector<VertexId> frontier_log_;
  std::vector<int> comp_mark_;
  std::vector<VertexId> bfs_queue_;
  int boundary_ = 0, committed_ = 0, epoch_ = 0, includes_since_flow_ = 0;
  long long nodes_ = 0;
  std::vector<Cutset> out_;
};

}  // namespace

std::vector<Cutset> enumerate_min_cutsets_up_to(const GraphWindow& w,
                                                int n_max,
                                                const EnumerationLimits& lim) {
  if (n_max < 1) return {};
  MinCutsetEnumerator e(w, n_max, lim);
  return e.run();
}

std::vector<Cutset> enumerate_min_cutsets(const GraphWindow& w, int n,
                                          const EnumerationLimits& lim) {
  auto all = enumerate_min_cutsets_up_to(w, n, lim);
  std::vector<Cutset> out;
  for (auto& c : all)
    if (c.size() == n) out.push_back(std::move(c));
  return out;
}

CutsetCountTable count_min_cutsets(const GraphWindow& w, int n_max,
                                   const EnumerationLimits& lim) {
  auto all = enumerate_min_cutsets_up_to(w, n_max, lim);
  CutsetCountTable t;
  t.count.assign(n_max + 1, 0);
  for (const auto& c : all) ++t.count[c.size()];
  // least squares on (n, log count) over the nonzero entries
  std::vector<std::pair<int, double>> pts;
  for (int n = 1; n <= n_max; ++n)
    if (t.count[n] > 0) pts.emplace_back(n, std::log(double(t.count[n])));
  if (pts.size() >= 2) {
    t.fit_lo = pts.front().first;
    t.fit_hi = pts.back().first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += double(x) * x;
      sxy += x * y;
    }
    double m = pts.size();
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    t.alpha = std::exp(slope);
  }
  return t;
}

MinimalityCertificate is_minimal_cutset(const GraphWindow& w,
                                        const std::vector<Edge>& Y) {
  MinimalityCertificate cert;
  for (const Edge& e : Y) {
    if (!w.has_edge(e.u, e.v)) throw MarginError("cutset edge not in window");
    if (w.dist_o(e.u) > w.radius() - 1 || w.dist_o(e.v) > w.radius() - 1)
      throw MarginError("cutset edge touches the boundary sphere");
  }
  auto comps = components_after_removal(w, {}, Y);
  const Component* origin_comp = nullptr;
  for (const auto& c : comps)
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), w.origin()))
      origin_comp = &c;
  if (origin_comp->touches_sphere) {
    cert.reason = "does not separate the origin from the sphere";
    return cert;
  }
  cert.component = origin_comp->vertices;
  auto delta = edge_boundary(w, cert.component);
  auto sorted_y = Y;
  std::sort(sorted_y.begin(), sorted_y.end());
  sorted_y.erase(std::unique(sorted_y.begin(), sorted_y.end()),
                 sorted_y.end());
  if (delta != sorted_y) {
    cert.reason = "edge set is not the exact boundary of the origin component";
    return cert;
  }
  for (const auto& c : comps) {
    if (&c == origin_comp) continue;
    if (!c.touches_sphere) {
      cert.reason = "a component other than the origin's is finite";
      return cert;
    }
  }
  cert.minimal = true;
  cert.exact = true;
  for (VertexId v : cert.component)
    if (w.dist_o(v) > w.radius() - 2) cert.exact = false;
  return cert;
}

namespace {

// Uniform point view: an edge (two endpoints) or a single vertex.
struct Point {
  VertexId a;
  VertexId b;  // == a for vertex points
};

struct PairInfo {
  int value;        // window distance under the convention
  int lower_bound;  // certified lower bound on the true distance
  bool exact() const { return value == lower_bound; }
};

PairInfo point_pair(const GraphWindow& w, DistanceCache& cache, const Point& p,
                    const Point& q, bool edge_points,
                    EdgeDistanceConvention conv) {
  int best_w = -1, best_l = -1;
  const int nu = p.a == p.b ? 1 : 2;
  const int nv = q.a == q.b ? 1 : 2;
  for (int i = 0; i < nu; ++i) {
    VertexId u = i == 0 ? p.a : p.b;
    const auto& row = cache.row(u);
    for (int j = 0; j < nv; ++j) {
      VertexId v = j == 0 ? q.a : q.b;
      int dw = row[v];
      int thr = w.exactness_threshold(u, v);
      int lb = std::min(dw, std::max(0, thr));
      if (best_w < 0 || dw < best_w) best_w = dw;
      if (best_l < 0 || lb < best_l) best_l = lb;
    }
  }
  int shift =
      edge_points && conv == EdgeDistanceConvention::kSubdivision ? 1 : 0;
  return {best_w + shift, best_l + shift};
}

ClosenessReport closeness_points(const GraphWindow& w,
                                 const std::vector<Point>& pts,
                                 bool edge_points,
                                 EdgeDistanceConvention conv,
                                 DistanceCache* cache) {
  ClosenessReport rep;
  rep.convention = conv;
  int p = static_cast<int>(pts.size());
  if (p == 0) throw std::invalid_argument("closeness: empty set");
  if (p == 1) {
    rep.degenerate = true;
    rep.side_a = {0};
    return rep;
  }
  DistanceCache local(w);
  DistanceCache& dc = cache ? *cache : local;

  std::vector<std::vector<PairInfo>> m(p, std::vector<PairInfo>(p));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      m[i][j] = m[j][i] = point_pair(w, dc, pts[i], pts[j], edge_points, conv);

  // Prim; the largest tree edge is the bottleneck.
  std::vector<char> in_tree(p, 0);
  std::vector<int> best(p, -1), best_from(p, -1);
  std::vector<std::pair<int, int>> tree_edges;  // (i, j)
  in_tree[0] = 1;
  for (int j = 1; j < p; ++j) {
    best[j] = m[0][j].value;
    best_from[j] = 0;
  }
  for (int step = 1; step < p; ++step) {
    int pick = -1;
    for (int j = 0; j < p; ++j)
      if (!in_tree[j] && (pick < 0 || best[j] < best[pick])) pick = j;
    in_tree[pick] = 1;
    tree_edges.emplace_back(best_from[pick], pick);
    for (int j = 0; j < p; ++j)
      if (!in_tree[j] && m[pick][j].value < best[j]) {
        best[j] = m[pick][j].value;
        best_from[j] = pick;
      }
  }
  int bottleneck_idx = 0;
  for (int i = 1; i < p - 1; ++i) {
    auto [a0, b0] = tree_edges[bottleneck_idx];
    auto [a1, b1] = tree_edges[i];
    if (m[a1][b1].value > m[a0][b0].value) bottleneck_idx = i;
  }
  auto [ba, bb] = tree_edges[bottleneck_idx];
  rep.value = m[ba][bb].value;

  // certification against window truncation
  for (auto [i, j] : tree_edges)
    if (!m[i][j].exact())
      throw MarginError(
          "closeness: a spanning-tree distance is not window-exact");
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (!m[i][j].exact() && m[i][j].lower_bound < rep.value)
        throw MarginError(
            "closeness: an uncertified pair could undercut the bottleneck");

  // witness split: the two components after removing the bottleneck edge
  std::vector<std::vector<int>> tadj(p);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    if (static_cast<int>(i) == bottleneck_idx) continue;
    tadj[tree_edges[i].first].push_back(tree_edges[i].second);
    tadj[tree_edges[i].second].push_back(tree_edges[i].first);
  }
  std::vector<char> side(p, 0);
  std::deque<int> q{ba};
  side[ba] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : tadj[v])
      if (!side[u]) {
        side[u] = 1;
        q.push_back(u);
      }
  }
  for (int i = 0; i < p; ++i)
    (side[i] ? rep.side_a : rep.side_b).push_back(i);
  return rep;
}

std::vector<Point> edge_points_of(const std::vector<Edge>& Y) {
  std::vector<Point> pts;
  pts.reserve(Y.size());
  for (const Edge& e : Y) pts.push_back({e.u, e.v});
  return pts;
}

}  // namespace

ClosenessReport closeness(const GraphWindow& w, const std::vector<Edge>& Y,
                          EdgeDistanceConvention convention,
                          DistanceCache* cache) {
  return closeness_points(w, edge_points_of(Y), true, convention, cache);
}

ClosenessReport closeness_vertices(const GraphWindow& w,
                                   const std::vector<VertexId>& Y,
                                   DistanceCache* cache) {
  std::vector<Point> pts;
  for (VertexId v : Y) pts.push_back({v, v});
  return closeness_points(w, pts, false,
                          EdgeDistanceConvention::kEndpoint, cache);
}

ClosenessReport closeness_bruteforce(const GraphWindow& w,
                                     const std::vector<Edge>& Y,
                                     EdgeDistanceConvention convention,
                                     DistanceCache* cache) {
  int p = static_cast<int>(Y.size());
  if (p > 20) throw ResourceLimitError("closeness_bruteforce: |Y| > 20");
  ClosenessReport rep;
  rep.convention = convention;
  if (p == 0) throw std::invalid_argument("closeness: empty set");
  if (p == 1) {
    rep.degenerate = true;
    rep.side_a = {0};
    return rep;
  }
  DistanceCache local(w);
  DistanceCache& dc = cache ? *cache : local;
  auto pts = edge_points_of(Y);
  std::vector<std::vector<int>> d(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      d[i][j] = d[j][i] =
          point_pair(w, dc, pts[i], pts[j], true, convention).value;

  int best = -1;
  std::uint32_t best_mask = 1;
  for (std::uint32_t mask = 1; mask < (1u << (p - 1)); ++mask) {
    std::uint32_t a = mask | (1u << (p - 1));  // fix last point in side A
    int cross = -1;
    for (int i = 0; i < p; ++i) {
      if (!(a & (1u << i))) continue;
      for (int j = 0; j < p; ++j) {
        if (a & (1u << j)) continue;
        if (cross < 0 || d[i][j] < cross) cross = d[i][j];
      }
    }
    if (cross > best) {
      best = cross;
      best_mask = a;
    }
  }
  rep.value = best;
  for (int i = 0; i < p; ++i)
    ((best_mask & (1u << i)) ? rep.side_a : rep.side_b).push_back(i);
  return rep;
}

int closeness_floor(const GraphWindow& w, const std::vector<Edge>& Y,
                    EdgeDistanceConvention convention, DistanceCache* cache) {
  int p = static_cast<int>(Y.size());
  if (p <= 1) return 0;
  DistanceCache local(w);
  DistanceCache& dc = cache ? *cache : local;
  auto pts = edge_points_of(Y);
  std::vector<std::vector<int>> lb(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      lb[i][j] = lb[j][i] =
          point_pair(w, dc, pts[i], pts[j], true, convention).lower_bound;
  // Prim bottleneck over the lower-bound weights; monotone in weights, so
  // this is a valid lower bound for the true closeness.
  std::vector<char> in_tree(p, 0);
  std::vector<int> best(p);
  in_tree[0] = 1;
  for (int j = 1; j < p; ++j) best[j] = lb[0][j];
  int bottleneck = 0;
  for (int step = 1; step < p; ++step) {
    int pick = -1;
    for (int j = 0; j < p; ++j)
      if (!in_tree[j] && (pick < 0 || best[j] < best[pick])) pick = j;
    bottleneck = std::max(bottleneck, best[pick]);
    in_tree[pick] = 1;
    for (int j = 0; j < p; ++j)
      if (!in_tree[j]) best[j] = std::min(best[j], lb[pick][j]);
  }
  return bottleneck;
}

int closeness_lower_bound(const GraphWindow& w, const std::vector<Edge>& Y,
                          const std::vector<int>& side_a,
                          EdgeDistanceConvention convention) {
  std::vector<char> in_a(Y.size(), 0);
  for (int i : side_a) in_a[i] = 1;
  std::vector<VertexId> ea, eb;
  for (std::size_t i = 0; i < Y.size(); ++i) {
    auto& dst = in_a[i] ? ea : eb;
    dst.push_back(Y[i].u);
    dst.push_back(Y[i].v);
  }
  if (ea.empty() || eb.empty())
    throw std::invalid_argument("closeness_lower_bound: trivial bipartition");
  PairDistance d = set_distance(w, sorted_unique(std::move(ea)),
                                sorted_unique(std::move(eb)));
  int shift = convention == EdgeDistanceConvention::kSubdivision ? 1 : 0;
  return d.lower_bound + shift;
}

PairDistance set_distance(const GraphWindow& w, const std::vector<VertexId>& A,
                          const std::vector<VertexId>& B) {
  if (A.empty() || B.empty())
    throw std::invalid_argument("set_distance: empty side");
  auto dist = w.bfs(A);
  int m = -1;
  for (VertexId v : B)
    if (m < 0 || dist[v] < m) m = dist[v];
  int max_a = 0, max_b = 0;
  for (VertexId v : A) max_a = std::max(max_a, w.dist_o(v));
  for (VertexId v : B) max_b = std::max(max_b, w.dist_o(v));
  int t_min = 2 * w.radius() - max_a - max_b;
  bool exact = m <= t_min;
  return {m, exact, exact ? m : std::min(m, std::max(0, t_min))};
}

std::vector<SupClosenessRow> sup_closeness(const GraphWindow& w, int n_max,
                                           EdgeDistanceConvention convention,
                                           const EnumerationLimits& lim) {
  auto cutsets = enumerate_min_cutsets_up_to(w, n_max, lim);
  DistanceCache cache(w);
  std::vector<SupClosenessRow> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) rows[n].n = n;
  for (auto& c : cutsets) {
    auto rep = closeness(w, c.edges, convention, &cache);
    auto& row = rows[c.size()];
    ++row.count;
    if (rep.value > row.max_closeness) {
      row.max_closeness = rep.value;
      row.witness = c;
    }
  }
  int running = -1;
  for (auto& row : rows) {
    running = std::max(running, row.max_closeness);
    row.running_max = running;
  }
  return rows;
}

Cutset neighborhood_cutset(const GraphWindow& w,
                           const std::vector<VertexId>& X, int n) {
  if (X.empty()) throw std::invalid_argument("neighborhood_cutset: empty X");
  auto xs = sorted_unique(X);
  if (!std::binary_search(xs.begin(), xs.end(), w.origin()))
    throw std::invalid_argument(
        "neighborhood_cutset: X must contain the origin");
  {
    auto comps = components_after_removal(w, {}, edge_boundary(w, xs));
    bool connected = false;
    for (const auto& c : comps)
      if (c.vertices == xs) connected = true;
    if (!connected)
      throw std::invalid_argument("neighborhood_cutset: X must be connected");
  }
  auto grown = neighborhood(w, xs, n);
  auto comps = components_after_removal(w, grown, {});
  std::vector<VertexId> k = grown;
  for (const auto& c : comps)
    if (!c.touches_sphere)
      k.insert(k.end(), c.vertices.begin(), c.vertices.end());
  k = sorted_unique(std::move(k));
  for (VertexId v : k)
    if (w.dist_o(v) > w.radius() - 2)
      throw MarginError("neighborhood_cutset: merged component leaves B_{R-2}");
  Cutset out;
  out.component = std::move(k);
  out.edges = edge_boundary(w, out.component);
  out.exact = true;
  return out;
}

// ---- connected-subset counting ----

namespace {

class SubsetEnumerator {
 public:
  SubsetEnumerator(const GraphWindow& w, int n, const SubsetVisitor& visitor)
      : w_(w), n_(n), visitor_(visitor) {
    in_k_.assign(w.size(), 0);
    forbidden_.assign(w.size(), 0);
  }

  long long run() {
    if (n_ < 1) return 0;
    if (n_ > w_.radius())
      throw MarginError("count_connected_subsets requires n <= R");
    include(w_.origin());
    emit_if_full();
    if (n_ > 1) rec();
    return count_;
  }

 private:
  void include(VertexId v) {
    frontier_.erase(v);
    in_k_[v] = 1;
    k_.push_back(v);
    for (VertexId u : w_.neighbors_of(v))
      if (!in_k_[u] && !forbidden_[u] && !frontier_.count(u)) {
        frontier_.insert(u);
        frontier_log_.push_back(u);
      }
  }

  void emit_if_full() {
    if (static_cast<int>(k_.size()) != n_) return;
    ++count_;
    if (visitor_) {
      auto sorted = k_;
      std::sort(sorted.begin(), sorted.end());
      visitor_(sorted);
    }
  }

  void rec() {
    if (frontier_.empty()) return;
    VertexId v = *frontier_.begin();
    {
      int log_mark = static_cast<int>(frontier_log_.size());
      include(v);
      emit_if_full();
      if (static_cast<int>(k_.size()) < n_) rec();
      in_k_[v] = 0;
      k_.pop_back();
      while (static_cast<int>(frontier_log_.size()) > log_mark) {
        frontier_.erase(frontier_log_.back());
        frontier_log_.pop_back();
      }
      frontier_.insert(v);
    }
    {
      frontier_.erase(v);
      forbidden_[v] = 1;
      rec();
      forbidden_[v] = 0;
      frontier_.insert(v);
    }
  }

  const GraphWindow& w_;
  int n_;
  const SubsetVisitor& visitor_;
  std::vector<char> in_k_, forbidden_;
  std::vector<VertexId> k_;
  std::set<VertexId> frontier_;
  std::vector<VertexId> frontier_log_;
  long long count_ = 0;
};

}  // namespace

long long count_connected_subsets(const GraphWindow& w, int n,
                                  const SubsetVisitor& visitor) {
  SubsetEnumerator e(w, n, visitor);
  return e.run();
}

std::vector<int> encode_subset_walk(const GraphWindow& w,
                                    const std::vector<VertexId>& K) {
  auto ks = sorted_unique(K);
  std::vector<char> in_k = make_mask(w, ks);
  if (!in_k[w.origin()])
    throw std::invalid_argument("walk certificate: subset must contain o");

  // BFS spanning tree of the induced subgraph, children in id order
  std::unordered_map<VertexId, std::vector<VertexId>> children;
  std::vector<char> seen(w.size(), 0);
  std::deque<VertexId> q{w.origin()};
  seen[w.origin()] = 1;
  int reached = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    ++reached;
    for (VertexId u : w.neighbors_of(v)) {
      if (in_k[u] && !seen[u]) {
        seen[u] = 1;
        children[v].push_back(u);
        q.push_back(u);
      }
    }
  }
  if (reached != static_cast<int>(ks.size()))
    throw std::invalid_argument("walk certificate: subset not connected");

  // Euler tour: each tree edge walked down once and up once.
  std::vector<int> walk;
  auto position_of = [&](VertexId from, VertexId to_v) {
    const auto& ns = w.neighbors_of(from);
    return static_cast<int>(
        std::find(ns.begin(), ns.end(), to_v) - ns.begin());
  };
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId v,
                                                    VertexId parent) {
    for (VertexId c : children[v]) {
      walk.push_back(position_of(v, c));
      dfs(c, v);
      walk.push_back(position_of(c, v));
    }
    (void)parent;
  };
  dfs(w.origin(), -1);
  return walk;
}

std::vector<VertexId> decode_subset_walk(const GraphWindow& w,
                                         const std::vector<int>& walk) {
  std::vector<VertexId> visited{w.origin()};
  VertexId cur = w.origin();
  for (int step : walk) {
    const auto& ns = w.neighbors_of(cur);
    if (step < 0 || step >= static_cast<int>(ns.size()))
      throw std::invalid_argument("walk certificate: step out of range");
    cur = ns[step];
    visited.push_back(cur);
  }
  return sorted_unique(std::move(visited));
}

}  // namespace cutlab
