#include "cutlab/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace cutlab {

namespace {

std::uint64_t edge_code(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

std::optional<VertexId> GraphWindow::find(const VertexKey& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId GraphWindow::id_of(const VertexKey& k) const {
  auto v = find(k);
  if (!v) throw MarginError("vertex not in window: " + k);
  return *v;
}

std::optional<int> GraphWindow::edge_id(VertexId a, VertexId b) const {
  auto it = edge_index_.find(edge_code(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int GraphWindow::edge_id_checked(VertexId a, VertexId b) const {
  auto e = edge_id(a, b);
  if (!e) throw std::logic_error("not an edge of the window");
  return *e;
}

std::vector<VertexId> GraphWindow::ids_of(
    const std::vector<VertexKey>& ks) const {
  std::vector<VertexId> out;
  out.reserve(ks.size());
  for (const auto& k : ks) out.push_back(id_of(k));
  return out;
}

std::vector<int> GraphWindow::bfs(const std::vector<VertexId>& sources) const {
  std::vector<int> dist(keys_.size(), -1);
  std::deque<VertexId> q;
  for (VertexId s : sources) {
    if (dist[s] == -1) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (VertexId u : adj_[v]) {
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return dist;
}

PairDistance GraphWindow::pair_distance(VertexId u, VertexId v) const {
  if (u == v) return {0, true, 0};
  auto dist = bfs({u});
  int d = dist[v];
  if (d < 0)
    throw std::logic_error("window is connected; unreachable pair impossible");
  int threshold = exactness_threshold(u, v);
  bool exact = d <= threshold;
  return {d, exact, exact ? d : std::max(0, threshold)};
}

GraphWindow build_window(std::shared_ptr<const GraphProvider> provider,
                         int radius, std::size_t vertex_cap) {
  if (radius < 1) throw ConfigError("window radius must be >= 1");

  // Discover the ball, keeping provider-reported neighbor lists so the
  // provider is queried once per vertex.
  std::unordered_map<VertexKey, int> dist;
  std::unordered_map<VertexKey, std::vector<VertexKey>> nbrs;
  std::deque<VertexKey> q;
  const VertexKey o = provider->origin();
  dist[o] = 0;
  q.push_back(o);
  while (!q.empty()) {
    VertexKey v = std::move(q.front());
    q.pop_front();
    int dv = dist[v];
    auto ns = provider->neighbors(v);
    if (static_cast<int>(ns.size()) > provider->degree_bound())
      throw CheckFailure("provider exceeded its degree bound at " + v);
    if (dv < radius) {
      for (const auto& u : ns) {
        if (!dist.count(u)) {
          if (dist.size() >= vertex_cap)
            throw ResourceLimitError("window vertex cap exceeded");
          dist[u] = dv + 1;
          q.push_back(u);
        }
      }
    }
    nbrs.emplace(std::move(v), std::move(ns));
  }

  GraphWindow w;
  w.provider_ = std::move(provider);
  w.radius_ = radius;
  w.keys_.reserve(dist.size());
  for (const auto& [k, d] : dist) w.keys_.push_back(k);
  std::sort(w.keys_.begin(), w.keys_.end());
  w.index_.reserve(w.keys_.size());
  for (int i = 0; i < static_cast<int>(w.keys_.size()); ++i)
    w.index_.emplace(w.keys_[i], i);
  w.origin_ = w.index_.at(o);

  w.dist_o_.resize(w.keys_.size());
  w.adj_.resize(w.keys_.size());
  for (int i = 0; i < static_cast<int>(w.keys_.size()); ++i) {
    w.dist_o_[i] = dist.at(w.keys_[i]);
    if (w.dist_o_[i] == radius) w.sphere_.push_back(i);
    for (const auto& nk : nbrs.at(w.keys_[i])) {
      auto it = w.index_.find(nk);
      if (it != w.index_.end()) w.adj_[i].push_back(it->second);
    }
    std::sort(w.adj_[i].begin(), w.adj_[i].end());
    w.adj_[i].erase(std::unique(w.adj_[i].begin(), w.adj_[i].end()),
                    w.adj_[i].end());
  }

  for (int u = 0; u < static_cast<int>(w.adj_.size()); ++u) {
    for (VertexId v : w.adj_[u]) {
      if (u < v) {
        w.edge_index_.emplace(edge_code(u, v),
                              static_cast<int>(w.edges_.size()));
        w.edges_.push_back({u, v});
      }
    }
  }
  for (int u = 0; u < static_cast<int>(w.adj_.size()); ++u)
    for (VertexId v : w.adj_[u])
      if (std::find(w.adj_[v].begin(), w.adj_[v].end(), u) == w.adj_[v].end())
        throw CheckFailure("provider neighbor relation not symmetric at " +
                           w.keys_[u]);
  return w;
}

const std::vector<int>& DistanceCache::row(VertexId source) {
  auto it = rows_.find(source);
  if (it != rows_.end()) return it->second;
  return rows_.emplace(source, w_->bfs({source})).first->second;
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<char> make_mask(const GraphWindow& w,
                            const std::vector<VertexId>& xs) {
  std::vector<char> mask(w.size(), 0);
  for (VertexId v : xs) mask[v] = 1;
  return mask;
}

std::vector<VertexId> neighborhood(const GraphWindow& w,
                                   const std::vector<VertexId>& X, int n) {
  if (n < 0) throw std::invalid_argument("neighborhood: n must be >= 0");
  for (VertexId v : X) {
    if (w.dist_o(v) + n > w.radius() - 1)
      throw MarginError(
          "neighborhood would be window-truncated (margin rule): "
          "dist_o(" +
          w.key_of(v) + ")=" + std::to_string(w.dist_o(v)) +
          " + n=" + std::to_string(n) + " > R-1");
  }
  auto dist = w.bfs(X);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < w.size(); ++v)
    if (dist[v] >= 0 && dist[v] <= n) out.push_back(v);
  return out;
}

std::vector<VertexId> external_boundary(const GraphWindow& w,
                                        const std::vector<VertexId>& X) {
  auto mask = make_mask(w, X);
  for (VertexId v : X)
    if (w.on_sphere(v))
      throw MarginError("external_boundary: X meets the boundary sphere");
  std::vector<VertexId> out;
  std::vector<char> seen(w.size(), 0);
  for (VertexId v : X) {
    for (VertexId u : w.neighbors_of(v)) {
      if (!mask[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<VertexId> inner_boundary(const GraphWindow& w,
                                     const std::vector<VertexId>& X) {
  auto mask = make_mask(w, X);
  std::vector<VertexId> out;
  for (VertexId v : X)
    for (VertexId u : w.neighbors_of(v))
      if (!mask[u]) {
        out.push_back(v);
        break;
      }
  return sorted_unique(std::move(out));
}

std::vector<Edge> edge_boundary(const GraphWindow& w,
                                const std::vector<VertexId>& X) {
  auto mask = make_mask(w, X);
  std::vector<Edge> out;
  for (VertexId v : X)
    for (VertexId u : w.neighbors_of(v))
      if (!mask[u]) out.push_back(make_edge(u, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Component> components_after_removal(
    const GraphWindow& w, const std::vector<VertexId>& removed_vertices,
    const std::vector<Edge>& removed_edges) {
  std::vector<char> gone = make_mask(w, removed_vertices);
  std::vector<char> edge_gone(w.edge_count(), 0);
  for (const Edge& e : removed_edges) edge_gone[w.edge_id_checked(e.u, e.v)] = 1;

  std::vector<int> comp(w.size(), -1);
  std::vector<Component> out;
  for (VertexId s = 0; s < w.size(); ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    Component c;
    int cid = static_cast<int>(out.size());
    std::deque<VertexId> q{s};
    comp[s] = cid;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      c.vertices.push_back(v);
      if (w.on_sphere(v)) c.touches_sphere = true;
      for (VertexId u : w.neighbors_of(v)) {
        if (gone[u] || comp[u] >= 0) continue;
        if (edge_gone[w.edge_id_checked(u, v)]) continue;
        comp[u] = cid;
        q.push_back(u);
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Max-flow with small integer capacities, BFS augmentation (each path
// carries one unit here: every s-t path crosses a unit arc).
struct UnitFlow {
  int n = 0;
  std::vector<int> head, nxt, to, cap;

  explicit UnitFlow(int vertices) : n(vertices), head(vertices, -1) {}

  void add(int a, int b, int c = 1) {
    to.push_back(b);
    cap.push_back(c);
    nxt.push_back(head[a]);
    head[a] = static_cast<int>(to.size()) - 1;
    to.push_back(a);
    cap.push_back(0);
    nxt.push_back(head[b]);
    head[b] = static_cast<int>(to.size()) - 1;
  }

  // One augmenting path source->sink; returns false when none exists.
  bool augment(int s, int t) {
    std::vector<int> prev_edge(n, -2);
    std::deque<int> q{s};
    prev_edge[s] = -1;
    while (!q.empty() && prev_edge[t] == -2) {
      int v = q.front();
      q.pop_front();
      for (int e = head[v]; e != -1; e = nxt[e]) {
        if (cap[e] > 0 && prev_edge[to[e]] == -2) {
          prev_edge[to[e]] = e;
          q.push_back(to[e]);
        }
      }
    }
    if (prev_edge[t] == -2) return false;
    for (int v = t; v != s;) {
      int e = prev_edge[v];
      --cap[e];
      ++cap[e ^ 1];
      v = to[e ^ 1];
    }
    return true;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(n, 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e = head[v]; e != -1; e = nxt[e])
        if (cap[e] > 0 && !seen[to[e]]) {
          seen[to[e]] = 1;
          q.push_back(to[e]);
        }
    }
    return seen;
  }
};

}  // namespace

int edge_mincut_at_most(const GraphWindow& w, const std::vector<char>& source,
                        const std::vector<char>& sink, int limit) {
  int n = w.size();
  UnitFlow f(n + 2);
  int s = n, t = n + 1;
  for (const Edge& e : w.edges()) {
    if (source[e.u] && source[e.v]) continue;
    if (sink[e.u] && sink[e.v]) continue;
    f.add(e.u, e.v);
    f.add(e.v, e.u);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (source[v] && sink[v]) return 0;  // degenerate; caller guards
    if (source[v]) f.add(s, v, limit + 1);
    if (sink[v]) f.add(v, t, limit + 1);
  }
  int flow = 0;
  while (flow <= limit && f.augment(s, t)) ++flow;
  return flow;
}

RayCertificate disjoint_ray_certificate(const GraphWindow& w,
                                        const std::vector<VertexId>& X) {
  for (VertexId v : X)
    if (w.on_sphere(v))
      throw MarginError("disjoint_ray_count: X meets the boundary sphere");
  auto bx = external_boundary(w, X);
  auto xmask = make_mask(w, X);

  // Vertex-disjoint paths: split v into v_in = 2v, v_out = 2v+1, capacity 1.
  int n = w.size();
  UnitFlow f(2 * n + 2);
  int s = 2 * n, t = 2 * n + 1;
  for (VertexId v = 0; v < n; ++v) {
    if (xmask[v]) continue;
    f.add(2 * v, 2 * v + 1);
  }
  for (const Edge& e : w.edges()) {
    if (xmask[e.u] || xmask[e.v]) continue;
    f.add(2 * e.u + 1, 2 * e.v);
    f.add(2 * e.v + 1, 2 * e.u);
  }
  std::vector<char> is_source(n, 0), is_sink(n, 0);
  for (VertexId v : bx) is_source[v] = 1;
  for (VertexId v : w.sphere())
    if (!xmask[v]) is_sink[v] = 1;
  const int big = n + 1;  // so the min cut sits on the unit vertex arcs
  for (VertexId v = 0; v < n; ++v) {
    if (is_source[v]) f.add(s, 2 * v, big);
    if (is_sink[v]) f.add(2 * v + 1, t, big);
  }

  RayCertificate cert;
  while (f.augment(s, t)) ++cert.count;

  // Extract the paths by walking saturated forward arcs.
  std::vector<char> used(n, 0);
  for (VertexId v : bx) {
    if (used[v]) continue;
    // v_in -> v_out saturated means v carries a path.
    bool carries = false;
    for (int e = f.head[2 * v]; e != -1; e = f.nxt[e])
      if (f.to[e] == 2 * v + 1 && !f.cap[e]) carries = true;
    if (!carries) continue;
    std::vector<VertexId> path{v};
    used[v] = 1;
    VertexId cur = v;
    while (!is_sink[cur] || path.size() == 0) {
      if (is_sink[cur]) break;
      VertexId next = -1;
      for (int e = f.head[2 * cur + 1]; e != -1 && next < 0; e = f.nxt[e]) {
        int u = f.to[e];
        if (u == t || u == 2 * cur) continue;
        if (!f.cap[e] && u % 2 == 0 && !used[u / 2]) {
          // saturated arc cur_out -> u_in
          for (int e2 = f.head[u]; e2 != -1; e2 = f.nxt[e2])
            if (f.to[e2] == u + 1 && !f.cap[e2]) next = u / 2;
        }
      }
      if (next < 0) break;
      path.push_back(next);
      used[next] = 1;
      cur = next;
    }
    if (is_sink[cur]) cert.paths.push_back(std::move(path));
  }

  // Min vertex cut from residual reachability: v with s-side v_in and
  // non-s-side v_out.
  auto seen = f.reachable(s);
  for (VertexId v = 0; v < n; ++v)
    if (!xmask[v] && seen[2 * v] && !seen[2 * v + 1])
      cert.separator.push_back(v);
  return cert;
}

int disjoint_ray_count(const GraphWindow& w, const std::vector<VertexId>& X) {
  return disjoint_ray_certificate(w, X).count;
}

std::string dump_window(const GraphWindow& w) {
  std::ostringstream os;
  for (VertexId v = 0; v < w.size(); ++v) {
    os << w.key_of(v) << '\t' << w.dist_o(v) << '\t';
    const auto& ns = w.neighbors_of(v);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i) os << ',';
      os << w.key_of(ns[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string dump_dot(const GraphWindow& w) {
  std::ostringstream os;
  os << "graph window {\n";
  for (VertexId v = 0; v < w.size(); ++v) {
    os << "  \"" << w.key_of(v) << "\" [dist=" << w.dist_o(v);
    if (v == w.origin()) os << ", origin=true";
    if (w.on_sphere(v)) os << ", sphere=true";
    os << "];\n";
  }
  for (const Edge& e : w.edges())
    os << "  \"" << w.key_of(e.u) << "\" -- \"" << w.key_of(e.v) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cutlab
