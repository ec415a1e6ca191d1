#include "cutlab/treegrowth.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "cutlab/qi.hpp"

namespace cutlab {

SpanningTreeWindow build_shortlex_tree(const GraphWindow& w) {
  const auto* cayley = dynamic_cast<const CayleyGraphProvider*>(&w.provider());
  if (!cayley)
    throw ConfigError("build_shortlex_tree requires a Cayley-graph window");
  const Group& g = cayley->group();
  const GeneratingSet& gens = cayley->generating_set();

  SpanningTreeWindow t;
  t.window = &w;
  t.parent.assign(w.size(), -1);
  t.word.assign(w.size(), {});
  t.depth.assign(w.size(), -1);
  t.children.assign(w.size(), {});

  // Ordered breadth-first search: within a layer vertices are processed in
  // the shortlex order of their words, and children are attached in
  // generator order, so first discovery yields the shortlex-minimal word.
  std::deque<VertexId> q{w.origin()};
  t.depth[w.origin()] = 0;
  std::vector<char> seen(w.size(), 0);
  seen[w.origin()] = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    if (t.depth[v] == w.radius()) continue;
    GroupElement ev = g.parse(w.key_of(v));
    for (int gi = 0; gi < gens.size(); ++gi) {
      auto u = w.find(g.serialize(g.multiply(ev, gens.gen(gi))));
      if (!u || seen[*u]) continue;
      seen[*u] = 1;
      t.parent[*u] = v;
      t.depth[*u] = t.depth[v] + 1;
      t.word[*u] = t.word[v];
      t.word[*u].push_back(gi);
      t.children[v].push_back(*u);
      q.push_back(*u);
    }
  }
  for (VertexId v = 0; v < w.size(); ++v)
    if (t.depth[v] < 0)
      throw CheckFailure("shortlex tree did not span the window");
  return t;
}

std::vector<long long> growth_sequence(const GraphWindow& w, int n_max) {
  if (n_max > w.radius())
    throw MarginError("growth_sequence: n_max exceeds the window radius");
  std::vector<long long> balls(n_max + 1, 0);
  for (VertexId v = 0; v < w.size(); ++v)
    if (w.dist_o(v) <= n_max) ++balls[w.dist_o(v)];
  for (int n = 1; n <= n_max; ++n) balls[n] += balls[n - 1];
  return balls;
}

std::vector<long long> tree_growth_sequence(const SpanningTreeWindow& t,
                                            int n_max) {
  if (n_max > t.window->radius())
    throw MarginError("tree_growth_sequence: n_max exceeds the window radius");
  std::vector<long long> balls(n_max + 1, 0);
  for (int d : t.depth)
    if (d <= n_max) ++balls[d];
  for (int n = 1; n <= n_max; ++n) balls[n] += balls[n - 1];
  return balls;
}

namespace {

struct EmbeddingSearch {
  const SpanningTreeWindow& t;
  int depth_limit;  // relative depth of the truncated subtree
  VertexId x;
  std::unordered_map<std::uint64_t, char> memo;  // (v,w) -> feasible

  int rel_depth(VertexId v) const { return t.depth[v] - t.depth[x]; }

  // May the truncated subtree below v embed below w (depth-preserving)?
  bool feasible(VertexId v, VertexId w) {
    std::uint64_t key =
        (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = true;
    if (rel_depth(v) < depth_limit) {
      const auto& cv = t.children[v];
      const auto& cw = t.children[w];
      if (cv.size() > cw.size()) {
        ok = false;
      } else {
        // bipartite matching (Kuhn) over feasible child pairs
        std::vector<int> match(cw.size(), -1);
        std::function<bool(int, std::vector<char>&)> try_assign =
            [&](int i, std::vector<char>& used) {
              for (std::size_t j = 0; j < cw.size(); ++j) {
                if (used[j] || !feasible(cv[i], cw[j])) continue;
                used[j] = 1;
                if (match[j] < 0 || try_assign(match[j], used)) {
                  match[j] = i;
                  return true;
                }
              }
              return false;
            };
        for (std::size_t i = 0; i < cv.size() && ok; ++i) {
          std::vector<char> used(cw.size(), 0);
          if (!try_assign(static_cast<int>(i), used)) ok = false;
        }
      }
    }
    memo[key] = ok;
    return ok;
  }

  void build_witness(VertexId v, VertexId w, EmbeddingWitness& out) {
    out.map.emplace_back(v, w);
    if (rel_depth(v) >= depth_limit) return;
    const auto& cv = t.children[v];
    const auto& cw = t.children[w];
    std::vector<int> match(cw.size(), -1);
    std::function<bool(int, std::vector<char>&)> try_assign =
        [&](int i, std::vector<char>& used) {
          for (std::size_t j = 0; j < cw.size(); ++j) {
            if (used[j] || !feasible(cv[i], cw[j])) continue;
            used[j] = 1;
            if (match[j] < 0 || try_assign(match[j], used)) {
              match[j] = i;
              return true;
            }
          }
          return false;
        };
    for (std::size_t i = 0; i < cv.size(); ++i) {
      std::vector<char> used(cw.size(), 0);
      try_assign(static_cast<int>(i), used);
    }
    for (std::size_t j = 0; j < cw.size(); ++j)
      if (match[j] >= 0) build_witness(cv[match[j]], cw[j], out);
  }
};

}  // namespace

std::optional<EmbeddingWitness> check_subperiodic(const SpanningTreeWindow& t,
                                                  VertexId x, int depth) {
  const GraphWindow& w = *t.window;
  if (t.depth[x] + depth > w.radius())
    throw MarginError("check_subperiodic: truncated subtree leaves the window");
  EmbeddingSearch search{t, depth, x, {}};
  if (!search.feasible(x, w.origin())) return std::nullopt;
  EmbeddingWitness witness;
  search.build_witness(x, w.origin(), witness);
  return witness;
}

BranchWeightTable finite_branch_weights(const SpanningTreeWindow& t) {
  const GraphWindow& w = *t.window;
  int n = w.size();
  BranchWeightTable out;
  out.weight.assign(n, 0);
  out.uncertain.assign(n, 0);

  // post-order accumulation of subtree size and sphere contact
  std::vector<long long> size(n, 1);
  std::vector<char> touches(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  std::deque<VertexId> q{w.origin()};
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    order.push_back(v);
    for (VertexId c : t.children[v]) q.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    if (w.on_sphere(v)) touches[v] = 1;
    for (VertexId c : t.children[v]) {
      size[v] += size[c];
      if (touches[c]) touches[v] = 1;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId c : t.children[v]) {
      if (touches[c])
        out.uncertain[v] = 1;  // classified infinite through the proxy
      else
        out.weight[v] += size[c];
    }
  }

  // strict records by distance from the root, kept in (depth, id) order
  long long running = -1;
  std::vector<std::pair<int, VertexId>> by_depth;
  for (VertexId v = 0; v < n; ++v) by_depth.emplace_back(t.depth[v], v);
  std::sort(by_depth.begin(), by_depth.end());
  std::size_t i = 0;
  while (i < by_depth.size()) {
    std::size_t j = i;
    long long layer_max = -1;
    while (j < by_depth.size() && by_depth[j].first == by_depth[i].first) {
      VertexId v = by_depth[j].second;
      if (out.weight[v] > running) out.record_set.push_back(v);
      layer_max = std::max(layer_max, out.weight[v]);
      ++j;
    }
    running = std::max(running, layer_max);
    i = j;
  }
  return out;
}

FinitenessReport finiteness_experiment(
    std::shared_ptr<const GraphProvider> provider, int n,
    const std::vector<int>& radii, const EnumerationLimits& lim,
    std::size_t vertex_cap) {
  FinitenessReport rep;
  std::optional<GraphWindow> largest;
  for (int r : radii) {
    GraphWindow w = build_window(provider, r, vertex_cap);
    rep.rows.push_back(
        {r, static_cast<long long>(enumerate_min_cutsets(w, n, lim).size())});
    if (!largest || r > largest->radius()) largest.emplace(std::move(w));
  }
  if (rep.rows.size() >= 2) {
    auto last = rep.rows.back().count;
    if (rep.rows[rep.rows.size() - 2].count == last) {
      int from = rep.rows.back().radius;
      for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->count == last;
           ++it)
        from = it->radius;
      rep.stabilized_at = from;
    }
  }
  if (largest) {
    for (int r = 1; r + 1 < largest->radius(); ++r) {
      if (disjoint_ray_count(*largest, ball_ids(*largest, r - 1)) >=
          n + 1) {
        rep.core_ball_radius = r;
        break;
      }
    }
  }
  return rep;
}

}  // namespace cutlab
