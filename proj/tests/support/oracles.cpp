#include "support/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace cutlab::oracle {

std::vector<Cutset> brute_min_cutsets(const GraphWindow& w, int n_max,
                                      int size_cap) {
  std::vector<char> allowed(w.size(), 0);
  for (VertexId v = 0; v < w.size(); ++v)
    allowed[v] = w.dist_o(v) <= w.radius() - 2;

  std::set<std::vector<VertexId>> seen;
  std::deque<std::vector<VertexId>> queue;
  std::vector<Cutset> out;
  std::vector<VertexId> start{w.origin()};
  seen.insert(start);
  queue.push_back(start);

  auto consider = [&](const std::vector<VertexId>& k) {
    auto delta = edge_boundary(w, k);
    if (static_cast<int>(delta.size()) > n_max) return;
    auto comps = components_after_removal(w, k, {});
    for (const auto& c : comps)
      if (!c.touches_sphere) return;
    Cutset c;
    c.edges = std::move(delta);
    c.component = k;
    out.push_back(std::move(c));
  };

  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    consider(k);
    if (static_cast<int>(k.size()) >= size_cap) continue;
    for (VertexId v : k) {
      for (VertexId u : w.neighbors_of(v)) {
        if (!allowed[u]) continue;
        if (std::binary_search(k.begin(), k.end(), u)) continue;
        auto grown = k;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), u), u);
        if (seen.insert(grown).second) queue.push_back(grown);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long brute_connected_subsets(const GraphWindow& w, int n) {
  if (n < 1) return 0;
  std::set<std::vector<VertexId>> layer{{w.origin()}};
  for (int size = 1; size < n; ++size) {
    std::set<std::vector<VertexId>> next;
    for (const auto& k : layer) {
      for (VertexId v : k) {
        for (VertexId u : w.neighbors_of(v)) {
          if (std::binary_search(k.begin(), k.end(), u)) continue;
          auto grown = k;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), u), u);
          next.insert(std::move(grown));
        }
      }
    }
    layer = std::move(next);
  }
  return static_cast<long long>(layer.size());
}

std::vector<long long> ball_sizes(const GraphProvider& provider, int n) {
  std::unordered_map<VertexKey, int> dist;
  std::deque<VertexKey> q;
  dist[provider.origin()] = 0;
  q.push_back(provider.origin());
  std::vector<long long> balls(n + 1, 0);
  balls[0] = 1;
  while (!q.empty()) {
    VertexKey v = q.front();
    q.pop_front();
    int dv = dist[v];
    if (dv == n) continue;
    for (const auto& u : provider.neighbors(v)) {
      if (dist.count(u)) continue;
      dist[u] = dv + 1;
      ++balls[dv + 1];
      q.push_back(u);
    }
  }
  for (int i = 1; i <= n; ++i) balls[i] += balls[i - 1];
  return balls;
}

std::map<VertexKey, std::vector<int>> shortlex_words(const GeneratingSet& gens,
                                                     int max_len) {
  const Group& g = gens.group();
  std::map<VertexKey, std::vector<int>> best;
  best[g.serialize(g.identity())] = {};
  // generate words in shortlex order: length first, then lexicographic
  std::vector<std::pair<std::vector<int>, GroupElement>> layer{
      {{}, g.identity()}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, GroupElement>> next;
    for (const auto& [word, elem] : layer) {
      for (int gi = 0; gi < gens.size(); ++gi) {
        auto w2 = word;
        w2.push_back(gi);
        GroupElement e2 = g.multiply(elem, gens.gen(gi));
        VertexKey key = g.serialize(e2);
        if (!best.count(key)) best[key] = w2;
        next.emplace_back(std::move(w2), std::move(e2));
      }
    }
    layer = std::move(next);
  }
  return best;
}

long long z2_interior_faces(const GraphWindow& w) {
  const auto* cayley = dynamic_cast<const CayleyGraphProvider*>(&w.provider());
  if (!cayley) throw std::logic_error("needs a Z^2 window");
  const Group& g = cayley->group();
  long long faces = 0;
  for (VertexId v = 0; v < w.size(); ++v) {
    GroupElement e = g.parse(w.key_of(v));
    GroupElement right = e, up = e, diag = e;
    right.data[0] += 1;
    up.data[1] += 1;
    diag.data[0] += 1;
    diag.data[1] += 1;
    if (w.find(g.serialize(right)) && w.find(g.serialize(up)) &&
        w.find(g.serialize(diag)))
      ++faces;
  }
  return faces;
}

}  // namespace cutlab::oracle
