#include "cutlab/cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace cutlab {

int BinaryEdgeVector::popcount() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

int BinaryEdgeVector::lowest_set() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
  return -1;
}

std::vector<int> BinaryEdgeVector::set_bits() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t BinaryEdgeVector::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : bits_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

BinaryEdgeVector edge_vector_of(const GraphWindow& w,
                                const std::vector<Edge>& edges) {
  BinaryEdgeVector v(w.edge_count());
  for (const Edge& e : edges) v.set(w.edge_id_checked(e.u, e.v));
  return v;
}

std::vector<Edge> edges_of_vector(const GraphWindow& w,
                                  const BinaryEdgeVector& v) {
  std::vector<Edge> out;
  for (int eid : v.set_bits()) out.push_back(w.edge(eid));
  return out;
}

std::vector<VertexId> odd_vertices(const GraphWindow& w,
                                   const BinaryEdgeVector& v) {
  std::vector<int> deg(w.size(), 0);
  for (int eid : v.set_bits()) {
    ++deg[w.edge(eid).u];
    ++deg[w.edge(eid).v];
  }
  std::vector<VertexId> out;
  for (VertexId x = 0; x < w.size(); ++x)
    if (deg[x] % 2) out.push_back(x);
  return out;
}

namespace {

bool vector_connected(const GraphWindow& w, const BinaryEdgeVector& v) {
  auto bits = v.set_bits();
  if (bits.empty()) return true;
  std::unordered_set<VertexId> verts;
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (int eid : bits) {
    const Edge& e = w.edge(eid);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    verts.insert(e.u);
    verts.insert(e.v);
  }
  std::deque<VertexId> q{w.edge(bits[0]).u};
  std::unordered_set<VertexId> seen{w.edge(bits[0]).u};
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : adj[x])
      if (seen.insert(y).second) q.push_back(y);
  }
  return seen.size() == verts.size();
}

}  // namespace

CycleBasisSet relator_cycles(const GraphWindow& w,
                             const std::vector<std::vector<int>>& relators) {
  const auto* cayley = dynamic_cast<const CayleyGraphProvider*>(&w.provider());
  if (!cayley)
    throw ConfigError("relator_cycles requires a Cayley-graph window");
  const Group& g = cayley->group();
  const GeneratingSet& gens = cayley->generating_set();

  for (const auto& r : relators) {
    if (!g.is_identity(word_to_element(gens, r)))
      throw CheckFailure("relator does not evaluate to the identity");
  }

  CycleBasisSet out;
  for (const auto& r : relators)
    out.max_length = std::max(out.max_length, static_cast<int>(r.size()));

  std::unordered_set<std::size_t> seen_hashes;
  std::vector<BinaryEdgeVector> seen_vectors;
  for (VertexId base = 0; base < w.size(); ++base) {
    GroupElement cur = g.parse(w.key_of(base));
    for (const auto& r : relators) {
      BinaryEdgeVector vec(w.edge_count());
      GroupElement e = cur;
      VertexId at = base;
      bool inside = true;
      for (int gi : r) {
        e = g.multiply(e, gens.gen(gi));
        auto next = w.find(g.serialize(e));
        if (!next) {
          inside = false;
          break;
        }
        vec.toggle(w.edge_id_checked(at, *next));
        at = *next;
      }
      if (!inside || !vec.any()) continue;
      std::size_t h = vec.hash();
      if (seen_hashes.count(h)) {
        bool dup = false;
        for (const auto& sv : seen_vectors)
          if (sv == vec) dup = true;
        if (dup) continue;
      }
      if (!odd_vertices(w, vec).empty())
        throw CheckFailure("relator loop has odd-degree vertices");
      if (!vector_connected(w, vec))
        throw CheckFailure("relator loop is not connected");
      seen_hashes.insert(h);
      seen_vectors.push_back(vec);
      out.cycles.push_back(std::move(vec));
    }
  }
  return out;
}

std::optional<std::vector<int>> decompose(const GraphWindow& w,
                                          const BinaryEdgeVector& target,
                                          const CycleBasisSet& basis,
                                          bool margin_check) {
  if (!odd_vertices(w, target).empty())
    throw std::invalid_argument("decompose: target has odd-degree vertices");
  if (margin_check) {
    for (int eid : target.set_bits()) {
      const Edge& e = w.edge(eid);
      if (w.dist_o(e.u) + basis.max_length > w.radius() ||
          w.dist_o(e.v) + basis.max_length > w.radius())
        throw MarginError("decompose: target too close to the sphere");
    }
  }

  // Row-reduced GF(2) basis with pivot = lowest edge id; each stored row
  // carries the subset of original cycles that sums to it.
  struct Row {
    BinaryEdgeVector vec;
    std::vector<std::uint64_t> combo;
  };
  int m = static_cast<int>(basis.cycles.size());
  int combo_words = (m + 63) / 64;
  std::vector<Row> rows;  // kept sorted by pivot implicitly via map
  std::unordered_map<int, int> pivot_row;

  auto reduce = [&](BinaryEdgeVector& v, std::vector<std::uint64_t>& combo) {
    for (;;) {
      int p = v.lowest_set();
      if (p < 0) return;
      auto it = pivot_row.find(p);
      if (it == pivot_row.end()) return;
      v.xor_with(rows[it->second].vec);
      for (int i = 0; i < combo_words; ++i)
        combo[i] ^= rows[it->second].combo[i];
    }
  };

  for (int ci = 0; ci < m; ++ci) {
    BinaryEdgeVector v = basis.cycles[ci];
    std::vector<std::uint64_t> combo(combo_words, 0);
    combo[ci >> 6] |= 1ull << (ci & 63);
    reduce(v, combo);
    int p = v.lowest_set();
    if (p < 0) continue;
    pivot_row[p] = static_cast<int>(rows.size());
    rows.push_back({std::move(v), std::move(combo)});
  }

  BinaryEdgeVector v = target;
  std::vector<std::uint64_t> combo(combo_words, 0);
  reduce(v, combo);
  if (v.any()) return std::nullopt;
  std::vector<int> chosen;
  for (int i = 0; i < m; ++i)
    if ((combo[i >> 6] >> (i & 63)) & 1ull) chosen.push_back(i);
  return chosen;
}

namespace {

// Shortest x->y path avoiding the given edges, as an edge vector. The path
// search stays inside B_{max_dist} so the later decomposition keeps its
// margin from the sphere.
std::optional<BinaryEdgeVector> avoiding_path(const GraphWindow& w, VertexId x,
                                              VertexId y,
                                              const BinaryEdgeVector& avoid,
                                              int max_dist) {
  std::vector<int> prev(w.size(), -2);
  std::deque<VertexId> q{x};
  prev[x] = -1;
  while (!q.empty() && prev[y] == -2) {
    VertexId v = q.front();
    q.pop_front();
    for (VertexId u : w.neighbors_of(v)) {
      if (prev[u] != -2) continue;
      if (w.dist_o(u) > max_dist) continue;
      if (avoid.test(w.edge_id_checked(u, v))) continue;
      prev[u] = v;
      q.push_back(u);
    }
  }
  if (prev[y] == -2) return std::nullopt;
  BinaryEdgeVector path(w.edge_count());
  for (VertexId v = y; v != x; v = prev[v])
    path.toggle(w.edge_id_checked(v, prev[v]));
  return path;
}

}  // namespace

CrossingWitness crossing_cycle_witness(const GraphWindow& w,
                                       const std::vector<Edge>& cutset,
                                       const std::vector<int>& part1_indices,
                                       VertexId x, VertexId y,
                                       const CycleBasisSet& basis) {
  if (x == y) throw std::invalid_argument("crossing witness: x == y");
  std::vector<char> in_part1(cutset.size(), 0);
  for (int i : part1_indices) in_part1.at(i) = 1;
  BinaryEdgeVector pi1(w.edge_count()), pi2(w.edge_count());
  for (std::size_t i = 0; i < cutset.size(); ++i)
    (in_part1[i] ? pi1 : pi2).set(w.edge_id_checked(cutset[i].u, cutset[i].v));
  if (!pi1.any() || !pi2.any())
    throw std::invalid_argument("crossing witness: bipartition is trivial");

  int max_dist = w.radius() - basis.max_length;
  auto p1 = avoiding_path(w, x, y, pi2, max_dist);
  auto p2 = avoiding_path(w, x, y, pi1, max_dist);
  if (!p1 || !p2)
    throw CheckFailure(
        "crossing witness: no part-avoiding path inside the margin region "
        "(cutset not minimal between x and y, wrong bipartition, or window "
        "too small)");

  BinaryEdgeVector diff = *p1;
  diff.xor_with(*p2);
  auto combo = decompose(w, diff, basis);
  if (!combo)
    throw MarginError(
        "crossing witness: path difference not decomposable in the window");

  CrossingWitness out;
  out.path1 = *p1;
  out.path2 = *p2;
  out.theta = *p1;
  for (int ci : *combo) {
    if (basis.cycles[ci].intersects(pi1)) {
      out.part1_cycles.push_back(ci);
      out.theta.xor_with(basis.cycles[ci]);
    }
  }
  for (int ci : out.part1_cycles) {
    if (basis.cycles[ci].intersects(pi2)) {
      out.cycle_index = ci;
      break;
    }
  }
  if (out.cycle_index < 0)
    throw CheckFailure(
        "crossing witness: no basis cycle meets both parts (violates the "
        "half-length bound)");
  return out;
}

PresentationBoundReport verify_presentation_bound(
    const GraphWindow& w, const std::vector<std::vector<int>>& relators,
    int n_max, EdgeDistanceConvention convention) {
  if (relators.empty())
    throw ConfigError(
        "verify_presentation_bound: no finite relator set for this window's "
        "group");
  PresentationBoundReport rep;
  for (const auto& r : relators)
    rep.t = std::max(rep.t, static_cast<int>(r.size()));
  rep.half_t = rep.t / 2;
  // validate the relators against the group
  (void)relator_cycles(w, relators);

  rep.table = sup_closeness(w, n_max, convention);
  rep.max_closeness = rep.table.back().running_max;
  rep.ok = true;
  for (const auto& row : rep.table) {
    if (row.max_closeness > rep.half_t) {
      rep.ok = false;
      rep.violator = row.witness;
      break;
    }
  }
  return rep;
}

}  // namespace cutlab
