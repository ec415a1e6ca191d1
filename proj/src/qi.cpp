#include "cutlab/qi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "cutlab/dl.hpp"

namespace cutlab {

QuasiIsometryMap identity_map() {
  auto id = [](const VertexKey& k) { return k; };
  return {"identity-regenerate", id, id};
}

QuasiIsometryMap dl_to_lamplighter_map() {
  return {"lamplighter-dl", &lamplighter_key_from_dl_key,
          &dl_key_from_lamplighter_key};
}

std::vector<VertexId> ball_ids(const GraphWindow& w, int r) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < w.size(); ++v)
    if (w.dist_o(v) <= r) out.push_back(v);
  return out;
}

namespace {

long long ipow_sat(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1ll << 62) / std::max(1ll, base)) return 1ll << 62;
    r *= base;
  }
  return r;
}

std::vector<VertexId> map_ids(const QuasiIsometryMap& map,
                              const GraphWindow& from, const GraphWindow& to,
                              const std::vector<VertexId>& xs) {
  std::vector<VertexId> out;
  out.reserve(xs.size());
  for (VertexId v : xs) {
    auto id = to.find(map.forward(from.key_of(v)));
    if (!id)
      throw MarginError("mapped vertex outside the target window: " +
                        from.key_of(v));
    out.push_back(*id);
  }
  return sorted_unique(std::move(out));
}

bool set_connected(const GraphWindow& w, const std::vector<VertexId>& s) {
  if (s.empty()) return true;
  auto mask = make_mask(w, s);
  std::deque<VertexId> q{s[0]};
  std::vector<char> seen(w.size(), 0);
  seen[s[0]] = 1;
  std::size_t reached = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    ++reached;
    for (VertexId u : w.neighbors_of(v))
      if (mask[u] && !seen[u]) {
        seen[u] = 1;
        q.push_back(u);
      }
  }
  return reached == s.size();
}

}  // namespace

BilipschitzReport verify_bilipschitz(const QuasiIsometryMap& map,
                                     const GraphWindow& wg,
                                     const GraphWindow& wh,
                                     const std::vector<VertexId>& sample) {
  BilipschitzReport rep;
  std::vector<VertexId> mapped;
  for (VertexId v : sample) {
    VertexKey img = map.forward(wg.key_of(v));
    if (map.inverse(img) != wg.key_of(v)) rep.round_trip_ok = false;
    auto id = wh.find(img);
    if (!id)
      throw MarginError("verify_bilipschitz: image outside target window");
    mapped.push_back(*id);
  }
  DistanceCache dg(wg), dh(wh);
  rep.m = 1;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      int a = dg.dist(sample[i], sample[j]);
      int b = dh.dist(mapped[i], mapped[j]);
      if (a > wg.exactness_threshold(sample[i], sample[j]) ||
          b > wh.exactness_threshold(mapped[i], mapped[j]))
        throw MarginError("verify_bilipschitz: pair distance not certified");
      if (a == 0 || b == 0)
        throw CheckFailure("verify_bilipschitz: map is not injective");
      int need = std::max((a + b - 1) / b, (b + a - 1) / a);
      rep.m = std::max(rep.m, need);
      ++rep.pairs_checked;
    }
  }
  return rep;
}

std::vector<VertexId> image_neighborhood(const QuasiIsometryMap& map,
                                         const GraphWindow& wg,
                                         const GraphWindow& wh,
                                         const std::vector<VertexId>& kappa,
                                         int m) {
  if (m < 1)
    throw std::invalid_argument("image_neighborhood: m must be >= 1");
  auto image = map_ids(map, wg, wh, kappa);
  auto grown = neighborhood(wh, image, m);
  if (!set_connected(wh, grown))
    throw CheckFailure("image neighborhood is not connected");
  if (!std::binary_search(grown.begin(), grown.end(), wh.origin()))
    throw CheckFailure("image neighborhood misses the target origin");
  return grown;
}

BoundaryGrowthReport boundary_growth_check(const QuasiIsometryMap& map,
                                           const GraphWindow& wg,
                                           const GraphWindow& wh,
                                           const std::vector<VertexId>& kappa,
                                           int m, int cutset_size) {
  BoundaryGrowthReport rep;
  auto kap = sorted_unique(kappa);
  auto bdry_g = external_boundary(wg, kap);
  rep.boundary_g = static_cast<int>(bdry_g.size());
  auto phi = image_neighborhood(map, wg, wh, kap, m);
  rep.boundary_h = static_cast<int>(external_boundary(wh, phi).size());
  long long d = std::max(wg.provider().degree_bound(),
                         wh.provider().degree_bound());
  rep.bound = ipow_sat(d, 2 * m) * rep.boundary_g;
  rep.boundary_ok = rep.boundary_h <= rep.bound;

  // preimage side: tau = inverse image of phi; tau \ kappa must sit inside
  // the m^2-neighborhood of the boundary of kappa
  std::vector<VertexId> tau;
  for (VertexId v : phi) {
    auto id = wg.find(map.inverse(wh.key_of(v)));
    if (!id)
      throw MarginError("boundary_growth_check: preimage outside window");
    tau.push_back(*id);
  }
  tau = sorted_unique(std::move(tau));
  std::vector<VertexId> extra;
  std::set_difference(tau.begin(), tau.end(), kap.begin(), kap.end(),
                      std::back_inserter(extra));
  rep.tau_minus_kappa = static_cast<int>(extra.size());
  auto dist = wg.bfs(bdry_g);
  rep.tau_inside_m2_neighborhood = true;
  for (VertexId v : extra)
    if (dist[v] < 0 || dist[v] > m * m) rep.tau_inside_m2_neighborhood = false;
  rep.tau_bound = ipow_sat(d, m * m) * cutset_size;
  rep.tau_ok =
      rep.tau_minus_kappa <= rep.tau_bound && rep.tau_inside_m2_neighborhood;
  return rep;
}

FiberReport fiber_experiment(const QuasiIsometryMap& map, const GraphWindow& wg,
                             const GraphWindow& wh, int n, int m,
                             const EnumerationLimits& lim) {
  auto cutsets = enumerate_min_cutsets(wg, n, lim);
  FiberReport rep;
  rep.kappa_count = static_cast<long long>(cutsets.size());
  std::map<std::string, int> fibers;
  for (const auto& c : cutsets) {
    auto phi = image_neighborhood(map, wg, wh, c.component, m);
    std::string key;
    for (VertexId v : phi) {
      key += wh.key_of(v);
      key += ';';
    }
    ++fibers[key];
  }
  for (auto& [k, count] : fibers) {
    rep.rows.push_back({k, count});
    rep.max_fiber = std::max(rep.max_fiber, count);
  }
  rep.injective = rep.max_fiber <= 1;
  return rep;
}

TransferReport transfer_noncloseness(const QuasiIsometryMap& map,
                                     const GraphWindow& wg,
                                     const GraphWindow& wh,
                                     const std::vector<VertexId>& g_k, int k,
                                     int m,
                                     EdgeDistanceConvention convention) {
  TransferReport rep;
  rep.k = k;
  rep.m = m;
  auto gk = sorted_unique(g_k);
  if (!set_connected(wg, gk))
    throw std::invalid_argument("transfer: G_k must be connected");
  auto delta = edge_boundary(wg, gk);
  rep.input_closeness_lb = closeness_floor(wg, delta, convention);
  rep.precondition_ok = rep.input_closeness_lb > k;

  auto image = map_ids(map, wg, wh, gk);
  auto grown = neighborhood(wh, image, m);
  if (!set_connected(wh, grown))
    throw CheckFailure("transfer: m-neighborhood of the image not connected");
  rep.transferred = neighborhood_cutset(wh, grown, 0);
  rep.transfer_closeness_lb =
      closeness_floor(wh, rep.transferred.edges, convention);
  rep.claimed_bound = double(k) / m - 2.0 * m;
  rep.vacuous = rep.claimed_bound <= 0;
  rep.bound_ok = rep.vacuous || rep.transfer_closeness_lb > rep.claimed_bound;
  return rep;
}

}  // namespace cutlab
