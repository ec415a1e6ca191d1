#include <random>
#include <set>

#include "cutlab/cutsets.hpp"
#include "cutlab/dl.hpp"
#include "cutlab/providers.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cutlab;

namespace {

GraphWindow z2_window(int r) {
  return build_window(
      std::make_shared<CayleyGraphProvider>(zd_standard_gens(2), "std"), r);
}

GraphWindow hex_window(int r) {
  return build_window(std::make_shared<HexLatticeProvider>(), r);
}

int max_component(const std::vector<Cutset>& cs) {
  std::size_t m = 0;
  for (const auto& c : cs) m = std::max(m, c.component.size());
  return static_cast<int>(m);
}

}  // namespace

TEST_CASE("square lattice minimal cutset counts") {
  auto w = z2_window(10);
  auto cutsets = enumerate_min_cutsets_up_to(w, 8);
  std::vector<long long> count(9, 0);
  for (const auto& c : cutsets) ++count[c.size()];
  CHECK(count[4] == 1);  // the four edges at the origin
  CHECK(count[5] == 0);  // lattice perimeters are even
  CHECK(count[6] == 4);  // the four dominoes containing the origin
  CHECK(count[7] == 0);
  for (const auto& c : cutsets) CHECK(c.exact);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  struct Case {
    GraphWindow w;
    int n_max;
  };
  std::vector<Case> cases;
  cases.push_back({z2_window(8), 8});
  cases.push_back({hex_window(8), 8});
  cases.push_back({build_window(std::make_shared<CayleyGraphProvider>(
                                    lamplighter_walk_gens(), "walk"),
                                8),
                   8});
  cases.push_back(
      {build_window(std::make_shared<DLGraphProvider>(2, 2), 7), 7});

  for (auto& [w, n_max] : cases) {
    auto fast = enumerate_min_cutsets_up_to(w, n_max);
    auto brute = oracle::brute_min_cutsets(w, n_max, max_component(fast) + 2);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].edges == brute[i].edges);
      CHECK(fast[i].component == brute[i].component);
    }
  }
}

TEST_CASE("Z intervals: size-2 cutsets never stabilize") {
  auto p = std::make_shared<CayleyGraphProvider>(zd_standard_gens(1), "std");
  for (int r = 3; r <= 8; ++r) {
    auto w = build_window(p, r);
    auto cs = enumerate_min_cutsets(w, 2);
    // every interval [a,b] containing 0 inside B_{R-2}
    long long expected = static_cast<long long>(r - 1) * (r - 1);
    CHECK(static_cast<long long>(cs.size()) == expected);
  }
}

TEST_CASE("certificate soundness of enumerated cutsets") {
  auto w = z2_window(8);
  auto cutsets = enumerate_min_cutsets_up_to(w, 8);
  int checked = 0;
  for (const auto& c : cutsets) {
    ++checked;
    // removing the edges separates o from the sphere
    auto comps = components_after_removal(w, {}, c.edges);
    for (const auto& comp : comps) {
      bool has_o = std::binary_search(comp.vertices.begin(),
                                      comp.vertices.end(), w.origin());
      if (has_o) {
        CHECK(!comp.touches_sphere);
        CHECK(comp.vertices == c.component);
      } else {
        CHECK(comp.touches_sphere);
      }
    }
    // dropping any single edge reconnects o to the sphere
    for (std::size_t drop = 0; drop < c.edges.size(); ++drop) {
      auto fewer = c.edges;
      fewer.erase(fewer.begin() + drop);
      auto sub = components_after_removal(w, {}, fewer);
      for (const auto& comp : sub) {
        bool has_o = std::binary_search(comp.vertices.begin(),
                                        comp.vertices.end(), w.origin());
        if (has_o) CHECK(comp.touches_sphere);
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("is_minimal_cutset") {
  auto w = z2_window(8);
  auto four = edge_boundary(w, {w.origin()});
  CHECK(is_minimal_cutset(w, four).minimal);

  auto three = four;
  three.pop_back();
  auto cert = is_minimal_cutset(w, three);
  CHECK(!cert.minimal);
  CHECK(cert.reason.find("separate") != std::string::npos);

  // a superset with a far isolated vertex is not minimal
  VertexId far = w.id_of("3,3");
  auto extra = edge_boundary(w, {far});
  std::vector<VertexId> domino{w.id_of("0,0"), w.id_of("1,0")};
  auto y = edge_boundary(w, domino);
  y.insert(y.end(), extra.begin(), extra.end());
  std::sort(y.begin(), y.end());
  CHECK(!is_minimal_cutset(w, y).minimal);
}

TEST_CASE("closeness basics") {
  auto w = z2_window(8);
  DistanceCache cache(w);

  auto one_edge = std::vector<Edge>{w.edges().front()};
  auto rep = closeness(w, one_edge, EdgeDistanceConvention::kSubdivision);
  CHECK(rep.degenerate);
  CHECK(rep.value == 0);

  auto four = edge_boundary(w, {w.origin()});
  auto sub = closeness(w, four, EdgeDistanceConvention::kSubdivision, &cache);
  CHECK(sub.value == 1);  // all pairs share the origin
  auto end = closeness(w, four, EdgeDistanceConvention::kEndpoint, &cache);
  CHECK(end.value == 0);
  auto brute =
      closeness_bruteforce(w, four, EdgeDistanceConvention::kSubdivision);
  CHECK(brute.value == 1);

  // witness bipartition attains the value
  std::vector<VertexId> domino{w.id_of("0,0"), w.id_of("1,0")};
  auto y = edge_boundary(w, domino);
  auto r2 = closeness(w, y, EdgeDistanceConvention::kSubdivision, &cache);
  CHECK(r2.value == 2);
  CHECK(!r2.side_a.empty());
  CHECK(!r2.side_b.empty());
}

TEST_CASE("closeness equals the bipartition oracle on random cutsets") {
  auto wz = z2_window(9);
  auto wh = hex_window(9);
  std::mt19937_64 rng(29);
  for (auto* wp : {&wz, &wh}) {
    DistanceCache cache(*wp);
    auto pool = enumerate_min_cutsets_up_to(*wp, 8);
    REQUIRE(!pool.empty());
    int done = 0;
    for (int trial = 0; done < 40 && trial < 500; ++trial) {
      const auto& c = pool[rng() % pool.size()];
      if (c.edges.size() < 2 || c.edges.size() > 12) continue;
      ++done;
      for (auto conv : {EdgeDistanceConvention::kEndpoint,
                        EdgeDistanceConvention::kSubdivision}) {
        auto fast = closeness(*wp, c.edges, conv, &cache);
        auto slow = closeness_bruteforce(*wp, c.edges, conv, &cache);
        CHECK(fast.value == slow.value);
        // the returned split attains the value
        int cross = -1;
        for (int i : fast.side_a)
          for (int j : fast.side_b) {
            auto pi = c.edges[i];
            auto pj = c.edges[j];
            int best = -1;
            for (VertexId u : {pi.u, pi.v})
              for (VertexId v : {pj.u, pj.v}) {
                int d = cache.dist(u, v);
                if (best < 0 || d < best) best = d;
              }
            if (conv == EdgeDistanceConvention::kSubdivision) ++best;
            if (cross < 0 || best < cross) cross = best;
          }
        CHECK(cross == fast.value);
      }
    }
    CHECK(done == 40);
  }
}

TEST_CASE("closeness margin rejection near the sphere") {
  // three spread-out edges whose pairwise distances cannot be certified in a
  // radius-4 window
  auto w = z2_window(4);
  std::vector<Edge> y{
      make_edge(w.id_of("2,0"), w.id_of("3,0")),
      make_edge(w.id_of("-3,0"), w.id_of("-2,0")),
      make_edge(w.id_of("0,2"), w.id_of("0,3")),
  };
  CHECK_THROWS_AS(closeness(w, y, EdgeDistanceConvention::kSubdivision),
                  MarginError);
  // the floor variant still returns a sound lower bound
  int lb = closeness_floor(w, y, EdgeDistanceConvention::kSubdivision);
  auto big = z2_window(10);
  std::vector<Edge> yb{
      make_edge(big.id_of("2,0"), big.id_of("3,0")),
      make_edge(big.id_of("-3,0"), big.id_of("-2,0")),
      make_edge(big.id_of("0,2"), big.id_of("0,3")),
  };
  auto exact = closeness(big, yb, EdgeDistanceConvention::kSubdivision);
  CHECK(lb <= exact.value);
}

TEST_CASE("sup closeness reproduces the square and hex values") {
  // running maxima are already attained by size 8 on both lattices
  auto rows_z = sup_closeness(z2_window(9), 8,
                              EdgeDistanceConvention::kSubdivision);
  CHECK(rows_z.back().running_max == 2);

  auto rows_h = sup_closeness(hex_window(9), 8,
                              EdgeDistanceConvention::kSubdivision);
  CHECK(rows_h.back().running_max == 3);

  // endpoint convention gives strictly smaller values
  auto rows_ze =
      sup_closeness(z2_window(9), 8, EdgeDistanceConvention::kEndpoint);
  CHECK(rows_ze.back().running_max == 1);
}

TEST_CASE("neighborhood cutsets") {
  auto w = z2_window(9);
  auto s1 = neighborhood_cutset(w, {w.origin()}, 1);
  CHECK(s1.edges.size() == 12);  // perimeter of the plus pentomino
  CHECK(s1.component.size() == 5);
  CHECK(is_minimal_cutset(w, s1.edges).minimal);

  // n = 0 on a set with minimal boundary returns that boundary
  std::vector<VertexId> domino{w.id_of("0,0"), w.id_of("1,0")};
  auto s0 = neighborhood_cutset(w, domino, 0);
  CHECK(s0.edges == edge_boundary(w, domino));

  // swallowing: a ring swallows its hole
  std::vector<VertexId> ring;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      if (x || y)
        ring.push_back(w.id_of(std::to_string(x) + "," + std::to_string(y)));
  ring.push_back(w.origin());
  auto ring_sorted = sorted_unique(ring);
  // grow the 3x3 block by nothing: block is already hole-free; instead drop
  // the center and check the hole is merged back in
  std::vector<VertexId> donut;
  for (VertexId v : ring_sorted)
    if (v != w.origin()) donut.push_back(v);
  // donut is connected but misses o; neighborhood_cutset requires o, so use
  // the full block through X = {o} grown twice
  auto s2 = neighborhood_cutset(w, {w.origin()}, 2);
  CHECK(is_minimal_cutset(w, s2.edges).minimal);
  auto lemma_lhs = closeness(w, s2.edges, EdgeDistanceConvention::kSubdivision);
  auto base = closeness(w, edge_boundary(w, {w.origin()}),
                        EdgeDistanceConvention::kSubdivision);
  CHECK(lemma_lhs.value >= base.value - 2 * 2);

  CHECK_THROWS_AS(neighborhood_cutset(w, {w.origin()}, 9), MarginError);
  CHECK_THROWS_AS(neighborhood_cutset(w, donut, 1), std::invalid_argument);
}

TEST_CASE("neighborhood cutset swallows finite components") {
  // on the hex lattice, growing the origin by 2 leaves pockets that must be
  // merged for minimality
  auto w = hex_window(10);
  for (int n = 1; n <= 3; ++n) {
    auto s = neighborhood_cutset(w, {w.origin()}, n);
    CHECK(is_minimal_cutset(w, s.edges).minimal);
    auto grown = neighborhood(w, {w.origin()}, n);
    CHECK(s.component.size() >= grown.size());
  }
}

TEST_CASE("connected subset counts and walk certificates") {
  auto w = z2_window(11);
  CHECK(count_connected_subsets(w, 1) == 1);
  CHECK(count_connected_subsets(w, 2) == 4);
  CHECK(count_connected_subsets(w, 3) == 18);

  for (int n = 1; n <= 6; ++n)
    CHECK(count_connected_subsets(w, n) ==
          oracle::brute_connected_subsets(w, n));

  // round trip + length + alphabet bound on every size-5 subset
  long long count = count_connected_subsets(
      w, 5, [&](const std::vector<VertexId>& subset) {
        auto walk = encode_subset_walk(w, subset);
        CHECK(static_cast<int>(walk.size()) == 2 * 4);
        for (int step : walk) CHECK(step < 4);
        CHECK(decode_subset_walk(w, walk) == subset);
      });
  CHECK(count == 5 * 63);  // 5 translates of each fixed pentomino shape

  // the lemma bound
  for (int n = 1; n <= 6; ++n) {
    long long bound = 1;
    for (int i = 0; i < 2 * n; ++i) bound *= 4;
    CHECK(count_connected_subsets(w, n) <= bound);
  }
}

TEST_CASE("connected subsets on the hex lattice against the oracle") {
  auto w = hex_window(9);
  for (int n = 1; n <= 7; ++n)
    CHECK(count_connected_subsets(w, n) ==
          oracle::brute_connected_subsets(w, n));
}

TEST_CASE("count table and growth-constant fit") {
  auto w = z2_window(10);
  auto t = count_min_cutsets(w, 8);
  CHECK(t.count[4] == 1);
  CHECK(t.count[6] == 4);
  CHECK(t.alpha > 1.0);
  CHECK(t.fit_lo == 4);
  CHECK(t.fit_hi == 8);
}

TEST_CASE("set distance certification") {
  auto w = z2_window(8);
  auto d = set_distance(w, {w.id_of("0,0"), w.id_of("1,0")},
                        {w.id_of("3,0"), w.id_of("0,3")});
  CHECK(d.value == 2);
  CHECK(d.exact);
}
