#include <algorithm>
#include <random>

#include "cutlab/core.hpp"
#include "cutlab/groups.hpp"
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

VertexId at(const GraphWindow& w, const std::string& key) {
  return w.id_of(key);
}

}  // namespace

TEST_CASE("square lattice windows have the closed-form ball sizes") {
  auto w1 = z2_window(1);
  CHECK(w1.size() == 5);
  CHECK(w1.edge_count() == 4);
  CHECK(w1.sphere().size() == 4);

  auto w2 = z2_window(2);
  CHECK(w2.size() == 13);  // 2n^2 + 2n + 1

  for (int r = 1; r <= 6; ++r)
    CHECK(z2_window(r).size() == 2 * r * r + 2 * r + 1);
}

TEST_CASE("3-regular tree ball") {
  auto w = build_window(std::make_shared<RegularTreeProvider>(3), 3);
  CHECK(w.size() == 1 + 3 + 6 + 12);
  for (VertexId v = 0; v < w.size(); ++v)
    if (!w.on_sphere(v)) CHECK(w.degree(v) == 3);
}

TEST_CASE("window distances") {
  auto w = z2_window(10);
  auto d = w.pair_distance(at(w, "0,0"), at(w, "3,4"));
  CHECK(d.value == 7);
  CHECK(d.exact);
  CHECK(w.pair_distance(at(w, "2,2"), at(w, "2,2")).value == 0);

  auto h = hex_window(3);
  CHECK(h.pair_distance(at(h, "0,0"), at(h, "1,0")).value == 1);
}

TEST_CASE("window dump is deterministic and reconstructible") {
  auto a = dump_window(z2_window(3));
  auto b = dump_window(z2_window(3));
  CHECK(a == b);
  CHECK(a.find("0,0\t0\t") != std::string::npos);
  auto dot = dump_dot(z2_window(2));
  CHECK(dot.rfind("graph window {", 0) == 0);
}

TEST_CASE("neighborhood") {
  auto w = z2_window(6);
  std::vector<VertexId> o{w.origin()};
  CHECK(neighborhood(w, o, 0) == o);
  CHECK(neighborhood(w, o, 1).size() == 5);
  CHECK(neighborhood(w, o, 2).size() == 13);
  CHECK_THROWS_AS(neighborhood(w, o, 6), MarginError);
}

TEST_CASE("boundaries") {
  auto w = z2_window(6);
  std::vector<VertexId> o{w.origin()};
  CHECK(external_boundary(w, o).size() == 4);
  CHECK(edge_boundary(w, o).size() == 4);
  CHECK(external_boundary(w, {}).empty());
  CHECK(edge_boundary(w, {}).empty());

  auto b1 = neighborhood(w, o, 1);
  CHECK(external_boundary(w, b1).size() == 8);

  std::vector<VertexId> domino{at(w, "0,0"), at(w, "1,0")};
  CHECK(edge_boundary(w, domino).size() == 6);
}

TEST_CASE("boundary duality") {
  auto w = z2_window(6);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    // random connected blob around the origin
    std::vector<VertexId> x{w.origin()};
    std::vector<char> in = make_mask(w, x);
    for (int g = 0; g < 6; ++g) {
      VertexId v = x[rng() % x.size()];
      const auto& ns = w.neighbors_of(v);
      VertexId u = ns[rng() % ns.size()];
      if (!in[u] && w.dist_o(u) <= 4) {
        in[u] = 1;
        x.push_back(u);
      }
    }
    x = sorted_unique(std::move(x));
    auto eb = edge_boundary(w, x);
    std::vector<VertexId> outer, inner;
    for (const Edge& e : eb) {
      bool u_in = std::binary_search(x.begin(), x.end(), e.u);
      outer.push_back(u_in ? e.v : e.u);
      inner.push_back(u_in ? e.u : e.v);
    }
    CHECK(sorted_unique(std::move(outer)) == external_boundary(w, x));
    CHECK(sorted_unique(std::move(inner)) == inner_boundary(w, x));
  }
}

TEST_CASE("components after removal") {
  auto w = z2_window(6);

  auto whole = components_after_removal(w, {}, {});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].touches_sphere);

  auto four = edge_boundary(w, {w.origin()});
  auto comps = components_after_removal(w, {}, four);
  REQUIRE(comps.size() == 2);
  int origin_comp = comps[0].vertices[0] == w.origin() ? 0 : 1;
  CHECK(comps[origin_comp].vertices.size() == 1);
  CHECK(!comps[origin_comp].touches_sphere);
  CHECK(comps[1 - origin_comp].touches_sphere);

  std::vector<VertexId> domino{at(w, "0,0"), at(w, "1,0")};
  auto comps2 = components_after_removal(w, {}, edge_boundary(w, domino));
  REQUIRE(comps2.size() == 2);
  for (const auto& c : comps2)
    if (!c.touches_sphere) CHECK(c.vertices == domino);
}

TEST_CASE("bfs distance symmetry on sampled pairs") {
  auto w = hex_window(5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    VertexId u = rng() % w.size(), v = rng() % w.size();
    CHECK(w.bfs({u})[v] == w.bfs({v})[u]);
  }
}

TEST_CASE("window monotonicity") {
  auto small = z2_window(5);
  auto big = z2_window(8);
  // induced subgraph: every small edge is a big edge
  for (const Edge& e : small.edges()) {
    auto u = big.find(small.key_of(e.u));
    auto v = big.find(small.key_of(e.v));
    REQUIRE(u);
    REQUIRE(v);
    CHECK(big.has_edge(*u, *v));
  }
  // certified distances agree
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    VertexId u = rng() % small.size(), v = rng() % small.size();
    auto ds = small.pair_distance(u, v);
    if (!ds.exact) continue;
    auto db = big.pair_distance(big.id_of(small.key_of(u)),
                                big.id_of(small.key_of(v)));
    CHECK(ds.value == db.value);
  }
}

TEST_CASE("disjoint rays") {
  auto w = z2_window(5);
  CHECK(disjoint_ray_count(w, {w.origin()}) == 4);
  CHECK(disjoint_ray_count(w, neighborhood(w, {w.origin()}, 1)) == 8);

  auto t = build_window(std::make_shared<RegularTreeProvider>(3), 4);
  CHECK(disjoint_ray_count(t, {t.origin()}) == 3);
}

TEST_CASE("disjoint rays carry a Menger certificate") {
  auto w = z2_window(5);
  for (auto X : {std::vector<VertexId>{w.origin()},
                 neighborhood(w, {w.origin()}, 1)}) {
    auto cert = disjoint_ray_certificate(w, X);
    CHECK(static_cast<int>(cert.paths.size()) == cert.count);
    CHECK(static_cast<int>(cert.separator.size()) == cert.count);
    // paths pairwise vertex-disjoint
    std::vector<VertexId> all;
    for (const auto& p : cert.paths)
      all.insert(all.end(), p.begin(), p.end());
    auto dedup = sorted_unique(all);
    CHECK(dedup.size() == all.size());
    // separator really separates boundary(X) from the sphere
    auto removed = cert.separator;
    removed.insert(removed.end(), X.begin(), X.end());
    auto comps = components_after_removal(w, sorted_unique(removed), {});
    auto bx = external_boundary(w, X);
    for (const auto& c : comps) {
      bool has_bx = false;
      for (VertexId v : bx)
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), v))
          has_bx = true;
      if (has_bx) CHECK(!c.touches_sphere);
    }
  }
}

TEST_CASE("margin rules reject sets touching the sphere") {
  auto w = z2_window(4);
  std::vector<VertexId> far{at(w, "4,0")};
  CHECK_THROWS_AS(external_boundary(w, far), MarginError);
  CHECK_THROWS_AS(disjoint_ray_count(w, far), MarginError);
}

TEST_CASE("provider symmetry check trips on a broken provider") {
  struct Broken : GraphProvider {
    std::vector<VertexKey> neighbors(const VertexKey& v) const override {
      if (v == "a") return {"b"};
      if (v == "b") return {"c"};
      return {"b"};
    }
    int degree_bound() const override { return 2; }
    VertexKey origin() const override { return "a"; }
    std::string family() const override { return "broken"; }
    int boundary_connected_radius() const override { return 1; }
  };
  CHECK_THROWS_AS(build_window(std::make_shared<Broken>(), 2), CheckFailure);
}

TEST_CASE("vertex cap raises the resource error") {
  CHECK_THROWS_AS(
      build_window(
          std::make_shared<CayleyGraphProvider>(zd_standard_gens(2), "std"),
          10, 50),
      ResourceLimitError);
}

TEST_CASE("window build against the provider-only ball oracle") {
  for (int r = 1; r <= 5; ++r) {
    auto p = std::make_shared<HexLatticeProvider>();
    auto w = build_window(p, r);
    CHECK(w.size() == oracle::ball_sizes(*p, r).back());
  }
}
