#include <set>

#include "cutlab/treegrowth.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cutlab;

namespace {

GraphWindow cayley_window(GeneratingSet gens, int r,
                          const std::string& label = "") {
  return build_window(
      std::make_shared<CayleyGraphProvider>(std::move(gens), label), r);
}

}  // namespace

TEST_CASE("shortlex tree on Z is the line") {
  auto w = cayley_window(zd_standard_gens(1), 6);
  auto t = build_shortlex_tree(w);
  for (VertexId v = 0; v < w.size(); ++v) {
    CHECK(t.depth[v] == w.dist_o(v));
    // words are +^n or -^n
    std::set<int> letters(t.word[v].begin(), t.word[v].end());
    CHECK(letters.size() <= 1);
  }
}

TEST_CASE("shortlex tree on Z^2: pinned words and parents") {
  auto w = cayley_window(zd_standard_gens(2), 6);
  auto t = build_shortlex_tree(w);
  VertexId v11 = w.id_of("1,1");
  CHECK(t.word[v11] == std::vector<int>{0, 1});  // E then N
  CHECK(t.parent[v11] == w.id_of("1,0"));
}

TEST_CASE("stored words are shortlex minimal (exhaustive oracle)") {
  for (auto gens : {zd_standard_gens(2), lamplighter_walk_gens()}) {
    auto w = cayley_window(gens, 4);
    auto t = build_shortlex_tree(w);
    auto best = oracle::shortlex_words(gens, 4);
    for (VertexId v = 0; v < w.size(); ++v) {
      if (w.dist_o(v) > 4) continue;
      auto it = best.find(w.key_of(v));
      REQUIRE(it != best.end());
      CHECK(t.word[v] == it->second);
    }
  }
}

TEST_CASE("free group tree is the whole Cayley graph") {
  auto w = cayley_window(free_gens(2), 4);
  auto t = build_shortlex_tree(w);
  int tree_edges = 0;
  for (VertexId v = 0; v < w.size(); ++v)
    if (t.parent[v] >= 0) ++tree_edges;
  CHECK(tree_edges == w.edge_count());
}

TEST_CASE("trees are geodesic and tree growth equals graph growth") {
  for (auto gens :
       {zd_standard_gens(1), zd_standard_gens(2), lamplighter_walk_gens()}) {
    auto w = cayley_window(gens, 8);
    auto t = build_shortlex_tree(w);
    for (VertexId v = 0; v < w.size(); ++v) CHECK(t.depth[v] == w.dist_o(v));
    CHECK(growth_sequence(w, 8) == tree_growth_sequence(t, 8));
  }
}

TEST_CASE("growth sequences match the closed forms and the provider oracle") {
  auto wz = cayley_window(zd_standard_gens(1), 9);
  auto gz = growth_sequence(wz, 9);
  for (int n = 0; n <= 9; ++n) CHECK(gz[n] == 2 * n + 1);

  auto w2 = cayley_window(zd_standard_gens(2), 9);
  auto g2 = growth_sequence(w2, 9);
  for (int n = 0; n <= 9; ++n) CHECK(g2[n] == 2 * n * n + 2 * n + 1);

  auto lamp_provider =
      std::make_shared<CayleyGraphProvider>(lamplighter_walk_gens(), "walk");
  auto wl = build_window(lamp_provider, 9);
  CHECK(growth_sequence(wl, 9) == oracle::ball_sizes(*lamp_provider, 9));
  // super-linear: sphere sizes strictly increase
  auto gl = growth_sequence(wl, 9);
  for (int n = 2; n <= 9; ++n)
    CHECK(gl[n] - gl[n - 1] > gl[n - 1] - gl[n - 2]);
}

TEST_CASE("subperiodicity witnesses") {
  // Z: the shift embeds every subtree
  auto wz = cayley_window(zd_standard_gens(1), 8);
  auto tz = build_shortlex_tree(wz);
  auto witness = check_subperiodic(tz, wz.id_of("2"), 3);
  REQUIRE(witness);
  CHECK(witness->map.size() >= 4);

  // free group: every subtree embeds (regular branching)
  auto wf = cayley_window(free_gens(2), 6);
  auto tf = build_shortlex_tree(wf);
  CHECK(check_subperiodic(tf, wf.id_of("ab"), 2));

  // Z^2 at the east neighbor, depth 3
  auto w2 = cayley_window(zd_standard_gens(2), 8);
  auto t2 = build_shortlex_tree(w2);
  auto wit2 = check_subperiodic(t2, w2.id_of("1,0"), 3);
  REQUIRE(wit2);
  // witness is injective, depth-preserving, maps x to o, respects parents
  std::set<VertexId> images;
  std::map<VertexId, VertexId> phi;
  for (auto [a, b] : wit2->map) {
    CHECK(images.insert(b).second);
    phi[a] = b;
    CHECK(t2.depth[a] - t2.depth[w2.id_of("1,0")] == t2.depth[b]);
  }
  CHECK(phi.at(w2.id_of("1,0")) == w2.origin());
  for (auto [a, b] : wit2->map) {
    if (a == w2.id_of("1,0")) continue;
    REQUIRE(phi.count(t2.parent[a]));
    CHECK(phi.at(t2.parent[a]) == t2.parent[b]);
  }

  CHECK_THROWS_AS(check_subperiodic(t2, w2.id_of("1,0"), 8), MarginError);
}

TEST_CASE("finite branch weights vanish on Z and on the Z^2 shortlex tree") {
  auto wz = cayley_window(zd_standard_gens(1), 8);
  auto tz = build_shortlex_tree(wz);
  auto fz = finite_branch_weights(tz);
  for (VertexId v = 0; v < wz.size(); ++v) CHECK(fz.weight[v] == 0);

  // every child subtree of the Z^2 shortlex tree continues to the sphere,
  // so the finite-branch table is identically zero there as well
  auto w2 = cayley_window(zd_standard_gens(2), 8);
  auto t2 = build_shortlex_tree(w2);
  auto f2 = finite_branch_weights(t2);
  long long max_weight = 0;
  for (VertexId v = 0; v < w2.size(); ++v)
    max_weight = std::max(max_weight, f2.weight[v]);
  CHECK(max_weight == 0);
}

TEST_CASE("lamplighter trees grow finite branches") {
  auto w = cayley_window(lamplighter_walk_gens(), 8);
  auto t = build_shortlex_tree(w);
  auto f = finite_branch_weights(t);
  long long max_weight = 0;
  for (VertexId v = 0; v < w.size(); ++v)
    max_weight = std::max(max_weight, f.weight[v]);
  CHECK(max_weight > 0);
  // record weights strictly increase across distinct depths
  CHECK(!f.record_set.empty());
  long long prev = -1;
  int prev_depth = -1;
  for (VertexId v : f.record_set) {
    if (t.depth[v] != prev_depth) {
      CHECK(f.weight[v] > prev);
      prev_depth = t.depth[v];
    }
    prev = std::max(prev, f.weight[v]);
  }
}

TEST_CASE("finiteness experiment: grid stabilizes, line does not") {
  auto z2 = std::make_shared<CayleyGraphProvider>(zd_standard_gens(2), "std");
  auto rep = finiteness_experiment(z2, 4, {3, 4, 5, 6, 7});
  for (const auto& row : rep.rows) CHECK(row.count == 1);
  REQUIRE(rep.stabilized_at);
  CHECK(*rep.stabilized_at == 3);
  REQUIRE(rep.core_ball_radius);
  CHECK(*rep.core_ball_radius == 2);

  auto z1 = std::make_shared<CayleyGraphProvider>(zd_standard_gens(1), "std");
  auto rep1 = finiteness_experiment(z1, 2, {3, 4, 5, 6, 7, 8});
  CHECK(!rep1.stabilized_at);
  for (std::size_t i = 1; i < rep1.rows.size(); ++i)
    CHECK(rep1.rows[i].count > rep1.rows[i - 1].count);
}
