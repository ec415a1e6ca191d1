#include "cutlab/experiments.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cutlab/cutsets.hpp"
#include "cutlab/cycles.hpp"
#include "cutlab/dl.hpp"
#include "cutlab/qi.hpp"
#include "cutlab/treegrowth.hpp"

#include "json.hpp"

namespace cutlab {

namespace {

namespace fs = std::filesystem;

struct Runner {
  const ExperimentConfig& cfg;
  fs::path dir;
  std::vector<std::string> files;

  void write(const std::string& name, const std::string& content) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + name);
    out << content;
    files.push_back(name);
  }

  std::size_t vertex_cap() const {
    if (const char* env = std::getenv("CUTSET_LAB_MAX_VERTICES"))
      return static_cast<std::size_t>(std::stoll(env));
    return static_cast<std::size_t>(
        cfg.get_int_or("limits", "max_vertices", 1000000));
  }

  EnumerationLimits limits() const {
    EnumerationLimits lim;
    lim.node_cap = cfg.get_int_or("limits", "node_cap", lim.node_cap);
    lim.flow_check_interval = static_cast<int>(cfg.get_int_or(
        "limits", "flow_check_interval", lim.flow_check_interval));
    return lim;
  }

  GraphWindow window(const std::string& provider_section = "provider",
                     const std::string& radius_key = "radius") const {
    auto provider = make_provider(cfg, provider_section);
    int radius = static_cast<int>(cfg.get_int("window", radius_key));
    return build_window(provider, radius, vertex_cap());
  }

  std::uint64_t seed() const {
    return static_cast<std::uint64_t>(cfg.get_int_or("run", "seed", 1));
  }

  void check(bool ok, const std::string& what) const {
    if (!ok) throw CheckFailure(cfg.origin() + ": " + what);
  }

  void manifest(const std::string& experiment) {
    nlohmann::ordered_json j;
    j["artifact"] = kArtifactName;
    j["version"] = kArtifactVersion;
    j["experiment"] = experiment;
    nlohmann::ordered_json sections(nlohmann::json::value_t::object);
    for (const auto& [name, kv] : cfg.sections()) {
      nlohmann::ordered_json sec(nlohmann::json::value_t::object);
      for (const auto& [k, v] : kv) sec[k] = v;
      sections[name] = sec;
    }
    j["config"] = sections;
    j["outputs"] = files;
    write("manifest.json", j.dump(2) + "\n");
  }
};

std::string edge_list_string(const GraphWindow& w,
                             const std::vector<Edge>& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ' ';
    s += w.key_of(edges[i].u);
    s += '~';
    s += w.key_of(edges[i].v);
  }
  return s;
}

// running least-squares exponent fit over nonzero counts up to each n
std::vector<double> running_alpha(const std::vector<long long>& count) {
  std::vector<double> out(count.size(), 0.0);
  std::vector<std::pair<int, double>> pts;
  for (std::size_t n = 1; n < count.size(); ++n) {
    if (count[n] > 0) pts.emplace_back(static_cast<int>(n),
                                       std::log(double(count[n])));
    if (pts.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += double(x) * x;
        sxy += x * y;
      }
      double m = double(pts.size());
      out[n] = std::exp((m * sxy - sx * sy) / (m * sxx - sx * sx));
    }
  }
  return out;
}

void parse_expected_counts(const ExperimentConfig& cfg,
                           const std::string& value,
                           std::vector<std::pair<int, long long>>& out) {
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      cfg.fail("experiment", "expect_counts", "use n:count,n:count,...");
    out.emplace_back(std::stoi(item.substr(0, colon)),
                     std::stoll(item.substr(colon + 1)));
  }
}

std::string csv_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---- experiments ----

void run_enumerate(Runner& r) {
  auto w = r.window();
  int n_max = static_cast<int>(r.cfg.get_int("experiment", "n_max"));
  bool with_closeness =
      r.cfg.get_bool_or("experiment", "with_closeness", false);
  auto convention = convention_from_name(
      r.cfg.get_or("experiment", "convention", "subdivision"));

  auto cutsets = enumerate_min_cutsets_up_to(w, n_max, r.limits());
  std::vector<long long> count(n_max + 1, 0);
  for (const auto& c : cutsets) ++count[c.size()];
  auto alpha = running_alpha(count);

  std::ostringstream table;
  table << "n,count,alpha_running\n";
  for (int n = 1; n <= n_max; ++n)
    table << n << ',' << count[n] << ',' << csv_double(alpha[n]) << '\n';
  r.write("counts.csv", table.str());

  DistanceCache cache(w);
  std::ostringstream stream;
  for (const auto& c : cutsets) {
    stream << c.size() << '\t' << edge_list_string(w, c.edges);
    if (with_closeness)
      stream << '\t' << closeness(w, c.edges, convention, &cache).value;
    stream << '\n';
  }
  r.write("cutsets.tsv", stream.str());

  if (r.cfg.has("experiment", "expect_counts")) {
    std::vector<std::pair<int, long long>> expected;
    parse_expected_counts(r.cfg, r.cfg.get("experiment", "expect_counts"),
                          expected);
    for (auto [n, c] : expected)
      r.check(n <= n_max && count[n] == c,
              "count regression at n=" + std::to_string(n) + ": got " +
                  std::to_string(n <= n_max ? count[n] : -1) + ", expected " +
                  std::to_string(c));
  }
}

void run_closeness_sup(Runner& r) {
  auto w = r.window();
  int n_max = static_cast<int>(r.cfg.get_int("experiment", "n_max"));
  auto convention = convention_from_name(
      r.cfg.get_or("experiment", "convention", "subdivision"));
  auto rows = sup_closeness(w, n_max, convention, r.limits());

  std::ostringstream table;
  table << "n,count,max_closeness,running_max\n";
  for (const auto& row : rows)
    if (row.n >= 1)
      table << row.n << ',' << row.count << ',' << row.max_closeness << ','
            << row.running_max << '\n';
  r.write("closeness_sup.csv", table.str());

  if (r.cfg.has("experiment", "expect_running_max")) {
    long long want = r.cfg.get_int("experiment", "expect_running_max");
    r.check(rows.back().running_max == want,
            "running max closeness is " +
                std::to_string(rows.back().running_max) + ", expected " +
                std::to_string(want));
  }
}

void run_dl_family(Runner& r) {
  auto w = r.window();
  int k_min = static_cast<int>(r.cfg.get_int_or("experiment", "k_min", 1));
  int k_max = static_cast<int>(r.cfg.get_int("experiment", "k_max"));
  auto convention = convention_from_name(
      r.cfg.get_or("experiment", "convention", "subdivision"));
  bool expect_checks = r.cfg.get_bool_or("experiment", "expect_checks", true);

  std::ostringstream table;
  table << "k,block_size,cut_size,dist_ab,closeness_lb,minimal,running_max\n";
  int running = -1;
  for (int k = k_min; k <= k_max; ++k) {
    auto block = subtree_block(w, k);
    auto cert = is_minimal_cutset(w, block.cut);
    auto dist = set_distance(w, block.first_leaf_side, block.second_leaf_side);

    // natural bipartition: edges incident to the first-tree leaf side
    std::vector<char> side_mask = make_mask(w, block.first_leaf_side);
    std::vector<int> side_a;
    for (std::size_t i = 0; i < block.cut.size(); ++i)
      if (side_mask[block.cut[i].u] || side_mask[block.cut[i].v])
        side_a.push_back(static_cast<int>(i));
    int lb = closeness_lower_bound(w, block.cut, side_a, convention);
    running = std::max(running, lb);

    table << k << ',' << block.vertices.size() << ',' << block.cut.size()
          << ',' << dist.value << ',' << lb << ',' << (cert.minimal ? 1 : 0)
          << ',' << running << '\n';

    if (expect_checks) {
      r.check(cert.minimal, "C_k fails the minimality certificate at k=" +
                                std::to_string(k) + ": " + cert.reason);
      r.check(dist.exact && dist.value == k,
              "dist(A_k,B_k) != k at k=" + std::to_string(k) + " (got " +
                  std::to_string(dist.value) + ")");
      r.check(lb >= k - 1, "closeness lower bound below k-1 at k=" +
                               std::to_string(k));
    }
  }
  r.write("dl_family.csv", table.str());
}

void run_half_t(Runner& r) {
  auto w = r.window();
  const auto* cayley = dynamic_cast<const CayleyGraphProvider*>(&w.provider());
  if (!cayley)
    throw ConfigError("half-t experiment requires a Cayley provider");
  auto relators = declared_relators(cayley->generating_set());
  if (!relators || relators->empty())
    throw ConfigError(
        "half-t: this family has no declared finite presentation with "
        "bounded relators (refusing; no finite t exists)");
  int n_max = static_cast<int>(r.cfg.get_int("experiment", "n_max"));
  auto convention = convention_from_name(
      r.cfg.get_or("experiment", "convention", "subdivision"));

  auto rep = verify_presentation_bound(w, *relators, n_max, convention);
  std::ostringstream table;
  table << "n,count,max_closeness,running_max,half_t\n";
  for (const auto& row : rep.table)
    if (row.n >= 1)
      table << row.n << ',' << row.count << ',' << row.max_closeness << ','
            << row.running_max << ',' << rep.half_t << '\n';
  r.write("half_t.csv", table.str());
  r.check(rep.ok, "a minimal cutset exceeds the t/2 closeness bound");

  // randomized two-vertex crossing-cycle instances
  int instances =
      static_cast<int>(r.cfg.get_int_or("experiment", "theta_instances", 0));
  if (instances > 0) {
    auto basis = relator_cycles(w, *relators);
    std::mt19937_64 rng(r.seed());
    int safe = w.radius() / 2;
    std::ostringstream tsv;
    int made = 0;
    long long attempts = 0;
    while (made < instances) {
      if (++attempts > 200ll * instances)
        throw ResourceLimitError("half-t: instance generation stalled");
      // random connected K around the origin, then a far target vertex
      std::vector<VertexId> k{w.origin()};
      std::vector<char> in_k = make_mask(w, k);
      int grow = static_cast<int>(rng() % 5);
      for (int g = 0; g < grow; ++g) {
        VertexId v = k[rng() % k.size()];
        const auto& ns = w.neighbors_of(v);
        VertexId u = ns[rng() % ns.size()];
        if (!in_k[u] && w.dist_o(u) <= safe) {
          in_k[u] = 1;
          k.push_back(u);
        }
      }
      std::vector<VertexId> targets;
      for (VertexId v = 0; v < w.size(); ++v)
        if (!in_k[v] && w.dist_o(v) >= 2 && w.dist_o(v) <= safe)
          targets.push_back(v);
      VertexId y = targets[rng() % targets.size()];
      // minimal x-y cutset: edges between K and the component of y
      auto comps = components_after_removal(w, sorted_unique(k), {});
      const Component* cy = nullptr;
      for (const auto& c : comps)
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), y))
          cy = &c;
      std::vector<Edge> pi;
      auto cy_mask = make_mask(w, cy->vertices);
      for (VertexId v : k)
        for (VertexId u : w.neighbors_of(v))
          if (cy_mask[u]) pi.push_back(make_edge(u, v));
      std::sort(pi.begin(), pi.end());
      pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
      if (pi.size() < 2) continue;
      // random nontrivial bipartition
      std::vector<int> part1;
      for (std::size_t i = 0; i < pi.size(); ++i)
        if (rng() % 2) part1.push_back(static_cast<int>(i));
      if (part1.empty() || part1.size() == pi.size()) continue;

      auto witness =
          crossing_cycle_witness(w, pi, part1, w.origin(), y, basis);
      // theta checks: no part-1 edges, odd vertices exactly {x, y}
      BinaryEdgeVector pi1(w.edge_count());
      for (int i : part1) pi1.set(w.edge_id_checked(pi[i].u, pi[i].v));
      bool no_pi1 = !witness.theta.intersects(pi1);
      auto odd = odd_vertices(w, witness.theta);
      std::vector<VertexId> xy = sorted_unique({w.origin(), y});
      bool odd_ok = odd == xy;
      int wlen = basis.cycles[witness.cycle_index].popcount();
      r.check(no_pi1, "theta contains a part-1 edge");
      r.check(odd_ok, "theta odd vertices differ from {x,y}");
      r.check(wlen <= rep.t, "witness cycle longer than t");
      tsv << made << '\t' << k.size() << '\t' << pi.size() << '\t'
          << part1.size() << '\t' << wlen << '\t' << (no_pi1 && odd_ok)
          << '\n';
      ++made;
    }
    r.write("theta.tsv", tsv.str());
  }
}

void run_qi_transfer(Runner& r) {
  auto wg = r.window("provider", "radius");
  auto wh = r.window("target", "target_radius");
  std::string map_name = r.cfg.get_or("experiment", "map", "identity-regenerate");
  QuasiIsometryMap map;
  if (map_name == "identity-regenerate")
    map = identity_map();
  else if (map_name == "lamplighter-dl")
    map = dl_to_lamplighter_map();
  else
    r.cfg.fail("experiment", "map", "unknown map '" + map_name + "'");

  int sample_radius =
      static_cast<int>(r.cfg.get_int_or("experiment", "m_sample_radius", 4));
  auto bil = verify_bilipschitz(map, wg, wh, ball_ids(wg, sample_radius));
  r.check(bil.round_trip_ok, "map does not round-trip");
  {
    std::ostringstream os;
    os << "m,pairs_checked,round_trip\n"
       << bil.m << ',' << bil.pairs_checked << ',' << bil.round_trip_ok
       << '\n';
    r.write("bilipschitz.csv", os.str());
  }
  if (r.cfg.has("experiment", "m_expect"))
    r.check(bil.m == r.cfg.get_int("experiment", "m_expect"),
            "certified m is " + std::to_string(bil.m));
  int m = bil.m;

  if (r.cfg.has("experiment", "n_max")) {
    int n_max = static_cast<int>(r.cfg.get_int("experiment", "n_max"));
    auto cutsets = enumerate_min_cutsets_up_to(wg, n_max, r.limits());
    std::ostringstream table;
    table << "n,index,phi_size,boundary_g,boundary_h,growth_ok,tau_size,tau_ok\n";
    int index = 0;
    for (const auto& c : cutsets) {
      auto rep =
          boundary_growth_check(map, wg, wh, c.component, m, c.size());
      auto phi = image_neighborhood(map, wg, wh, c.component, m);
      table << c.size() << ',' << index++ << ',' << phi.size() << ','
            << rep.boundary_g << ',' << rep.boundary_h << ','
            << rep.boundary_ok << ',' << rep.tau_minus_kappa << ','
            << rep.tau_ok << '\n';
      r.check(rep.boundary_ok, "boundary growth bound violated");
      r.check(rep.tau_ok, "preimage containment bound violated");
    }
    r.write("kappa_checks.csv", table.str());

    std::ostringstream fib;
    fib << "n,kappa_count,max_fiber,injective\n";
    for (int n = 1; n <= n_max; ++n) {
      auto fr = fiber_experiment(map, wg, wh, n, m, r.limits());
      fib << n << ',' << fr.kappa_count << ',' << fr.max_fiber << ','
          << fr.injective << '\n';
    }
    r.write("fibers.csv", fib.str());
  }

  if (r.cfg.has("experiment", "transfer_k")) {
    int k = static_cast<int>(r.cfg.get_int("experiment", "transfer_k"));
    auto block = subtree_block(wg, k);
    auto convention = convention_from_name(
        r.cfg.get_or("experiment", "convention", "subdivision"));
    auto rep =
        transfer_noncloseness(map, wg, wh, block.vertices, k, m, convention);
    std::ostringstream os;
    os << "k,m,input_lb,precondition_ok,cut_size,transfer_lb,claimed,vacuous,"
          "ok\n"
       << rep.k << ',' << rep.m << ',' << rep.input_closeness_lb << ','
       << rep.precondition_ok << ',' << rep.transferred.size() << ','
       << rep.transfer_closeness_lb << ',' << csv_double(rep.claimed_bound)
       << ',' << rep.vacuous << ',' << rep.bound_ok << '\n';
    r.write("transfer.csv", os.str());
    r.check(rep.bound_ok, "transfer closeness bound violated");
  }
}

void run_growth(Runner& r) {
  auto w = r.window();
  int n_max = static_cast<int>(
      r.cfg.get_int_or("experiment", "n_max", w.radius()));
  auto balls = growth_sequence(w, n_max);

  const auto* cayley = dynamic_cast<const CayleyGraphProvider*>(&w.provider());
  std::ostringstream table;
  table << "n,ball,tree_ball\n";
  if (cayley) {
    auto tree = build_shortlex_tree(w);
    auto tballs = tree_growth_sequence(tree, n_max);
    for (int n = 0; n <= n_max; ++n)
      table << n << ',' << balls[n] << ',' << tballs[n] << '\n';
    r.write("growth.csv", table.str());
    bool geodesic = true;
    for (VertexId v = 0; v < w.size(); ++v)
      if (tree.depth[v] != w.dist_o(v)) geodesic = false;
    r.check(geodesic, "shortlex tree is not geodesic");
    r.check(balls == tballs, "tree growth differs from graph growth");

    auto fx = finite_branch_weights(tree);
    std::vector<char> record(w.size(), 0);
    for (VertexId v : fx.record_set) record[v] = 1;
    std::ostringstream ftab;
    ftab << "vertex,depth,weight,uncertain,record\n";
    for (VertexId v = 0; v < w.size(); ++v)
      ftab << w.key_of(v) << ',' << tree.depth[v] << ',' << fx.weight[v]
           << ',' << int(fx.uncertain[v]) << ',' << int(record[v]) << '\n';
    r.write("fx.csv", ftab.str());
  } else {
    for (int n = 0; n <= n_max; ++n)
      table << n << ',' << balls[n] << ",\n";
    r.write("growth.csv", table.str());
  }

  if (r.cfg.has("experiment", "expect_balls")) {
    auto want = r.cfg.get_int_list("experiment", "expect_balls");
    for (std::size_t i = 0; i < want.size() && i < balls.size(); ++i)
      r.check(balls[i] == want[i],
              "ball size regression at n=" + std::to_string(i));
  }
}

void run_finiteness(Runner& r) {
  auto provider = make_provider(r.cfg, "provider");
  int n = static_cast<int>(r.cfg.get_int("experiment", "n"));
  auto radii = r.cfg.get_int_list("experiment", "radii");
  auto rep = finiteness_experiment(provider, n, radii, r.limits(),
                                   r.vertex_cap());
  std::ostringstream table;
  table << "R,count\n";
  for (const auto& row : rep.rows)
    table << row.radius << ',' << row.count << '\n';
  r.write("finiteness.csv", table.str());
  std::ostringstream sum;
  sum << "stabilized_at,core_ball_radius\n";
  sum << (rep.stabilized_at ? std::to_string(*rep.stabilized_at) : "none")
      << ','
      << (rep.core_ball_radius ? std::to_string(*rep.core_ball_radius)
                               : "none")
      << '\n';
  r.write("summary.csv", sum.str());

  if (r.cfg.has("experiment", "expect_stabilized_at"))
    r.check(rep.stabilized_at &&
                *rep.stabilized_at ==
                    r.cfg.get_int("experiment", "expect_stabilized_at"),
            "stabilization radius regression");
  if (r.cfg.has("experiment", "expect_core_radius"))
    r.check(rep.core_ball_radius &&
                *rep.core_ball_radius ==
                    r.cfg.get_int("experiment", "expect_core_radius"),
            "core-ball radius regression");
  if (r.cfg.get_bool_or("experiment", "expect_growing", false)) {
    bool growing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
      if (rep.rows[i].count <= rep.rows[i - 1].count) growing = false;
    r.check(growing && !rep.stabilized_at,
            "counts were expected to grow without stabilizing");
  }
}

void run_subgraph_count(Runner& r) {
  auto w = r.window();
  int n_max = static_cast<int>(r.cfg.get_int("experiment", "n_max"));
  bool verify = r.cfg.get_bool_or("experiment", "verify_certificates", true);
  long long d = w.provider().degree_bound();

  std::ostringstream table;
  table << "n,count,bound,within_bound\n";
  std::ostringstream certs;
  int emitted = 0;
  for (int n = 1; n <= n_max; ++n) {
    long long bound = 1;
    bool overflow = false;
    for (int i = 0; i < 2 * n; ++i) {
      if (bound > (1ll << 61) / d) {
        overflow = true;
        break;
      }
      bound *= d;
    }
    long long count = count_connected_subsets(
        w, n, [&](const std::vector<VertexId>& subset) {
          if (!verify) return;
          auto walk = encode_subset_walk(w, subset);
          if (static_cast<int>(walk.size()) > 2 * (n - 1))
            throw CheckFailure("walk certificate longer than 2(n-1)");
          for (int step : walk)
            if (step >= d)
              throw CheckFailure("walk certificate alphabet exceeds degree");
          if (decode_subset_walk(w, walk) != subset)
            throw CheckFailure("walk certificate does not round-trip");
          if (emitted < 100) {
            ++emitted;
            certs << n << '\t';
            for (std::size_t i = 0; i < subset.size(); ++i)
              certs << (i ? " " : "") << w.key_of(subset[i]);
            certs << '\t';
            for (std::size_t i = 0; i < walk.size(); ++i)
              certs << (i ? "," : "") << walk[i];
            certs << '\n';
          }
        });
    bool ok = overflow || count <= bound;
    table << n << ',' << count << ',' << (overflow ? -1 : bound) << ',' << ok
          << '\n';
    r.check(ok, "connected-subset count exceeds d^{2n} at n=" +
                    std::to_string(n));
  }
  r.write("subgraph_counts.csv", table.str());
  if (verify) r.write("certificates.tsv", certs.str());

  if (r.cfg.has("experiment", "expect_counts")) {
    std::vector<std::pair<int, long long>> expected;
    parse_expected_counts(r.cfg, r.cfg.get("experiment", "expect_counts"),
                          expected);
    for (auto [n, c] : expected) {
      long long got = count_connected_subsets(w, n);
      r.check(got == c, "subset count regression at n=" + std::to_string(n));
    }
  }
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"enumerate",   "closeness-sup", "dl-family",  "half-t",
          "qi-transfer", "growth",        "finiteness", "subgraph-count"};
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  std::string name = cfg.get("experiment", "name");
  Runner r{cfg, fs::path(cfg.get("output", "dir")), {}};

  if (name == "enumerate")
    run_enumerate(r);
  else if (name == "closeness-sup")
    run_closeness_sup(r);
  else if (name == "dl-family")
    run_dl_family(r);
  else if (name == "half-t")
    run_half_t(r);
  else if (name == "qi-transfer")
    run_qi_transfer(r);
  else if (name == "growth")
    run_growth(r);
  else if (name == "finiteness")
    run_finiteness(r);
  else if (name == "subgraph-count")
    run_subgraph_count(r);
  else
    cfg.fail("experiment", "name", "unknown experiment '" + name + "'");

  r.manifest(name);
  return {r.dir.string(), r.files};
}

}  // namespace cutlab
