// Acceptance checks: one PASS/FAIL/SKIP line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>
#include <unistd.h>

#include "fgraph/bench.hpp"
#include "fgraph/matrix_market.hpp"
#include "fgraph/operators.hpp"
#include "fgraph/oracles.hpp"
#include "fgraph/primitives/bc.hpp"
#include "fgraph/primitives/bfs.hpp"
#include "fgraph/primitives/cc.hpp"
#include "fgraph/primitives/pagerank.hpp"
#include "fgraph/primitives/sssp.hpp"
#include "support.hpp"

using namespace fgraph;
using testing::NamedGraph;

namespace {

int failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

void report(int id, const std::string& title, const Outcome& o, double seconds) {
  std::ostringstream t;
  t << std::fixed << std::setprecision(1) << seconds << "s";
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << t.str() << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

void run_criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::vector<NamedGraph> build_suite() {
  std::vector<NamedGraph> suite = testing::hand_built();
  auto add = [&](const std::string& name, EdgeList el, std::uint64_t seed) {
    suite.push_back({name, build_csr(assign_random_weights(el, seed))});
  };
  for (std::uint64_t s = 1; s <= 2; ++s) {
    add("uniform-300-undirected/" + std::to_string(s), to_undirected(testing::generated("uniform:300:1500", s)), s);
  }
  for (std::uint64_t s = 1; s <= 3; ++s) add("scalefree-500/" + std::to_string(s), testing::generated("scalefree:500", s), s);
  add("grid-100x100", testing::generated("grid:100x100", 1), 1);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    add("uniform-1e4/" + std::to_string(s), testing::generated("uniform:10000:100000", s), s);
  }
  for (std::uint64_t s = 1; s <= 5; ++s) {
    add("scalefree-1e4/" + std::to_string(s), testing::generated("scalefree:10000", s), s);
  }
  return suite;
}

vertex_t first_source(const CsrGraph& g) {
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) return v;
  }
  return 0;
}

bool close_relative(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300) || a == b; }

double l1(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

constexpr StrategyKind kStrategies[] = {StrategyKind::PerElement, StrategyKind::SizeClass, StrategyKind::Balanced};

Outcome oracle_equivalence(const std::vector<NamedGraph>& suite) {
  Outcome o;
  std::size_t bfs_runs = 0;
  std::size_t sssp_runs = 0;
  for (const auto& [name, g] : suite) {
    const vertex_t src = first_source(g);
    const auto depths = oracle::bfs_depths(g, src);
    for (StrategyKind kind : kStrategies) {
      for (Direction dir : {Direction::Push, Direction::Pull, Direction::Auto}) {
        for (bool idem : {false, true}) {
          BfsOptions opt;
          opt.load_balance.kind = kind;
          opt.direction = dir;
          opt.idempotent = idem;
          if (bfs(g, src, opt).labels != depths) {
            o.fail("bfs mismatch on " + name + " (" + to_string(kind) + ", " + to_string(dir) +
                   (idem ? ", idempotent)" : ")"));
          }
          ++bfs_runs;
        }
      }
    }
    const auto dist = oracle::dijkstra(g, src);
    const distance_t base = default_delta(g);
    for (distance_t delta : {distance_t{1}, base, 10 * base}) {
      for (StrategyKind kind : kStrategies) {
        SsspOptions opt;
        opt.delta = delta;
        opt.load_balance.kind = kind;
        if (sssp(g, src, opt).labels != dist) o.fail("sssp mismatch on " + name + " delta " + std::to_string(delta));
        ++sssp_runs;
      }
    }
    if (!oracle::same_partition(connected_components(g).component, oracle::components(g))) {
      o.fail("cc partition mismatch on " + name);
    }
  }
  if (o.ok) {
    o.detail = std::to_string(suite.size()) + " graphs, " + std::to_string(bfs_runs) + " bfs and " +
               std::to_string(sssp_runs) + " sssp runs";
  }
  if (suite.size() < 25) o.fail("suite has only " + std::to_string(suite.size()) + " graphs");
  return o;
}

Outcome bc_correctness(const std::vector<NamedGraph>& suite) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, g] : suite) {
    if (g.num_vertices() > 1000) continue;
    const auto ours = betweenness_all(g).bc;
    const auto expected = oracle::brandes_all(g);
    for (std::size_t v = 0; v < ours.size(); ++v) {
      if (!close_relative(ours[v], expected[v], 1e-9)) {
        o.fail(name + " vertex " + std::to_string(v));
        break;
      }
    }
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " graphs";
  return o;
}

Outcome pagerank_correctness(const std::vector<NamedGraph>& suite) {
  Outcome o;
  double worst = 0;
  double worst_mass = 0;
  for (const auto& [name, g] : suite) {
    const auto r = pagerank(g);
    const double dist = l1(r.rank, oracle::power_iteration(g, 0.85));
    worst = std::max(worst, dist);
    if (dist > 10 * 1e-6) o.fail(name + " L1 " + std::to_string(dist));
    for (double mass : r.mass_history) {
      worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
      if (std::abs(mass - 1.0) > 1e-9) o.fail(name + " mass drifted");
    }
  }
  if (o.ok) {
    std::ostringstream s;
    s << "worst L1 " << worst << ", worst mass error " << worst_mass;
    o.detail = s.str();
  }
  return o;
}

using Visit = std::tuple<std::size_t, edge_t>;

std::vector<Visit> visit_multiset(const CsrGraph& g, const Frontier& f, const Strategy& s) {
  std::vector<std::vector<Visit>> per_worker(static_cast<std::size_t>(worker_count()));
  for_each_frontier_edge(g, f, s, [&](int w, std::size_t pos, vertex_t, vertex_t, edge_t e) {
    per_worker[static_cast<std::size_t>(w)].emplace_back(pos, e);
  });
  std::vector<Visit> all;
  for (auto& v : per_worker) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  return all;
}

Outcome strategy_equivalence(const std::vector<NamedGraph>& suite) {
  Outcome o;
  const CsrGraph sf = build_csr(testing::generated("scalefree:10000", 1));
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<item_t> items;
    const std::size_t size = 1 + rng() % 8000;
    for (std::size_t i = 0; i < size; ++i) items.push_back(static_cast<item_t>(rng() % 10000));
    const Frontier f = Frontier::vertices(items);
    const auto reference = visit_multiset(sf, f, PerElement{});
    if (visit_multiset(sf, f, SizeClassGrouping{}) != reference) o.fail("size-class visits differ, trial " + std::to_string(trial));
    if (visit_multiset(sf, f, BalancedPartition{256, Granularity::Edge}) != reference ||
        visit_multiset(sf, f, BalancedPartition{256, Granularity::Node}) != reference) {
      o.fail("balanced visits differ, trial " + std::to_string(trial));
    }
  }

  for (const auto& [name, g] : suite) {
    if (name != "scalefree-1e4/1" && name != "uniform-1e4/1" && name != "uniform-300-undirected/1" &&
        name != "grid-100x100") {
      continue;
    }
    const vertex_t src = first_source(g);
    std::vector<std::string> digests;
    for (StrategyKind kind : kStrategies) {
      bench::PrimitiveOutput out;
      BfsOptions b;
      b.load_balance.kind = kind;
      out.depths = bfs(g, src, b).labels;
      SsspOptions s;
      s.load_balance.kind = kind;
      out.distances = sssp(g, src, s).labels;
      BcOptions c;
      c.load_balance.kind = kind;
      out.scores = g.num_vertices() <= 1000 ? betweenness_all(g, c).bc : betweenness(g, {src}, c).bc;
      out.components = connected_components(g).component;
      PagerankOptions p;
      p.load_balance.kind = kind;
      out.ranks = pagerank(g, p).rank;
      digests.push_back(bench::digest(out));
    }
    if (std::adjacent_find(digests.begin(), digests.end(), std::not_equal_to<>()) != digests.end()) {
      o.fail("primitive outputs differ across strategies on " + name);
    }
  }
  if (o.ok) o.detail = "100 frontiers, 4 graphs x 5 primitives";
  return o;
}

Outcome mteps_formula() {
  Outcome o;
  const double soc = *bench::compute_mteps(212'700'000, 47.23);
  const double kron = *bench::compute_mteps(182'100'000, 19.15);
  if (std::abs(soc - 4503) / 4503 > 0.005) o.fail("soc row gives " + std::to_string(soc));
  if (std::abs(kron - 9510) / 9510 > 0.005) o.fail("kron row gives " + std::to_string(kron));
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << soc << " and " << kron << " MTEPS";
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome direction_reduction() {
  Outcome o;
  const CsrGraph g = build_csr(testing::generated("scalefree:100000", 1));
  bench::RunConfig cfg;
  cfg.primitive = bench::Primitive::Bfs;
  const vertex_t src = bench::resolve_sources(cfg, g).front();
  BfsOptions push;
  BfsOptions automatic;
  automatic.direction = Direction::Auto;
  const auto a = bfs(g, src, push);
  const auto b = bfs(g, src, automatic);
  if (a.labels != b.labels) o.fail("labels differ");
  if (!(b.stats.edges_inspected < a.stats.edges_inspected)) o.fail("auto did not inspect fewer edges");
  if (b.stats.pull_steps < 1) o.fail("no pull iteration");
  std::ostringstream s;
  s << "push " << a.stats.edges_inspected << " vs auto " << b.stats.edges_inspected << " edges, "
    << b.stats.pull_steps << " pull steps";
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome near_far_reduction() {
  Outcome o;
  const CsrGraph g = build_csr(assign_random_weights(testing::generated("scalefree:100000", 1), 1));
  bench::RunConfig cfg;
  cfg.primitive = bench::Primitive::Sssp;
  const vertex_t src = bench::resolve_sources(cfg, g).front();
  SsspOptions banded;
  SsspOptions flat;
  flat.delta = kInfiniteDelta;
  const auto a = sssp(g, src, banded);
  const auto b = sssp(g, src, flat);
  if (a.labels != b.labels) o.fail("labels differ");
  if (!(a.stats.edges_inspected < b.stats.edges_inspected)) o.fail("default delta did not relax fewer edges");
  std::ostringstream s;
  s << "delta " << a.delta << ": " << a.stats.edges_inspected << " vs unbounded: " << b.stats.edges_inspected;
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome determinism(const std::vector<NamedGraph>& suite) {
  Outcome o;
  std::size_t combos = 0;
  for (const auto& [name, g] : suite) {
    if (name != "scalefree-1e4/2" && name != "uniform-1e4/2" && name != "grid-100x100" && name != "dangling" &&
        name != "uniform-300-undirected/2") {
      continue;
    }
    for (auto p : {bench::Primitive::Bfs, bench::Primitive::Sssp, bench::Primitive::Bc, bench::Primitive::Cc,
                   bench::Primitive::Pagerank}) {
      for (bool fancy : {false, true}) {
        bench::RunConfig cfg;
        cfg.primitive = p;
        cfg.source = std::to_string(first_source(g));
        if (p == bench::Primitive::Bc && g.num_vertices() <= 1000) cfg.source = "all";
        if (fancy) {
          cfg.direction = Direction::Auto;
          cfg.idempotent = true;
          cfg.load_balance.kind = StrategyKind::Balanced;
          cfg.delta = 1;
        }
        const auto sources = bench::resolve_sources(cfg, g);
        std::string expected;
        for (int threads : {1, 2, 8}) {
          WorkerScope scope(threads);
          for (int rep = 0; rep < 3; ++rep) {
            const std::string d = bench::digest(bench::execute(cfg, g, sources));
            if (expected.empty()) expected = d;
            if (d != expected) {
              o.fail(std::string(bench::to_string(p)) + " on " + name + " differs at " + std::to_string(threads) +
                     " threads");
            }
          }
        }
        ++combos;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(combos) + " configurations x {1,2,8} threads x 3 reps";
  return o;
}

bool performance_sanity(Outcome& o) {
  const unsigned cores = std::thread::hardware_concurrency();
  if (cores < 4) {
    o.detail = "machine reports " + std::to_string(cores) + " hardware threads, needs at least 4";
    return false;
  }
  const CsrGraph g = build_csr(testing::generated("uniform:1000000:10000000", 1));
  const vertex_t src = first_source(g);
  auto time_with = [&](int threads) {
    WorkerScope scope(threads);
    bfs(g, src);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      bfs(g, src);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
  };
  const double one = time_with(1);
  const double eight = time_with(8);
  std::ostringstream s;
  s << "speedup " << one / eight;
  o.detail = s.str();
  if (one / eight < 1.5) o.fail(s.str());
  return true;
}

Outcome invariants(const std::vector<NamedGraph>& suite) {
  Outcome o;
  for (const auto& [name, g] : suite) {
    try {
      check_csr_invariants(g);
    } catch (const GraphError& e) {
      o.fail(name + ": " + e.what());
    }
    const auto r = connected_components(g);
    for (std::size_t v = 0; v < r.component.size(); ++v) {
      if (r.component[static_cast<std::size_t>(r.component[v])] != r.component[v]) {
        o.fail("star property broken on " + name);
        break;
      }
    }
  }
  const auto dir = std::filesystem::temp_directory_path() / ("fgraph-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  int files = 0;
  for (std::size_t i = 0; i < suite.size() && files < 10; i += 2, ++files) {
    EdgeList el = suite[i].graph.to_edge_list();
    if (files % 2 == 1) {
      el.weighted = false;
      for (auto& e : el.edges) e.weight = 0;
    }
    const auto path = dir / ("graph" + std::to_string(files) + ".mtx");
    {
      std::ofstream out(path);
      write_matrix_market(out, el);
    }
    const EdgeList back = load_matrix_market(path);
    if (!(back == el)) o.fail("round trip differs for " + suite[i].name);
    try {
      check_csr_invariants(build_csr(back));
    } catch (const GraphError& e) {
      o.fail(std::string("reloaded graph: ") + e.what());
    }
  }
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = std::to_string(suite.size()) + " graphs, " + std::to_string(files) + " files round-tripped";
  return o;
}

}  // namespace

int main() {
  const std::vector<NamedGraph> suite = build_suite();

  run_criterion(1, "oracle equivalence for bfs, sssp and cc", [&] { return oracle_equivalence(suite); });
  run_criterion(2, "betweenness matches Brandes within 1e-9", [&] { return bc_correctness(suite); });
  run_criterion(3, "pagerank L1 <= 1e-5 and unit mass", [&] { return pagerank_correctness(suite); });
  run_criterion(4, "load-balance strategies are interchangeable", [&] { return strategy_equivalence(suite); });
  run_criterion(5, "MTEPS arithmetic", [] { return mteps_formula(); });
  run_criterion(6, "direction switching saves edge inspections", [] { return direction_reduction(); });
  run_criterion(7, "near/far split saves relaxations", [] { return near_far_reduction(); });
  run_criterion(8, "results identical across thread counts", [&] { return determinism(suite); });

  {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    bool ran = false;
    try {
      ran = performance_sanity(o);
    } catch (const std::exception& e) {
      ran = true;
      o.fail(e.what());
    }
    if (ran) {
      report(9, "bfs speedup with 8 workers", o,
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    } else {
      std::cout << "SKIP [9] bfs speedup with 8 workers: " << o.detail << std::endl;
    }
  }

  run_criterion(10, "cc stars, csr invariants, Matrix Market round trip", [&] { return invariants(suite); });
  return failures == 0 ? 0 : 1;
}
