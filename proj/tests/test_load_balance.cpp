#include <doctest.h>

#include <algorithm>
#include <mutex>
#include <random>
#include <tuple>

#include "fgraph/load_balance.hpp"
#include "support.hpp"

using namespace fgraph;

namespace {

// Brute-force owner lookup: scan the degree list from the front.
std::pair<std::vector<edge_t>, std::vector<vertex_t>> brute_force_chunks(const CsrGraph& g, const Frontier& f,
                                                                         edge_t chunk_size) {
  std::vector<edge_t> starts;
  std::vector<vertex_t> owners;
  edge_t offset = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = static_cast<vertex_t>(f.items[i]);
    for (edge_t k = 0; k < g.degree(v); ++k, ++offset) {
      if (offset % chunk_size == 0) {
        starts.push_back(offset);
        owners.push_back(v);
      }
    }
  }
  return {starts, owners};
}

using Visit = std::tuple<std::size_t, vertex_t, vertex_t, edge_t>;

std::vector<Visit> visits(const CsrGraph& g, const Frontier& f, const Strategy& s) {
  std::vector<Visit> out;
  std::mutex m;
  const edge_t count = for_each_frontier_edge(g, f, s, [&](int, std::size_t pos, vertex_t src, vertex_t dst, edge_t e) {
    std::lock_guard lock(m);
    out.emplace_back(pos, src, dst, e);
  });
  CHECK(count == static_cast<edge_t>(out.size()));
  std::sort(out.begin(), out.end());
  return out;
}

// Star-like graph whose centre lists fall in each size class.
CsrGraph mixed_degrees() {
  EdgeList el;
  el.num_vertices = 400;
  for (vertex_t d = 1; d <= 300; ++d) el.edges.push_back({0, d, 0});
  for (vertex_t d = 1; d <= 40; ++d) el.edges.push_back({1, d + 1, 0});
  el.edges.push_back({2, 0, 0});
  el.edges.push_back({2, 1, 0});
  return build_csr(el);
}

}  // namespace

TEST_SUITE("load-balance") {
  TEST_CASE("automatic selection") {
    const CsrGraph grid = build_csr(testing::generated("grid:50x50", 1));
    CHECK(std::holds_alternative<SizeClassGrouping>(select_strategy(Frontier::all_vertices(2500), grid)));

    const CsrGraph sf = build_csr(testing::generated("scalefree:20000", 1));
    REQUIRE(sf.max_degree() > 256);
    const Strategy big = select_strategy(Frontier::all_vertices(10000), sf);
    REQUIRE(std::holds_alternative<BalancedPartition>(big));
    CHECK(std::get<BalancedPartition>(big).granularity == Granularity::Edge);
    Frontier small = Frontier::all_vertices(100);
    const Strategy few = select_strategy(small, sf);
    REQUIRE(std::holds_alternative<BalancedPartition>(few));
    CHECK(std::get<BalancedPartition>(few).granularity == Granularity::Node);

    LoadBalanceOptions fixed;
    fixed.kind = StrategyKind::PerElement;
    CHECK(std::holds_alternative<PerElement>(resolve_strategy(small, sf, fixed)));
    CHECK(parse_strategy_kind("size-class") == StrategyKind::SizeClass);
    CHECK_THROWS_AS(parse_strategy_kind("warp"), UsageError);
  }

  TEST_CASE("per-element plan") {
    const CsrGraph g = testing::g1();
    const WorkPlan plan = plan_per_element(Frontier::vertices({0, 1}), g);
    REQUIRE(plan.num_chunks() == 2);
    CHECK(plan.chunk_end(0) - plan.chunk_starts[0] == 2);
    CHECK(plan.chunk_end(1) - plan.chunk_starts[1] == 1);
    CHECK(plan.source_of_chunk_start == std::vector<vertex_t>{0, 1});
    CHECK(plan_per_element(Frontier::vertices({}), g).num_chunks() == 0);
    const WorkPlan empty_list = plan_per_element(Frontier::vertices({3}), g);
    REQUIRE(empty_list.num_chunks() == 1);
    CHECK(empty_list.chunk_end(0) == empty_list.chunk_starts[0]);
  }

  TEST_CASE("size classes") {
    const CsrGraph g = mixed_degrees();
    const SizeClassBuckets b = plan_size_classes(Frontier::vertices({2, 1, 0}), g, 32, 256);
    CHECK(b.small == std::vector<std::size_t>{0});
    CHECK(b.medium == std::vector<std::size_t>{1});
    CHECK(b.large == std::vector<std::size_t>{2});
    CHECK(b.total_edges == 342);

    const SizeClassBuckets zeros = plan_size_classes(Frontier::vertices({5, 6}), g, 32, 256);
    CHECK(zeros.small.size() == 2);

    EdgeList el;
    el.num_vertices = 40;
    for (vertex_t d = 1; d <= 32; ++d) el.edges.push_back({0, d, 0});
    const SizeClassBuckets boundary = plan_size_classes(Frontier::vertices({0}), build_csr(el), 32, 256);
    CHECK(boundary.small.size() == 1);
    CHECK_THROWS_AS(plan_size_classes(Frontier::vertices({0}), g, 64, 64), UsageError);
  }

  TEST_CASE("balanced partition matches brute force") {
    const CsrGraph g = testing::g1();
    const Frontier f = Frontier::vertices({0, 1, 2, 3});
    const WorkPlan plan = plan_balanced_partition(f, g, 2);
    CHECK(plan.degree_prefix == std::vector<edge_t>{0, 2, 3, 4, 4});
    const auto [starts, owners] = brute_force_chunks(g, f, 2);
    CHECK(plan.chunk_starts == starts);
    CHECK(plan.source_of_chunk_start == owners);

    const CsrGraph sf = build_csr(testing::generated("scalefree:3000", 2));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<item_t> items;
      for (int i = 0; i < 200; ++i) items.push_back(static_cast<item_t>(rng() % 3000));
      const Frontier rf = Frontier::vertices(items);
      const edge_t chunk = 1 + static_cast<edge_t>(rng() % 50);
      const WorkPlan p = plan_balanced_partition(rf, sf, chunk);
      const auto [s, o] = brute_force_chunks(sf, rf, chunk);
      CHECK(p.chunk_starts == s);
      CHECK(p.source_of_chunk_start == o);
    }
  }

  TEST_CASE("split neighbor list") {
    EdgeList el;
    el.num_vertices = 11;
    for (vertex_t d = 1; d <= 10; ++d) el.edges.push_back({0, d, 0});
    const CsrGraph g = build_csr(el);
    const Frontier f = Frontier::vertices({0});
    const WorkPlan plan = plan_balanced_partition(f, g, 4);
    CHECK(plan.chunk_starts == std::vector<edge_t>{0, 4, 8});
    CHECK(plan.source_of_chunk_start == std::vector<vertex_t>{0, 0, 0});

    std::size_t split = 0;
    std::size_t whole = 0;
    execute_plan(g, f, plan, [&](int, std::size_t, vertex_t, vertex_t, edge_t) {
#pragma omp atomic
      ++split;
    });
    execute_plan(g, f, plan_per_element(f, g), [&](int, std::size_t, vertex_t, vertex_t, edge_t) {
#pragma omp atomic
      ++whole;
    });
    CHECK(split == 10);
    CHECK(whole == split);

    const WorkPlan node = plan_balanced_partition(f, g, 4, Granularity::Node);
    CHECK(node.chunk_starts == std::vector<edge_t>{0});
    CHECK(plan_balanced_partition(Frontier::vertices({}), g, 4).num_chunks() == 0);
    CHECK_THROWS_AS(plan_balanced_partition(f, g, 0), UsageError);
  }

  TEST_CASE("execute_plan coverage") {
    const CsrGraph g = testing::g1();
    const Frontier all = Frontier::all_vertices(4);
    CHECK(visits(g, all, PerElement{}).size() == 4);
    CHECK(visits(g, Frontier::vertices({}), BalancedPartition{}).empty());
  }

  TEST_CASE("strategies visit identical multisets") {
    const CsrGraph g = mixed_degrees();
    const CsrGraph sf = build_csr(testing::generated("scalefree:5000", 3));
    std::mt19937_64 rng(5);
    for (const CsrGraph* graph : {&g, &sf}) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<item_t> items;
        const std::size_t size = 1 + rng() % 500;
        for (std::size_t i = 0; i < size; ++i) {
          items.push_back(static_cast<item_t>(rng() % static_cast<std::uint64_t>(graph->num_vertices())));
        }
        const Frontier f = Frontier::vertices(items);
        const auto reference = visits(*graph, f, PerElement{});
        CHECK(visits(*graph, f, SizeClassGrouping{}) == reference);
        CHECK(visits(*graph, f, BalancedPartition{7, Granularity::Edge}) == reference);
        CHECK(visits(*graph, f, BalancedPartition{7, Granularity::Node}) == reference);
      }
    }
  }

  TEST_CASE("edge frontier expands destinations") {
    const CsrGraph g = testing::g1();
    const auto v = visits(g, Frontier::edges({0, 1}), SizeClassGrouping{});
    REQUIRE(v.size() == 2);
    CHECK(std::get<1>(v[0]) == 1);
    CHECK(std::get<1>(v[1]) == 2);
    CHECK(std::get<2>(v[0]) == 3);
  }
}
