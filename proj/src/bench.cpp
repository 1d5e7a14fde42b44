#include "fgraph/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "fgraph/generators.hpp"
#include "fgraph/matrix_market.hpp"
#include "fgraph/oracles.hpp"
#include "fgraph/parallel.hpp"
#include "fgraph/primitives/bc.hpp"
#include "fgraph/primitives/bfs.hpp"
#include "fgraph/primitives/cc.hpp"
#include "fgraph/primitives/pagerank.hpp"
#include "fgraph/primitives/sssp.hpp"

namespace fgraph::bench {

Primitive parse_primitive(const std::string& name) {
  if (name == "bfs") return Primitive::Bfs;
  if (name == "sssp") return Primitive::Sssp;
  if (name == "bc") return Primitive::Bc;
  if (name == "cc") return Primitive::Cc;
  if (name == "pr" || name == "pagerank") return Primitive::Pagerank;
  throw UsageError("unknown primitive '" + name + "' (expected bfs, sssp, bc, cc or pr)");
}

const char* to_string(Primitive p) {
  switch (p) {
    case Primitive::Bfs: return "bfs";
    case Primitive::Sssp: return "sssp";
    case Primitive::Bc: return "bc";
    case Primitive::Cc: return "cc";
    case Primitive::Pagerank: return "pr";
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw UsageError("unknown format '" + name + "'");
}

const char* to_string(ValidationStatus s) {
  switch (s) {
    case ValidationStatus::Passed: return "passed";
    case ValidationStatus::Failed: return "failed";
    case ValidationStatus::Skipped: return "skipped";
  }
  return "?";
}

CsrGraph load_graph(const RunConfig& config) {
  EdgeList edges;
  if (config.graph.rfind("gen:", 0) == 0) {
    edges = generate_synthetic(parse_generator_spec(config.graph.substr(4)), config.seed);
  } else if (config.graph.empty()) {
    throw UsageError("no graph given");
  } else {
    edges = load_matrix_market(std::filesystem::path(config.graph));
  }
  if (config.undirected) edges = to_undirected(edges);
  if (config.random_weights) edges = assign_random_weights(edges, config.seed);
  return build_csr(edges);
}

std::vector<vertex_t> resolve_sources(const RunConfig& config, const CsrGraph& g) {
  const vertex_t n = g.num_vertices();
  if (n == 0) throw UsageError("graph has no vertices");
  if (config.primitive == Primitive::Cc || config.primitive == Primitive::Pagerank) return {};
  if (config.source == "all") {
    if (config.primitive != Primitive::Bc) throw UsageError("--src all is only meaningful for bc");
    std::vector<vertex_t> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  if (config.source == "random") {
    std::vector<vertex_t> candidates;
    for (vertex_t v = 0; v < n; ++v) {
      if (g.degree(v) > 0) candidates.push_back(v);
    }
    if (candidates.empty()) return {0};
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return {candidates[pick(rng)]};
  }
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(config.source, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != config.source.size()) throw UsageError("bad source '" + config.source + "'");
  if (v < 0 || v >= n) throw UsageError("source " + config.source + " out of range");
  return {static_cast<vertex_t>(v)};
}

PrimitiveOutput execute(const RunConfig& config, const CsrGraph& g, const std::vector<vertex_t>& sources) {
  PrimitiveOutput out;
  switch (config.primitive) {
    case Primitive::Bfs: {
      BfsOptions opt;
      opt.direction = config.direction;
      opt.idempotent = config.idempotent;
      opt.load_balance = config.load_balance;
      auto r = bfs(g, sources.at(0), opt);
      out.depths = std::move(r.labels);
      out.edges_traversed = r.stats.edges_inspected;
      out.iterations = r.stats.iterations;
      break;
    }
    case Primitive::Sssp: {
      SsspOptions opt;
      opt.delta = config.delta;
      opt.load_balance = config.load_balance;
      auto r = sssp(g, sources.at(0), opt);
      out.distances = std::move(r.labels);
      out.edges_traversed = r.stats.edges_inspected;
      out.iterations = r.stats.iterations;
      break;
    }
    case Primitive::Bc: {
      BcOptions opt;
      opt.load_balance = config.load_balance;
      auto r = betweenness(g, sources, opt);
      out.scores = std::move(r.bc);
      out.edges_traversed = r.stats.edges_inspected;
      out.iterations = r.stats.iterations;
      break;
    }
    case Primitive::Cc: {
      auto r = connected_components(g);
      out.components = std::move(r.component);
      out.edges_traversed = r.stats.edges_inspected;
      out.iterations = r.stats.iterations;
      break;
    }
    case Primitive::Pagerank: {
      PagerankOptions opt;
      opt.damping = config.damping;
      opt.epsilon = config.epsilon;
      opt.max_iters = config.max_iters;
      opt.load_balance = config.load_balance;
      auto r = pagerank(g, opt);
      out.ranks = std::move(r.rank);
      out.edges_traversed = r.stats.edges_inspected;
      out.iterations = r.iterations;
      break;
    }
  }
  return out;
}

std::optional<double> compute_mteps(std::uint64_t edges_traversed, double runtime_ms) {
  if (!(runtime_ms > 0.0)) return std::nullopt;
  return static_cast<double>(edges_traversed) / (runtime_ms * 1000.0);
}

RunReport run(const RunConfig& config, const CsrGraph& g) {
  if (config.repetitions < 1) throw UsageError("repetitions must be at least 1");
  if (config.primitive == Primitive::Sssp && !g.has_weights()) {
    throw UsageError("sssp needs edge weights; pass --random-weights or a weighted graph");
  }
  WorkerScope scope(config.threads);
  const auto sources = resolve_sources(config, g);

  RunReport report;
  report.primitive = to_string(config.primitive);
  report.graph = config.graph;
  report.num_vertices = g.num_vertices();
  report.num_edges = g.num_edges();
  report.sources = sources;
  report.strategy = to_string(config.load_balance.kind);
  report.direction = fgraph::to_string(config.direction);
  report.idempotent = config.idempotent;
  report.delta = config.primitive == Primitive::Sssp
                     ? (config.delta == 0 ? default_delta(g) : config.delta)
                     : 0;
  report.threads = worker_count();
  report.warmup = config.warmup;

  if (config.warmup) (void)execute(config, g, sources);

  PrimitiveOutput last;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    last = execute(config, g, sources);
    const auto stop = std::chrono::steady_clock::now();
    report.runtimes_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  report.avg_runtime_ms =
      std::accumulate(report.runtimes_ms.begin(), report.runtimes_ms.end(), 0.0) /
      static_cast<double>(report.runtimes_ms.size());
  report.edges_traversed = last.edges_traversed;
  report.iterations = last.iterations;
  report.mteps = compute_mteps(report.edges_traversed, report.avg_runtime_ms);
  report.digest = digest(last);

  if (config.validate) {
    const Validation v = validate(config, g, sources, last);
    report.validation = to_string(v.status);
    report.validation_detail = v.detail;
  }
  return report;
}

RunReport run(const RunConfig& config) {
  const CsrGraph g = load_graph(config);
  return run(config, g);
}

namespace {

template <class T>
std::string show(T value) {
  std::ostringstream s;
  if constexpr (std::is_same_v<T, distance_t>) {
    if (value == kInfDistance) return "inf";
  } else if constexpr (std::is_same_v<T, std::int32_t>) {
    if (value == kInfDepth) return "inf";
  }
  s << std::setprecision(17) << value;
  return s.str();
}

template <class T, class Equal>
Validation compare(const std::vector<T>& got, const std::vector<T>& expected, const char* what, Equal equal) {
  if (got.size() != expected.size()) {
    return {ValidationStatus::Failed, std::string(what) + " length " + std::to_string(got.size()) +
                                          ", expected " + std::to_string(expected.size())};
  }
  for (std::size_t v = 0; v < got.size(); ++v) {
    if (!equal(got[v], expected[v])) {
      return {ValidationStatus::Failed, std::string(what) + " mismatch at vertex " + std::to_string(v) + ": got " +
                                            show(got[v]) + ", expected " + show(expected[v])};
    }
  }
  return {ValidationStatus::Passed, ""};
}

}  // namespace

Validation validate(const RunConfig& config, const CsrGraph& g, const std::vector<vertex_t>& sources,
                    const PrimitiveOutput& output) {
  if (g.num_edges() > kOracleEdgeLimit) {
    return {ValidationStatus::Skipped, "graph exceeds the oracle edge limit"};
  }
  const auto exact = [](const auto& a, const auto& b) { return a == b; };
  switch (config.primitive) {
    case Primitive::Bfs:
      return compare(output.depths, oracle::bfs_depths(g, sources.at(0)), "label", exact);
    case Primitive::Sssp:
      return compare(output.distances, oracle::dijkstra(g, sources.at(0)), "distance", exact);
    case Primitive::Bc: {
      if (g.num_vertices() > kBcOracleVertexLimit) {
        return {ValidationStatus::Skipped, "graph exceeds the betweenness oracle vertex limit"};
      }
      const auto expected = oracle::brandes(g, sources);
      return compare(output.scores, expected, "bc", [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
      });
    }
    case Primitive::Cc: {
      const auto expected = oracle::components(g);
      if (oracle::same_partition(output.components, expected)) return {ValidationStatus::Passed, ""};
      for (std::size_t v = 0; v < expected.size(); ++v) {
        const auto root = static_cast<std::size_t>(expected[v]);
        if (output.components[v] != output.components[root]) {
          return {ValidationStatus::Failed, "component mismatch at vertex " + std::to_string(v) + ": split from " +
                                                std::to_string(root)};
        }
      }
      return {ValidationStatus::Failed, "separate components were merged"};
    }
    case Primitive::Pagerank: {
      const auto expected = oracle::power_iteration(g, config.damping);
      if (expected.size() != output.ranks.size()) return {ValidationStatus::Failed, "rank length mismatch"};
      double l1 = 0.0;
      std::size_t worst = 0;
      for (std::size_t v = 0; v < expected.size(); ++v) {
        const double diff = std::abs(output.ranks[v] - expected[v]);
        l1 += diff;
        if (diff > std::abs(output.ranks[worst] - expected[worst])) worst = v;
      }
      if (l1 <= 10.0 * config.epsilon) return {ValidationStatus::Passed, ""};
      std::ostringstream s;
      s << "rank L1 distance " << l1 << " exceeds " << 10.0 * config.epsilon << "; largest at vertex " << worst;
      return {ValidationStatus::Failed, s.str()};
    }
  }
  return {};
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  template <class T>
  void add(const std::vector<T>& values) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(values.data());
    const std::size_t count = values.size() * sizeof(T);
    for (std::size_t i = 0; i < count; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
    h ^= values.size();
    h *= 1099511628211ULL;
  }
};

}  // namespace

std::string digest(const PrimitiveOutput& output) {
  Fnv f;
  f.add(output.depths);
  f.add(output.distances);
  f.add(output.scores);
  f.add(output.components);
  f.add(output.ranks);
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << f.h;
  return s.str();
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["primitive"] = r.primitive;
  j["graph"] = r.graph;
  j["num_vertices"] = r.num_vertices;
  j["num_edges"] = r.num_edges;
  j["sources"] = r.sources;
  j["strategy"] = r.strategy;
  j["direction"] = r.direction;
  j["idempotent"] = r.idempotent;
  j["delta"] = r.delta;
  j["threads"] = r.threads;
  j["warmup"] = r.warmup;
  j["runtimes_ms"] = r.runtimes_ms;
  j["avg_runtime_ms"] = r.avg_runtime_ms;
  j["edges_traversed"] = r.edges_traversed;
  j["mteps"] = r.mteps ? nlohmann::json(*r.mteps) : nlohmann::json(nullptr);
  j["iterations"] = r.iterations;
  j["validation"] = r.validation;
  j["validation_detail"] = r.validation_detail;
  j["digest"] = r.digest;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("schema_version").get_to(r.schema_version);
  j.at("primitive").get_to(r.primitive);
  j.at("graph").get_to(r.graph);
  j.at("num_vertices").get_to(r.num_vertices);
  j.at("num_edges").get_to(r.num_edges);
  j.at("sources").get_to(r.sources);
  j.at("strategy").get_to(r.strategy);
  j.at("direction").get_to(r.direction);
  j.at("idempotent").get_to(r.idempotent);
  j.at("delta").get_to(r.delta);
  j.at("threads").get_to(r.threads);
  j.at("warmup").get_to(r.warmup);
  j.at("runtimes_ms").get_to(r.runtimes_ms);
  j.at("avg_runtime_ms").get_to(r.avg_runtime_ms);
  j.at("edges_traversed").get_to(r.edges_traversed);
  if (!j.at("mteps").is_null()) r.mteps = j.at("mteps").get<double>();
  j.at("iterations").get_to(r.iterations);
  j.at("validation").get_to(r.validation);
  j.at("validation_detail").get_to(r.validation_detail);
  j.at("digest").get_to(r.digest);
  return r;
}

namespace {

std::string mteps_text(const std::optional<double>& m) {
  if (!m) return "n/a";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << *m;
  return s.str();
}

}  // namespace

void emit_report(const RunReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << to_json(r).dump(2) << '\n';
      return;
    case OutputFormat::Csv: {
      out << "rep,runtime_ms,edges_traversed,mteps\n";
      const auto row = [&](const std::string& label, double ms, const std::optional<double>& m) {
        out << label << ',' << std::setprecision(9) << ms << ',' << r.edges_traversed << ','
            << (m ? mteps_text(m) : "") << '\n';
      };
      for (std::size_t i = 0; i < r.runtimes_ms.size(); ++i) {
        row(std::to_string(i + 1), r.runtimes_ms[i], compute_mteps(r.edges_traversed, r.runtimes_ms[i]));
      }
      row("avg", r.avg_runtime_ms, r.mteps);
      return;
    }
    case OutputFormat::Table: {
      out << "primitive   " << r.primitive << '\n'
          << "graph       " << r.graph << " (" << r.num_vertices << " vertices, " << r.num_edges << " edges)\n"
          << "strategy    " << r.strategy << ", direction " << r.direction << ", idempotent "
          << (r.idempotent ? "on" : "off") << ", threads " << r.threads << '\n';
      if (r.delta != 0) out << "delta       " << r.delta << '\n';
      if (r.sources.size() == 1) out << "source      " << r.sources.front() << '\n';
      if (r.sources.size() > 1) out << "sources     " << r.sources.size() << '\n';
      out << "warmup      " << (r.warmup ? "true" : "false") << '\n';
      out << std::left << std::setw(6) << "rep" << std::setw(14) << "runtime_ms" << std::setw(18)
          << "edges_traversed" << "MTEPS" << '\n';
      const auto row = [&](const std::string& label, double ms, const std::optional<double>& m) {
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << ms;
        out << std::left << std::setw(6) << label << std::setw(14) << t.str() << std::setw(18) << r.edges_traversed
            << mteps_text(m) << '\n';
      };
      for (std::size_t i = 0; i < r.runtimes_ms.size(); ++i) {
        row(std::to_string(i + 1), r.runtimes_ms[i], compute_mteps(r.edges_traversed, r.runtimes_ms[i]));
      }
      row("avg", r.avg_runtime_ms, r.mteps);
      out << "iterations  " << r.iterations << '\n'
          << "validation  " << r.validation;
      if (!r.validation_detail.empty()) out << " (" << r.validation_detail << ')';
      out << '\n' << "digest      " << r.digest << '\n';
      return;
    }
  }
}

}  // namespace fgraph::bench
