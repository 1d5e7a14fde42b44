#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"

namespace fgraph::bench {

enum class Primitive { Bfs, Sssp, Bc, Cc, Pagerank };
enum class OutputFormat { Table, Json, Csv };
enum class ValidationStatus { Passed, Failed, Skipped };

Primitive parse_primitive(const std::string& name);  // UsageError when unknown
const char* to_string(Primitive p);
OutputFormat parse_format(const std::string& name);
const char* to_string(ValidationStatus s);

inline constexpr edge_t kOracleEdgeLimit = 10'000'000;
inline constexpr vertex_t kBcOracleVertexLimit = 1'000;

struct RunConfig {
  Primitive primitive = Primitive::Bfs;
  std::string graph;  // Matrix Market path, or "gen:<spec>"
  bool undirected = false;
  bool random_weights = false;
  std::uint64_t seed = 1;
  std::string source = "random";  // vertex id, "random", or "all" (bc)
  int repetitions = 10;
  LoadBalanceOptions load_balance{};
  Direction direction = Direction::Push;
  bool idempotent = false;
  distance_t delta = 0;  // 0: default
  int threads = 0;       // 0: leave the pool alone
  OutputFormat format = OutputFormat::Table;
  bool validate = false;
  bool warmup = true;
  double damping = 0.85;
  double epsilon = 1e-6;
  std::size_t max_iters = 1000;
};

struct RunReport {
  int schema_version = 1;
  std::string primitive;
  std::string graph;
  vertex_t num_vertices = 0;
  edge_t num_edges = 0;
  std::vector<vertex_t> sources;
  std::string strategy;
  std::string direction;
  bool idempotent = false;
  distance_t delta = 0;
  int threads = 0;
  bool warmup = false;
  std::vector<double> runtimes_ms;
  double avg_runtime_ms = 0.0;
  std::uint64_t edges_traversed = 0;
  std::optional<double> mteps;
  std::size_t iterations = 0;
  std::string validation = "skipped";
  std::string validation_detail;
  std::string digest;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Result arrays of one primitive run; only the field matching the primitive is filled.
struct PrimitiveOutput {
  std::vector<std::int32_t> depths;
  std::vector<distance_t> distances;
  std::vector<double> scores;
  std::vector<vertex_t> components;
  std::vector<double> ranks;
  std::uint64_t edges_traversed = 0;
  std::size_t iterations = 0;
};

struct Validation {
  ValidationStatus status = ValidationStatus::Skipped;
  std::string detail;
};

// Loads or generates the graph and applies --undirected / --random-weights.
CsrGraph load_graph(const RunConfig& config);

// Resolves the source option to concrete vertices.
std::vector<vertex_t> resolve_sources(const RunConfig& config, const CsrGraph& g);

// One untimed execution of the configured primitive.
PrimitiveOutput execute(const RunConfig& config, const CsrGraph& g, const std::vector<vertex_t>& sources);

// Times the primitive on an already-built graph. Graph construction stays
// outside the timing window.
RunReport run(const RunConfig& config, const CsrGraph& g);
RunReport run(const RunConfig& config);

// Millions of traversed edges per second; nullopt when runtime is not positive.
std::optional<double> compute_mteps(std::uint64_t edges_traversed, double runtime_ms);

// Compares against the serial oracle. Skipped past the scale guards.
Validation validate(const RunConfig& config, const CsrGraph& g, const std::vector<vertex_t>& sources,
                    const PrimitiveOutput& output);

// FNV-1a over the result arrays, as 16 hex digits.
std::string digest(const PrimitiveOutput& output);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);
void emit_report(const RunReport& report, OutputFormat format, std::ostream& out);

}  // namespace fgraph::bench
