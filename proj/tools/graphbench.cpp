// graphbench: run one primitive on a Matrix Market file or a generated graph
// and report runtime, MTEPS and (optionally) oracle validation.

#include <CLI11.hpp>

#include <iostream>

#include "fgraph/bench.hpp"
#include "fgraph/primitives/sssp.hpp"

namespace {

fgraph::Direction parse_direction(const std::string& name) {
  if (name == "push") return fgraph::Direction::Push;
  if (name == "pull") return fgraph::Direction::Pull;
  if (name == "auto") return fgraph::Direction::Auto;
  throw fgraph::UsageError("unknown direction '" + name + "'");
}

fgraph::distance_t parse_delta(const std::string& text) {
  if (text == "inf") return fgraph::kInfiniteDelta;
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value <= 0) throw fgraph::UsageError("--delta expects a positive integer or 'inf'");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  namespace fb = fgraph::bench;
  CLI::App app{"Frontier-based graph primitive benchmark"};

  std::string primitive;
  std::string strategy = "auto";
  std::string direction = "push";
  std::string idempotent = "off";
  std::string delta;
  std::string format = "table";
  fb::RunConfig config;
  bool no_warmup = false;

  app.add_option("primitive", primitive, "bfs | sssp | bc | cc | pr")->required();
  app.add_option("--graph", config.graph, "Matrix Market path or gen:<spec> (grid:RxC, uniform:N:M, scalefree:N[:K[:EXP]])")
      ->required();
  app.add_flag("--undirected", config.undirected, "Symmetrize the input and drop self-loops");
  app.add_flag("--random-weights", config.random_weights, "Assign integer weights in [1, 64]");
  app.add_option("--seed", config.seed, "Seed for generators, weights and random sources");
  app.add_option("--src", config.source, "Source vertex, 'random', or 'all' (bc)");
  app.add_option("--reps", config.repetitions, "Timed repetitions")->check(CLI::PositiveNumber);
  app.add_option("--strategy", strategy, "auto | per-element | size-class | balanced");
  app.add_option("--lb-threshold", config.load_balance.threshold, "Frontier size where balanced chunks switch to edge granularity");
  app.add_option("--chunk-size", config.load_balance.chunk_size, "Edges per balanced chunk")->check(CLI::PositiveNumber);
  app.add_option("--small-max", config.load_balance.small_max, "Largest degree in the small size class");
  app.add_option("--medium-max", config.load_balance.medium_max, "Largest degree in the medium size class");
  app.add_option("--direction", direction, "push | pull | auto");
  app.add_option("--idempotent", idempotent, "on | off")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--delta", delta, "Near/far band width, or 'inf'");
  app.add_option("--threads", config.threads, "Worker cap");
  app.add_option("--format", format, "table | json | csv");
  app.add_flag("--validate", config.validate, "Compare against the serial oracle");
  app.add_option("--damping", config.damping, "PageRank damping factor");
  app.add_option("--epsilon", config.epsilon, "PageRank convergence threshold");
  app.add_option("--max-iters", config.max_iters, "PageRank iteration cap");
  app.add_flag("--no-warmup", no_warmup, "Skip the untimed warm-up run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.primitive = fb::parse_primitive(primitive);
    config.load_balance.kind = fgraph::parse_strategy_kind(strategy);
    config.direction = parse_direction(direction);
    config.idempotent = idempotent == "on";
    if (!delta.empty()) config.delta = parse_delta(delta);
    config.format = fb::parse_format(format);
    config.warmup = !no_warmup;

    const fb::RunReport report = fb::run(config);
    fb::emit_report(report, config.format, std::cout);
    return report.validation == "failed" ? 1 : 0;
  } catch (const fgraph::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
