#include "fgraph/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace fgraph {

namespace {

EdgeList make_grid(vertex_t rows, vertex_t cols) {
  if (rows < 1 || cols < 1) throw UsageError("grid dimensions must be positive");
  if (static_cast<std::int64_t>(rows) * cols > std::numeric_limits<vertex_t>::max()) {
    throw UsageError("grid too large for 32-bit vertex ids");
  }
  EdgeList out;
  out.num_vertices = rows * cols;
  auto id = [cols](vertex_t r, vertex_t c) { return r * cols + c; };
  for (vertex_t r = 0; r < rows; ++r) {
    for (vertex_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        out.edges.push_back({id(r, c), id(r, c + 1), 0});
        out.edges.push_back({id(r, c + 1), id(r, c), 0});
      }
      if (r + 1 < rows) {
        out.edges.push_back({id(r, c), id(r + 1, c), 0});
        out.edges.push_back({id(r + 1, c), id(r, c), 0});
      }
    }
  }
  return out;
}

EdgeList make_uniform(vertex_t n, edge_t m, std::mt19937_64& rng) {
  if (n < 1) throw UsageError("uniform-random graph needs at least one vertex");
  const edge_t capacity = static_cast<edge_t>(n) * (n - 1);
  if (m < 0 || m > capacity) {
    throw UsageError("cannot place " + std::to_string(m) + " distinct edges on " + std::to_string(n) +
                     " vertices (max " + std::to_string(capacity) + ")");
  }
  std::vector<std::uint64_t> keys;
  if (m > capacity / 2) {
    // Dense request: enumerate every candidate and sample without replacement.
    keys.reserve(static_cast<std::size_t>(capacity));
    for (vertex_t u = 0; u < n; ++u) {
      for (vertex_t v = 0; v < n; ++v) {
        if (u != v) keys.push_back(static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v);
      }
    }
  } else {
    std::uniform_int_distribution<vertex_t> pick(0, n - 1);
    keys.reserve(static_cast<std::size_t>(m));
    while (static_cast<edge_t>(keys.size()) < m) {
      const edge_t missing = m - static_cast<edge_t>(keys.size());
      for (edge_t i = 0; i < missing + missing / 8 + 1; ++i) {
        vertex_t u = pick(rng), v = pick(rng);
        if (u != v) keys.push_back(static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v);
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
  }
  std::shuffle(keys.begin(), keys.end(), rng);
  keys.resize(static_cast<std::size_t>(m));

  EdgeList out;
  out.num_vertices = n;
  out.edges.reserve(keys.size());
  for (std::uint64_t key : keys) {
    out.edges.push_back({static_cast<vertex_t>(key / static_cast<std::uint64_t>(n)),
                         static_cast<vertex_t>(key % static_cast<std::uint64_t>(n)), 0});
  }
  return out;
}

// Attachment probability of an existing vertex is proportional to
// degree + A with A = k * (exponent - 3), which yields a tail exponent of
// `exponent`. Written as (times chosen) + k * (exponent - 2): a mixture of
// choosing uniformly from a list of past targets and uniformly over vertices.
EdgeList make_scale_free(vertex_t n, int k, double exponent, std::mt19937_64& rng) {
  if (k < 1) throw UsageError("scale-free generator needs edges_per_vertex >= 1");
  if (!(exponent > 2.0)) throw UsageError("scale-free exponent must exceed 2");
  if (n < k + 1) throw UsageError("scale-free generator needs more than edges_per_vertex vertices");

  const double base = static_cast<double>(k) * (exponent - 2.0);
  EdgeList out;
  out.num_vertices = n;
  out.edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k) * 2);
  std::vector<vertex_t> chosen;
  chosen.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));

  // Seed clique on k + 1 vertices.
  for (vertex_t u = 0; u <= k; ++u) {
    for (vertex_t v = u + 1; v <= k; ++v) {
      out.edges.push_back({u, v, 0});
      out.edges.push_back({v, u, 0});
    }
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<vertex_t> picks;
  for (vertex_t t = k + 1; t < n; ++t) {
    picks.clear();
    const double uniform_mass = base * t;
    const double total = static_cast<double>(chosen.size()) + uniform_mass;
    while (static_cast<int>(picks.size()) < k) {
      const double x = unit(rng) * total;
      vertex_t target;
      if (x < static_cast<double>(chosen.size())) {
        target = chosen[static_cast<std::size_t>(x)];
      } else {
        target = std::min<vertex_t>(t - 1, static_cast<vertex_t>(unit(rng) * t));
      }
      if (std::find(picks.begin(), picks.end(), target) == picks.end()) picks.push_back(target);
    }
    for (vertex_t target : picks) {
      out.edges.push_back({t, target, 0});
      out.edges.push_back({target, t, 0});
      chosen.push_back(target);
    }
  }
  return out;
}

}  // namespace

EdgeList generate_synthetic(const GeneratorParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (params.kind) {
    case GeneratorKind::Grid:
      return make_grid(params.rows, params.cols);
    case GeneratorKind::UniformRandom:
      return make_uniform(params.num_vertices, params.num_edges, rng);
    case GeneratorKind::ScaleFree:
      return make_scale_free(params.num_vertices, params.edges_per_vertex, params.exponent, rng);
  }
  throw UsageError("unknown generator kind");
}

GeneratorParams parse_generator_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw UsageError("empty generator spec");

  auto number = [&](const std::string& text) -> long long {
    try {
      std::size_t used = 0;
      long long value = std::stoll(text, &used);
      if (used != text.size()) throw UsageError("");
      return value;
    } catch (const std::exception&) {
      throw UsageError("bad number '" + text + "' in generator spec '" + spec + "'");
    }
  };

  GeneratorParams p;
  const std::string& kind = parts[0];
  if (kind == "grid" && parts.size() == 2) {
    auto x = parts[1].find('x');
    if (x == std::string::npos) throw UsageError("grid spec must look like grid:RxC");
    p.kind = GeneratorKind::Grid;
    p.rows = static_cast<vertex_t>(number(parts[1].substr(0, x)));
    p.cols = static_cast<vertex_t>(number(parts[1].substr(x + 1)));
  } else if (kind == "uniform" && parts.size() == 3) {
    p.kind = GeneratorKind::UniformRandom;
    p.num_vertices = static_cast<vertex_t>(number(parts[1]));
    p.num_edges = number(parts[2]);
  } else if (kind == "scalefree" && parts.size() >= 2 && parts.size() <= 4) {
    p.kind = GeneratorKind::ScaleFree;
    p.num_vertices = static_cast<vertex_t>(number(parts[1]));
    if (parts.size() >= 3) p.edges_per_vertex = static_cast<int>(number(parts[2]));
    if (parts.size() == 4) {
      try {
        p.exponent = std::stod(parts[3]);
      } catch (const std::exception&) {
        throw UsageError("bad exponent '" + parts[3] + "'");
      }
    }
  } else {
    throw UsageError("unrecognised generator spec '" + spec +
                     "' (expected grid:RxC, uniform:N:M or scalefree:N[:K[:EXPONENT]])");
  }
  return p;
}

}  // namespace fgraph
