#pragma once

#include <cstdint>
#include <string>

#include "fgraph/graph.hpp"

namespace fgraph {

enum class GeneratorKind { UniformRandom, ScaleFree, Grid };

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::UniformRandom;
  vertex_t num_vertices = 0;  // uniform-random and scale-free
  edge_t num_edges = 0;       // uniform-random: exact number of distinct directed edges
  vertex_t rows = 0;          // grid
  vertex_t cols = 0;          // grid
  int edges_per_vertex = 4;   // scale-free: attachments made by each new vertex
  double exponent = 2.5;      // scale-free: target power-law exponent, must exceed 2
};

// Deterministic for a given (params, seed).
//  - UniformRandom: exactly num_edges distinct directed edges, no self-loops.
//  - ScaleFree: preferential attachment with initial attractiveness tuned so the
//    degree tail follows `exponent`; emitted in both directions, connected.
//  - Grid: rows x cols 4-neighbour lattice, emitted in both directions.
// Throws UsageError for infeasible parameters.
EdgeList generate_synthetic(const GeneratorParams& params, std::uint64_t seed);

// Parses "grid:RxC", "uniform:N:M" or "scalefree:N[:K[:EXPONENT]]".
GeneratorParams parse_generator_spec(const std::string& spec);

}  // namespace fgraph
