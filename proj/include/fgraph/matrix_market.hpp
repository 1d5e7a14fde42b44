#pragma once

#include <filesystem>
#include <iosfwd>

#include "fgraph/graph.hpp"

namespace fgraph {

// Reads a `%%MatrixMarket matrix coordinate {pattern|integer|real}
// {general|symmetric}` stream. File coordinates are 1-indexed; the returned
// vertex ids are 0-indexed and num_vertices = max(rows, cols). Symmetric
// off-diagonal entries emit both directions. Real values become
// max(1, round(value)). Throws ParseError with the offending line number.
EdgeList load_matrix_market(std::istream& in);
EdgeList load_matrix_market(const std::filesystem::path& path);

// Writes a general coordinate matrix: `integer` when weighted, else `pattern`.
void write_matrix_market(std::ostream& out, const EdgeList& edges);

}  // namespace fgraph
