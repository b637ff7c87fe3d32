#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct CliqueResult {
  std::size_t omega = 0;
  std::vector<Vertex> witness;  // ascending vertex indices
};

/// Exact maximum clique by branch and bound on bitsets, pruned with a
/// greedy colouring bound.
///
/// The witness is the lexicographically smallest maximum clique under vertex
/// index order, so the result depends only on the graph.
CliqueResult clique_number(const Graph& g);

/// Some clique of exactly `k` vertices drawn from `candidates`, if any.
std::optional<std::vector<Vertex>> find_clique_of_size(const Graph& g,
                                                       const VertexSet& candidates,
                                                       std::size_t k);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace zdg
