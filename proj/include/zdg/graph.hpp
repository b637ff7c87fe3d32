#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

using Vertex = std::size_t;
using VertexSet = Bitset;
using VertexPair = std::pair<Vertex, Vertex>;

/// Undirected simple graph with one bitset adjacency row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const VertexPair> edges,
                          std::vector<std::string> labels = {});

  void add_edge(Vertex u, Vertex v);

  std::size_t size() const noexcept { return adj_.size(); }
  bool empty() const noexcept { return adj_.empty(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
  const VertexSet& row(Vertex v) const noexcept { return adj_[v]; }

  std::size_t edge_count() const noexcept;
  std::vector<VertexPair> edges() const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(Vertex v, std::string s) { labels_[v] = std::move(s); }

  /// Vertex set of the right capacity, all bits clear.
  VertexSet empty_set() const { return VertexSet(size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// G(S) together with the element each vertex stands for.
struct ZeroDivisorGraph {
  Graph graph;
  std::vector<Element> element_of;  // vertex -> element index
};

/// Vertices are the nonzero zero-divisors in increasing element order;
/// u ~ v iff u != v and u*v = 0.
ZeroDivisorGraph zero_divisor_graph(const CayleySemigroup& s);

/// Graph whose vertex perm[v] plays the role of vertex v of `g`.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Neighborhoods. All throw std::out_of_range for a bad vertex.
const VertexSet& neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
std::size_t degree(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// BFS distances from `src`; unreachable vertices get kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> distances_from(const Graph& g, Vertex src);

/// Maximum eccentricity; std::nullopt when the graph is disconnected.
/// The empty graph has diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

/// Vertices lying on at least one cycle (incident to a non-bridge edge).
VertexSet core(const Graph& g);

/// Edges of the core not lying on any 3- or 4-cycle; empty when every core
/// edge does.
std::vector<VertexPair> core_edges_off_short_cycles(const Graph& g);

/// a ~ b and N(a) ∩ N(b) = ∅. Throws std::invalid_argument if a == b.
bool is_orthogonal(const Graph& g, Vertex a, Vertex b);

/// { b : a ⊥ b }
VertexSet complements_of(const Graph& g, Vertex a);

/// First vertex without a complement.
std::optional<Vertex> find_uncomplemented(const Graph& g);
/// Triple (a, b, c) with a ⊥ b, a ⊥ c, b != c and N(b) != N(c).
std::optional<std::array<Vertex, 3>> find_complement_conflict(const Graph& g);
/// Triple (a, b, c): a has at least the two complements b and c.
std::optional<std::array<Vertex, 3>> find_multiple_complements(const Graph& g);

bool is_complemented(const Graph& g);
bool is_uniquely_complemented(const Graph& g);
bool has_unique_complement_per_vertex(const Graph& g);

/// Every non-adjacent pair {x, y} has some z with N(x) ∪ N(y) ⊆ N̄(z).
/// Returns the first failing pair, or nullopt if the property holds.
std::optional<VertexPair> find_absorption_failure(const Graph& g);
inline bool check_absorption_property(const Graph& g) {
  return !find_absorption_failure(g).has_value();
}

/// Vertices of degree 1.
VertexSet ends(const Graph& g);

}  // namespace zdg
