#include "zdg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdg {

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : adj_(n, VertexSet(n)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw std::invalid_argument("Graph: label count does not match vertex count");
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const VertexPair> edges,
                        std::vector<std::string> labels) {
  Graph g(n, std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : adj_) twice += r.count();
  return twice / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

ZeroDivisorGraph zero_divisor_graph(const CayleySemigroup& s) {
  const ElementSet z = zero_divisor_set(s);
  ZeroDivisorGraph out;
  for (std::size_t e = z.first(); e != ElementSet::npos; e = z.next(e + 1))
    out.element_of.push_back(static_cast<Element>(e));
  std::vector<std::string> labels;
  labels.reserve(out.element_of.size());
  for (auto e : out.element_of) labels.push_back(s.label(e));
  out.graph = Graph(out.element_of.size(), std::move(labels));
  const auto& el = out.element_of;
  for (Vertex u = 0; u < el.size(); ++u)
    for (Vertex v = u + 1; v < el.size(); ++v)
      if (s.multiply(el[u], el[v]) == 0) out.graph.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.size()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<std::string> labels(g.size());
  for (Vertex v = 0; v < g.size(); ++v) labels.at(perm[v]) = g.label(v);
  Graph h(g.size(), std::move(labels));
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

// Eccentricity of `src`, or nullopt if some vertex is unreachable.
std::optional<std::size_t> eccentricity(const Graph& g, Vertex src) {
  VertexSet visited = g.empty_set();
  VertexSet frontier = g.empty_set();
  visited.set(src);
  frontier.set(src);
  std::size_t depth = 0;
  std::size_t seen = 1;
  while (true) {
    VertexSet next = g.empty_set();
    frontier.for_each([&](std::size_t u) { next |= g.row(u); });
    next.subtract(visited);
    if (next.none()) break;
    ++depth;
    seen += next.count();
    visited |= next;
    frontier = std::move(next);
  }
  if (seen != g.size()) return std::nullopt;
  return depth;
}

}  // namespace

const VertexSet& neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.row(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet s = g.row(v);
  s.set(v);
  return s;
}

std::size_t degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.row(v).count();
}

bool is_connected(const Graph& g) {
  return g.empty() || eccentricity(g, 0).has_value();
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex src) {
  check_vertex(g, src);
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  VertexSet visited = g.empty_set();
  VertexSet frontier = g.empty_set();
  visited.set(src);
  frontier.set(src);
  for (std::size_t depth = 0; frontier.any(); ++depth) {
    VertexSet next = g.empty_set();
    frontier.for_each([&](std::size_t u) {
      dist[u] = depth;
      next |= g.row(u);
    });
    next.subtract(visited);
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

VertexSet core(const Graph& g) {
  // Iterative Tarjan bridge search; a vertex is in the core iff it touches
  // an edge that is not a bridge.
  const std::size_t n = g.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.row(v).to_vector();
  std::vector<std::size_t> cursor(n, 0);
  VertexSet on_cycle = g.empty_set();
  std::size_t timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      if (cursor[u] < nbrs[u].size()) {
        const Vertex w = nbrs[u][cursor[u]++];
        if (disc[w] == kUnseen) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[u];
      if (p == kUnseen) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] <= disc[p]) {  // tree edge p-u is not a bridge
        on_cycle.set(p);
        on_cycle.set(u);
      }
    }
  }
  // Back edges are never bridges.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : nbrs[u])
      if (parent[w] != u && parent[u] != w) {
        on_cycle.set(u);
        on_cycle.set(w);
      }
  return on_cycle;
}

std::vector<VertexPair> core_edges_off_short_cycles(const Graph& g) {
  const VertexSet c = core(g);
  std::vector<VertexPair> bad;
  for (auto [u, v] : g.edges()) {
    if (!c.test(u) || !c.test(v)) continue;
    if (g.row(u).intersects(g.row(v))) continue;  // triangle
    bool square = false;
    g.row(v).for_each([&](std::size_t w) {
      if (square || w == u) return;
      VertexSet x = g.row(w) & g.row(u);
      x.reset(v);
      square = x.any();
    });
    if (!square) bad.emplace_back(u, v);
  }
  return bad;
}

bool is_orthogonal(const Graph& g, Vertex a, Vertex b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw std::invalid_argument("is_orthogonal: vertices must be distinct");
  return g.adjacent(a, b) && !g.row(a).intersects(g.row(b));
}

VertexSet complements_of(const Graph& g, Vertex a) {
  check_vertex(g, a);
  VertexSet out = g.empty_set();
  g.row(a).for_each([&](std::size_t b) {
    if (!g.row(a).intersects(g.row(b))) out.set(b);
  });
  return out;
}

std::optional<Vertex> find_uncomplemented(const Graph& g) {
  for (Vertex a = 0; a < g.size(); ++a)
    if (complements_of(g, a).none()) return a;
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_complement_conflict(const Graph& g) {
  for (Vertex a = 0; a < g.size(); ++a) {
    const auto comp = complements_of(g, a).to_vector();
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!(g.row(comp[i]) == g.row(comp[j]))) return std::array{a, comp[i], comp[j]};
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_multiple_complements(const Graph& g) {
  for (Vertex a = 0; a < g.size(); ++a) {
    const VertexSet comp = complements_of(g, a);
    if (comp.count() > 1) {
      const Vertex b = comp.first();
      return std::array{a, b, comp.next(b + 1)};
    }
  }
  return std::nullopt;
}

bool is_complemented(const Graph& g) { return !find_uncomplemented(g); }

bool is_uniquely_complemented(const Graph& g) {
  return is_complemented(g) && !find_complement_conflict(g);
}

bool has_unique_complement_per_vertex(const Graph& g) {
  for (Vertex a = 0; a < g.size(); ++a)
    if (complements_of(g, a).count() != 1) return false;
  return true;
}

std::optional<VertexPair> find_absorption_failure(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<VertexSet> closed;
  closed.reserve(n);
  for (Vertex z = 0; z < n; ++z) closed.push_back(closed_neighborhood(g, z));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      const VertexSet u = g.row(x) | g.row(y);
      bool found = false;
      for (Vertex z = 0; z < n && !found; ++z) found = u.is_subset_of(closed[z]);
      if (!found) return VertexPair{x, y};
    }
  return std::nullopt;
}

VertexSet ends(const Graph& g) {
  VertexSet out = g.empty_set();
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.row(v).count() == 1) out.set(v);
  return out;
}

}  // namespace zdg
