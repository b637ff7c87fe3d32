#include "zdg/clique.hpp"

#include <algorithm>

namespace zdg {

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g) {}

  // Searches for a clique larger than `floor`; with `stop_at` set, returns as
  // soon as one of that size is found.
  void run(const VertexSet& candidates, std::size_t floor, std::optional<std::size_t> stop_at) {
    best_size_ = floor;
    stop_at_ = stop_at;
    best_.clear();
    current_.clear();
    done_ = false;
    expand(candidates);
  }

  std::size_t best_size() const { return best_size_; }
  const std::vector<Vertex>& best() const { return best_; }

 private:
  // Greedy sequential colouring. Vertices come out grouped by colour class,
  // with bound[i] = colour of order[i] (non-decreasing).
  void colour(const VertexSet& p, std::vector<Vertex>& order,
              std::vector<std::size_t>& bound) const {
    VertexSet uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      for (std::size_t v = q.first(); v != VertexSet::npos; v = q.next(v + 1)) {
        uncoloured.reset(v);
        q.subtract(g_.row(v));
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(VertexSet p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_size_) return;
      const Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = p & g_.row(v);
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
          if (stop_at_ && best_size_ >= *stop_at_) done_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (done_) return;
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_size_ = 0;
  std::optional<std::size_t> stop_at_;
  std::vector<Vertex> best_;
  std::vector<Vertex> current_;
  bool done_ = false;
};

}  // namespace

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

std::optional<std::vector<Vertex>> find_clique_of_size(const Graph& g,
                                                       const VertexSet& candidates,
                                                       std::size_t k) {
  if (k == 0) return std::vector<Vertex>{};
  BranchAndBound bb(g);
  bb.run(candidates, k - 1, k);
  if (bb.best_size() < k) return std::nullopt;
  std::vector<Vertex> w(bb.best().begin(), bb.best().begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(w.begin(), w.end());
  return w;
}

CliqueResult clique_number(const Graph& g) {
  CliqueResult res;
  if (g.empty()) return res;
  BranchAndBound bb(g);
  bb.run(VertexSet::full(g.size()), 0, std::nullopt);
  res.omega = bb.best_size();

  // Extract the lexicographically smallest maximum clique: take the smallest
  // vertex that still extends to a clique of the required size.
  VertexSet cand = VertexSet::full(g.size());
  std::size_t need = res.omega;
  for (Vertex v = cand.first(); need > 0 && v != VertexSet::npos; v = cand.next(v + 1)) {
    VertexSet rest = cand & g.row(v);
    for (Vertex u = rest.first(); u != VertexSet::npos && u <= v; u = rest.next(u + 1))
      rest.reset(u);
    if (need == 1 || find_clique_of_size(g, rest, need - 1)) {
      res.witness.push_back(v);
      --need;
      rest.set(v);  // keep v so the loop advances from it
      cand = std::move(rest);
    }
  }
  return res;
}

}  // namespace zdg
