#include "zdg/enumerator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace zdg {

void check_config(const EnumerationConfig& c) {
  if (c.order < 1) throw std::invalid_argument("order must be at least 1");
  if (c.mode == EnumerationMode::Exhaustive && c.order > kMaxExhaustiveOrder)
    throw std::invalid_argument("exhaustive enumeration is limited to order <= 4");
  if (c.mode == EnumerationMode::RandomSample) {
    if (!c.seed) throw std::invalid_argument("random sampling requires a seed");
    if (c.order > kMaxSampleOrder) throw std::invalid_argument("sampling is limited to order <= 8");
  }
}

namespace {

constexpr Element kUnknown = static_cast<Element>(-1);

bool is_associative(const std::vector<Element>& t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element ij = t[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) return false;
    }
  return true;
}

// Associativity over the triples whose four products are already known.
bool partially_associative(const std::vector<Element>& t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element ij = t[i * n + j];
      if (ij == kUnknown) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Element jk = t[j * n + k];
        if (jk == kUnknown) continue;
        const Element lhs = t[ij * n + k];
        const Element rhs = t[i * n + jk];
        if (lhs != kUnknown && rhs != kUnknown && lhs != rhs) return false;
      }
    }
  return true;
}

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

struct Cell {
  std::size_t i, j;
};

// Cells of the table left free once zero, unity and idempotent constraints
// are pinned. Entries are stored symmetrically.
std::vector<Element> pinned_table(std::size_t n, const EnumerationConfig& c,
                                  std::vector<Cell>& free_cells) {
  std::vector<Element> t(n * n, kUnknown);
  for (std::size_t x = 0; x < n; ++x) t[x] = t[x * n] = 0;
  const std::size_t unity = c.require_unity && n > 1 ? n - 1 : 0;
  if (unity)
    for (std::size_t x = 0; x < n; ++x) t[unity * n + x] = t[x * n + unity] = static_cast<Element>(x);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (t[i * n + j] != kUnknown) continue;
      if (c.require_idempotent && i == j) {
        t[i * n + i] = static_cast<Element>(i);
        continue;
      }
      free_cells.push_back({i, j});
    }
  return t;
}

bool accepted(const CayleySemigroup& s, const EnumerationConfig& c) {
  if (c.require_idempotent && !all_idempotent(s)) return false;
  if (c.require_unity && !s.identity()) return false;
  return true;
}

void enumerate_exhaustive(const EnumerationConfig& c,
                          const std::function<void(const CayleySemigroup&)>& sink) {
  const std::size_t n = c.order;
  std::vector<Cell> cells;
  EnumerationConfig loose = c;
  loose.require_unity = false;  // filtered afterwards so no class is missed
  std::vector<Element> t = pinned_table(n, loose, cells);

  std::map<std::vector<Element>, bool> classes;
  std::vector<Element> digits(cells.size(), 0);
  while (true) {
    for (std::size_t q = 0; q < cells.size(); ++q) {
      const auto [i, j] = cells[q];
      t[i * n + j] = t[j * n + i] = digits[q];
    }
    if (is_associative(t, n)) {
      auto s = CayleySemigroup::unchecked(n, t);
      if (accepted(s, c)) classes.emplace(canonical_form(s), true);
    }
    std::size_t q = 0;
    while (q < digits.size() && ++digits[q] == n) digits[q++] = 0;
    if (q == digits.size()) break;
  }
  for (const auto& [form, _] : classes) sink(CayleySemigroup::unchecked(n, form));
}

class Sampler {
 public:
  Sampler(const EnumerationConfig& c, std::uint64_t seed) : c_(c), rng_(seed) {}

  CayleySemigroup next() {
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
      std::vector<Cell> cells;
      table_ = pinned_table(c_.order, c_, cells);
      shuffle(cells, rng_);
      cells_ = std::move(cells);
      budget_ = kNodeBudget;
      if (fill(0)) return CayleySemigroup::unchecked(c_.order, table_);
    }
    throw std::runtime_error("sampler: restart limit reached");
  }

 private:
  static constexpr int kMaxRestarts = 64;
  static constexpr long kNodeBudget = 20000;

  bool fill(std::size_t q) {
    if (q == cells_.size()) return true;
    if (--budget_ < 0) return false;
    const std::size_t n = c_.order;
    const auto [i, j] = cells_[q];
    std::vector<Element> values(n);
    std::iota(values.begin(), values.end(), Element{0});
    shuffle(values, rng_);
    for (Element v : values) {
      table_[i * n + j] = table_[j * n + i] = v;
      if (partially_associative(table_, n) && fill(q + 1)) return true;
      if (budget_ < 0) break;
    }
    table_[i * n + j] = table_[j * n + i] = kUnknown;
    return false;
  }

  const EnumerationConfig& c_;
  std::mt19937_64 rng_;
  std::vector<Element> table_;
  std::vector<Cell> cells_;
  long budget_ = 0;
};

}  // namespace

void enumerate(const EnumerationConfig& config,
               const std::function<void(const CayleySemigroup&)>& sink) {
  check_config(config);
  if (config.mode == EnumerationMode::Exhaustive) {
    enumerate_exhaustive(config, sink);
    return;
  }
  Sampler sampler(config, *config.seed);
  for (std::size_t k = 0; k < config.count; ++k) sink(sampler.next());
}

std::vector<CayleySemigroup> enumerate_all(const EnumerationConfig& config) {
  std::vector<CayleySemigroup> out;
  enumerate(config, [&](const CayleySemigroup& s) { out.push_back(s); });
  return out;
}

std::vector<Element> canonical_form(const CayleySemigroup& s) {
  const std::size_t n = s.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> best, cur(n * n);
  // perm[x] = new label of x; zero stays fixed.
  do {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        cur[perm[x] * n + perm[y]] =
            perm[s.multiply(static_cast<Element>(x), static_cast<Element>(y))];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::string canonical_hash(const CayleySemigroup& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(s.order());
  for (auto e : canonical_form(s)) mix(e);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return out;
}

PropertyReport property_suite(const Graph& g) {
  PropertyReport r;
  r.vertices = g.size();
  if (g.empty()) {
    r.diameter = 0;
    return r;
  }
  r.diameter = diameter(g);
  r.connected = r.diameter.has_value();
  r.diameter_ok = r.connected && *r.diameter <= 3;
  if (!r.diameter_ok) {
    // Witness: a pair at distance > 3, or unreachable from each other.
    for (Vertex u = 0; u < g.size() && r.witness.empty(); ++u) {
      const auto dist = distances_from(g, u);
      for (Vertex v = 0; v < g.size(); ++v)
        if (dist[v] == kUnreachable || dist[v] > 3) {
          r.witness = {u, v};
          break;
        }
    }
  }

  const VertexSet c = core(g);
  if (c.any()) {
    for (Vertex v = 0; v < g.size() && r.core_ok; ++v)
      if (!c.test(v) && degree(g, v) != 1) {
        r.core_ok = false;
        if (r.witness.empty()) r.witness = {v};
      }
    if (r.core_ok) {
      const auto bad = core_edges_off_short_cycles(g);
      if (!bad.empty()) {
        r.core_ok = false;
        if (r.witness.empty()) r.witness = {bad.front().first, bad.front().second};
      }
    }
  }

  if (auto pair = find_absorption_failure(g)) {
    r.absorption_ok = false;
    if (r.witness.empty()) r.witness = {pair->first, pair->second};
  }
  return r;
}

PropertyReport property_suite(const CayleySemigroup& s) {
  return property_suite(zero_divisor_graph(s).graph);
}

}  // namespace zdg
