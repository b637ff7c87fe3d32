#include "zdg/equations.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace zdg {

EquationFrame frame_from_partition(const ZeroDivisorGraph& zg, const StructurePartition& p) {
  EquationFrame f;
  for (auto v : p.a) f.a.push_back(zg.element_of.at(v));
  for (auto v : p.b) f.b.push_back(zg.element_of.at(v));
  return f;
}

bool EquationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const EquationCheck* EquationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr std::size_t kMaxFrame = 20;

struct Recorder {
  EquationCheck check;
  explicit Recorder(std::string name) { check.name = std::move(name); }
  // Records only the first failure.
  void fail(std::vector<Element> witness, std::string detail) {
    if (!check.passed) return;
    check.passed = false;
    check.witness = std::move(witness);
    check.detail = std::move(detail);
  }
};

}  // namespace

EquationReport equation_suite(const CayleySemigroup& s, const EquationFrame& frame) {
  const std::size_t n = frame.a.size();
  if (n == 0 || n != frame.b.size() || n > kMaxFrame)
    throw std::invalid_argument("equation_suite: frame must hold n a's and n b's, 1 <= n <= 20");
  for (auto e : frame.a)
    if (e >= s.order()) throw std::out_of_range("equation_suite: frame element out of range");
  for (auto e : frame.b)
    if (e >= s.order()) throw std::out_of_range("equation_suite: frame element out of range");

  const auto& a = frame.a;
  const auto& b = frame.b;
  auto mul = [&](Element x, Element y) { return s.multiply(x, y); };
  auto in_range = [&](Element x) { return x < s.order(); };
  EquationReport report;

  {
    Recorder r("axioms");
    std::vector<Element> bad;
    for (std::size_t i = 0; i < s.order() && bad.empty(); ++i)
      for (std::size_t j = 0; j < s.order() && bad.empty(); ++j)
        if (!in_range(mul(static_cast<Element>(i), static_cast<Element>(j))))
          bad = {static_cast<Element>(i), static_cast<Element>(j)};
    if (!bad.empty()) {
      r.fail(bad, "product out of range");
      report.checks.push_back(r.check);
      return report;  // nothing else is meaningful on a table with bad entries
    }
    const auto violations = find_violations(s);
    if (!violations.empty()) {
      std::vector<Element> w;
      for (auto x : violations.front().witness) w.push_back(static_cast<Element>(x));
      r.fail(std::move(w), violations.front().describe());
    }
    report.checks.push_back(r.check);
  }

  Recorder ra("A"), rb("B"), rc("C"), rd("D");
  for (std::size_t i = 0; i < n; ++i) {
    if (mul(b[i], b[i]) != b[i]) rd.fail({b[i]}, "b_i^2 != b_i");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (mul(a[i], b[j]) == 0) ra.fail({a[i], b[j]}, "a_i*b_j = 0");
      if (mul(b[i], b[j]) == 0) rb.fail({b[i], b[j]}, "b_i*b_j = 0");
      if (mul(a[i], b[j]) != a[i]) rc.fail({a[i], b[j]}, "a_i*b_j != a_i");
    }
  }
  report.checks.push_back(ra.check);
  report.checks.push_back(rb.check);
  report.checks.push_back(rc.check);
  report.checks.push_back(rd.check);

  // Products of b over every nonempty index set, by increasing index.
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t all = subsets - 1;
  std::vector<Element> prod(subsets, 0);
  for (std::size_t m = 1; m < subsets; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    const std::size_t rest = m & (m - 1);
    prod[m] = rest == 0 ? b[low] : mul(b[low], prod[rest]);
  }

  {
    Recorder r("E");
    if (prod[all] != 0) r.fail({prod[all]}, "b_1*...*b_n != 0");
    report.checks.push_back(r.check);
  }
  {
    Recorder r("F");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t others = all & ~(std::size_t{1} << i);
      if (prod[others] != a[i]) r.fail({a[i], prod[others]}, "a_i != product of b_j, j != i");
    }
    report.checks.push_back(r.check);
  }
  {
    Recorder r("G");
    std::unordered_map<Element, std::size_t> seen;
    for (std::size_t m = 1; m < subsets; ++m) {
      auto [it, fresh] = seen.emplace(prod[m], m);
      if (!fresh)
        r.fail({prod[m]}, "index sets " + std::to_string(it->second) + " and " +
                              std::to_string(m) + " give the same product");
    }
    report.checks.push_back(r.check);
  }

  const ZeroDivisorGraph zg = zero_divisor_graph(s);
  std::vector<std::size_t> vertex_of(s.order(), static_cast<std::size_t>(-1));
  for (Vertex v = 0; v < zg.element_of.size(); ++v) vertex_of[zg.element_of[v]] = v;
  const auto is_vertex = [&](Element e) { return vertex_of[e] != static_cast<std::size_t>(-1); };
  {
    Recorder r("H");
    for (std::size_t m = 1; m < all; ++m) {
      const Element x = prod[m];
      const Element y = prod[all & ~m];
      if (!is_vertex(x) || !is_vertex(y)) {
        r.fail({x, y}, "split product is not a vertex of G(S)");
        continue;
      }
      const VertexSet comp = complements_of(zg.graph, vertex_of[x]);
      if (comp.count() != 1 || !comp.test(vertex_of[y]))
        r.fail({x, y}, "prod(I') is not the unique complement of prod(I)");
    }
    report.checks.push_back(r.check);
  }
  {
    Recorder r("idem");
    for (auto e : zg.element_of)
      if (mul(e, e) != e) r.fail({e}, "x^2 != x");
    report.checks.push_back(r.check);
  }
  return report;
}

}  // namespace zdg
