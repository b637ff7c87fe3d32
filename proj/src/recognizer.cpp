#include "zdg/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zdg {

namespace {

constexpr std::size_t kMaxRecognizedN = 30;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k with deg = 2^k - 1, or 0 if deg has no such form.
unsigned layer_for_degree(std::size_t deg) {
  const std::size_t d1 = deg + 1;
  if (!std::has_single_bit(d1)) return 0;
  return static_cast<unsigned>(std::countr_zero(d1));
}

Diagnosis hypotheses_given_clique(const Graph& g, const CliqueResult& clique) {
  if (clique.omega < 3)
    return Diagnosis::reject(checks::kCliqueNumber, clique.witness,
                             "clique number " + std::to_string(clique.omega) + " < 3");
  if (auto v = find_uncomplemented(g))
    return Diagnosis::reject(checks::kComplemented, {*v}, "vertex has no complement");
  if (auto t = find_complement_conflict(g))
    return Diagnosis::reject(checks::kUniquelyComplemented, {(*t)[0], (*t)[1], (*t)[2]},
                             "a ⊥ b, a ⊥ c but N(b) != N(c)");
  if (auto t = find_multiple_complements(g))
    return Diagnosis::reject(checks::kUniqueComplement, {(*t)[0], (*t)[1], (*t)[2]},
                             "vertex has more than one complement");
  return Diagnosis::accept();
}

}  // namespace

std::vector<std::size_t> StructurePartition::layer_sizes() const {
  std::vector<std::size_t> sizes(n > 0 ? n - 1 : 0, 0);
  for (auto k : layer_of) ++sizes[k - 1];
  return sizes;
}

std::vector<Vertex> StructurePartition::layer(unsigned k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < layer_of.size(); ++v)
    if (layer_of[v] == k) out.push_back(v);
  return out;
}

Diagnosis check_hypotheses(const Graph& g) {
  return hypotheses_given_clique(g, clique_number(g));
}

Checked<StructurePartition> build_partition(const Graph& g) {
  const CliqueResult clique = clique_number(g);
  if (clique.omega < 3)
    return {std::nullopt, hypotheses_given_clique(g, clique)};
  return build_partition(g, clique.witness);
}

Checked<StructurePartition> build_partition(const Graph& g, std::span<const Vertex> clique) {
  using Result = Checked<StructurePartition>;
  const std::size_t n = clique.size();
  std::vector<Vertex> a(clique.begin(), clique.end());
  if (n < 3 || !is_clique(g, a))
    return Result{std::nullopt, Diagnosis::reject(checks::kCliqueNumber, a,
                                                  "seed is not a clique of size >= 3")};

  StructurePartition p;
  p.n = n;
  p.a = a;
  for (Vertex ai : a) {
    const VertexSet comp = complements_of(g, ai);
    if (comp.count() != 1) {
      std::vector<Vertex> w{ai};
      for (auto c : comp.to_vector()) w.push_back(c);
      return Result{std::nullopt, Diagnosis::reject(checks::kUniqueComplement, std::move(w),
                                                    "clique vertex lacks a unique complement")};
    }
    p.b.push_back(comp.first());
  }

  VertexSet used = g.empty_set();
  for (Vertex ai : a) used.set(ai);
  for (std::size_t i = 0; i < n; ++i) {
    if (used.test(p.b[i]))
      return Result{std::nullopt,
                    Diagnosis::reject(checks::kBDistinct, {p.a[i], p.b[i]},
                                      "complement coincides with another a_j or b_j")};
    used.set(p.b[i]);
  }

  if (n > kMaxRecognizedN)
    return Result{std::nullopt, Diagnosis::reject(checks::kCount, a, "clique number too large")};

  p.layer_of.assign(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t d = degree(g, v);
    const unsigned k = layer_for_degree(d);
    if (k < 1 || k > n - 1)
      return Result{std::nullopt, Diagnosis::reject(checks::kDegreeForm, {v},
                                                    "degree " + std::to_string(d) +
                                                        " is not 2^k - 1 with 1 <= k < n")};
    p.layer_of[v] = k;
  }

  for (std::size_t i = 0; i < n; ++i)
    if (degree(g, p.b[i]) != 1)
      return Result{std::nullopt, Diagnosis::reject(checks::kEndDegree, {p.b[i]},
                                                    "complement of a_i is not an end")};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(p.b[i], p.b[j]))
        return Result{std::nullopt, Diagnosis::reject(checks::kBIndependent, {p.b[i], p.b[j]})};

  const auto sizes = p.layer_sizes();
  for (std::size_t k = 1; k < n; ++k)
    if (sizes[k - 1] != binomial(n, k))
      return Result{std::nullopt,
                    Diagnosis::reject(checks::kCount, p.layer(static_cast<unsigned>(k)),
                                      "|A_" + std::to_string(k) + "| = " +
                                          std::to_string(sizes[k - 1]) + ", expected " +
                                          std::to_string(binomial(n, k)))};

  return Result{std::move(p), Diagnosis::accept()};
}

Checked<IsomorphismMap> build_isomorphism(const Graph& g, const StructurePartition& p) {
  using Result = Checked<IsomorphismMap>;
  const std::size_t n = p.n;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  IsomorphismMap f;
  f.n = n;
  f.subset_of.assign(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    SubsetMask s = full;
    for (std::size_t i = 0; i < n; ++i)
      if (g.adjacent(v, p.a[i])) s &= ~(SubsetMask{1} << i);
    f.subset_of[v] = s;
  }
  for (std::size_t i = 0; i < n; ++i) f.subset_of[p.a[i]] = SubsetMask{1} << i;

  // Bijectivity onto the 2^n - 2 nonempty proper subsets.
  constexpr Vertex kFree = static_cast<Vertex>(-1);
  std::vector<Vertex> owner(std::size_t{1} << n, kFree);
  for (Vertex v = 0; v < g.size(); ++v) {
    const SubsetMask s = f.subset_of[v];
    if (s == 0 || s == full)
      return Result{std::nullopt, Diagnosis::reject(checks::kNotBijective, {v},
                                                    "image is empty or the whole set")};
    if (owner[s] != kFree)
      return Result{std::nullopt, Diagnosis::reject(checks::kNotBijective, {owner[s], v},
                                                    "two vertices share an image")};
    owner[s] = v;
  }
  if (g.size() != full - 1)
    return Result{std::nullopt,
                  Diagnosis::reject(checks::kNotBijective, {}, "image misses some subsets")};

  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) != ((f.subset_of[u] & f.subset_of[v]) == 0))
        return Result{std::nullopt, Diagnosis::reject(checks::kEdgeLaw, {u, v},
                                                      "adjacency disagrees with disjointness")};

  return Result{std::move(f), Diagnosis::accept()};
}

Recognition recognize(const Graph& g) {
  Recognition r;
  const CliqueResult clique = clique_number(g);
  r.omega = clique.omega;
  r.diagnosis = hypotheses_given_clique(g, clique);
  if (!r.diagnosis.accepted()) return r;

  auto part = build_partition(g, clique.witness);
  if (!part) {
    r.diagnosis = part.diagnosis;
    return r;
  }
  auto iso = build_isomorphism(g, *part.value);
  if (!iso) {
    r.diagnosis = iso.diagnosis;
    r.partition = std::move(part.value);
    return r;
  }

  const Graph target = powerset_graph(static_cast<unsigned>(part.value->n));
  const auto map = to_powerset_vertices(*iso.value);
  if (auto check = verify_isomorphism(g, target, map); !check) {
    std::vector<Vertex> w;
    if (check.witness) w = {check.witness->first, check.witness->second};
    r.diagnosis = Diagnosis::reject(checks::kVerify, std::move(w), check.reason);
    return r;
  }
  r.partition = std::move(part.value);
  r.iso = std::move(iso.value);
  return r;
}

IsomorphismCheck verify_isomorphism(const Graph& g, const Graph& h,
                                    std::span<const Vertex> map) {
  IsomorphismCheck out;
  auto fail = [&](std::string reason, std::optional<VertexPair> w) {
    out.ok = false;
    out.reason = std::move(reason);
    out.witness = w;
    return out;
  };
  if (g.size() != h.size()) return fail("vertex counts differ", std::nullopt);
  if (map.size() != g.size()) return fail("map is not total", std::nullopt);

  constexpr Vertex kFree = static_cast<Vertex>(-1);
  std::vector<Vertex> preimage(h.size(), kFree);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (map[v] >= h.size()) return fail("image out of range", VertexPair{v, v});
    if (preimage[map[v]] != kFree) return fail("not injective", VertexPair{preimage[map[v]], v});
    preimage[map[v]] = v;
  }

  for (Vertex u = 0; u < g.size(); ++u) {
    VertexSet image = h.empty_set();
    g.row(u).for_each([&](std::size_t w) { image.set(map[w]); });
    if (image == h.row(map[u])) continue;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (v == u || g.adjacent(u, v) == h.adjacent(map[u], map[v])) continue;
      return fail(g.adjacent(u, v) ? "edge not preserved" : "non-edge not preserved",
                  VertexPair{u, v});
    }
  }
  return out;
}

Graph powerset_graph(unsigned n) { return zero_divisor_graph(powerset_semigroup(n)).graph; }

std::vector<Vertex> to_powerset_vertices(const IsomorphismMap& iso) {
  std::vector<Vertex> out(iso.subset_of.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<Vertex>(iso.subset_of[v] - 1);
  return out;
}

CayleySemigroup reconstruct_semigroup(const Graph& g, const IsomorphismMap& iso) {
  const std::size_t n = iso.n;
  if (n == 0 || n > kMaxRecognizedN || iso.subset_of.size() != g.size())
    throw std::logic_error("reconstruct_semigroup: malformed isomorphism");
  const std::size_t order = g.size() + 2;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  if (order != full + 1) throw std::logic_error("reconstruct_semigroup: wrong vertex count");

  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> element_of_mask(full + 1, kNone);
  std::vector<SubsetMask> t(order);
  t[0] = 0;
  t[order - 1] = full;
  for (Vertex v = 0; v < g.size(); ++v) t[v + 1] = iso.subset_of[v];
  for (Element e = 0; e < order; ++e) {
    if (t[e] > full || element_of_mask[t[e]] != kNone)
      throw std::logic_error("reconstruct_semigroup: map is not a bijection");
    element_of_mask[t[e]] = e;
  }

  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) table[x * order + y] = element_of_mask[t[x] & t[y]];

  std::vector<std::string> labels;
  labels.reserve(order);
  labels.emplace_back("0");
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& l = g.label(v);
    labels.push_back(l == "0" || l == "1" ? "v" + l : l);
  }
  labels.emplace_back("1");

  auto res = validate(table, order, 0, std::move(labels));
  if (!res) throw std::logic_error("reconstruct_semigroup: result fails validation");
  return std::move(*res.semigroup);
}

}  // namespace zdg
