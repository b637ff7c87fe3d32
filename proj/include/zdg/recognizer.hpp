#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/clique.hpp"
#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Subset of {x1..xn}; bit i-1 stands for xi.
using SubsetMask = std::uint64_t;

/// Frozen names of every check the recognizer can fail.
namespace checks {
inline constexpr std::string_view kCliqueNumber = "hyp:clique-number";
inline constexpr std::string_view kComplemented = "hyp:complemented";
inline constexpr std::string_view kUniquelyComplemented = "hyp:uniquely-complemented";
inline constexpr std::string_view kUniqueComplement = "hyp:unique-complement";
inline constexpr std::string_view kBDistinct = "obs2:b-distinct";
inline constexpr std::string_view kDegreeForm = "obs9:degree-form";
inline constexpr std::string_view kEndDegree = "obs4:end-degree";
inline constexpr std::string_view kBIndependent = "obs3:b-independent";
inline constexpr std::string_view kCount = "obs13:count";
inline constexpr std::string_view kNotBijective = "iso:not-bijective";
inline constexpr std::string_view kEdgeLaw = "iso:edge-law";
inline constexpr std::string_view kVerify = "iso:verify";

inline constexpr std::string_view kAll[] = {
    kCliqueNumber, kComplemented, kUniquelyComplemented, kUniqueComplement,
    kBDistinct,    kDegreeForm,   kEndDegree,            kBIndependent,
    kCount,        kNotBijective, kEdgeLaw,              kVerify};
}  // namespace checks

enum class Verdict { Accepted, Rejected };

struct Diagnosis {
  Verdict verdict = Verdict::Accepted;
  std::string failed_check;     // empty when accepted
  std::vector<Vertex> witness;  // vertices of the input graph
  std::string detail;

  bool accepted() const noexcept { return verdict == Verdict::Accepted; }

  static Diagnosis accept() { return {}; }
  static Diagnosis reject(std::string_view check, std::vector<Vertex> witness,
                          std::string detail = {}) {
    return {Verdict::Rejected, std::string(check), std::move(witness), std::move(detail)};
  }
};

/// The clique a1..an, the ends b1..bn (bi the complement of ai) and the
/// degree layers A1..A(n-1).
struct StructurePartition {
  std::size_t n = 0;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<unsigned> layer_of;  // vertex -> k, 1 <= k <= n-1

  std::vector<std::size_t> layer_sizes() const;  // index k-1 -> |A_k|
  std::vector<Vertex> layer(unsigned k) const;
};

/// f: V(G) -> nonempty proper subsets of {x1..xn}.
struct IsomorphismMap {
  std::size_t n = 0;
  std::vector<SubsetMask> subset_of;
};

template <typename T>
struct Checked {
  std::optional<T> value;
  Diagnosis diagnosis;

  explicit operator bool() const noexcept { return value.has_value(); }
};

/// Hypotheses in order: clique number >= 3, complemented, uniquely
/// complemented, exactly one complement per vertex.
Diagnosis check_hypotheses(const Graph& g);

/// Partition seeded with the canonical maximum-clique witness.
Checked<StructurePartition> build_partition(const Graph& g);
/// Partition seeded with an explicit ordered clique a1..an.
Checked<StructurePartition> build_partition(const Graph& g, std::span<const Vertex> clique);

/// f(ai) = {i}; otherwise f(v) = { i : ai not in N(v) }. Verified for
/// bijectivity and the edge law before being returned.
Checked<IsomorphismMap> build_isomorphism(const Graph& g, const StructurePartition& p);

struct Recognition {
  Diagnosis diagnosis;
  std::size_t omega = 0;  // clique number of the input
  std::optional<StructurePartition> partition;
  std::optional<IsomorphismMap> iso;
};

/// Full pipeline. An accepted result has been re-checked by
/// verify_isomorphism against G(P(n)).
Recognition recognize(const Graph& g);

struct IsomorphismCheck {
  bool ok = true;
  std::string reason;
  std::optional<VertexPair> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that `map` (V(g) -> V(h)) is a bijection preserving adjacency and
/// non-adjacency.
IsomorphismCheck verify_isomorphism(const Graph& g, const Graph& h,
                                    std::span<const Vertex> map);

/// G(P(n)). Vertex v is the subset with bitmask v + 1.
Graph powerset_graph(unsigned n);

/// The vertex map V(g) -> V(G(P(n))) induced by `iso`.
std::vector<Vertex> to_powerset_vertices(const IsomorphismMap& iso);

/// Semigroup on V(G) ∪ {0, 1} with x*y = T^-1(T(x) ∩ T(y)), where T extends
/// f by T(0) = ∅ and T(1) = X.
///
/// Element 0 is the zero, element v + 1 is vertex v, and the last element is
/// the unity. Throws std::logic_error if `iso` is not a bijection onto the
/// nonempty proper subsets.
CayleySemigroup reconstruct_semigroup(const Graph& g, const IsomorphismMap& iso);

}  // namespace zdg
