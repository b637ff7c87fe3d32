#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

enum class EnumerationMode { Exhaustive, RandomSample };

inline constexpr std::size_t kMaxExhaustiveOrder = 4;
inline constexpr std::size_t kMaxSampleOrder = 8;

struct EnumerationConfig {
  std::size_t order = 1;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  std::size_t count = 0;               // samples to draw (RandomSample)
  std::optional<std::uint64_t> seed;   // required for RandomSample
  bool require_idempotent = false;
  bool require_unity = false;
};

/// Throws std::invalid_argument describing the first problem.
void check_config(const EnumerationConfig& config);

/// Exhaustive mode emits one representative per isomorphism class (the
/// canonical form, in increasing canonical order). Sampling mode emits
/// `count` tables built by randomized fill with backtracking; repeats are
/// possible. Identical configs give identical streams.
void enumerate(const EnumerationConfig& config,
               const std::function<void(const CayleySemigroup&)>& sink);

std::vector<CayleySemigroup> enumerate_all(const EnumerationConfig& config);

/// Row-major table minimised over all relabelings of the nonzero elements.
/// Feasible only for small orders (cost (order-1)!).
std::vector<Element> canonical_form(const CayleySemigroup& s);

/// 64-bit FNV-1a hash of the canonical form, as 16 hex digits.
std::string canonical_hash(const CayleySemigroup& s);

struct PropertyReport {
  bool connected = true;
  bool diameter_ok = true;
  bool core_ok = true;
  bool absorption_ok = true;
  std::optional<std::size_t> diameter;  // nullopt when disconnected
  std::size_t vertices = 0;
  std::vector<Vertex> witness;          // first failure, if any

  bool all_passed() const { return connected && diameter_ok && core_ok && absorption_ok; }
};

/// Connectivity, diameter <= 3, core shape (non-core vertices are ends and
/// every core edge lies on a 3- or 4-cycle; vacuous for acyclic graphs) and
/// the absorption property, on G(S).
PropertyReport property_suite(const CayleySemigroup& s);
PropertyReport property_suite(const Graph& g);

}  // namespace zdg
