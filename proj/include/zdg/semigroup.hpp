#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"

namespace zdg {

using Element = std::uint32_t;

/// Set of element indices of a semigroup, e.g. Z(S).
using ElementSet = Bitset;

inline constexpr std::size_t kMaxTableOrder = 4096;
inline constexpr unsigned kMaxPowersetN = 20;

/// One failed axiom, with the witnessing indices (in input indexing).
struct Violation {
  enum class Kind {
    BadShape,
    BadIndex,
    NotCommutative,
    NotAssociative,
    ZeroNotAbsorbing,
    UnityNotIdentity,
  };
  Kind kind;
  std::vector<std::size_t> witness;

  std::string describe() const;
};

const char* to_string(Violation::Kind k);

class CayleySemigroup;

struct ValidationResult;

/// Finite commutative semigroup with zero, stored as a multiplication table.
///
/// The zero always sits at index 0. Power-set semigroups are stored
/// implicitly (product = bitwise AND) so that P(n) is usable up to n = 20;
/// every other semigroup carries a dense order x order table.
class CayleySemigroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element zero() const noexcept { return 0; }
  std::optional<Element> identity() const noexcept { return identity_; }

  Element multiply(Element a, Element b) const noexcept {
    return powerset_n_ ? (a & b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }

  /// Display name of `e`; power-set elements are named on demand.
  std::string label(Element e) const;

  /// n when this is the implicit power-set semigroup P(n), else 0.
  unsigned powerset_n() const noexcept { return powerset_n_; }

  /// Dense copy of the table, row-major. O(order^2) memory.
  std::vector<Element> dense_table() const;

  /// Builds a semigroup without checking any axiom. Used for mutation
  /// testing and for tables whose validity is checked elsewhere.
  static CayleySemigroup unchecked(std::size_t order, std::vector<Element> table,
                                   std::vector<std::string> labels = {});

  friend ValidationResult validate(std::span<const Element>, std::size_t,
                                   std::size_t, std::vector<std::string>);
  friend CayleySemigroup powerset_semigroup(unsigned);

 private:
  CayleySemigroup() = default;

  std::size_t order_ = 0;
  std::optional<Element> identity_;
  unsigned powerset_n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

struct ValidationResult {
  std::optional<CayleySemigroup> semigroup;
  std::vector<Violation> violations;

  explicit operator bool() const noexcept { return semigroup.has_value(); }
};

/// Checks every axiom and returns either the semigroup (re-indexed so that
/// `zero_index` lands at 0) or the complete list of violations.
///
/// `table` is row-major order x order. Labels default to "0", "e1", "e2", ...
/// A unity is detected automatically; if an element is labelled "1" it must
/// be that unity.
ValidationResult validate(std::span<const Element> table, std::size_t order,
                          std::size_t zero_index,
                          std::vector<std::string> labels = {});

/// Every axiom violation of a table given in canonical storage (zero at 0).
std::vector<Violation> find_violations(const CayleySemigroup& s);

/// P(n): subsets of {x1..xn} under intersection. Element i is the bitmask i.
CayleySemigroup powerset_semigroup(unsigned n);

/// Label of a subset bitmask: "0" for the empty set, otherwise "{x1,x3}".
std::string subset_label(std::uint64_t mask);

/// Z(S) \ {0}: elements x != 0 with x*y = 0 for some y != 0.
ElementSet zero_divisor_set(const CayleySemigroup& s);

/// Left fold of the product over `elements`.
Element fold_product(const CayleySemigroup& s, std::span<const Element> elements);

bool is_idempotent(const CayleySemigroup& s, Element x);
bool all_idempotent(const CayleySemigroup& s);

}  // namespace zdg
