#pragma once

#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/recognizer.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// The elements a1..an and b1..bn of a semigroup, as located by a partition.
struct EquationFrame {
  std::vector<Element> a;
  std::vector<Element> b;
};

EquationFrame frame_from_partition(const ZeroDivisorGraph& zg, const StructurePartition& p);

struct EquationCheck {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;  // element indices
  std::string detail;
};

struct EquationReport {
  std::vector<EquationCheck> checks;

  bool all_passed() const;
  const EquationCheck* find(const std::string& name) const;
};

/// Checks, exhaustively over their index ranges:
///
///   axioms  the table is a commutative semigroup with absorbing zero
///   A       ai*bj != 0                     (i != j)
///   B       bi*bj != 0                     (i != j)
///   C       ai*bj = ai                     (i != j)
///   D       bi*bi = bi
///   E       b1*...*bn = 0
///   F       ai = product of all bj, j != i
///   G       distinct nonempty index sets give distinct b-products
///   H       for every proper split I | I', prod(I) ⊥ prod(I') in G(S) and
///           prod(I') is the only complement of prod(I)
///   idem    x*x = x for every vertex x of G(S)
///
/// `s` need not be valid; a broken table is reported, not rejected.
EquationReport equation_suite(const CayleySemigroup& s, const EquationFrame& frame);

}  // namespace zdg
