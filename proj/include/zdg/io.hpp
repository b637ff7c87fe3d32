#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zdg/enumerator.hpp"
#include "zdg/equations.hpp"
#include "zdg/graph.hpp"
#include "zdg/recognizer.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Malformed input text (as opposed to a well-formed but invalid table).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cayley-table text:
///
///   order <n>
///   <n labels; the zero is labelled 0, an optional unity 1>
///   <n rows of n labels>
///
/// Tokens are whitespace-separated; lines starting with '#' are comments.
/// Throws FormatError on malformed text; axiom failures come back in the
/// result's violation list.
ValidationResult parse_cayley_table(std::string_view text);
void write_cayley_table(std::ostream& os, const CayleySemigroup& s);

/// Edge list: one "u v" pair per line, 0-based. An optional first line
/// "vertices <n>" fixes the vertex count (otherwise max index + 1).
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& os, const Graph& g);

/// True when the first token of `text` is "order".
bool looks_like_cayley_table(std::string_view text);

/// DOT with element labels; vertices are colored by layer when a partition
/// is given.
void write_dot(std::ostream& os, const Graph& g, const StructurePartition* layers = nullptr);

using Json = nlohmann::ordered_json;

/// { verdict, n, layers: [{k, size, degrees}], failed_check?, witness?, iso? }
Json recognition_json(const Graph& g, const Recognition& r);
Json property_json(const PropertyReport& r);
Json equations_json(const EquationReport& r);
Json violations_json(const std::vector<Violation>& v);

}  // namespace zdg
