#include "zdg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

namespace zdg {

namespace {

// Non-comment lines split into whitespace-separated tokens.
std::vector<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty() || toks.front().front() == '#') continue;
    lines.push_back(std::move(toks));
  }
  return lines;
}

std::size_t parse_count(const std::string& tok, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw FormatError(std::string("expected a non-negative integer for ") + what + ", got '" +
                      tok + "'");
  return v;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool looks_like_cayley_table(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines.front().front() == "order";
}

ValidationResult parse_cayley_table(std::string_view text) {
  std::vector<std::string> toks;
  for (auto& line : tokenize(text))
    for (auto& t : line) toks.push_back(std::move(t));
  if (toks.size() < 2 || toks[0] != "order") throw FormatError("table must start with 'order <n>'");
  const std::size_t n = parse_count(toks[1], "order");
  if (n == 0 || n > kMaxTableOrder) throw FormatError("order must be in 1..4096");
  if (toks.size() != 2 + n + n * n)
    throw FormatError("expected " + std::to_string(n) + " labels and " + std::to_string(n * n) +
                      " table entries, got " + std::to_string(toks.size() - 2) + " tokens");

  std::vector<std::string> labels(toks.begin() + 2, toks.begin() + 2 + static_cast<long>(n));
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(labels[i], static_cast<Element>(i)).second)
      throw FormatError("duplicate label '" + labels[i] + "'");
  const auto zero = index.find("0");
  if (zero == index.end()) throw FormatError("no element labelled 0");

  std::vector<Element> table(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto& t = toks[2 + n + k];
    const auto it = index.find(t);
    if (it == index.end())
      throw FormatError("unknown label '" + t + "' in row " + std::to_string(k / n));
    table[k] = it->second;
  }
  return validate(table, n, zero->second, std::move(labels));
}

void write_cayley_table(std::ostream& os, const CayleySemigroup& s) {
  const std::size_t n = s.order();
  std::vector<std::string> labels(n);
  for (Element e = 0; e < n; ++e) labels[e] = s.label(e);
  os << "order " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) os << (i ? " " : "") << labels[i];
  os << '\n';
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) os << (j ? " " : "") << labels[s.multiply(i, j)];
    os << '\n';
  }
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<VertexPair> edges;
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (li == 0 && l.front() == "vertices") {
      if (l.size() != 2) throw FormatError("expected 'vertices <n>'");
      declared = parse_count(l[1], "vertex count");
      continue;
    }
    if (l.size() != 2) throw FormatError("edge lines must hold exactly two vertex indices");
    const auto u = parse_count(l[0], "vertex"), v = parse_count(l[1], "vertex");
    if (u == v) throw FormatError("self-loop at vertex " + l[0]);
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  if (declared) {
    if (n > *declared) throw FormatError("edge endpoint exceeds declared vertex count");
    n = *declared;
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "vertices " << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

void write_dot(std::ostream& os, const Graph& g, const StructurePartition* layers) {
  static constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                             "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                             "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  os << "graph G {\n  node [shape=ellipse];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << '"';
    if (layers && v < layers->layer_of.size()) {
      const unsigned k = layers->layer_of[v];
      os << ", layer=" << k << ", style=filled, fillcolor=\"" << kPalette[(k - 1) % 12] << '"';
    }
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

Json recognition_json(const Graph& g, const Recognition& r) {
  Json j;
  j["verdict"] = r.diagnosis.accepted() ? "Accepted" : "Rejected";
  j["n"] = r.omega;
  Json layers = Json::array();
  if (r.partition) {
    for (unsigned k = 1; k < r.partition->n; ++k) {
      std::set<std::size_t> degrees;
      const auto members = r.partition->layer(k);
      for (auto v : members) degrees.insert(degree(g, v));
      layers.push_back({{"k", k}, {"size", members.size()}, {"degrees", degrees}});
    }
  }
  j["layers"] = std::move(layers);
  if (!r.diagnosis.accepted()) {
    j["failed_check"] = r.diagnosis.failed_check;
    Json w = Json::array();
    for (auto v : r.diagnosis.witness) w.push_back(g.label(v));
    j["witness"] = std::move(w);
    if (!r.diagnosis.detail.empty()) j["detail"] = r.diagnosis.detail;
  }
  if (r.iso) {
    Json iso = Json::array();
    for (Vertex v = 0; v < g.size(); ++v) iso.push_back({g.label(v), r.iso->subset_of[v]});
    j["iso"] = std::move(iso);
  }
  return j;
}

Json property_json(const PropertyReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["diameter_ok"] = r.diameter_ok;
  j["core_ok"] = r.core_ok;
  j["absorption_ok"] = r.absorption_ok;
  if (r.diameter)
    j["diameter"] = *r.diameter;
  else
    j["diameter"] = nullptr;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

Json equations_json(const EquationReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.passed) {
      j["witness"] = c.witness;
      j["detail"] = c.detail;
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json violations_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back({{"kind", to_string(x.kind)}, {"witness", x.witness}});
  return out;
}

}  // namespace zdg
