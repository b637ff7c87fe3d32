#include "zdg/semigroup.hpp"

#include <numeric>
#include <sstream>

namespace zdg {

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::BadShape: return "BadShape";
    case Violation::Kind::BadIndex: return "BadIndex";
    case Violation::Kind::NotCommutative: return "NotCommutative";
    case Violation::Kind::NotAssociative: return "NotAssociative";
    case Violation::Kind::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case Violation::Kind::UnityNotIdentity: return "UnityNotIdentity";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << '(';
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ')';
  return os.str();
}

std::string subset_label(std::uint64_t mask) {
  if (mask == 0) return "0";
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) out += ',';
    out += 'x';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

std::string CayleySemigroup::label(Element e) const {
  if (powerset_n_) return subset_label(e);
  return labels_[e];
}

std::vector<Element> CayleySemigroup::dense_table() const {
  if (!powerset_n_) return table_;
  std::vector<Element> out(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j)
      out[i * order_ + j] = static_cast<Element>(i & j);
  return out;
}

namespace {

std::optional<Element> find_identity(const CayleySemigroup& s) {
  const auto n = static_cast<Element>(s.order());
  if (n == 1) return Element{0};
  for (Element e = 1; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = s.multiply(e, x) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Violation> find_violations(const CayleySemigroup& s) {
  std::vector<Violation> out;
  const auto n = static_cast<Element>(s.order());
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (s.multiply(i, j) != s.multiply(j, i))
        out.push_back({Violation::Kind::NotCommutative, {i, j}});
  for (Element i = 0; i < n; ++i)
    if (s.multiply(0, i) != 0 || s.multiply(i, 0) != 0)
      out.push_back({Violation::Kind::ZeroNotAbsorbing, {i}});
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      const Element ij = s.multiply(i, j);
      for (Element k = 0; k < n; ++k)
        if (s.multiply(ij, k) != s.multiply(i, s.multiply(j, k)))
          out.push_back({Violation::Kind::NotAssociative, {i, j, k}});
    }
  return out;
}

CayleySemigroup CayleySemigroup::unchecked(std::size_t order, std::vector<Element> table,
                                           std::vector<std::string> labels) {
  if (order == 0 || table.size() != order * order)
    throw std::invalid_argument("table is not order x order");
  CayleySemigroup s;
  s.order_ = order;
  s.table_ = std::move(table);
  if (labels.empty()) {
    labels.resize(order);
    for (std::size_t i = 0; i < order; ++i) labels[i] = i == 0 ? "0" : "e" + std::to_string(i);
  }
  s.labels_ = std::move(labels);
  bool in_range = true;
  for (auto v : s.table_) in_range = in_range && v < order;
  if (in_range) s.identity_ = find_identity(s);
  return s;
}

ValidationResult validate(std::span<const Element> table, std::size_t order,
                          std::size_t zero_index, std::vector<std::string> labels) {
  ValidationResult res;
  if (order == 0 || order > kMaxTableOrder || table.size() != order * order ||
      zero_index >= order || (!labels.empty() && labels.size() != order)) {
    res.violations.push_back({Violation::Kind::BadShape, {order, table.size()}});
    return res;
  }
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      if (table[i * order + j] >= order)
        res.violations.push_back({Violation::Kind::BadIndex, {i, j}});
  if (!res.violations.empty()) return res;

  // Swap the declared zero into slot 0; `perm` maps input -> canonical and
  // is its own inverse.
  std::vector<Element> perm(order);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::swap(perm[0], perm[zero_index]);

  std::vector<Element> canon(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      canon[perm[i] * order + perm[j]] = perm[table[i * order + j]];

  std::vector<std::string> canon_labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (labels.empty())
      canon_labels[perm[i]] = i == zero_index ? "0" : "e" + std::to_string(i);
    else
      canon_labels[perm[i]] = labels[i];
  }

  auto s = CayleySemigroup::unchecked(order, std::move(canon), std::move(canon_labels));
  for (auto v : find_violations(s)) {
    for (auto& w : v.witness) w = perm[w];
    res.violations.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (s.labels_[i] == "1" && s.identity_ != static_cast<Element>(i))
      res.violations.push_back({Violation::Kind::UnityNotIdentity, {perm[i]}});
  }
  if (res.violations.empty()) res.semigroup = std::move(s);
  return res;
}

CayleySemigroup powerset_semigroup(unsigned n) {
  if (n < 1 || n > kMaxPowersetN)
    throw std::out_of_range("powerset_semigroup: n must be in 1..20");
  CayleySemigroup s;
  s.order_ = std::size_t{1} << n;
  s.powerset_n_ = n;
  s.identity_ = static_cast<Element>(s.order_ - 1);
  return s;
}

ElementSet zero_divisor_set(const CayleySemigroup& s) {
  const auto n = static_cast<Element>(s.order());
  ElementSet z(n);
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y)
      if (s.multiply(x, y) == 0) {
        z.set(x);
        break;
      }
  return z;
}

Element fold_product(const CayleySemigroup& s, std::span<const Element> elements) {
  if (elements.empty()) throw std::invalid_argument("fold_product: empty list");
  Element acc = elements.front();
  for (auto e : elements.subspan(1)) acc = s.multiply(acc, e);
  return acc;
}

bool is_idempotent(const CayleySemigroup& s, Element x) { return s.multiply(x, x) == x; }

bool all_idempotent(const CayleySemigroup& s) {
  if (s.powerset_n()) return true;
  for (Element x = 0; x < s.order(); ++x)
    if (!is_idempotent(s, x)) return false;
  return true;
}

}  // namespace zdg
