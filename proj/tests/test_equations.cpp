#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "zdg/equations.hpp"

using namespace zdg;

namespace {

EquationFrame powerset_frame(unsigned n) {
  const Element full = (Element{1} << n) - 1;
  EquationFrame f;
  for (unsigned i = 0; i < n; ++i) {
    f.a.push_back(Element{1} << i);
    f.b.push_back(full ^ (Element{1} << i));
  }
  return f;
}

Element by_label(const CayleySemigroup& s, const std::string& l) {
  for (Element e = 0; e < s.order(); ++e)
    if (s.label(e) == l) return e;
  throw std::runtime_error("no label " + l);
}

CayleySemigroup with_cell(const CayleySemigroup& s, Element x, Element y, Element v) {
  auto t = s.dense_table();
  t[x * s.order() + y] = v;
  t[y * s.order() + x] = v;
  return CayleySemigroup::unchecked(s.order(), t);
}

}  // namespace

TEST_SUITE("equations") {
  TEST_CASE("all checks pass on P(n)") {
    for (unsigned n = 3; n <= 6; ++n) {
      const auto r = equation_suite(powerset_semigroup(n), powerset_frame(n));
      CHECK_MESSAGE(r.all_passed(), "n = " << n);
      for (const char* name : {"axioms", "A", "B", "C", "D", "E", "F", "G", "H", "idem"})
        CHECK(r.find(name) != nullptr);
    }
  }

  TEST_CASE("spot values in P(4)") {
    const auto p4 = powerset_semigroup(4);
    const auto f = powerset_frame(4);
    CHECK(p4.multiply(f.a[1], f.b[3]) == f.a[1]);  // a2*b4 = a2
    CHECK(p4.multiply(f.b[0], f.b[0]) == f.b[0]);
  }

  TEST_CASE("the n = 3 table satisfies every check") {
    const auto s = test_support::load_table("golden_n3.txt");
    EquationFrame f;
    for (const char* l : {"a1", "a2", "a3"}) f.a.push_back(by_label(s, l));
    for (const char* l : {"b1", "b2", "b3"}) f.b.push_back(by_label(s, l));
    CHECK(equation_suite(s, f).all_passed());
    // a1 = b2*b3
    CHECK(s.multiply(f.b[1], f.b[2]) == f.a[0]);
  }

  TEST_CASE("frame from a recognized partition") {
    const auto s = powerset_semigroup(4);
    const auto zg = zero_divisor_graph(s);
    const auto p = build_partition(zg.graph);
    REQUIRE(p);
    const auto f = frame_from_partition(zg, *p.value);
    CHECK(f.a == powerset_frame(4).a);
    CHECK(f.b == powerset_frame(4).b);
  }

  TEST_CASE("a broken cell is named") {
    const auto p3 = powerset_semigroup(3);
    const auto f = powerset_frame(3);
    // a1*b2 should be a1.
    const auto r = equation_suite(with_cell(p3, f.a[0], f.b[1], 0), f);
    CHECK_FALSE(r.all_passed());
    REQUIRE(r.find("C") != nullptr);
    CHECK_FALSE(r.find("C")->passed);
    CHECK_FALSE(r.find("C")->witness.empty());
  }

  TEST_CASE("out-of-range entries are reported, not thrown") {
    auto t = powerset_semigroup(3).dense_table();
    t[9] = 42;
    const auto s = CayleySemigroup::unchecked(8, t);
    const auto r = equation_suite(s, powerset_frame(3));
    REQUIRE(r.find("axioms") != nullptr);
    CHECK_FALSE(r.find("axioms")->passed);
  }

  TEST_CASE("every symmetric single-cell mutation of P(3) and P(4) is caught") {
    std::mt19937_64 rng(41);
    for (unsigned n = 3; n <= 4; ++n) {
      const auto p = powerset_semigroup(n);
      const auto f = powerset_frame(n);
      for (Element x = 0; x < p.order(); ++x)
        for (Element y = x; y < p.order(); ++y) {
          Element v = static_cast<Element>(rng() % (p.order() - 1));
          if (v >= p.multiply(x, y)) ++v;
          const auto r = equation_suite(with_cell(p, x, y, v), f);
          CHECK_MESSAGE(!r.all_passed(), "n=" << n << " cell " << x << "," << y << " -> " << v);
        }
    }
  }
}
