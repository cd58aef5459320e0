#include <doctest.h>

#include "mbgram/diagram.hpp"
#include "oracle.hpp"

using namespace mbgram;

namespace {

std::set<std::string> serialized(const std::vector<Diagram>& ds) {
  std::set<std::string> out;
  for (const auto& m : ds) out.insert(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("crossing examples") {
  CHECK(arcs_cross({1, 3}, {2, 4}, 4));
  CHECK_FALSE(arcs_cross({2, 1}, {3, 4}, 4));
  CHECK(arcs_cross({2, 1}, {4, 3}, 4));
  CHECK_THROWS_AS(arcs_cross({1, 2}, {2, 3}, 4), SharedEndpoint);
}

TEST_CASE("blocking examples") {
  CHECK(fixed_point_blocked({1, 4}, 2, 4));
  CHECK_FALSE(fixed_point_blocked({4, 1}, 2, 4));
  CHECK_FALSE(fixed_point_blocked({3, 4}, 1, 4));
}

TEST_CASE("crossing matches the drawing model exhaustively") {
  for (int size = 2; size <= 8; size += 2) {
    std::vector<Arc> arcs;
    for (int t = 1; t <= size; ++t)
      for (int h = 1; h <= size; ++h)
        if (t != h) arcs.push_back({t, h});
    for (const auto& a : arcs) {
      for (int f = 1; f <= size; ++f)
        if (f != a.tail && f != a.head)
          REQUIRE(fixed_point_blocked(a, f, size) == oracle::geometric_blocked(a, f, size));
      for (const auto& b : arcs) {
        if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head) continue;
        CAPTURE(size);
        CAPTURE(a.tail);
        CAPTURE(a.head);
        CAPTURE(b.tail);
        CAPTURE(b.head);
        REQUIRE(arcs_cross(a, b, size) == oracle::geometric_cross(a, b, size));
        REQUIRE(arcs_cross(a, b, size) == arcs_cross(b, a, size));
      }
    }
  }
}

TEST_CASE("validation") {
  CHECK(validate_diagram(Diagram(3, {{2, 5}, {3, 4}}, {1, 6})).empty());
  CHECK_FALSE(validate_diagram(Diagram(2, {{1, 4}}, {2, 3})).empty());
  CHECK_FALSE(validate_diagram(Diagram(2, {{1, 2}, {1, 3}}, {})).empty());
  CHECK_FALSE(validate_diagram(Diagram(2, {{1, 3}, {2, 4}}, {})).empty());
  CHECK_FALSE(validate_diagram(Diagram(2, {{1, 2}}, {3})).empty());
  const Diagram four_fixed(2, {}, {1, 2, 3, 4});
  CHECK_FALSE(validate_diagram(four_fixed).empty());
  CHECK(validate_diagram(four_fixed, StrataPolicy::AnyEven).empty());
}

TEST_CASE("enumeration examples") {
  const auto one = enumerate_stratum(1, Stratum::ZeroCrosscap);
  CHECK(serialized(one) == std::set<std::string>{"(1 2)", "(2 1)"});
  const auto two = enumerate_stratum(2, Stratum::OneCrosscap);
  CHECK(serialized(two) ==
        std::set<std::string>{"(3 4)(1)(2)", "(1 2)(3)(4)", "(4 1)(2)(3)", "(2 3)(1)(4)"});
  CHECK(enumerate_stratum(3, Stratum::ZeroCrosscap).size() == 20);
  CHECK_THROWS_AS(enumerate_stratum(7, Stratum::ZeroCrosscap), BoundExceeded);
}

TEST_CASE("enumeration equals the brute-force geometric filter") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(serialized(enumerate_stratum(n, Stratum::ZeroCrosscap)) == oracle::brute_force_stratum(n, 0));
    CHECK(serialized(enumerate_stratum(n, Stratum::OneCrosscap)) == oracle::brute_force_stratum(n, 2));
  }
}

TEST_CASE("counts, canonical order and validity up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto zero = enumerate_stratum(n, Stratum::ZeroCrosscap);
    const auto one = enumerate_stratum(n, Stratum::OneCrosscap);
    CHECK(zero.size() == oracle::choose(2 * n, n));
    CHECK(one.size() == oracle::choose(2 * n, n - 1));
    for (const auto* list : {&zero, &one}) {
      for (std::size_t i = 0; i < list->size(); ++i) {
        const auto& m = (*list)[i];
        REQUIRE(validate_diagram(m).empty());
        REQUIRE(diagram_parse(m.to_string()) == m);
        REQUIRE(diagram_from_json(diagram_to_json(m)) == m);
        if (i) REQUIRE((*list)[i - 1].to_string() < m.to_string());
      }
    }
    CHECK(canonical_less(zero.front(), one.front()));
    CHECK_FALSE(canonical_less(one.back(), zero.back()));
  }
}

TEST_CASE("parsing") {
  const Diagram m1 = diagram_parse("(2 5)(3 4)(1)(6)");
  CHECK(m1 == Diagram(3, {{2, 5}, {3, 4}}, {1, 6}));
  CHECK(diagram_serialize(m1) == "(2 5)(3 4)(1)(6)");
  const Diagram m2 = diagram_parse("(6 1)(2)(3)(4)(5)");
  CHECK(m2.chords() == std::vector<Arc>{{6, 1}});
  CHECK(m2.fixed() == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(m2.stratum() == std::nullopt);
  CHECK(diagram_parse("(3 4)(1)(2)").stratum() == Stratum::OneCrosscap);
  CHECK(diagram_parse("(1 2)", 1).n() == 1);

  CHECK_THROWS_AS(diagram_parse("(1 1)"), ParseError);
  CHECK_THROWS_AS(diagram_parse("(1 2"), ParseError);
  CHECK_THROWS_AS(diagram_parse("(1 2 3)"), ParseError);
  CHECK_THROWS_AS(diagram_parse("(1)(2)(3)"), ParseError);
  CHECK_THROWS_AS(diagram_parse("(1 x)"), ParseError);
  CHECK_FALSE(validate_diagram(diagram_parse("(1 2)(2 1)")).empty());
  try {
    diagram_parse("(1 2)(3 x)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}
