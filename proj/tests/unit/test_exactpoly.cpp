#include <doctest.h>

#include <random>

#include "mbgram/polynomial.hpp"
#include "mbgram/serialize.hpp"
#include "oracle.hpp"

using namespace mbgram;

namespace {

const Polynomial d = Variable::d, w = Variable::w, x = Variable::x, y = Variable::y,
                 z = Variable::z;

std::array<Integer, 5> random_point(std::mt19937_64& rng) {
  std::array<Integer, 5> p;
  for (auto& v : p) v = static_cast<long>(rng() % 2001) - 1000;
  return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(add(d, -d).is_zero());
  CHECK(mul(d * d - 2, d * d - 2) == d.pow(4) - 4 * d.pow(2) + 4);
  CHECK((d * d - 2).to_string() == "d^2 - 2");
  CHECK(Polynomial(0).to_string() == "0");
}

TEST_CASE("substitution examples") {
  CHECK(substitute(x * y * d, {{Variable::y, 0}, {Variable::w, 1}}).is_zero());
  CHECK(substitute(w * d, {{Variable::y, 0}, {Variable::w, 1}}) == d);
  CHECK(substitute(d * d - 4, {{Variable::d, 3}}) == Polynomial(5));
  CHECK(substitute(x * x + y, {{Variable::x, y + 1}}) == y * y + 3 * y + 1);
  CHECK(substitute(x + y, {{Variable::x, y}, {Variable::y, x}}) == x + y);
}

TEST_CASE("exact division examples") {
  CHECK(divide_exact(d.pow(4) - 4 * d.pow(2), d * d) == std::optional(d * d - 4));
  const Polynomial p = 3 * x * y - z + 7;
  CHECK(divide_exact(p, 1) == std::optional(p));
  CHECK_FALSE(divide_exact(d * d - 4, d).has_value());
  CHECK_THROWS_AS(divide_exact(p, 0), ZeroDivisor);
  CHECK(divide_exact(0, p) == std::optional(Polynomial(0)));
}

TEST_CASE("interpolation examples") {
  std::vector<InterpolationPoint> sq = {{0, 0}, {1, 1}, {-1, 1}, {2, 4}};
  CHECK(interpolate(Variable::d, sq) == d * d);
  std::vector<InterpolationPoint> cube;
  for (long t = 0; t <= 3; ++t) cube.push_back({t, t * t * t});
  CHECK(interpolate(Variable::d, cube) == d.pow(3));
  std::vector<InterpolationPoint> quartic;
  for (long t = -2; t <= 2; ++t) quartic.push_back({t, t * t * t * t - 4 * t * t});
  CHECK(interpolate(Variable::d, quartic) == d.pow(4) - 4 * d.pow(2));
}

TEST_CASE("interpolation errors") {
  std::vector<InterpolationPoint> half = {{0, 0}, {2, 1}};
  CHECK_THROWS_AS(interpolate(Variable::d, half), NonIntegralResult);
  std::vector<InterpolationPoint> repeated = {{1, 0}, {1, 1}};
  CHECK_THROWS_AS(interpolate(Variable::d, repeated), InvalidArgument);
}

TEST_CASE("interpolation round trip with polynomial values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = oracle::from_map(oracle::random_poly(rng, 12, 6, 40));
    const auto grid = symmetric_grid(p.degree(Variable::d) + 1);
    std::vector<InterpolationPoint> pts;
    for (long t : grid) pts.push_back({t, p.evaluate(Variable::d, t)});
    CHECK(interpolate(Variable::d, pts) == p);
  }
}

TEST_CASE("degree overflow") {
  const Polynomial big(1, Monomial::power(Variable::x, Monomial::kMaxDegree));
  CHECK_THROWS_AS(big * x, DegreeOverflow);
  CHECK_THROWS_AS(x.pow(Monomial::kMaxDegree + 1), DegreeOverflow);
}

TEST_CASE("ring axioms against the map oracle") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto ma = oracle::random_poly(rng, 1 + trial % 6, 4, 1 + trial % 90);
    const auto mb = oracle::random_poly(rng, 1 + trial % 5, 4, 1 + trial % 70);
    const auto mc = oracle::random_poly(rng, 1 + trial % 4, 3, 20);
    const Polynomial a = oracle::from_map(ma), b = oracle::from_map(mb), c = oracle::from_map(mc);

    REQUIRE(oracle::to_map(a + b) == oracle::add(ma, mb));
    REQUIRE(oracle::to_map(a - b) == oracle::add(ma, mb, -1));
    REQUIRE(oracle::to_map(a * b) == oracle::mul(ma, mb));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * 1 == a);
    REQUIRE((a - a).is_zero());
    if (!b.is_zero()) REQUIRE(divide_exact(a * b, b) == std::optional(a));
  }
}

TEST_CASE("univariate products match the dense schoolbook oracle") {
  // Degrees past the Kronecker threshold, with wide and mixed-sign coefficients.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t la = 1 + rng() % 400, lb = 1 + rng() % 400;
    oracle::Dense a(la), b(lb);
    for (auto& c : a) c = oracle::evaluate(oracle::random_poly(rng, 1, 1, 1 + rng() % 300), {});
    for (auto& c : b) c = oracle::evaluate(oracle::random_poly(rng, 1, 1, 1 + rng() % 300), {});
    const auto pa = Polynomial::from_dense(Variable::d, a);
    const auto pb = Polynomial::from_dense(Variable::d, b);
    CHECK(oracle::to_dense(pa * pb) == oracle::dense_trim(oracle::dense_mul(a, b)));
  }
}

TEST_CASE("evaluation agrees with the oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = oracle::random_poly(rng, 8, 5, 64);
    const auto pt = random_point(rng);
    CHECK(oracle::from_map(m).evaluate(pt) == oracle::evaluate(m, pt));
  }
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = oracle::from_map(oracle::random_poly(rng, trial % 9, 5, 1 + trial % 200));
    CHECK(polynomial_parse(p.to_string()) == p);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    CHECK(polynomial_from_json(nlohmann::json::parse(polynomial_to_json(p).dump())) == p);
  }
  CHECK(polynomial_parse("d^4 - 4*d^2 + 3*x*y") == d.pow(4) - 4 * d * d + 3 * x * y);
  CHECK(polynomial_terms_from_json(nlohmann::json::parse(R"([[2,1,0,0,0,0],["-2",1,0,0,0,0],[5,0,0,0,0,0]])")) ==
        Polynomial(5));
  CHECK_THROWS_AS(polynomial_parse("d^"), ParseError);
  CHECK_THROWS_AS(polynomial_parse("d + + 2"), ParseError);
  CHECK_THROWS_AS(polynomial_from_json({{"schema", "other/9"}, {"terms", nlohmann::json::array()}}),
                  SchemaMismatch);
}

TEST_CASE("monomial order is graded") {
  const Polynomial p = d.pow(3) + x * y * z + z.pow(2) + 1;
  REQUIRE(p.size() == 4);
  CHECK(p.leading_term().monomial.total_degree() == 3);
  CHECK(p.terms().back().monomial.is_one());
  CHECK(p.total_degree() == 3);
  CHECK(p.degree(Variable::z) == 2);
  CHECK(p.variable_mask() == 0b11101);
}
