#include <doctest.h>

#include <random>

#include "mbgram/checks.hpp"
#include "mbgram/conjecture.hpp"
#include "mbgram/determinant.hpp"
#include "mbgram/gram.hpp"
#include "mbgram/pairing.hpp"
#include "oracle.hpp"

using namespace mbgram;

namespace {

const Polynomial d = Variable::d, w = Variable::w, x = Variable::x, y = Variable::y,
                 z = Variable::z;

PolyMatrix matrix(std::size_t n, std::vector<Polynomial> v) { return PolyMatrix(n, std::move(v)); }

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_exp, unsigned vars) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto p = oracle::random_poly(rng, static_cast<int>(rng() % 4), max_exp, 8);
      oracle::MapPoly q;
      for (const auto& [exps, c] : p) {
        auto e = exps;
        for (unsigned v = vars; v < 5; ++v) e[v] = 0;
        q[e] += c;
      }
      oracle::prune(q);
      m(i, j) = oracle::from_map(q);
    }
  return m;
}

}  // namespace

TEST_CASE("n = 2 tilde matrix is the class block matrix with u = 1") {
  const GramMatrix g = assemble_gram(2, GramVariant::Mbn1Tilde);
  REQUIRE(g.entries.size() == 4);
  const PolyMatrix expected = matrix(4, {d, 0, 1, 1, 0, d, 1, 1, 1, 1, d, 0, 1, 1, 0, d});
  CHECK(class_block_matrix(1) == expected);
  CHECK(find_simultaneous_permutation(g.entries, expected).has_value());
  CHECK(det_exact(g.entries) == d.pow(4) - 4 * d.pow(2));
}

TEST_CASE("n = 1 full matrix pattern") {
  const GramMatrix g = assemble_gram(1, GramVariant::Mb1Full);
  REQUIRE(g.basis.size() == 3);
  const PolyMatrix expected = matrix(3, {d, z, y, z, d, y, x, x, w});
  CHECK(find_simultaneous_permutation(g.entries, expected).has_value());
  // Hand expansion along the last row:
  // x (z y - d y) - x (d y - z y) + w (d^2 - z^2) = (d - z)((d + z) w - 2 x y).
  const Polynomial by_hand = (d - z) * ((d + z) * w - 2 * x * y);
  CHECK(det_exact(g.entries) == by_hand);
  CHECK(oracle::to_map(by_hand) == oracle::leibniz_det(expected));
}

TEST_CASE("basis sizes and entries") {
  CHECK(assemble_gram(3, GramVariant::Mbn1).entries.size() == 15);
  CHECK(gram_basis(2, GramVariant::Mb1Full).size() == 10);
  CHECK(gram_basis(3, GramVariant::Mb1Full).size() == 35);
  CHECK_THROWS_AS(assemble_gram(6, GramVariant::Mbn1Tilde), BoundExceeded);

  const GramMatrix full = assemble_gram(2, GramVariant::Mb1Full, 3);
  for (std::size_t i = 0; i < full.basis.size(); ++i)
    for (std::size_t j = 0; j < full.basis.size(); ++j)
      CHECK(full.entries(i, j) == bilinear_form(full.basis[i], full.basis[j]));

  const GramMatrix tilde = assemble_gram(3, GramVariant::Mbn1Tilde, 2);
  const GramMatrix plain = assemble_gram(3, GramVariant::Mbn1);
  for (std::size_t i = 0; i < tilde.basis.size(); ++i)
    for (std::size_t j = 0; j < tilde.basis.size(); ++j) {
      const auto& e = tilde.entries(i, j);
      CHECK(e == substitute(plain.entries(i, j), tilde_binding()));
      CHECK_FALSE(e.contains(Variable::x));
      CHECK_FALSE(e.contains(Variable::y));
      CHECK_FALSE(e.contains(Variable::w));
    }
  CHECK(gram_from_json(gram_to_json(tilde)).entries == tilde.entries);
}

TEST_CASE("determinant examples") {
  CHECK(det_exact(matrix(1, {d.pow(3)})) == d.pow(3));
  const PolyMatrix block = class_block_matrix(1);
  const std::vector<Variable> vd = {Variable::d};
  CHECK(det_by_evaluation(block, vd, {{Variable::d, 8}}) == d.pow(4) - 4 * d.pow(2));
  CHECK(det_by_evaluation(matrix(2, {d, 0, 0, d * d}), vd) == d.pow(3));
  CHECK(det_modular(block) == d.pow(4) - 4 * d.pow(2));
  CHECK(det_exact(matrix(2, {d, d, d, d})).is_zero());
  CHECK(det_modular(matrix(2, {d, d, d, d})).is_zero());
  CHECK(det_exact(matrix(2, {0, 1, 1, 0})) == Polynomial(-1));
}

TEST_CASE("integer determinants match Leibniz") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix m(n);
    PolyMatrix p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = static_cast<long>(rng() % 21) - 10;
        if (trial % 3 == 0 && rng() % 3 == 0) m(i, j) = 0;
        p(i, j) = m(i, j);
      }
    CHECK(Polynomial(det_integer(m)) == oracle::from_map(oracle::leibniz_det(p)));
  }
}

TEST_CASE("backends agree with Leibniz on random polynomial matrices") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const unsigned vars = 1 + trial % 3;
    const PolyMatrix m = random_matrix(rng, n, 3, vars);
    const Polynomial expected = oracle::from_map(oracle::leibniz_det(m));
    CAPTURE(trial);
    CHECK(det_exact(m) == expected);
    const auto active = active_variables(m);
    CHECK(det_by_evaluation(m, active) == expected);
    CHECK(det_modular(m, 2) == expected);
    CHECK(determinant(m).value == expected);
    for (auto v : kAllVariables) CHECK(expected.degree(v) <= degree_bound(m, v));
    CHECK(expected.total_degree() <= total_degree_bound(m));
  }
}

TEST_CASE("backend choice and provenance") {
  CHECK(choose_backend(class_block_matrix(1)) == DetBackend::Bareiss);
  const auto r = determinant(class_block_matrix(1), {DetBackend::Modular, 1, {}});
  CHECK(r.backend == DetBackend::Modular);
  CHECK(r.provenance().at("backend") == "modular");
  CHECK(backend_from_name("interp") == DetBackend::Interpolation);
}

TEST_CASE("determinant is invariant under simultaneous permutation") {
  const GramMatrix g = assemble_gram(3, GramVariant::Mbn1Tilde);
  const Polynomial base = det_exact(g.entries);
  std::mt19937_64 rng(9);
  std::vector<std::size_t> perm(g.entries.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 3; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(det_exact(g.entries.permuted(perm)) == base);
  }
}

TEST_CASE("conjecture formula examples") {
  CHECK(conjecture_formula(ConjectureId::C3_5, 2) == d.pow(4) - 4 * d.pow(2));
  CHECK(conjecture_formula(ConjectureId::C3_3, 2) == d.pow(4) - 4 * d.pow(2));
  const Polynomial bracket = (d - z) * ((d + z) * w - 2 * x * y);
  CHECK(conjecture_formula(ConjectureId::C3_4, 1) == bracket);
  CHECK(conjecture_formula(ConjectureId::C5_1, 1) == bracket);
  CHECK_THROWS_AS(conjecture_formula(ConjectureId::C3_5, 1), InvalidArgument);
  for (int n = 2; n <= 5; ++n) {
    CHECK(oracle::to_dense(conjecture_formula(ConjectureId::C3_5, n)) == oracle::tilde_formula_via_s(n));
    CHECK(oracle::to_dense(conjecture_formula(ConjectureId::C3_3, n)) == oracle::tilde_formula_via_t(n));
  }
}

TEST_CASE("factored forms evaluate and regroup consistently") {
  std::mt19937_64 rng(4);
  for (auto id : {ConjectureId::C3_3, ConjectureId::C3_4, ConjectureId::C3_5, ConjectureId::C5_1})
    for (int n = conjecture_min_n(id); n <= 3; ++n) {
      const auto f = conjecture_factors(id, n);
      const Polynomial e = f.expand();
      CHECK(e.total_degree() == f.total_degree());
      for (int t = 0; t < 5; ++t) {
        std::array<Integer, 5> pt;
        for (auto& v : pt) v = static_cast<long>(rng() % 41) - 20;
        CHECK(f.evaluate(pt) == e.evaluate(pt));
      }
      Polynomial regrouped = 1;
      for (const auto& b : f.brackets()) regrouped *= b.value.pow(static_cast<unsigned>(b.exponent));
      CHECK(regrouped == e);
    }
}

TEST_CASE("verification of small cases") {
  CHECK(verify_conjecture(ConjectureId::C3_5, 2, Method::Exact).passed());
  CHECK(verify_conjecture(ConjectureId::C3_5, 3, Method::Exact).passed());
  CHECK(verify_conjecture(ConjectureId::C3_3, 3, Method::Exact).passed());
  CHECK(verify_conjecture(ConjectureId::C3_4, 1, Method::Exact).passed());
  const Report r = verify_conjecture(ConjectureId::C3_4, 2, Method::Randomized, {}, {7, 20});
  CHECK(r.passed());
  CHECK(r.seed == std::optional<std::uint64_t>(7));
  CHECK(r.results.at("log2_failure_bound").get<double>() < -40);
  CHECK(verify_conjecture(ConjectureId::C5_1, 2, Method::Exact).status == Status::Skipped);

  const Report t2 = verify_theorem_3_6(2);
  CHECK(t2.passed());
  CHECK(verify_theorem_3_6(3).passed());
  CHECK(verify_block_matrix().passed());
  CHECK(verify_figure4().passed());
  CHECK(verify_formula_equivalence(2, 5, 5).passed());
}

TEST_CASE("divisibility quotients at n = 2 and 3") {
  const Polynomial det = det_exact(assemble_gram(2, GramVariant::Mbn1Tilde).entries);
  CHECK(divide_exact(det, d.pow(2)) == std::optional(d * d - 4));
  const Polynomial det3 = det_exact(assemble_gram(3, GramVariant::Mbn1Tilde).entries);
  CHECK(divide_exact(det3, d.pow(12)).has_value());
  CHECK_FALSE(divide_exact(det3, d.pow(13)).has_value());
}
