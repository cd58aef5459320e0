#include <doctest.h>

#include <thread>

#include "mbgram/chebyshev.hpp"
#include "oracle.hpp"

using namespace mbgram;

namespace {

const Polynomial d = Variable::d;

Polynomial dense(const oracle::Dense& c) { return Polynomial::from_dense(Variable::d, c); }

Integer at(const Polynomial& p, long v) { return p.evaluate({v, 0, 0, 0, 0}); }

}  // namespace

TEST_CASE("examples") {
  CHECK(cheb_T(0) == Polynomial(2));
  CHECK(cheb_T(2) == d * d - 2);
  CHECK(cheb_T(-3) == d.pow(3) - 3 * d);
  CHECK(cheb_T(-3) == cheb_T(3));
  CHECK(cheb_S(0) == Polynomial(1));
  CHECK(cheb_S(-1).is_zero());
  CHECK(cheb_S(3) == d.pow(3) - 2 * d);
}

TEST_CASE("negative indices follow the downward recurrence") {
  for (long n = -30; n <= 30; ++n) {
    CHECK(cheb_T(n) == d * cheb_T(n - 1) - cheb_T(n - 2));
    CHECK(cheb_S(n) == d * cheb_S(n - 1) - cheb_S(n - 2));
  }
  for (long n = 2; n <= 30; ++n) CHECK(cheb_S(-n) == -cheb_S(n - 2));
}

TEST_CASE("agrees with the dense recurrence oracle") {
  for (long n = 0; n <= 300; ++n) {
    REQUIRE(cheb_T(n) == dense(oracle::chebyshev(n, 2)));
    REQUIRE(cheb_S(n) == dense(oracle::chebyshev(n, 1)));
  }
}

TEST_CASE("degree and leading coefficient") {
  for (long n : {1L, 2L, 3L, 17L, 64L, 511L, 1024L, 1025L, 2048L, 4096L}) {
    CHECK(cheb_T(n).degree(Variable::d) == n);
    CHECK(cheb_S(n).degree(Variable::d) == n);
    CHECK(cheb_T(n).leading_term().coefficient == 1);
    CHECK(cheb_S(n).leading_term().coefficient == 1);
  }
}

TEST_CASE("values at d = 2 and d = -2") {
  // T_n(2) = 2, S_n(2) = n + 1, T_n(-2) = 2 (-1)^n, S_n(-2) = (n + 1)(-1)^n.
  for (long n = 0; n <= 1024; n += n < 100 ? 1 : 31) {
    const int sign = n % 2 ? -1 : 1;
    CHECK(at(cheb_T(n), 2) == 2);
    CHECK(at(cheb_S(n), 2) == n + 1);
    CHECK(at(cheb_T(n), -2) == 2 * sign);
    CHECK(at(cheb_S(n), -2) == (n + 1) * sign);
  }
  for (long n : {1500L, 4095L, 4096L}) {
    CHECK(at(cheb_T(n), 2) == 2);
    CHECK(at(cheb_S(n), 2) == n + 1);
  }
}

TEST_CASE("indices past the bound are rejected") {
  ChebyshevTable small(50, 20);
  CHECK(small.T(50) == cheb_T(50));
  CHECK(small.S(35) == cheb_S(35));
  CHECK_THROWS_AS(small.T(51), BoundExceeded);
  CHECK_THROWS_AS(small.S(-60), BoundExceeded);
}

TEST_CASE("all ten identities hold on their default ranges") {
  for (IdentityId id : kAllIdentities) {
    CAPTURE(identity_name(id));
    const Report r = verify_identity(id, default_range(id));
    CHECK(r.passed());
    CHECK(r.failures.empty());
    const auto range = default_range(id);
    const auto span = static_cast<std::size_t>(range.hi - range.lo + 1);
    CHECK(r.checked == (identity_is_binary(id) ? span * span : span));
  }
  CHECK(default_range(IdentityId::Cor2_6).lo == 2);
  CHECK(default_range(IdentityId::Cor2_6).hi == 12);
  CHECK(default_range(IdentityId::ProdToSumT).lo == 0);
  CHECK(default_range(IdentityId::ProdToSumT).hi == 64);
}

TEST_CASE("identity sides agree with independent dense computations") {
  using oracle::chebyshev;
  using oracle::dense_mul;
  for (long n = 1; n <= 25; ++n) {
    // T_n^2 - 4 = (d^2 - 4) S_{n-1}^2
    auto t = chebyshev(n, 2);
    auto lhs = dense_mul(t, t);
    lhs[0] -= 4;
    auto s = chebyshev(n - 1, 1);
    auto rhs = dense_mul({-4, 0, 1}, dense_mul(s, s));
    const auto sides = identity_sides(IdentityId::Lemma2_5, n);
    CHECK(sides.lhs == dense(lhs));
    CHECK(sides.rhs == dense(rhs));
  }
  for (long k = 2; k <= 8; ++k) {
    oracle::Dense prod = {1};
    for (long i = 0; i < k; ++i) prod = dense_mul(prod, chebyshev(1L << i, 2));
    CHECK(identity_sides(IdentityId::Cor2_6, k).rhs == dense(prod));
    CHECK(cheb_S((1L << k) - 1) == dense(prod));
  }
}

TEST_CASE("identity lookup and domain") {
  CHECK_THROWS_AS(identity_sides(IdentityId::Lemma2_5, -1), InvalidArgument);
  CHECK(identity_from_name("Lemma2_5") == IdentityId::Lemma2_5);
  CHECK_FALSE(identity_from_name("Lemma9").has_value());
}

TEST_CASE("negative S indices are flagged") {
  CHECK(identity_sides(IdentityId::Lemma2_5, 0).negative_s_index);
  CHECK_FALSE(identity_sides(IdentityId::Lemma2_5, 5).negative_s_index);
  const Report r = verify_identity(IdentityId::Lemma2_5, {0, 3});
  CHECK(r.passed());
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("concurrent readers see consistent values") {
  ChebyshevTable table(700, 256);
  std::vector<std::thread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (long n = 700 - t; n >= 0; n -= 3 + t) {
        const auto kind = (n + t) % 2 ? ChebyshevKind::First : ChebyshevKind::Second;
        const Polynomial p = table.get(kind, n);
        if (at(p, 2) != (kind == ChebyshevKind::First ? Integer(2) : Integer(n + 1))) ++bad[t];
      }
    });
  for (auto& th : threads) th.join();
  for (int b : bad) CHECK(b == 0);
}
