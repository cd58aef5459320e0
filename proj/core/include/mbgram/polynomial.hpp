#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbgram/errors.hpp"

namespace mbgram {

using Integer = mpz_class;

/// The five indeterminates of the bilinear form. Declaration order is the
/// variable order d < w < x < y < z.
enum class Variable : std::uint8_t { d = 0, w = 1, x = 2, y = 3, z = 4 };

inline constexpr std::array<Variable, 5> kAllVariables = {
    Variable::d, Variable::w, Variable::x, Variable::y, Variable::z};

char variable_name(Variable v);
std::optional<Variable> variable_from_name(char c);

/// Exponent vector over {d, w, x, y, z}, packed into a single 128-bit key.
///
/// Layout (low to high): five 20-bit exponent fields d, w, x, y, z followed by
/// the total degree. Comparing packed keys as integers therefore yields the
/// graded lexicographic order with z > y > x > w > d. The total degree is kept
/// below 2^20, which also bounds every field, so adding two keys never carries
/// across fields once the sum is validated.
class Monomial {
 public:
  static constexpr unsigned kFieldBits = 20;
  static constexpr std::uint32_t kMaxDegree = (1u << kFieldBits) - 1;

  constexpr Monomial() = default;
  explicit Monomial(const std::array<std::uint32_t, 5>& exponents);
  static Monomial power(Variable v, std::uint32_t e);

  std::uint32_t exponent(Variable v) const {
    return static_cast<std::uint32_t>(
        (key_ >> (kFieldBits * static_cast<unsigned>(v))) & kFieldMask);
  }
  std::uint32_t total_degree() const {
    return static_cast<std::uint32_t>(key_ >> (5 * kFieldBits));
  }
  std::array<std::uint32_t, 5> exponents() const;
  bool is_one() const { return key_ == 0; }

  /// Product of monomials; throws DegreeOverflow past kMaxDegree.
  Monomial operator*(const Monomial& other) const;
  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// `other / *this`; precondition divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Same monomial with the exponent of `v` cleared.
  Monomial without(Variable v) const;

  unsigned __int128 key() const { return key_; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  static constexpr unsigned __int128 kFieldMask = (1u << kFieldBits) - 1;
  unsigned __int128 key_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    const auto k = m.key();
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return static_cast<std::size_t>(lo * 0x9e3779b97f4a7c15ULL ^ (hi + (lo >> 29)));
  }
};

struct Term {
  Monomial monomial;
  Integer coefficient;
};

/// Sparse polynomial in Z[d, w, x, y, z] with arbitrary-precision coefficients.
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c, const Monomial& m);

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Univariate polynomial sum_i coeffs[i] * v^i.
  static Polynomial from_dense(Variable v, std::span<const Integer> coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  /// Coefficient of `m` (zero when absent).
  Integer coefficient(const Monomial& m) const;
  /// Constant term.
  Integer constant_term() const;

  std::uint32_t degree(Variable v) const;
  std::uint32_t total_degree() const;
  /// Bitmask of variables with a positive exponent somewhere.
  unsigned variable_mask() const;
  bool contains(Variable v) const { return variable_mask() & (1u << static_cast<unsigned>(v)); }
  /// If the polynomial involves at most one variable, that variable (or d for constants).
  std::optional<Variable> sole_variable() const;

  /// Dense coefficient vector in `v`; precondition: only `v` occurs.
  std::vector<Integer> to_dense(Variable v) const;

  /// Sum of absolute values of coefficients.
  Integer l1_norm() const;
  Integer max_abs_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  Polynomial scaled(const Integer& c) const;
  Polynomial shifted(const Monomial& m) const;

  /// Value with every variable bound to an integer; absent bindings are an error.
  Integer evaluate(const std::array<Integer, 5>& point) const;
  /// Substitutes v = value and returns the polynomial in the remaining variables.
  Polynomial evaluate(Variable v, const Integer& value) const;

  /// Human-readable form, e.g. "d^4 - 4*d^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial neg(const Polynomial& p);

/// A substitution target: either an integer or a polynomial.
using Binding = std::map<Variable, Polynomial>;

/// Simultaneous substitution; unbound variables are left untouched.
Polynomial substitute(const Polynomial& p, const Binding& bindings);

/// Exact quotient p / q, or nullopt when q does not divide p.
/// Throws ZeroDivisor when q == 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

/// Interpolation sample: abscissa t and the value p(v = t) in the other variables.
struct InterpolationPoint {
  long abscissa;
  Polynomial value;
};

/// Unique polynomial of degree < points.size() in `v` through all samples,
/// via Newton divided differences. Throws NonIntegralResult when a divided
/// difference fails to clear to integer coefficients, and InvalidArgument on
/// repeated abscissae.
Polynomial interpolate(Variable v, std::span<const InterpolationPoint> points);

/// Integer abscissae symmetric around zero: 0, 1, -1, 2, -2, ... skipping
/// values with |t| < min_abs.
std::vector<long> symmetric_grid(std::size_t count, long min_abs = 0);

}  // namespace mbgram
