#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "mbgram/polynomial.hpp"

namespace mbgram {

/// Closed-form determinant conjectures. C3_3 and C3_5 describe det of the
/// tilde Gram matrix (via T and via S), C3_4 the full (Mb)_1 determinant, and
/// C5_1 the proposed formula for the type Mb determinant (builder only).
enum class ConjectureId { C3_3, C3_4, C3_5, C5_1 };

std::string_view conjecture_name(ConjectureId id);
std::optional<ConjectureId> conjecture_from_name(std::string_view name);
std::string_view conjecture_statement(ConjectureId id);

/// Smallest n the formula is stated for.
int conjecture_min_n(ConjectureId id);

/// C(n, k) as an unsigned long; zero outside 0 <= k <= n.
unsigned long binomial(long n, long k);

/// Factor::group value for a factor that forms a bracket on its own.
inline constexpr int kOwnGroup = -1;

struct Factor {
  Polynomial base;
  unsigned long exponent = 1;
  int group = kOwnGroup;  ///< product index k the factor belongs to
};

/// A product of powers, kept unexpanded so it can be evaluated cheaply.
struct FactoredPolynomial {
  std::vector<Factor> factors;

  Polynomial expand() const;
  Integer evaluate(const std::array<Integer, 5>& point) const;
  std::uint64_t total_degree() const;

  /// Per group k: the factors' common exponent g and the expanded bracket
  /// prod base^{exponent/g}, so the product equals prod_k bracket_k^{g_k}.
  struct Bracket {
    int group = 0;
    Polynomial value;
    unsigned long exponent = 0;
  };
  std::vector<Bracket> brackets() const;
};

/// The conjectured right-hand side for the given n, in factored form. Throws
/// InvalidArgument below conjecture_min_n.
///
/// C5_1 reads the trailing factor as
///   D_{n,i} = prod_{k=i+1}^{n} (d^2 - 4)^{C(2n,n-k)} S_{k-1}^{2 C(2n,n-k)},
/// matching the exponent pattern of C3_5, and T_k(w) as T_k with d -> w.
FactoredPolynomial conjecture_factors(ConjectureId id, int n);

Polynomial conjecture_formula(ConjectureId id, int n);

}  // namespace mbgram
