#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mbgram/gram.hpp"
#include "mbgram/matrix.hpp"
#include "mbgram/polynomial.hpp"

namespace mbgram {

using IntMatrix = SquareMatrix<Integer>;

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer det_integer(IntMatrix m);

/// Fraction-free elimination over Z[d, w, x, y, z]. Every interior division is
/// exact; a failed division throws EliminationError. A zero pivot is replaced
/// by swapping in a later column (with a sign flip); a row with no usable
/// pivot means the determinant is zero.
Polynomial det_exact(const PolyMatrix& m);

/// Upper bound on deg_v(det m): the smaller of the row-wise and column-wise
/// sums of the largest degree of v.
std::uint32_t degree_bound(const PolyMatrix& m, Variable v);

/// Upper bound on the total degree of det m, by the same row/column argument.
std::uint32_t total_degree_bound(const PolyMatrix& m);

/// Variables occurring in at least one entry.
std::vector<Variable> active_variables(const PolyMatrix& m);

using DegreeBounds = std::map<Variable, std::uint32_t>;

/// Determinant by evaluation and interpolation over the designated variables.
///
/// Each designated variable v is evaluated on bound_v + 1 integer abscissae
/// symmetric around zero (|t| >= 2 for d), inner determinants are computed
/// recursively, and the results are recombined by Newton interpolation.
/// Variables missing from `bounds` use degree_bound. Entries left with
/// undesignated variables at the bottom of the recursion go through
/// det_exact. The result is checked at one extra abscissa per level; on a
/// mismatch or NonIntegralResult the bounds are doubled once before the
/// error is rethrown.
Polynomial det_by_evaluation(const PolyMatrix& m, std::span<const Variable> variables,
                             const DegreeBounds& bounds = {}, unsigned jobs = 1);

/// Multi-modular determinant: for a sequence of 62-bit primes, evaluates the
/// matrix on a grid over all active variables, eliminates mod p, interpolates
/// mod p, and recombines coefficients by CRT. The number of primes comes from
/// a rigorous coefficient bound (the permanent of the matrix of entry
/// l1-norms, bounded by the product of row or column sums), so the result is
/// exact.
Polynomial det_modular(const PolyMatrix& m, unsigned jobs = 1, const DegreeBounds& bounds = {});

enum class DetBackend { Auto, Bareiss, Interpolation, Modular };

std::string_view backend_name(DetBackend b);
std::optional<DetBackend> backend_from_name(std::string_view name);

/// Crossover for DetBackend::Auto: elimination up to this size or with at
/// least three active variables; interpolation up to kModularCrossover;
/// multi-modular beyond.
inline constexpr std::size_t kBareissCrossover = 40;
inline constexpr std::size_t kModularCrossover = 48;

DetBackend choose_backend(const PolyMatrix& m);

struct DetOptions {
  DetBackend backend = DetBackend::Auto;
  unsigned jobs = 1;
  DegreeBounds bounds;
};

struct DetResult {
  Polynomial value;
  DetBackend backend = DetBackend::Bareiss;
  double milliseconds = 0.0;
  nlohmann::json provenance() const;
};

DetResult determinant(const PolyMatrix& m, const DetOptions& options = {});

}  // namespace mbgram
