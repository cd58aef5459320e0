#pragma once

#include <cstdint>

#include "mbgram/cache.hpp"
#include "mbgram/conjecture.hpp"
#include "mbgram/determinant.hpp"
#include "mbgram/report.hpp"

namespace mbgram {

/// Shared settings for checks that compute determinants.
struct CheckContext {
  const Cache* cache = nullptr;
  unsigned jobs = 1;
  DetBackend backend = DetBackend::Auto;
};

enum class Method { Exact, Randomized };

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RandomizedOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned points = 20;
};

/// Compares a determinant with the conjectured closed form.
///
/// Exact: structural equality of the expanded polynomials. Randomized (C3_4
/// only): both sides are evaluated at `points` points whose coordinates are
/// drawn uniformly from [-2^31, 2^31) by a seeded mt19937_64. A nonzero
/// difference of total degree D vanishes at one such point with probability
/// at most D / 2^32; the report states log2 of the bound over all points.
/// C5_1 is reported SKIPPED: it concerns diagrams with several crosscap curves.
Report verify_conjecture(ConjectureId id, int n, Method method, const CheckContext& ctx = {},
                         RandomizedOptions random = {});

/// C3_3 and C3_5 agree for lo <= n <= hi: bracket by bracket (the k-th
/// factors expanded, exponents equal) for every n, and fully multiplied out
/// for n <= expand_max. Multiplying out n = 8 means polynomials of degree
/// ~8e4 with ~5e4-bit coefficients, which the bracket form avoids.
Report verify_formula_equivalence(int lo = 2, int hi = 8, int expand_max = 6);

/// d^{2 C(2n, n-2)} divides det(G~_n) exactly; the quotient is kept.
Report verify_theorem_3_6(int n, const CheckContext& ctx = {});

/// The worked pairing (2 5)(3 4)(1)(6) against (6 1)(2)(3)(4)(5): graph edge
/// sets and the value x*y.
Report verify_figure4();

/// G~_2 equals the 4x4 class block matrix with u = 1 up to a simultaneous
/// permutation, and its determinant is d^4 - 4d^2.
Report verify_block_matrix();

/// |Mb_{n,0}| = C(2n, n), |Mb_{n,1}| = C(2n, n-1), every diagram valid and
/// round-tripping through its text form.
Report verify_enumeration_counts(int n_max = 6);

/// S_{2^k - 1} = prod_{i<k} T_{2^i} for 2 <= k <= k_max.
Report verify_mersenne_chain(int k_max = 12);

/// Over all pairs of (Mb)_1 diagrams with n <= n_max: the value is a monomial
/// with total degree equal to the component count; x or w appears (once)
/// exactly when the first diagram has fixed points, y or w likewise for the
/// second, so Mb_{n,1} pairs give x and y together;
/// swapping the arguments swaps x and y; the diagonal is d^n or d^{n-1} w;
/// Mb_{n,1} pairs carry exactly {w} or {x, y}; tilde entries avoid x, y, w.
Report verify_pairing_laws(int n_max = 4);

/// Psi lies in {0, +-2n} on every crosscap-free component, n <= n_max.
Report verify_walk_values(int n_max = 5);

/// Elimination, evaluation/interpolation and the modular backend agree on
/// the Gram matrices small enough for elimination.
Report verify_backend_agreement(unsigned jobs = 1);

/// Determinants are unchanged by random simultaneous row/column permutations.
Report verify_permutation_invariance(std::uint64_t seed = kDefaultSeed, unsigned trials = 3);

}  // namespace mbgram
