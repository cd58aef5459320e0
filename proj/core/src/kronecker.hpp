#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace mbgram::detail {

/// Product of two dense univariate integer polynomials via Kronecker
/// substitution: both operands are packed into one big integer each, multiplied
/// with GMP, and unpacked with balanced (signed) digit extraction.
std::vector<mpz_class> kronecker_multiply(std::span<const mpz_class> a,
                                          std::span<const mpz_class> b);

/// Schoolbook reference, used for small inputs and as a test oracle.
std::vector<mpz_class> schoolbook_multiply(std::span<const mpz_class> a,
                                           std::span<const mpz_class> b);

}  // namespace mbgram::detail
