#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "mbgram/polynomial.hpp"
#include "mbgram/report.hpp"

namespace mbgram {

/// First kind T_n (T_0 = 2, T_1 = d) or second kind S_n (S_0 = 1, S_1 = d),
/// both satisfying P_n = d*P_{n-1} - P_{n-2}.
enum class ChebyshevKind { First, Second };

/// Memoized Chebyshev generator in the variable d.
///
/// Negative indices are obtained by running the recurrence downward:
/// T_{-n} = T_n, S_{-1} = 0 and S_{-n} = -S_{n-2}.
///
/// Every index up to `memo_limit` is kept in an append-only table; larger
/// indices are produced by continuing the recurrence from the top of the
/// table, and only the requested results are retained. Concurrent readers are
/// allowed; extension takes an exclusive lock.
class ChebyshevTable {
 public:
  static constexpr long kDefaultBound = 4096;
  static constexpr long kDefaultMemoLimit = 1024;

  explicit ChebyshevTable(long bound = kDefaultBound, long memo_limit = kDefaultMemoLimit);

  Polynomial T(long n) const { return get(ChebyshevKind::First, n); }
  Polynomial S(long n) const { return get(ChebyshevKind::Second, n); }
  Polynomial get(ChebyshevKind kind, long n) const;

  long bound() const { return bound_; }

  /// Process-wide table with default bounds.
  static const ChebyshevTable& shared();

 private:
  struct Series {
    std::vector<std::vector<Integer>> dense;  // index -> coefficients in d
    std::map<long, Polynomial> large;
  };

  std::vector<Integer> dense_at(ChebyshevKind kind, long n) const;

  long bound_;
  long memo_limit_;
  mutable std::shared_mutex mutex_;
  mutable Series series_[2];
};

Polynomial cheb_T(long n);
Polynomial cheb_S(long n);

/// The closed-form identities among T and S that the checker knows about.
enum class IdentityId {
  ProdToSumT,  ///< T_m T_n = T_{m+n} + T_{|m-n|}
  ProdToSumS,  ///< S_n S_m = S_{|n-m|} + S_{|n-m|+2} + ... + S_{n+m}
  SProdRecur,  ///< S_n S_m = S_{m-1} S_{n-1} + S_{n+m}
  Lemma2_3a,   ///< T_{4n} - 2 = T_n^2 (T_n^2 - 4), with zero constant term
  Lemma2_3b,   ///< T_{2n} - 2 = T_n^2 - 4
  Cor2_4a,     ///< T_{2^n}^2 - 4 = (T_2^2 - 4) prod_{i=1}^{n-1} T_{2^i}^2
  Cor2_4b,     ///< T_{2^n} - 2 = (T_1^2 - 4) prod_{i=0}^{n-2} T_{2^i}^2
  Lemma2_5,    ///< T_n^2 - 4 = (d^2 - 4) S_{n-1}^2
  Cor2_6,      ///< S_{2^k - 1} = prod_{i=0}^{k-1} T_{2^i}
  TSqBridge,   ///< T_n^2 - d^2 = S_n S_{n-2} (d^2 - 4)
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::ProdToSumT, IdentityId::ProdToSumS, IdentityId::SProdRecur,
    IdentityId::Lemma2_3a,  IdentityId::Lemma2_3b,  IdentityId::Cor2_4a,
    IdentityId::Cor2_4b,    IdentityId::Lemma2_5,   IdentityId::Cor2_6,
    IdentityId::TSqBridge};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
/// Whether the identity is indexed by the pair (m, n) rather than a single index.
bool identity_is_binary(IdentityId id);

/// Both sides of one identity instance, as built polynomials.
struct IdentitySides {
  Polynomial lhs;
  Polynomial rhs;
  /// Extra side condition (the zero constant term of Lemma2_3a); true otherwise.
  bool side_condition = true;
  /// Whether an S with negative index entered the computation.
  bool negative_s_index = false;
};

/// Builds both sides for one parameter tuple (m is ignored by unary identities).
/// Throws InvalidArgument for parameters outside the identity's domain.
IdentitySides identity_sides(IdentityId id, long n, long m = 0,
                             const ChebyshevTable& table = ChebyshevTable::shared());

/// Parameter range for verify_identity. Binary identities sweep
/// [lo, hi] x [lo, hi]; unary ones sweep n in [lo, hi].
struct IndexRange {
  long lo = 0;
  long hi = 0;
};

/// Default sweep for an identity: 0..64, except 2..12 for the identities
/// indexed by an exponent of two (Cor2_4a, Cor2_4b, Cor2_6).
IndexRange default_range(IdentityId id);

/// Checks every tuple in the range; each tuple is a report entry. Mismatches
/// carry the differing polynomials as witnesses.
Report verify_identity(IdentityId id, IndexRange range,
                       const ChebyshevTable& table = ChebyshevTable::shared());

}  // namespace mbgram
