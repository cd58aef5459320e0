#include "mbgram/chebyshev.hpp"

#include <cstdlib>
#include <mutex>

namespace mbgram {
namespace {

using Dense = std::vector<Integer>;

// d * prev - prevprev
Dense recurrence_step(const Dense& prev, const Dense& prevprev) {
  Dense next(prev.size() + 1);
  for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] = prev[i];
  for (std::size_t i = 0; i < prevprev.size(); ++i)
    mpz_sub(next[i].get_mpz_t(), next[i].get_mpz_t(), prevprev[i].get_mpz_t());
  return next;
}

const Polynomial& d_squared_minus_4() {
  static const Polynomial p = Polynomial(Variable::d).pow(2) - Polynomial(4);
  return p;
}

}  // namespace

ChebyshevTable::ChebyshevTable(long bound, long memo_limit)
    : bound_(bound), memo_limit_(std::min(memo_limit, bound)) {
  series_[0].dense = {Dense{2}, Dense{0, 1}};
  series_[1].dense = {Dense{1}, Dense{0, 1}};
}

const ChebyshevTable& ChebyshevTable::shared() {
  static const ChebyshevTable table;
  return table;
}

Dense ChebyshevTable::dense_at(ChebyshevKind kind, long n) const {
  auto& s = series_[kind == ChebyshevKind::First ? 0 : 1];
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < s.dense.size()) return s.dense[n];
  }
  std::unique_lock lock(mutex_);
  const long memo_top = std::min(n, memo_limit_);
  while (static_cast<long>(s.dense.size()) <= memo_top)
    s.dense.push_back(recurrence_step(s.dense.back(), s.dense[s.dense.size() - 2]));
  if (n <= memo_limit_) return s.dense[n];

  Dense prevprev = s.dense[s.dense.size() - 2];
  Dense prev = s.dense.back();
  const long start = static_cast<long>(s.dense.size());
  lock.unlock();
  for (long k = start; k <= n; ++k) {
    Dense next = recurrence_step(prev, prevprev);
    prevprev = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

Polynomial ChebyshevTable::get(ChebyshevKind kind, long n) const {
  if (std::labs(n) > bound_)
    throw BoundExceeded("Chebyshev index " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound_));
  if (n < 0) {
    if (kind == ChebyshevKind::First) return get(kind, -n);
    if (n == -1) return {};
    return -get(kind, -n - 2);
  }
  if (n <= memo_limit_) return Polynomial::from_dense(Variable::d, dense_at(kind, n));

  auto& s = series_[kind == ChebyshevKind::First ? 0 : 1];
  {
    std::shared_lock lock(mutex_);
    if (auto it = s.large.find(n); it != s.large.end()) return it->second;
  }
  Polynomial p = Polynomial::from_dense(Variable::d, dense_at(kind, n));
  std::unique_lock lock(mutex_);
  s.large.emplace(n, p);
  return p;
}

Polynomial cheb_T(long n) { return ChebyshevTable::shared().T(n); }
Polynomial cheb_S(long n) { return ChebyshevTable::shared().S(n); }

// ---------------------------------------------------------------- identities

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::ProdToSumT: return "ProdToSumT";
    case IdentityId::ProdToSumS: return "ProdToSumS";
    case IdentityId::SProdRecur: return "SProdRecur";
    case IdentityId::Lemma2_3a: return "Lemma2_3a";
    case IdentityId::Lemma2_3b: return "Lemma2_3b";
    case IdentityId::Cor2_4a: return "Cor2_4a";
    case IdentityId::Cor2_4b: return "Cor2_4b";
    case IdentityId::Lemma2_5: return "Lemma2_5";
    case IdentityId::Cor2_6: return "Cor2_6";
    case IdentityId::TSqBridge: return "TSqBridge";
  }
  return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (auto id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

bool identity_is_binary(IdentityId id) {
  return id == IdentityId::ProdToSumT || id == IdentityId::ProdToSumS ||
         id == IdentityId::SProdRecur;
}

namespace {

std::string_view identity_statement(IdentityId id) {
  switch (id) {
    case IdentityId::ProdToSumT: return "T_m T_n = T_{m+n} + T_{|m-n|}";
    case IdentityId::ProdToSumS: return "S_n S_m = S_{|n-m|} + S_{|n-m|+2} + ... + S_{n+m}";
    case IdentityId::SProdRecur: return "S_n S_m = S_{m-1} S_{n-1} + S_{n+m}";
    case IdentityId::Lemma2_3a: return "T_{4n} - 2 = T_n^2 (T_n^2 - 4), constant term zero";
    case IdentityId::Lemma2_3b: return "T_{2n} - 2 = T_n^2 - 4";
    case IdentityId::Cor2_4a: return "T_{2^n}^2 - 4 = (T_2^2 - 4) prod_{i=1}^{n-1} T_{2^i}^2";
    case IdentityId::Cor2_4b: return "T_{2^n} - 2 = (T_1^2 - 4) prod_{i=0}^{n-2} T_{2^i}^2";
    case IdentityId::Lemma2_5: return "T_n^2 - 4 = (d^2 - 4) S_{n-1}^2";
    case IdentityId::Cor2_6: return "S_{2^k-1} = prod_{i=0}^{k-1} T_{2^i}";
    case IdentityId::TSqBridge: return "T_n^2 - d^2 = S_n S_{n-2} (d^2 - 4)";
  }
  return "";
}

long power_of_two(long e, const ChebyshevTable& table) {
  if (e < 0 || e > 62 || (1L << e) > table.bound())
    throw BoundExceeded("2^" + std::to_string(e) + " exceeds the Chebyshev bound");
  return 1L << e;
}

}  // namespace

IdentitySides identity_sides(IdentityId id, long n, long m, const ChebyshevTable& table) {
  if (n < 0 || m < 0) throw InvalidArgument("identity parameters must be non-negative");
  const Polynomial d(Variable::d);
  IdentitySides out;
  auto S = [&](long k) {
    if (k < 0) out.negative_s_index = true;
    return table.S(k);
  };
  auto T = [&](long k) { return table.T(k); };

  switch (id) {
    case IdentityId::ProdToSumT:
      out.lhs = T(m) * T(n);
      out.rhs = T(m + n) + T(std::labs(m - n));
      break;
    case IdentityId::ProdToSumS: {
      out.lhs = S(n) * S(m);
      std::vector<Integer> acc(n + m + 1);
      for (long j = std::labs(n - m); j <= n + m; j += 2) {
        const auto s = table.S(j).to_dense(Variable::d);
        for (std::size_t i = 0; i < s.size(); ++i) acc[i] += s[i];
      }
      out.rhs = Polynomial::from_dense(Variable::d, acc);
      break;
    }
    case IdentityId::SProdRecur:
      out.lhs = S(n) * S(m);
      out.rhs = S(m - 1) * S(n - 1) + S(n + m);
      break;
    case IdentityId::Lemma2_3a: {
      const Polynomial tn2 = T(n).pow(2);
      out.lhs = T(4 * n) - Polynomial(2);
      out.rhs = tn2 * (tn2 - Polynomial(4));
      out.side_condition = out.lhs.constant_term() == 0;
      break;
    }
    case IdentityId::Lemma2_3b:
      out.lhs = T(2 * n) - Polynomial(2);
      out.rhs = T(n).pow(2) - Polynomial(4);
      break;
    case IdentityId::Cor2_4a: {
      out.lhs = T(power_of_two(n, table)).pow(2) - Polynomial(4);
      Polynomial prod = T(2).pow(2) - Polynomial(4);
      for (long i = 1; i <= n - 1; ++i) prod = prod * T(power_of_two(i, table)).pow(2);
      out.rhs = std::move(prod);
      break;
    }
    case IdentityId::Cor2_4b: {
      out.lhs = T(power_of_two(n, table)) - Polynomial(2);
      Polynomial prod = T(1).pow(2) - Polynomial(4);
      for (long i = 0; i <= n - 2; ++i) prod = prod * T(power_of_two(i, table)).pow(2);
      out.rhs = std::move(prod);
      break;
    }
    case IdentityId::Lemma2_5:
      out.lhs = T(n).pow(2) - Polynomial(4);
      out.rhs = d_squared_minus_4() * S(n - 1).pow(2);
      break;
    case IdentityId::Cor2_6: {
      out.lhs = S(power_of_two(n, table) - 1);
      Polynomial prod(1);
      for (long i = 0; i <= n - 1; ++i) prod = prod * T(power_of_two(i, table));
      out.rhs = std::move(prod);
      break;
    }
    case IdentityId::TSqBridge:
      out.lhs = T(n).pow(2) - d.pow(2);
      out.rhs = S(n) * S(n - 2) * d_squared_minus_4();
      break;
  }
  return out;
}

IndexRange default_range(IdentityId id) {
  switch (id) {
    case IdentityId::Cor2_4a:
    case IdentityId::Cor2_4b:
    case IdentityId::Cor2_6:
      return {2, 12};
    default:
      return {0, 64};
  }
}

Report verify_identity(IdentityId id, IndexRange range, const ChebyshevTable& table) {
  Report report;
  ScopedTimer timer(report);
  report.claim = "identity/" + std::string(identity_name(id));
  report.statement = std::string(identity_statement(id));
  report.parameters = {{"lo", range.lo}, {"hi", range.hi}};
  const bool binary = identity_is_binary(id);
  report.parameters["shape"] = binary ? "n,m in [lo,hi]" : "n in [lo,hi]";
  bool negative_used = false;

  auto check = [&](long n, long m) {
    json params = binary ? json{{"n", n}, {"m", m}} : json{{"n", n}};
    const auto sides = identity_sides(id, n, m, table);
    negative_used |= sides.negative_s_index;
    const bool ok = sides.lhs == sides.rhs && sides.side_condition;
    if (ok) {
      report.record(std::move(params), true);
    } else {
      report.record(std::move(params), false,
                    {{"lhs", sides.lhs.to_string()},
                     {"rhs", sides.rhs.to_string()},
                     {"difference", (sides.lhs - sides.rhs).to_string()},
                     {"side_condition", sides.side_condition}});
    }
  };

  for (long n = range.lo; n <= range.hi; ++n) {
    if (binary) {
      for (long m = range.lo; m <= range.hi; ++m) check(n, m);
    } else {
      check(n, 0);
    }
  }
  if (negative_used)
    report.notes.push_back(
        "negative S indices follow the downward recurrence: S_{-1} = 0, S_{-n} = -S_{n-2}");
  return report;
}

}  // namespace mbgram
