#include <algorithm>
#include <cstdint>

#include "mbgram/determinant.hpp"
#include "parallel.hpp"

namespace mbgram {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic modulo an odd prime below 2^62.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const u128 r = (static_cast<u128>(1) << 64) % p;
    r2_ = static_cast<u64>((r * r) % p);
  }

  u64 prime() const { return p_; }

  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 to(u64 a) const { return mul(a % p_, r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 one() const { return to(1); }

  u64 pow(u64 a, u64 e) const {
    u64 r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inverse(u64 a) const { return pow(a, p_ - 2); }

  u64 from_integer(const Integer& v) const {
    const Integer r = ((v % Integer(static_cast<unsigned long>(p_))) + Integer(static_cast<unsigned long>(p_))) %
                      Integer(static_cast<unsigned long>(p_));
    return to(r.get_ui());
  }
  u64 from_signed(long v) const {
    const long m = v % static_cast<long>(p_);
    return to(static_cast<u64>(m < 0 ? m + static_cast<long>(p_) : m));
  }

 private:
  u64 p_;
  u64 neg_inv_ = 0;
  u64 r2_ = 0;
};

/// Determinant mod p by Gaussian elimination with row pivoting; destroys `a`.
u64 det_mod(std::vector<u64>& a, std::size_t n, const Montgomery& mg) {
  u64 det = mg.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + piv * n);
      det = mg.sub(0, det);
    }
    const u64 pivot = a[k * n + k];
    det = mg.mul(det, pivot);
    const u64 inv = mg.inverse(pivot);
    const u64* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* ri = &a[i * n];
      if (ri[k] == 0) continue;
      const u64 f = mg.mul(ri[k], inv);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = mg.sub(ri[j], mg.mul(f, rk[j]));
    }
  }
  return det;
}

struct SparseEntry {
  struct Term {
    std::array<std::uint32_t, 5> exponents;
    Integer coefficient;
  };
  std::vector<Term> terms;
};

/// Primes below 2^62, descending.
std::vector<u64> primes(std::size_t count) {
  std::vector<u64> out;
  mpz_class candidate = (mpz_class(1) << 62) - 1;
  while (out.size() < count) {
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) > 0) out.push_back(candidate.get_ui());
    candidate -= 2;
  }
  return out;
}

/// Coefficients of the Newton-form interpolant through (xs[i], ys[i]) mod p,
/// returned in the monomial basis (index = power). All values Montgomery form.
std::vector<u64> interpolate_mod(const std::vector<u64>& xs, std::vector<u64> c,
                                 const std::vector<std::vector<u64>>& inv_diff,
                                 const Montgomery& mg) {
  const std::size_t k = xs.size();
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i)
      c[i] = mg.mul(mg.sub(c[i], c[i - 1]), inv_diff[i][i - j]);
  std::vector<u64> poly(k, 0);
  poly[0] = c[k - 1];
  std::size_t deg = 0;
  for (std::size_t i = k - 1; i-- > 0;) {
    // poly = poly * (t - xs[i]) + c[i]
    for (std::size_t e = deg + 1; e > 0; --e)
      poly[e] = mg.sub(poly[e - 1], mg.mul(poly[e], xs[i]));
    poly[0] = mg.sub(c[i], mg.mul(poly[0], xs[i]));
    ++deg;
  }
  return poly;
}

}  // namespace

Polynomial det_modular(const PolyMatrix& m, unsigned jobs, const DegreeBounds& bounds) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);

  const std::vector<Variable> vars = active_variables(m);
  std::vector<std::size_t> extent;  // grid points per active variable
  for (auto v : vars) {
    const auto it = bounds.find(v);
    extent.push_back((it != bounds.end() ? it->second : degree_bound(m, v)) + 1);
  }
  std::size_t grid_size = 1;
  for (auto e : extent) grid_size *= e;

  // Coefficient bound: |coef| <= sum |coef| <= per(|M|(1,..,1)) <= prod of row
  // (or column) sums of entry l1-norms.
  Integer row_product = 1, col_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer rs, cs;
    for (std::size_t j = 0; j < n; ++j) {
      rs += m(i, j).l1_norm();
      cs += m(j, i).l1_norm();
    }
    row_product *= rs;
    col_product *= cs;
  }
  const Integer coefficient_bound = std::min(row_product, col_product);
  if (coefficient_bound == 0) return Polynomial{};
  const Integer needed = 2 * coefficient_bound + 1;

  std::vector<SparseEntry> entries(n * n);
  for (std::size_t idx = 0; idx < n * n; ++idx)
    for (const auto& t : m.data()[idx].terms())
      entries[idx].terms.push_back({t.monomial.exponents(), t.coefficient});

  std::size_t prime_count = 0;
  {
    Integer product = 1;
    while (product < needed) {
      product <<= 62;
      ++prime_count;
    }
    ++prime_count;  // primes are slightly below 2^62
  }
  const auto ps = primes(prime_count);

  std::vector<Integer> combined(grid_size);
  Integer modulus = 1;
  std::vector<std::vector<long>> abscissae;
  for (std::size_t vi = 0; vi < vars.size(); ++vi)
    abscissae.push_back(symmetric_grid(extent[vi], vars[vi] == Variable::d ? 2 : 0));

  for (u64 p : ps) {
    if (modulus >= needed) break;
    const Montgomery mg(p);

    std::vector<std::vector<u64>> coeff_mod(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx)
      for (const auto& t : entries[idx].terms) coeff_mod[idx].push_back(mg.from_integer(t.coefficient));

    std::vector<std::vector<u64>> xs(vars.size());
    for (std::size_t vi = 0; vi < vars.size(); ++vi)
      for (long t : abscissae[vi]) xs[vi].push_back(mg.from_signed(t));

    std::vector<u64> values(grid_size);
    detail::parallel_for(grid_size, jobs, [&](std::size_t g) {
      // Decode the grid index: first variable varies slowest.
      std::array<u64, 5> point{};
      std::size_t rem = g;
      for (std::size_t vi = vars.size(); vi-- > 0;) {
        point[static_cast<unsigned>(vars[vi])] = xs[vi][rem % extent[vi]];
        rem /= extent[vi];
      }
      std::array<std::vector<u64>, 5> powers;
      auto power = [&](unsigned var, std::uint32_t e) {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(mg.one());
        while (cache.size() <= e) cache.push_back(mg.mul(cache.back(), point[var]));
        return cache[e];
      };
      std::vector<u64> a(n * n, 0);
      for (std::size_t idx = 0; idx < n * n; ++idx) {
        u64 sum = 0;
        const auto& terms = entries[idx].terms;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          u64 value = coeff_mod[idx][t];
          for (unsigned var = 0; var < 5; ++var)
            if (terms[t].exponents[var] != 0) value = mg.mul(value, power(var, terms[t].exponents[var]));
          sum = mg.add(sum, value);
        }
        a[idx] = sum;
      }
      values[g] = det_mod(a, n, mg);
    });

    // Interpolate one dimension at a time, turning values into coefficients.
    std::size_t stride = grid_size;
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
      const std::size_t len = extent[vi];
      stride /= len;
      std::vector<std::vector<u64>> inv_diff(len, std::vector<u64>(len, 0));
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < i; ++j) inv_diff[i][j] = mg.inverse(mg.sub(xs[vi][i], xs[vi][j]));
      const std::size_t outer = grid_size / (len * stride);
      for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t s = 0; s < stride; ++s) {
          std::vector<u64> line(len);
          for (std::size_t k = 0; k < len; ++k) line[k] = values[(o * len + k) * stride + s];
          const auto coeffs = interpolate_mod(xs[vi], std::move(line), inv_diff, mg);
          for (std::size_t k = 0; k < len; ++k) values[(o * len + k) * stride + s] = coeffs[k];
        }
    }

    // Incremental CRT: x <- x + M * ((r - x) * M^{-1} mod p).
    const Integer pz(static_cast<unsigned long>(p));
    Integer m_inv;
    const Integer m_mod = modulus % pz;
    mpz_invert(m_inv.get_mpz_t(), m_mod.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t g = 0; g < grid_size; ++g) {
      const Integer r(static_cast<unsigned long>(mg.from(values[g])));
      Integer delta = ((r - combined[g] % pz) % pz + pz) % pz;
      delta = (delta * m_inv) % pz;
      combined[g] += modulus * delta;
    }
    modulus *= pz;
  }

  const Integer half = modulus / 2;
  std::vector<Term> terms;
  for (std::size_t g = 0; g < grid_size; ++g) {
    Integer c = combined[g];
    if (c > half) c -= modulus;
    if (c == 0) continue;
    std::array<std::uint32_t, 5> ex{};
    std::size_t rem = g;
    for (std::size_t vi = vars.size(); vi-- > 0;) {
      ex[static_cast<unsigned>(vars[vi])] = static_cast<std::uint32_t>(rem % extent[vi]);
      rem /= extent[vi];
    }
    terms.push_back({Monomial(ex), std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace mbgram
