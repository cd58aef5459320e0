#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the library's arithmetic: polynomials are plain maps or dense vectors,
// determinants are Leibniz sums, and the crossing test simulates a drawing.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mbgram/diagram.hpp"
#include "mbgram/polynomial.hpp"

namespace oracle {

using Exps = std::array<std::uint32_t, 5>;
using MapPoly = std::map<Exps, mpz_class>;

inline void prune(MapPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline MapPoly add(const MapPoly& a, const MapPoly& b, int sign = 1) {
  MapPoly r = a;
  for (const auto& [e, c] : b) r[e] += sign * c;
  prune(r);
  return r;
}

inline MapPoly mul(const MapPoly& a, const MapPoly& b) {
  MapPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e;
      for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  prune(r);
  return r;
}

inline MapPoly to_map(const mbgram::Polynomial& p) {
  MapPoly r;
  for (const auto& t : p.terms()) r[t.monomial.exponents()] = t.coefficient;
  return r;
}

inline mbgram::Polynomial from_map(const MapPoly& m) {
  std::vector<mbgram::Term> terms;
  for (const auto& [e, c] : m) terms.push_back({mbgram::Monomial(e), c});
  return mbgram::Polynomial::from_terms(std::move(terms));
}

inline mpz_class evaluate(const MapPoly& p, const std::array<mpz_class, 5>& x) {
  mpz_class sum = 0;
  for (const auto& [e, c] : p) {
    mpz_class term = c, power;
    for (int i = 0; i < 5; ++i) {
      mpz_pow_ui(power.get_mpz_t(), x[i].get_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

/// Random polynomial with `terms` terms, exponents < max_exp, |coef| < 2^bits.
inline MapPoly random_poly(std::mt19937_64& rng, int terms, int max_exp, int bits) {
  MapPoly r;
  std::uniform_int_distribution<int> ex(0, max_exp - 1);
  for (int t = 0; t < terms; ++t) {
    Exps e;
    for (auto& x : e) x = static_cast<std::uint32_t>(ex(rng));
    mpz_class c = 0;
    for (int b = 0; b < bits; b += 32) c = (c << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
    c >>= std::max(0, ((bits + 31) / 32) * 32 - bits);
    if (rng() & 1) c = -c;
    r[e] += c;
  }
  prune(r);
  return r;
}

// ------------------------------------------------------------ dense in d

using Dense = std::vector<mpz_class>;  // index = power of d

inline Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Dense dense_pow(Dense a, unsigned long e) {
  Dense r = {1};
  while (e) {
    if (e & 1) r = dense_mul(r, a);
    e >>= 1;
    if (e) a = dense_mul(a, a);
  }
  return r;
}

inline Dense dense_trim(Dense a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// Coefficients in d of a polynomial that involves d only.
inline Dense to_dense(const mbgram::Polynomial& p) {
  Dense r;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial.exponents();
    if (e[1] || e[2] || e[3] || e[4]) throw std::logic_error("not univariate in d");
    if (r.size() <= e[0]) r.resize(e[0] + 1);
    r[e[0]] = t.coefficient;
  }
  return r;
}

/// P_0 = p0, P_1 = d, P_k = d P_{k-1} - P_{k-2}; T uses p0 = 2, S uses p0 = 1.
inline Dense chebyshev(long k, int p0) {
  Dense prev = {p0}, cur = {0, 1};
  if (k == 0) return prev;
  for (long i = 2; i <= k; ++i) {
    Dense next(cur.size() + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline unsigned long choose(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_ui();
}

/// prod_{k=2}^n (d^2 - 4)^{C(2n,n-k)} S_{k-1}^{2 C(2n,n-k)}, multiplied out.
inline Dense tilde_formula_via_s(int n) {
  Dense r = {1};
  for (int k = 2; k <= n; ++k) {
    const unsigned long c = choose(2 * n, n - k);
    r = dense_mul(r, dense_pow({-4, 0, 1}, c));
    r = dense_mul(r, dense_pow(chebyshev(k - 1, 1), 2 * c));
  }
  return r;
}

/// prod_{k=2}^n (T_{2k} - 2)^{C(2n,n-k)}, multiplied out.
inline Dense tilde_formula_via_t(int n) {
  Dense r = {1};
  for (int k = 2; k <= n; ++k) {
    Dense t = chebyshev(2 * k, 2);
    t[0] -= 2;
    r = dense_mul(r, dense_pow(t, choose(2 * n, n - k)));
  }
  return r;
}

// ------------------------------------------------------------ determinants

/// Leibniz expansion over all permutations; fine up to about 7x7.
template <typename M>
MapPoly leibniz_det(const M& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MapPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    MapPoly term = {{Exps{}, inversions % 2 ? -1 : 1}};
    for (std::size_t i = 0; i < n && !term.empty(); ++i) term = mul(term, to_map(m(i, perm[i])));
    total = add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Gaussian elimination over Q.
inline mpz_class rational_det(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  if (det.get_den() != 1) throw std::logic_error("non-integral determinant");
  return det.get_num();
}

/// Numeric P_k(v) for the recurrence P_k = v P_{k-1} - P_{k-2}.
inline mpz_class chebyshev_value(long k, int p0, const mpz_class& v) {
  mpz_class prev = p0, cur = v;
  if (k == 0) return prev;
  for (long i = 2; i <= k; ++i) {
    mpz_class next = v * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// [(d-z)((d+z)w - 2xy)]^{C(2n,n-1)} prod_{k=2}^n (T_k^2 - z^2)^{C(2n,n-k)}
///   (d^2-4)^{C(2n,n-k)} S_{k-1}^{2 C(2n,n-k)} at a point (d, w, x, y, z).
inline mpz_class full_formula_value(int n, const std::array<mpz_class, 5>& p) {
  const mpz_class &d = p[0], &w = p[1], &x = p[2], &y = p[3], &z = p[4];
  auto pw = [](const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };
  mpz_class r = pw((d - z) * ((d + z) * w - 2 * x * y), choose(2 * n, n - 1));
  for (int k = 2; k <= n; ++k) {
    const unsigned long c = choose(2 * n, n - k);
    const mpz_class t = chebyshev_value(k, 2, d), s = chebyshev_value(k - 1, 1, d);
    r *= pw(t * t - z * z, c) * pw(d * d - 4, c) * pw(s, 2 * c);
  }
  return r;
}

// ------------------------------------------------------------ geometry

/// Model drawing: boundary points sit on the unit circle at angle index v;
/// a chord (t -> h) drops radially from t to depth r, runs counterclockwise
/// at radius r until it is above h, and rises back. A fixed point is a
/// radial segment from the boundary to the crosscap at the centre.
struct DrawnChord {
  mbgram::Arc arc;
  int depth;  // larger = closer to the crosscap
};

/// Whether angle v lies strictly inside the counterclockwise sweep t -> h.
inline bool inside_sweep(int t, int h, int v, int size) {
  for (int a = t % size + 1;; ++a) {
    const int p = (a - 1) % size + 1;
    if (p == h) return false;
    if (p == v) return true;
  }
}

inline bool drawn_intersect(const DrawnChord& a, const DrawnChord& b, int size) {
  // The shallower chord's horizontal run is cut by the deeper chord's legs.
  const DrawnChord& deep = a.depth > b.depth ? a : b;
  const DrawnChord& shallow = a.depth > b.depth ? b : a;
  return inside_sweep(shallow.arc.tail, shallow.arc.head, deep.arc.tail, size) ||
         inside_sweep(shallow.arc.tail, shallow.arc.head, deep.arc.head, size);
}

/// Two arcs cross iff no assignment of depths draws them disjointly.
inline bool geometric_cross(const mbgram::Arc& a, const mbgram::Arc& b, int size) {
  return drawn_intersect({a, 1}, {b, 2}, size) && drawn_intersect({a, 2}, {b, 1}, size);
}

inline bool geometric_blocked(const mbgram::Arc& a, int f, int size) {
  return inside_sweep(a.tail, a.head, f, size);
}

/// Brute force over all oriented partial matchings with the given number of
/// fixed points, filtered by the geometric model. Returns serializations.
inline std::set<std::string> brute_force_stratum(int n, int fixed_count) {
  const int size = 2 * n;
  std::set<std::string> out;
  // mate[u]: 0 unassigned, -1 fixed, -2 head of a chord, > 0 tail of u -> mate[u]
  std::vector<int> mate(size + 1, 0);
  std::function<void(int, int)> rec = [&](int v, int fixed_left) {
    while (v <= size && mate[v] != 0) ++v;
    if (v > size) {
      if (fixed_left != 0) return;
      std::vector<mbgram::Arc> chords;
      std::vector<int> fixed;
      for (int u = 1; u <= size; ++u) {
        if (mate[u] == -1) fixed.push_back(u);
        else if (mate[u] > 0) chords.push_back({u, mate[u]});  // tail u -> head mate[u]
      }
      for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j)
          if (geometric_cross(chords[i], chords[j], size)) return;
      for (const auto& c : chords)
        for (int f : fixed)
          if (geometric_blocked(c, f, size)) return;
      out.insert(mbgram::Diagram(n, chords, fixed).to_string());
      return;
    }
    if (fixed_left > 0) {
      mate[v] = -1;
      rec(v + 1, fixed_left - 1);
      mate[v] = 0;
    }
    for (int w = v + 1; w <= size; ++w) {
      if (mate[w] != 0) continue;
      // v -> w, recorded at the tail only; the head is marked as used.
      mate[v] = w;
      mate[w] = -2;
      rec(v + 1, fixed_left);
      mate[v] = -2;
      mate[w] = v;
      rec(v + 1, fixed_left);
      mate[v] = mate[w] = 0;
    }
  };
  rec(1, fixed_count);
  return out;
}

}  // namespace oracle
