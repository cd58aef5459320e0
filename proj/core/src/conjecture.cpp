#include "mbgram/conjecture.hpp"

#include <map>
#include <numeric>

#include "mbgram/chebyshev.hpp"
#include "mbgram/errors.hpp"

namespace mbgram {

std::string_view conjecture_name(ConjectureId id) {
  switch (id) {
    case ConjectureId::C3_3: return "C3_3";
    case ConjectureId::C3_4: return "C3_4";
    case ConjectureId::C3_5: return "C3_5";
    case ConjectureId::C5_1: return "C5_1";
  }
  return "?";
}

std::optional<ConjectureId> conjecture_from_name(std::string_view name) {
  for (auto id : {ConjectureId::C3_3, ConjectureId::C3_4, ConjectureId::C3_5, ConjectureId::C5_1})
    if (conjecture_name(id) == name) return id;
  return std::nullopt;
}

std::string_view conjecture_statement(ConjectureId id) {
  switch (id) {
    case ConjectureId::C3_3:
      return "det(G~_n) = prod_{k=2}^n (T_{2k}(d) - 2)^{C(2n,n-k)}";
    case ConjectureId::C3_4:
      return "D_n = [(d-z)((d+z)w - 2xy)]^{C(2n,n-1)} prod_{k=2}^n (T_k^2 - z^2)^{C(2n,n-k)} "
             "prod_{k=2}^n (d^2-4)^{C(2n,n-k)} S_{k-1}^{2C(2n,n-k)}";
    case ConjectureId::C3_5:
      return "det(G~_n) = prod_{k=2}^n (d^2-4)^{C(2n,n-k)} S_{k-1}(d)^{2C(2n,n-k)}";
    case ConjectureId::C5_1:
      return "D_n^Mb = prod_k (T_k + (-1)^k z)^{C(2n,n-k)} * crosscap factors * prod_i D_{n,i}";
  }
  return "";
}

int conjecture_min_n(ConjectureId id) {
  return id == ConjectureId::C3_3 || id == ConjectureId::C3_5 ? 2 : 1;
}

unsigned long binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_ui();
}

Polynomial FactoredPolynomial::expand() const {
  Polynomial r(1);
  for (const auto& f : factors) r *= f.base.pow(static_cast<unsigned>(f.exponent));
  return r;
}

Integer FactoredPolynomial::evaluate(const std::array<Integer, 5>& point) const {
  Integer r = 1, v;
  for (const auto& f : factors) {
    const Integer b = f.base.evaluate(point);
    mpz_pow_ui(v.get_mpz_t(), b.get_mpz_t(), f.exponent);
    r *= v;
  }
  return r;
}

std::uint64_t FactoredPolynomial::total_degree() const {
  std::uint64_t deg = 0;
  for (const auto& f : factors) deg += static_cast<std::uint64_t>(f.base.total_degree()) * f.exponent;
  return deg;
}

std::vector<FactoredPolynomial::Bracket> FactoredPolynomial::brackets() const {
  std::map<int, std::vector<const Factor*>> groups;
  std::vector<Bracket> out;
  for (const auto& f : factors) {
    if (f.group == kOwnGroup) out.push_back({kOwnGroup, f.base, f.exponent});
    else groups[f.group].push_back(&f);
  }
  for (const auto& [group, members] : groups) {
    unsigned long g = 0;
    for (const auto* f : members) g = std::gcd(g, f->exponent);
    Polynomial value(1);
    for (const auto* f : members) value *= f->base.pow(static_cast<unsigned>(f->exponent / g));
    out.push_back({group, std::move(value), g});
  }
  return out;
}

namespace {

const Polynomial d = Variable::d;
const Polynomial z = Variable::z;

void push(FactoredPolynomial& out, Polynomial base, unsigned long exponent, int group) {
  if (exponent == 0 || base == Polynomial(1)) return;
  out.factors.push_back({std::move(base), exponent, group});
}

// (d^2 - 4)^C S_{k-1}^{2C} for k = lo..n.
void push_s_block(FactoredPolynomial& out, int n, int lo) {
  const auto& cheb = ChebyshevTable::shared();
  for (int k = lo; k <= n; ++k) {
    const auto c = binomial(2 * n, n - k);
    push(out, d * d - 4, c, k);
    push(out, cheb.S(k - 1), 2 * c, k);
  }
}

}  // namespace

FactoredPolynomial conjecture_factors(ConjectureId id, int n) {
  if (n < conjecture_min_n(id))
    throw InvalidArgument("conjecture " + std::string(conjecture_name(id)) + " needs n >= " +
                          std::to_string(conjecture_min_n(id)));
  const auto& cheb = ChebyshevTable::shared();
  const Polynomial w = Variable::w;
  const Polynomial xy = Polynomial(Variable::x) * Polynomial(Variable::y);
  FactoredPolynomial out;
  switch (id) {
    case ConjectureId::C3_3:
      for (int k = 2; k <= n; ++k) push(out, cheb.T(2 * k) - 2, binomial(2 * n, n - k), k);
      break;
    case ConjectureId::C3_5:
      push_s_block(out, n, 2);
      break;
    case ConjectureId::C3_4: {
      push(out, (d - z) * ((d + z) * w - 2 * xy), binomial(2 * n, n - 1), kOwnGroup);
      for (int k = 2; k <= n; ++k) {
        const Polynomial t = cheb.T(k);
        push(out, t * t - z * z, binomial(2 * n, n - k), kOwnGroup);
      }
      push_s_block(out, n, 2);
      break;
    }
    case ConjectureId::C5_1: {
      const Binding to_w = {{Variable::d, w}};
      for (int k = 1; k <= n; ++k) {
        const auto c = binomial(2 * n, n - k);
        const Polynomial t = cheb.T(k);
        const Polynomial sign_z = k % 2 == 0 ? z : -z;
        push(out, t + sign_z, c, kOwnGroup);
        const Polynomial tail = k % 2 == 1 ? 2 * xy : 2 * (2 - z);
        push(out, (t - sign_z) * substitute(t, to_w) - tail, c, kOwnGroup);
      }
      for (int i = 1; i <= n; ++i) push_s_block(out, n, i + 1);
      break;
    }
  }
  return out;
}

Polynomial conjecture_formula(ConjectureId id, int n) { return conjecture_factors(id, n).expand(); }

}  // namespace mbgram
