#include "mbgram/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "kronecker.hpp"

namespace mbgram {
namespace {

constexpr std::size_t kKroneckerThreshold = 24;

bool by_monomial_desc(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

char variable_name(Variable v) {
  static constexpr char kNames[] = {'d', 'w', 'x', 'y', 'z'};
  return kNames[static_cast<unsigned>(v)];
}

std::optional<Variable> variable_from_name(char c) {
  switch (c) {
    case 'd': return Variable::d;
    case 'w': return Variable::w;
    case 'x': return Variable::x;
    case 'y': return Variable::y;
    case 'z': return Variable::z;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const std::array<std::uint32_t, 5>& exponents) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i < 5; ++i) {
    total += exponents[i];
    key_ |= static_cast<unsigned __int128>(exponents[i]) << (kFieldBits * i);
  }
  if (total > kMaxDegree) throw DegreeOverflow("monomial total degree exceeds 2^20 - 1");
  key_ |= static_cast<unsigned __int128>(total) << (5 * kFieldBits);
}

Monomial Monomial::power(Variable v, std::uint32_t e) {
  std::array<std::uint32_t, 5> ex{};
  ex[static_cast<unsigned>(v)] = e;
  return Monomial(ex);
}

std::array<std::uint32_t, 5> Monomial::exponents() const {
  std::array<std::uint32_t, 5> ex{};
  for (auto v : kAllVariables) ex[static_cast<unsigned>(v)] = exponent(v);
  return ex;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (std::uint64_t{total_degree()} + other.total_degree() > kMaxDegree)
    throw DegreeOverflow("monomial total degree exceeds 2^20 - 1");
  Monomial m;
  m.key_ = key_ + other.key_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto v : kAllVariables)
    if (exponent(v) > other.exponent(v)) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  m.key_ = other.key_ - key_;
  return m;
}

Monomial Monomial::without(Variable v) const {
  auto ex = exponents();
  ex[static_cast<unsigned>(v)] = 0;
  return Monomial(ex);
}

std::string Monomial::to_string() const {
  std::string out;
  for (auto v : kAllVariables) {
    const auto e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial::power(v, 1), Integer(1)}); }

Polynomial::Polynomial(const Integer& c, const Monomial& m) {
  if (c != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), by_monomial_desc);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_dense(Variable v, std::span<const Integer> coeffs) {
  Polynomial p;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0)
      p.terms_.push_back({Monomial::power(v, static_cast<std::uint32_t>(i)), coeffs[i]});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

std::uint32_t Polynomial::degree(Variable v) const {
  std::uint32_t deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.monomial.exponent(v));
  return deg;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

unsigned Polynomial::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (auto v : kAllVariables)
      if (t.monomial.exponent(v) > 0) mask |= 1u << static_cast<unsigned>(v);
  return mask;
}

std::optional<Variable> Polynomial::sole_variable() const {
  const unsigned mask = variable_mask();
  if (mask == 0) return Variable::d;
  if ((mask & (mask - 1)) != 0) return std::nullopt;
  for (auto v : kAllVariables)
    if (mask == (1u << static_cast<unsigned>(v))) return v;
  return std::nullopt;
}

std::vector<Integer> Polynomial::to_dense(Variable v) const {
  if (terms_.empty()) return {};
  std::vector<Integer> c(degree(v) + 1);
  for (const auto& t : terms_) {
    if (t.monomial.total_degree() != t.monomial.exponent(v))
      throw InvalidArgument("to_dense: polynomial involves a variable other than " +
                            std::string(1, variable_name(v)));
    c[t.monomial.exponent(v)] = t.coefficient;
  }
  return c;
}

Integer Polynomial::l1_norm() const {
  Integer s;
  for (const auto& t : terms_) s += abs(t.coefficient);
  return s;
}

Integer Polynomial::max_abs_coefficient() const {
  Integer m;
  for (const auto& t : terms_) m = std::max<Integer>(m, abs(t.coefficient));
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

// Merge of two descending term lists; sign = +1 for a + b, -1 for a - b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Integer(-b[j].coefficient)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coefficient + b[j].coefficient)
                           : Integer(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Integer& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].monomial).scaled(a.terms_[0].coefficient);
  if (b.size() == 1) return a.shifted(b.terms_[0].monomial).scaled(b.terms_[0].coefficient);

  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) {
    const auto va = a.sole_variable();
    const auto vb = b.sole_variable();
    if (va && vb && *va == *vb) {
      const auto da = a.to_dense(*va);
      const auto db = b.to_dense(*vb);
      return Polynomial::from_dense(*va, detail::kronecker_multiply(da, db));
    }
  }

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& c = acc[s.monomial * t.monomial];
      mpz_addmul(c.get_mpz_t(), s.coefficient.get_mpz_t(), t.coefficient.get_mpz_t());
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), by_monomial_desc);
  Polynomial r;
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Integer Polynomial::evaluate(const std::array<Integer, 5>& point) const {
  std::array<std::vector<Integer>, 5> powers;
  Integer sum;
  for (const auto& t : terms_) {
    Integer value = t.coefficient;
    for (auto v : kAllVariables) {
      const auto e = t.monomial.exponent(v);
      if (e == 0) continue;
      auto& cache = powers[static_cast<unsigned>(v)];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e) cache.push_back(cache.back() * point[static_cast<unsigned>(v)]);
      value *= cache[e];
    }
    sum += value;
  }
  return sum;
}

Polynomial Polynomial::evaluate(Variable v, const Integer& value) const {
  std::vector<Integer> powers{1};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out.push_back({t.monomial.without(v), t.coefficient * powers[e]});
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (t.monomial.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << t.monomial.to_string();
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return p - q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial neg(const Polynomial& p) { return -p; }

// ------------------------------------------------------------ substitution

Polynomial substitute(const Polynomial& p, const Binding& bindings) {
  if (bindings.empty()) return p;
  std::array<std::vector<Polynomial>, 5> powers;
  std::array<const Polynomial*, 5> bound{};
  for (const auto& [v, value] : bindings) bound[static_cast<unsigned>(v)] = &value;

  Polynomial result;
  std::vector<Term> plain;
  for (const auto& t : p.terms()) {
    auto ex = t.monomial.exponents();
    Polynomial factor(t.coefficient);
    for (auto v : kAllVariables) {
      const unsigned i = static_cast<unsigned>(v);
      if (bound[i] == nullptr || ex[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.emplace_back(1);
      while (cache.size() <= ex[i]) cache.push_back(cache.back() * *bound[i]);
      factor = factor * cache[ex[i]];
      ex[i] = 0;
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    const Monomial rest(ex);
    if (factor.is_constant()) {
      plain.push_back({rest, factor.constant_term()});
    } else {
      result += factor.shifted(rest);
    }
  }
  return result + Polynomial::from_terms(std::move(plain));
}

// ---------------------------------------------------------- exact division

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ZeroDivisor("divide_exact: divisor is zero");
  if (p.is_zero()) return Polynomial{};

  if (q.is_monomial()) {
    const auto& [qm, qc] = q.leading_term();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!qm.divides(t.monomial) || !mpz_divisible_p(t.coefficient.get_mpz_t(), qc.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coefficient.get_mpz_t(), qc.get_mpz_t());
      out.push_back({qm.quotient_of(t.monomial), std::move(c)});
    }
    // Dividing every monomial by the same monomial preserves the order.
    return Polynomial::from_terms(std::move(out));
  }

  // If q | p then every intermediate remainder is a multiple of q, so its
  // leading term must be divisible by lt(q); any failure proves q does not
  // divide p.
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coefficient);
  const auto& [lm, lc] = q.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto it = rem.begin();
    if (!lm.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t()))
      return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    const Monomial m = lm.quotient_of(it->first);
    rem.erase(it);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const auto& t = q.terms()[k];
      const Monomial target = t.monomial * m;
      auto [slot, inserted] = rem.try_emplace(target);
      mpz_submul(slot->second.get_mpz_t(), c.get_mpz_t(), t.coefficient.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

// ------------------------------------------------------------ interpolation

namespace {

Polynomial exact_integer_quotient(const Polynomial& p, long divisor) {
  const Integer den(divisor);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!mpz_divisible_p(t.coefficient.get_mpz_t(), den.get_mpz_t()))
      throw NonIntegralResult("interpolate: divided difference does not clear to an integer; "
                              "the degree bound is likely too small");
    Integer c;
    mpz_divexact(c.get_mpz_t(), t.coefficient.get_mpz_t(), den.get_mpz_t());
    out.push_back({t.monomial, std::move(c)});
  }
  Polynomial r = Polynomial::from_terms(std::move(out));
  return r;
}

}  // namespace

Polynomial interpolate(Variable v, std::span<const InterpolationPoint> points) {
  const std::size_t k = points.size();
  if (k == 0) return {};
  for (std::size_t i = 0; i < k; ++i) {
    if (points[i].value.contains(v))
      throw InvalidArgument("interpolate: sample values must not involve the designated variable");
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].abscissa == points[j].abscissa)
        throw InvalidArgument("interpolate: repeated abscissa " +
                              std::to_string(points[i].abscissa));
  }

  std::vector<Polynomial> c;
  c.reserve(k);
  for (const auto& pt : points) c.push_back(pt.value);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i)
      c[i] = exact_integer_quotient(c[i] - c[i - 1], points[i].abscissa - points[i - j].abscissa);

  const Monomial step = Monomial::power(v, 1);
  Polynomial result = c[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    result = result.shifted(step) - result.scaled(points[i].abscissa) + c[i];
  }
  return result;
}

std::vector<long> symmetric_grid(std::size_t count, long min_abs) {
  std::vector<long> grid;
  grid.reserve(count);
  if (min_abs <= 0) grid.push_back(0);
  for (long t = std::max(1L, min_abs); grid.size() < count; ++t) {
    grid.push_back(t);
    if (grid.size() < count) grid.push_back(-t);
  }
  grid.resize(count);
  return grid;
}

}  // namespace mbgram
