#include "mbgram/determinant.hpp"

#include <algorithm>
#include <chrono>

#include "parallel.hpp"

namespace mbgram {

Integer det_integer(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(k, j) == 0) ++j;
      if (j == n) return 0;
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      sign = -sign;
    }
    const Integer& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& cell = a(i, j);
        mpz_mul(t.get_mpz_t(), cell.get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(cell.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  return sign * a(n - 1, n - 1);
}

Polynomial det_exact(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  PolyMatrix a = m;
  int sign = 1;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(k, j).is_zero()) ++j;
      if (j == n) return Polynomial{};
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      sign = -sign;
    }
    const Polynomial pivot = a(k, k);
    const bool unit_prev = prev == Polynomial(1);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(i, j) * pivot;
        if (!lead.is_zero() && !a(k, j).is_zero()) num -= lead * a(k, j);
        if (unit_prev || num.is_zero()) {
          a(i, j) = std::move(num);
          continue;
        }
        auto q = divide_exact(num, prev);
        if (!q)
          throw EliminationError("fraction-free elimination: inexact division at step " +
                                 std::to_string(k));
        a(i, j) = std::move(*q);
      }
      a(i, k) = Polynomial{};
    }
    prev = pivot;
  }
  return sign < 0 ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::uint32_t degree_bound(const PolyMatrix& m, Variable v) {
  const std::size_t n = m.size();
  std::uint64_t rows = 0, cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t rmax = 0, cmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rmax = std::max(rmax, m(i, j).degree(v));
      cmax = std::max(cmax, m(j, i).degree(v));
    }
    rows += rmax;
    cols += cmax;
  }
  return static_cast<std::uint32_t>(std::min(rows, cols));
}

std::uint32_t total_degree_bound(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::uint64_t rows = 0, cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t rmax = 0, cmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rmax = std::max(rmax, m(i, j).total_degree());
      cmax = std::max(cmax, m(j, i).total_degree());
    }
    rows += rmax;
    cols += cmax;
  }
  return static_cast<std::uint32_t>(std::min(rows, cols));
}

std::vector<Variable> active_variables(const PolyMatrix& m) {
  unsigned mask = 0;
  for (const auto& e : m.data()) mask |= e.variable_mask();
  std::vector<Variable> vars;
  for (auto v : kAllVariables)
    if (mask & (1u << static_cast<unsigned>(v))) vars.push_back(v);
  return vars;
}

// ----------------------------------------------------- evaluation backend

namespace {

bool all_constant(const PolyMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const Polynomial& p) { return p.is_constant(); });
}

long min_abscissa(Variable v) { return v == Variable::d ? 2 : 0; }

Polynomial evaluation_det(const PolyMatrix& m, std::span<const Variable> vars,
                          const DegreeBounds& bounds, unsigned jobs) {
  if (vars.empty()) {
    if (all_constant(m)) return Polynomial(det_integer(m.map([](const Polynomial& p) {
      return p.constant_term();
    })));
    return det_exact(m);
  }
  const Variable v = vars.front();
  const auto rest = vars.subspan(1);
  const auto it = bounds.find(v);
  const std::uint32_t bound = it != bounds.end() ? it->second : degree_bound(m, v);
  if (bound == 0 && degree_bound(m, v) == 0) return evaluation_det(m, rest, bounds, jobs);

  // One spare abscissa serves as a consistency check of the degree bound.
  const auto grid = symmetric_grid(bound + 2, min_abscissa(v));
  std::vector<InterpolationPoint> points(grid.size());
  detail::parallel_for(grid.size(), jobs, [&](std::size_t k) {
    const Integer t(grid[k]);
    const PolyMatrix slice = m.map([&](const Polynomial& p) { return p.evaluate(v, t); });
    points[k] = {grid[k], evaluation_det(slice, rest, bounds, 1)};
  });
  const InterpolationPoint check = points.back();
  points.pop_back();
  Polynomial result = interpolate(v, points);
  if (result.evaluate(v, Integer(check.abscissa)) != check.value)
    throw NonIntegralResult("det_by_evaluation: interpolant misses the check point; degree bound for " +
                            std::string(1, variable_name(v)) + " is too small");
  return result;
}

}  // namespace

Polynomial det_by_evaluation(const PolyMatrix& m, std::span<const Variable> variables,
                             const DegreeBounds& bounds, unsigned jobs) {
  try {
    return evaluation_det(m, variables, bounds, jobs);
  } catch (const NonIntegralResult&) {
    DegreeBounds doubled;
    for (auto v : variables) {
      const auto it = bounds.find(v);
      doubled[v] = 2 * (it != bounds.end() ? it->second : degree_bound(m, v)) + 1;
    }
    return evaluation_det(m, variables, doubled, jobs);
  }
}

// ---------------------------------------------------------------- dispatch

std::string_view backend_name(DetBackend b) {
  switch (b) {
    case DetBackend::Auto: return "auto";
    case DetBackend::Bareiss: return "bareiss";
    case DetBackend::Interpolation: return "interp";
    case DetBackend::Modular: return "modular";
  }
  return "?";
}

std::optional<DetBackend> backend_from_name(std::string_view name) {
  for (auto b : {DetBackend::Auto, DetBackend::Bareiss, DetBackend::Interpolation,
                 DetBackend::Modular})
    if (backend_name(b) == name) return b;
  return std::nullopt;
}

DetBackend choose_backend(const PolyMatrix& m) {
  if (m.size() <= kBareissCrossover || active_variables(m).size() >= 3) return DetBackend::Bareiss;
  if (m.size() <= kModularCrossover) return DetBackend::Interpolation;
  return DetBackend::Modular;
}

nlohmann::json DetResult::provenance() const {
  return {{"backend", backend_name(backend)}, {"milliseconds", milliseconds}};
}

DetResult determinant(const PolyMatrix& m, const DetOptions& options) {
  DetResult r;
  r.backend = options.backend == DetBackend::Auto ? choose_backend(m) : options.backend;
  const auto start = std::chrono::steady_clock::now();
  switch (r.backend) {
    case DetBackend::Bareiss:
      r.value = det_exact(m);
      break;
    case DetBackend::Interpolation: {
      const auto vars = active_variables(m);
      r.value = det_by_evaluation(m, vars, options.bounds, options.jobs);
      break;
    }
    case DetBackend::Modular:
      r.value = det_modular(m, options.jobs, options.bounds);
      break;
    case DetBackend::Auto:
      break;
  }
  r.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start).count();
  return r;
}

}  // namespace mbgram
