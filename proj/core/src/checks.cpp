#include "mbgram/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "mbgram/chebyshev.hpp"
#include "mbgram/pairing.hpp"
#include "mbgram/serialize.hpp"

namespace mbgram {
namespace {

constexpr std::size_t kInlineTerms = 64;

// Full text for small polynomials; a summary plus digest for large ones.
json describe(const Polynomial& p) {
  json j = {{"terms", p.size()},
            {"total_degree", p.total_degree()},
            {"sha256", sha256_hex(polynomial_terms_to_json(p).dump())}};
  if (p.size() <= kInlineTerms) j["value"] = p.to_string();
  else j["leading_term"] = Polynomial(p.leading_term().coefficient, p.leading_term().monomial).to_string();
  return j;
}

json mismatch(const Polynomial& lhs, const Polynomial& rhs) {
  return {{"lhs", describe(lhs)}, {"rhs", describe(rhs)}, {"difference", describe(lhs - rhs)}};
}

GramVariant variant_for(ConjectureId id) {
  return id == ConjectureId::C3_4 ? GramVariant::Mb1Full : GramVariant::Mbn1Tilde;
}

DetResult gram_det(int n, GramVariant v, const CheckContext& ctx) {
  return cached_det(ctx.cache, n, v, DetOptions{ctx.backend, ctx.jobs, {}});
}

void note_det(Report& r, const DetResult& det) {
  r.provenance["backend"] = std::string(backend_name(det.backend));
  r.timings["determinant_ms"] = det.milliseconds;
}

// Coordinates uniform in [-2^31, 2^31).
std::array<Integer, 5> random_point(std::mt19937_64& rng) {
  std::array<Integer, 5> p;
  for (auto& c : p) {
    const auto raw = static_cast<long>(rng() >> 32) - (1L << 31);
    c = raw;
  }
  return p;
}

}  // namespace

Report verify_conjecture(ConjectureId id, int n, Method method, const CheckContext& ctx,
                         RandomizedOptions random) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "conjecture/" + std::string(conjecture_name(id)) + " n=" + std::to_string(n);
  r.statement = std::string(conjecture_statement(id));
  r.parameters = {{"n", n}, {"method", method == Method::Exact ? "exact" : "randomized"}};

  if (id == ConjectureId::C5_1) {
    r.skip("needs pairings of diagrams with several crosscap curves; only the formula is built");
    return r;
  }
  if (n < conjecture_min_n(id)) {
    r.skip("stated for n >= " + std::to_string(conjecture_min_n(id)));
    return r;
  }
  const GramVariant variant = variant_for(id);
  r.parameters["variant"] = std::string(variant_name(variant));
  const FactoredPolynomial formula = conjecture_factors(id, n);

  if (method == Method::Exact) {
    const DetResult det = gram_det(n, variant, ctx);
    note_det(r, det);
    const Polynomial rhs = formula.expand();
    const bool ok = det.value == rhs;
    r.record({{"n", n}}, ok, ok ? json::object() : mismatch(det.value, rhs));
    r.results["determinant"] = describe(det.value);
    return r;
  }

  if (id != ConjectureId::C3_4)
    throw InvalidArgument("randomized verification is implemented for C3_4 only");
  const GramMatrix g = cached_gram(ctx.cache, n, variant, ctx.jobs);
  const std::uint64_t degree =
      std::max<std::uint64_t>(total_degree_bound(g.entries), formula.total_degree());
  r.seed = random.seed;
  r.parameters["points"] = random.points;
  r.provenance["backend"] = "bareiss-integer";
  std::mt19937_64 rng(random.seed);
  for (unsigned k = 0; k < random.points; ++k) {
    const auto point = random_point(rng);
    const Integer lhs =
        det_integer(g.entries.map([&](const Polynomial& p) { return p.evaluate(point); }));
    const Integer rhs = formula.evaluate(point);
    json coords;
    for (auto v : kAllVariables)
      coords[std::string(1, variable_name(v))] = point[static_cast<unsigned>(v)].get_str();
    const bool ok = lhs == rhs;
    r.record({{"point", coords}}, ok,
             ok ? json::object() : json{{"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
  }
  const double per_point = std::log2(static_cast<double>(degree)) - 32.0;
  r.results["degree_bound"] = degree;
  r.results["log2_failure_bound"] = per_point * random.points;
  r.notes.push_back("a nonzero difference of total degree <= " + std::to_string(degree) +
                    " survives all points with probability <= 2^" +
                    std::to_string(static_cast<long>(std::floor(per_point * random.points))));
  return r;
}

Report verify_formula_equivalence(int lo, int hi, int expand_max) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "formula/C3_3=C3_5";
  r.statement = "prod (T_{2k} - 2)^{C(2n,n-k)} = prod (d^2-4)^{C(2n,n-k)} S_{k-1}^{2C(2n,n-k)}";
  r.parameters = {{"lo", lo}, {"hi", hi}, {"expand_max", expand_max}};
  for (int n = lo; n <= hi; ++n) {
    const auto a = conjecture_factors(ConjectureId::C3_3, n).brackets();
    const auto b = conjecture_factors(ConjectureId::C3_5, n).brackets();
    bool ok = a.size() == b.size();
    json values = json::array();
    for (std::size_t i = 0; ok && i < a.size(); ++i) {
      const bool same = a[i].group == b[i].group && a[i].exponent == b[i].exponent &&
                        a[i].value == b[i].value;
      if (!same)
        values.push_back({{"k", a[i].group}, {"C3_3", {a[i].value.to_string(), a[i].exponent}},
                          {"C3_5", {b[i].value.to_string(), b[i].exponent}}});
      ok &= same;
    }
    r.record({{"n", n}, {"form", "brackets"}}, ok, {{"brackets", values}});
    if (n <= expand_max) {
      const Polynomial pa = conjecture_formula(ConjectureId::C3_3, n);
      const Polynomial pb = conjecture_formula(ConjectureId::C3_5, n);
      r.record({{"n", n}, {"form", "expanded"}}, pa == pb, pa == pb ? json::object() : mismatch(pa, pb));
    }
  }
  r.notes.push_back("brackets: each k-th factor expanded and compared with its exponent; "
                    "expanded: both products multiplied out");
  return r;
}

Report verify_theorem_3_6(int n, const CheckContext& ctx) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "theorem/3.6 n=" + std::to_string(n);
  r.statement = "S_1(d)^{2k} = d^{2k} divides det(G~_n), k = C(2n, n-2)";
  r.parameters = {{"n", n}};
  if (n < 2) {
    r.skip("stated for n >= 2");
    return r;
  }
  const unsigned long k = binomial(2 * n, n - 2);
  const Polynomial divisor = Polynomial(Variable::d).pow(static_cast<unsigned>(2 * k));
  const DetResult det = gram_det(n, GramVariant::Mbn1Tilde, ctx);
  note_det(r, det);
  const auto quotient = divide_exact(det.value, divisor);
  r.record({{"n", n}, {"k", k}}, quotient.has_value(),
           quotient ? json::object() : json{{"determinant", describe(det.value)},
                                            {"divisor", divisor.to_string()}});
  r.results["divisor"] = divisor.to_string();
  if (quotient) r.results["quotient"] = polynomial_terms_to_json(*quotient);
  return r;
}

Report verify_figure4() {
  Report r;
  ScopedTimer timer(r);
  r.claim = "pairing/figure4";
  r.statement = "<(2 5)(3 4)(1)(6), (6 1)(2)(3)(4)(5)> = xy";
  const Diagram m1 = diagram_parse("(2 5)(3 4)(1)(6)");
  const Diagram m2 = diagram_parse("(6 1)(2)(3)(4)(5)");
  const PairingGraph g = build_pairing_graph(m1, m2);

  std::multiset<Edge> chords;
  for (const auto& c : g.chord_edges()) chords.insert(c.edge);
  const std::multiset<Edge> want_chords = {{2, 5}, {3, 4}, {1, 6}};
  const std::vector<Edge> want_ef1 = {{1, 6}};
  const std::vector<Edge> want_ef2 = {{2, 4}, {3, 5}};
  auto sorted = [](std::vector<Edge> e) {
    std::sort(e.begin(), e.end());
    return e;
  };
  auto edges_json = [](const auto& edges) {
    json j = json::array();
    for (const auto& e : edges) j.push_back({e.u, e.v});
    return j;
  };
  r.record({{"set", "T"}}, chords == want_chords, {{"got", edges_json(chords)}});
  r.record({{"set", "EF1"}}, sorted(g.crosscap_edges(Side::First)) == want_ef1,
           {{"got", edges_json(g.crosscap_edges(Side::First))}});
  r.record({{"set", "EF2"}}, sorted(g.crosscap_edges(Side::Second)) == want_ef2,
           {{"got", edges_json(g.crosscap_edges(Side::Second))}});
  const PairingTrace trace = pairing_trace(m1, m2);
  const Polynomial xy = Polynomial(Variable::x) * Polynomial(Variable::y);
  r.record({{"value", "bilinear form"}}, trace.monomial == xy, {{"got", trace.monomial.to_string()}});
  r.results = pairing_trace_to_json(g, trace);
  return r;
}

Report verify_block_matrix() {
  Report r;
  ScopedTimer timer(r);
  r.claim = "gram/block-matrix n=2";
  r.statement = "G~_2 ~ [[d,0,1,1],[0,d,1,1],[1,1,d,0],[1,1,0,d]], det = d^4 - 4d^2";
  const GramMatrix g = assemble_gram(2, GramVariant::Mbn1Tilde);
  const PolyMatrix block = class_block_matrix(Polynomial(1));
  const auto perm = find_simultaneous_permutation(g.entries, block);
  r.record({{"check", "permutation"}}, perm.has_value());
  if (perm) {
    json basis = json::array();
    for (auto i : *perm) basis.push_back(g.basis[i].to_string());
    r.results["basis_order"] = basis;
  }
  const Polynomial d = Variable::d;
  const Polynomial expected = d.pow(4) - 4 * d.pow(2);
  const Polynomial det = det_exact(g.entries);
  r.record({{"check", "determinant"}}, det == expected, {{"got", det.to_string()}});
  const Polynomial block_det = det_exact(block);
  r.record({{"check", "block determinant"}}, block_det == expected, {{"got", block_det.to_string()}});
  r.results["determinant"] = det.to_string();
  return r;
}

Report verify_enumeration_counts(int n_max) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "diagrams/counts";
  r.statement = "|Mb_{n,0}| = C(2n,n), |Mb_{n,1}| = C(2n,n-1)";
  r.parameters = {{"n_max", n_max}};
  for (int n = 1; n <= n_max; ++n) {
    for (auto s : {Stratum::ZeroCrosscap, Stratum::OneCrosscap}) {
      const auto diagrams = enumerate_stratum(n, s);
      const unsigned long want = binomial(2 * n, s == Stratum::ZeroCrosscap ? n : n - 1);
      std::size_t invalid = 0, bad_round_trip = 0;
      for (const auto& m : diagrams) {
        if (!validate_diagram(m).empty() || m.stratum() != s) ++invalid;
        if (diagram_parse(diagram_serialize(m), n) != m) ++bad_round_trip;
      }
      const bool ok = diagrams.size() == want && invalid == 0 && bad_round_trip == 0;
      r.record({{"n", n}, {"stratum", stratum_name(s)}}, ok,
               {{"count", diagrams.size()},
                {"expected", want},
                {"invalid", invalid},
                {"round_trip_failures", bad_round_trip}});
    }
  }
  return r;
}

Report verify_mersenne_chain(int k_max) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "chebyshev/mersenne-chain";
  r.statement = "S_{2^k - 1} = prod_{i<k} T_{2^i}";
  r.parameters = {{"k_min", 2}, {"k_max", k_max}};
  const auto& cheb = ChebyshevTable::shared();
  Polynomial product(1);
  for (int k = 1; k <= k_max; ++k) {
    product *= cheb.T(1L << (k - 1));
    if (k < 2) continue;
    const Polynomial s = cheb.S((1L << k) - 1);
    r.record({{"k", k}}, s == product, s == product ? json::object() : mismatch(s, product));
  }
  return r;
}

Report verify_pairing_laws(int n_max) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "pairing/laws";
  r.statement = "monomial values, x<->y transpose symmetry, diagonal law, curve profiles";
  r.parameters = {{"n_max", n_max}};
  const Binding swap_xy = {{Variable::x, Polynomial(Variable::y)},
                           {Variable::y, Polynomial(Variable::x)}};
  const Polynomial d = Variable::d, w = Variable::w;
  for (int n = 1; n <= n_max; ++n) {
    const auto basis = gram_basis(n, GramVariant::Mb1Full);
    std::size_t not_monomial = 0, degree = 0, xy_unpaired = 0, transpose = 0, diagonal = 0,
                profile = 0, tilde = 0;
    json first_failure;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& a = basis[i];
        const auto& b = basis[j];
        const PairingTrace t = pairing_trace(a, b);
        const Polynomial& v = t.monomial;
        const auto fail = [&](std::size_t& counter, const char* what) {
          ++counter;
          if (first_failure.is_null())
            first_failure = {{"law", what}, {"m1", a.to_string()}, {"m2", b.to_string()},
                             {"value", v.to_string()}};
        };
        if (!v.is_monomial()) fail(not_monomial, "monomial");
        if (v.total_degree() != t.components.size()) fail(degree, "degree = components");
        // Each side's fixed pair sits in exactly one cycle: x or w for the
        // first diagram, y or w for the second.
        const unsigned fa = a.fixed().empty() ? 0 : 1, fb = b.fixed().empty() ? 0 : 1;
        if (v.degree(Variable::x) + v.degree(Variable::w) != fa ||
            v.degree(Variable::y) + v.degree(Variable::w) != fb)
          fail(xy_unpaired, "one crosscap cycle per side");
        if (i < j && bilinear_form(b, a) != substitute(v, swap_xy)) fail(transpose, "transpose");
        if (i == j) {
          const bool zero = a.stratum() == Stratum::ZeroCrosscap;
          const Polynomial want = zero ? d.pow(n) : d.pow(n - 1) * w;
          if (v != want) fail(diagonal, "diagonal");
        }
        const bool both_one = a.stratum() == Stratum::OneCrosscap && b.stratum() == Stratum::OneCrosscap;
        if (both_one) {
          const bool has_w = v.degree(Variable::w) == 1;
          const bool has_xy = v.degree(Variable::x) == 1 && v.degree(Variable::y) == 1;
          if (has_w == has_xy) fail(profile, "profile {w} or {x,y}");
          const Polynomial s = substitute(v, tilde_binding());
          if (s.contains(Variable::x) || s.contains(Variable::y) || s.contains(Variable::w))
            fail(tilde, "tilde entry free of x, y, w");
        }
      }
    }
    const std::size_t total = not_monomial + degree + xy_unpaired + transpose + diagonal + profile + tilde;
    r.record({{"n", n}}, total == 0,
             {{"pairs", basis.size() * basis.size()}, {"first_failure", first_failure},
              {"counts", {{"monomial", not_monomial}, {"degree", degree}, {"xy", xy_unpaired},
                          {"transpose", transpose}, {"diagonal", diagonal},
                          {"profile", profile}, {"tilde", tilde}}}});
  }
  return r;
}

Report verify_walk_values(int n_max) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "pairing/psi";
  r.statement = "Psi in {0, +2n, -2n} on every crosscap-free component";
  r.parameters = {{"n_max", n_max}};
  for (int n = 1; n <= n_max; ++n) {
    const auto basis = gram_basis(n, GramVariant::Mb1Full);
    std::size_t walks = 0, zero = 0, essential = 0, bad = 0;
    json first_bad;
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        const PairingGraph g = build_pairing_graph(a, b);
        for (const auto& comp : g.components()) {
          const bool free = std::none_of(comp.begin(), comp.end(), [&](Vertex v) {
            return a.is_fixed(v) || b.is_fixed(v);
          });
          if (!free) continue;
          const long psi = component_walk(g, comp, a, b).psi;
          ++walks;
          if (psi == 0) ++zero;
          else if (psi == 2L * n || psi == -2L * n) ++essential;
          else {
            ++bad;
            if (first_bad.is_null())
              first_bad = {{"m1", a.to_string()}, {"m2", b.to_string()}, {"psi", psi}};
          }
        }
      }
    }
    r.record({{"n", n}}, bad == 0,
             {{"walks", walks}, {"psi_zero", zero}, {"psi_2n", essential}, {"other", bad},
              {"first", first_bad}});
  }
  return r;
}

Report verify_backend_agreement(unsigned jobs) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "determinant/backends";
  r.statement = "elimination = evaluation/interpolation = multi-modular";
  struct Case {
    int n;
    GramVariant variant;
    std::vector<Variable> designated;
  };
  // Interpolation designates the variables listed; the rest stay symbolic
  // and are eliminated at the leaves.
  const std::vector<Case> cases = {
      {1, GramVariant::Mb1Full, {Variable::d, Variable::z}},
      {2, GramVariant::Mb1Full, {Variable::d, Variable::z}},
      {1, GramVariant::Mbn1, {Variable::d}},
      {2, GramVariant::Mbn1, {Variable::d}},
      {3, GramVariant::Mbn1, {Variable::d}},
      {2, GramVariant::Mbn1Tilde, {Variable::d}},
      {3, GramVariant::Mbn1Tilde, {Variable::d}},
  };
  for (const auto& c : cases) {
    const GramMatrix g = assemble_gram(c.n, c.variant);
    const Polynomial exact = det_exact(g.entries);
    const Polynomial interp = det_by_evaluation(g.entries, c.designated, {}, jobs);
    const Polynomial modular = det_modular(g.entries, jobs);
    const json params = {{"n", c.n}, {"variant", variant_name(c.variant)}};
    r.record(params, exact == interp && exact == modular,
             {{"interp", exact == interp ? json("agrees") : mismatch(exact, interp)},
              {"modular", exact == modular ? json("agrees") : mismatch(exact, modular)}});
  }
  return r;
}

Report verify_permutation_invariance(std::uint64_t seed, unsigned trials) {
  Report r;
  ScopedTimer timer(r);
  r.claim = "determinant/permutation";
  r.statement = "det(P G P^T) = det(G) for simultaneous basis permutations";
  r.seed = seed;
  r.parameters = {{"trials", trials}};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<int, GramVariant>> cases = {
      {1, GramVariant::Mb1Full}, {2, GramVariant::Mb1Full}, {2, GramVariant::Mbn1},
      {3, GramVariant::Mbn1Tilde}};
  for (const auto& [n, variant] : cases) {
    const GramMatrix g = assemble_gram(n, variant);
    const Polynomial det = det_exact(g.entries);
    for (unsigned t = 0; t < trials; ++t) {
      std::vector<std::size_t> perm(g.entries.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Polynomial permuted = det_exact(g.entries.permuted(perm));
      r.record({{"n", n}, {"variant", variant_name(variant)}, {"trial", t}}, permuted == det,
               permuted == det ? json::object() : mismatch(det, permuted));
    }
  }
  return r;
}

}  // namespace mbgram
