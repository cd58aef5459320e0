#include "mbgram/gram.hpp"

#include <functional>

#include "mbgram/pairing.hpp"
#include "mbgram/serialize.hpp"
#include "parallel.hpp"

namespace mbgram {

std::string_view variant_name(GramVariant v) {
  switch (v) {
    case GramVariant::Mb1Full: return "full";
    case GramVariant::Mbn1: return "mbn1";
    case GramVariant::Mbn1Tilde: return "tilde";
  }
  return "?";
}

std::optional<GramVariant> variant_from_name(std::string_view name) {
  if (name == "full" || name == "Mb1Full") return GramVariant::Mb1Full;
  if (name == "mbn1" || name == "Mbn1") return GramVariant::Mbn1;
  if (name == "tilde" || name == "Mbn1Tilde") return GramVariant::Mbn1Tilde;
  return std::nullopt;
}

int default_gram_bound(GramVariant v) { return v == GramVariant::Mb1Full ? 4 : 5; }

const Binding& tilde_binding() {
  static const Binding b = {{Variable::y, Polynomial(0)}, {Variable::w, Polynomial(1)}};
  return b;
}

std::vector<Diagram> gram_basis(int n, GramVariant variant) {
  std::vector<Diagram> basis;
  if (variant == GramVariant::Mb1Full) basis = enumerate_stratum(n, Stratum::ZeroCrosscap);
  auto one = enumerate_stratum(n, Stratum::OneCrosscap);
  basis.insert(basis.end(), one.begin(), one.end());
  return basis;
}

GramMatrix assemble_gram(int n, GramVariant variant, unsigned jobs, std::optional<int> bound) {
  const int limit = bound.value_or(default_gram_bound(variant));
  if (n > limit)
    throw BoundExceeded("assemble_gram: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limit) + " for variant " +
                        std::string(variant_name(variant)));
  if (n < 1) throw InvalidArgument("assemble_gram: n must be positive");

  GramMatrix g;
  g.n = n;
  g.variant = variant;
  g.basis = gram_basis(n, variant);
  const std::size_t size = g.basis.size();
  g.entries = PolyMatrix(size);
  detail::parallel_for(size, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < size; ++j) {
      Polynomial entry = bilinear_form(g.basis[i], g.basis[j]);
      if (variant == GramVariant::Mbn1Tilde) entry = substitute(entry, tilde_binding());
      g.entries(i, j) = std::move(entry);
    }
  });
  return g;
}

nlohmann::json gram_to_json(const GramMatrix& g) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& m : g.basis) basis.push_back(diagram_to_json(m));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& e : g.entries.row(i)) row.push_back(polynomial_terms_to_json(e));
    rows.push_back(std::move(row));
  }
  return {{"n", g.n},
          {"variant", variant_name(g.variant)},
          {"basis", std::move(basis)},
          {"entries", std::move(rows)}};
}

GramMatrix gram_from_json(const nlohmann::json& j) {
  GramMatrix g;
  g.n = j.at("n").get<int>();
  const auto variant = variant_from_name(j.at("variant").get<std::string>());
  if (!variant) throw SchemaMismatch("unknown Gram variant");
  g.variant = *variant;
  for (const auto& m : j.at("basis")) g.basis.push_back(diagram_from_json(m));
  const auto& rows = j.at("entries");
  const std::size_t size = g.basis.size();
  if (rows.size() != size) throw SchemaMismatch("Gram entries do not match basis size");
  g.entries = PolyMatrix(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (rows[i].size() != size) throw SchemaMismatch("Gram row has the wrong length");
    for (std::size_t k = 0; k < size; ++k) g.entries(i, k) = polynomial_terms_from_json(rows[i][k]);
  }
  return g;
}

PolyMatrix class_block_matrix(const Polynomial& u) {
  const Polynomial du = Polynomial(Variable::d) * u;
  const Polynomial z;
  return PolyMatrix(4, {du, z, u, u,
                        z, du, u, u,
                        u, u, du, z,
                        u, u, z, du});
}

std::optional<std::vector<std::size_t>> find_simultaneous_permutation(const PolyMatrix& a,
                                                                      const PolyMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);

  // perm[i] = row of `a` that plays the role of row i of `b`.
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r]) continue;
      bool ok = a(r, r) == b(i, i);
      for (std::size_t k = 0; ok && k < i; ++k)
        ok = a(r, perm[k]) == b(i, k) && a(perm[k], r) == b(k, i);
      if (!ok) continue;
      used[r] = true;
      perm[i] = r;
      if (place(i + 1)) return true;
      used[r] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return perm;
}

}  // namespace mbgram
