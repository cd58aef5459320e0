#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mbgram/diagram.hpp"
#include "mbgram/matrix.hpp"
#include "mbgram/polynomial.hpp"

namespace mbgram {

using PolyMatrix = SquareMatrix<Polynomial>;

/// Basis and specialization of a Gram matrix:
///  - Mb1Full:    all diagrams with zero or one crosscap curve
///  - Mbn1:       diagrams with one crosscap curve
///  - Mbn1Tilde:  Mbn1 with y = 0 and w = 1 substituted
enum class GramVariant { Mb1Full, Mbn1, Mbn1Tilde };

std::string_view variant_name(GramVariant v);
std::optional<GramVariant> variant_from_name(std::string_view name);

/// Default largest n per variant (4 for Mb1Full, 5 otherwise).
int default_gram_bound(GramVariant v);

struct GramMatrix {
  int n = 0;
  GramVariant variant = GramVariant::Mbn1;
  std::vector<Diagram> basis;
  PolyMatrix entries;
};

/// Basis of the variant in canonical order.
std::vector<Diagram> gram_basis(int n, GramVariant variant);

/// Entries <basis[i], basis[j]> for all i, j; `jobs` worker threads.
/// Throws BoundExceeded when n exceeds `bound` (default per variant).
GramMatrix assemble_gram(int n, GramVariant variant, unsigned jobs = 1,
                         std::optional<int> bound = std::nullopt);

/// Substitution applied entrywise for the tilde variant.
const Binding& tilde_binding();

nlohmann::json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const nlohmann::json& j);

/// The 4x4 block [[d u, 0, u, u], [0, d u, u, u], [u, u, d u, 0], [u, u, 0, d u]].
PolyMatrix class_block_matrix(const Polynomial& u);

/// A simultaneous permutation `perm` with a(perm[i], perm[j]) == b(i, j) for
/// all i, j, if one exists (backtracking search).
std::optional<std::vector<std::size_t>> find_simultaneous_permutation(const PolyMatrix& a,
                                                                      const PolyMatrix& b);

}  // namespace mbgram
