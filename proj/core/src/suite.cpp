#include "mbgram/suite.hpp"

#include <mutex>

#include "mbgram/chebyshev.hpp"
#include "parallel.hpp"

namespace mbgram {

std::string_view profile_name(Profile p) {
  switch (p) {
    case Profile::Quick: return "quick";
    case Profile::Full: return "full";
    case Profile::Stretch: return "stretch";
  }
  return "?";
}

std::optional<Profile> profile_from_name(std::string_view name) {
  for (auto p : {Profile::Quick, Profile::Full, Profile::Stretch})
    if (profile_name(p) == name) return p;
  return std::nullopt;
}

std::vector<Claim> suite_claims(const SuiteOptions& o) {
  // Determinant claims run single-threaded inside; parallelism is across claims.
  const CheckContext ctx{o.cache, 1, DetBackend::Auto};
  const bool full = o.profile != Profile::Quick;
  const int n_max = full ? 4 : 2;
  std::vector<Claim> claims;
  auto add = [&](std::string name, std::function<Report()> run) {
    claims.push_back({std::move(name), std::move(run)});
  };

  for (auto id : kAllIdentities)
    add(std::string(identity_name(id)), [id] { return verify_identity(id, default_range(id)); });
  add("mersenne", [] { return verify_mersenne_chain(12); });
  add("counts", [full] { return verify_enumeration_counts(full ? 6 : 4); });
  add("figure4", [] { return verify_figure4(); });
  add("block", [] { return verify_block_matrix(); });
  add("C3_4/1", [ctx] { return verify_conjecture(ConjectureId::C3_4, 1, Method::Exact, ctx); });
  for (int n = 2; n <= n_max; ++n) {
    const std::string at = "/" + std::to_string(n);
    add("C3_5" + at, [ctx, n] { return verify_conjecture(ConjectureId::C3_5, n, Method::Exact, ctx); });
    add("C3_3" + at, [ctx, n] { return verify_conjecture(ConjectureId::C3_3, n, Method::Exact, ctx); });
    add("3.6" + at, [ctx, n] { return verify_theorem_3_6(n, ctx); });
  }
  add("equivalence", [] { return verify_formula_equivalence(2, 8); });
  if (full) {
    add("C3_4/2", [ctx] { return verify_conjecture(ConjectureId::C3_4, 2, Method::Exact, ctx); });
    add("C3_4/3", [ctx, seed = o.seed] {
      return verify_conjecture(ConjectureId::C3_4, 3, Method::Randomized, ctx, {seed, 20});
    });
    add("laws", [] { return verify_pairing_laws(4); });
    add("psi", [] { return verify_walk_values(5); });
    add("backends", [] { return verify_backend_agreement(1); });
    add("permutation", [seed = o.seed] { return verify_permutation_invariance(seed, 3); });
    add("C5_1", [ctx] { return verify_conjecture(ConjectureId::C5_1, 2, Method::Exact, ctx); });
  }
  if (o.profile == Profile::Stretch) {
    add("C3_5/5", [ctx] { return verify_conjecture(ConjectureId::C3_5, 5, Method::Exact, ctx); });
    add("3.6/5", [ctx] { return verify_theorem_3_6(5, ctx); });
  }
  return claims;
}

std::size_t run_claims(const std::vector<Claim>& claims, unsigned jobs, ReportWriter& writer) {
  std::vector<std::optional<Report>> done(claims.size());
  std::mutex mutex;
  std::size_t next_to_write = 0, failures = 0;

  detail::parallel_for(claims.size(), jobs, [&](std::size_t i) {
    Report report;
    try {
      report = claims[i].run();
    } catch (const std::exception& e) {
      report = Report{};
      report.claim = claims[i].name;
      report.record(json::object(), false, {{"error", e.what()}});
    }
    std::lock_guard lock(mutex);
    done[i] = std::move(report);
    while (next_to_write < done.size() && done[next_to_write]) {
      if (done[next_to_write]->status == Status::Fail) ++failures;
      writer.write(*done[next_to_write]);
      done[next_to_write].reset();
      ++next_to_write;
    }
  });
  return failures;
}

int run_suite(const SuiteOptions& options, ReportWriter& writer) {
  const std::size_t failures = run_claims(suite_claims(options), options.jobs, writer);
  writer.finish();
  return failures == 0 ? 0 : 1;
}

}  // namespace mbgram
