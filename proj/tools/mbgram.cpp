// mbgram: command-line front end for the Gram determinant engine.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mbgram/cache.hpp"
#include "mbgram/chebyshev.hpp"
#include "mbgram/checks.hpp"
#include "mbgram/diagram.hpp"
#include "mbgram/errors.hpp"
#include "mbgram/gram.hpp"
#include "mbgram/pairing.hpp"
#include "mbgram/serialize.hpp"
#include "mbgram/suite.hpp"

using namespace mbgram;

namespace {

struct Globals {
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string cache_dir;
  bool no_cache = false;
  bool no_timing = false;
  std::string format = "json";
};

template <typename E>
E parse_or_throw(std::optional<E> v, const std::string& what, const std::string& text) {
  if (!v) throw InvalidArgument("unknown " + what + " '" + text + "'");
  return *v;
}

class Session {
 public:
  explicit Session(const Globals& g)
      : g_(g),
        cache_(g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir)),
        writer_(std::cout, table() ? ReportWriter::Format::Table : ReportWriter::Format::JsonLines,
                !g.no_timing) {}

  bool table() const { return g_.format == "table"; }
  const Cache* cache() const { return g_.no_cache ? nullptr : &cache_; }
  CheckContext context(DetBackend backend = DetBackend::Auto) const {
    return {cache(), g_.jobs, backend};
  }
  ReportWriter& writer() { return writer_; }

  int emit(const Report& r) {
    writer_.write(r);
    writer_.finish();
    return r.status == Status::Fail ? 1 : 0;
  }

 private:
  const Globals& g_;
  Cache cache_;
  ReportWriter writer_;
};

void print_matrix(const GramMatrix& g) {
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    std::cout << g.basis[i].to_string() << " |";
    for (const auto& e : g.entries.row(i)) std::cout << ' ' << (e.is_zero() ? "0" : e.to_string());
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gram determinants of Moebius-band diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default $MBGRAM_CACHE_DIR or ./cache)");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache");
  app.add_flag("--no-timing", g.no_timing, "Omit timings from reports (byte-stable output)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List the diagrams of a stratum");
  int enum_n = 1;
  std::string enum_stratum = "zero";
  enumerate->add_option("--n", enum_n, "Half the number of boundary points")->required();
  enumerate->add_option("--stratum", enum_stratum, "zero or one")->check(CLI::IsMember({"zero", "one"}));

  // pair
  auto* pair = app.add_subcommand("pair", "Bilinear form of two diagrams");
  std::string m1_text, m2_text;
  pair->add_option("--m1", m1_text, "First diagram, e.g. \"(2 5)(3 4)(1)(6)\"")->required();
  pair->add_option("--m2", m2_text, "Second diagram")->required();

  // cheb
  auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials and identities");
  cheb->require_subcommand(0, 1);
  std::string cheb_kind = "T";
  long cheb_n = 0;
  cheb->add_option("--kind", cheb_kind, "T or S")->check(CLI::IsMember({"T", "S"}));
  cheb->add_option("--n", cheb_n, "Index (may be negative)");
  auto* cheb_verify = cheb->add_subcommand("verify", "Check one identity (or all) over a range");
  std::string identity = "all";
  std::optional<long> lo, hi, kmax;
  cheb_verify->add_option("--id", identity, "Identity name or 'all'");
  cheb_verify->add_option("--lo", lo, "Smallest index");
  cheb_verify->add_option("--hi", hi, "Largest index");
  cheb_verify->add_option("--kmax", kmax, "Largest exponent for the power-of-two identities");
  cheb_verify->add_flag("--json", [&](std::int64_t) { g.format = "json"; }, "JSON lines output");

  // gram
  auto* gram = app.add_subcommand("gram", "Assemble a Gram matrix");
  int gram_n = 2;
  std::string gram_variant = "tilde";
  gram->add_option("--n", gram_n)->required();
  gram->add_option("--variant", gram_variant, "full, mbn1 or tilde")
      ->check(CLI::IsMember({"full", "mbn1", "tilde"}));

  // det
  auto* det = app.add_subcommand("det", "Determinant of a Gram matrix");
  int det_n = 2;
  std::string det_variant = "tilde", det_backend = "auto";
  det->add_option("--n", det_n)->required();
  det->add_option("--variant", det_variant)->check(CLI::IsMember({"full", "mbn1", "tilde"}));
  det->add_option("--backend", det_backend)
      ->check(CLI::IsMember({"auto", "bareiss", "interp", "modular"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Check a conjecture, the divisibility theorem or a fixture");
  std::string conjecture, theorem, check, method = "exact";
  int verify_n = 2;
  unsigned points = 20;
  auto* opt_conj = verify->add_option("--conjecture", conjecture, "C3_3, C3_4, C3_5 or C5_1");
  auto* opt_thm = verify->add_option("--theorem", theorem, "3.6")->check(CLI::IsMember({"3.6"}));
  auto* opt_check = verify->add_option("--check", check)->check(CLI::IsMember(
      {"figure4", "block", "counts", "mersenne", "equivalence", "laws", "psi", "backends",
       "permutation"}));
  opt_conj->excludes(opt_thm)->excludes(opt_check);
  opt_thm->excludes(opt_check);
  verify->add_option("--n", verify_n);
  verify->add_option("--method", method)->check(CLI::IsMember({"exact", "randomized"}));
  verify->add_option("--points", points, "Points for the randomized method");

  // suite
  auto* suite = app.add_subcommand("suite", "Run a verification profile");
  std::string profile = "quick";
  suite->add_option("profile", profile, "quick, full or stretch")
      ->check(CLI::IsMember({"quick", "full", "stretch"}));

  CLI11_PARSE(app, argc, argv);

  try {
    Session session(g);

    if (*enumerate) {
      const auto s = parse_or_throw(stratum_from_name(enum_stratum), "stratum", enum_stratum);
      const auto diagrams = enumerate_stratum(enum_n, s);
      if (session.table()) {
        for (const auto& m : diagrams) std::cout << m.to_string() << '\n';
      } else {
        json out = json::array();
        for (const auto& m : diagrams) out.push_back(diagram_to_json(m));
        std::cout << json{{"n", enum_n}, {"stratum", enum_stratum}, {"count", diagrams.size()},
                          {"diagrams", out}}.dump()
                  << '\n';
      }
      return 0;
    }

    if (*pair) {
      const Diagram m1 = diagram_parse(m1_text);
      const Diagram m2 = diagram_parse(m2_text, m1.n());
      for (const auto& m : {m1, m2}) {
        const auto problems = validate_diagram(m, StrataPolicy::AnyEven);
        if (!problems.empty()) throw InvalidArgument(m.to_string() + ": " + problems.front());
      }
      const PairingGraph graph = build_pairing_graph(m1, m2);
      const PairingTrace trace = pairing_trace(m1, m2);
      if (session.table()) {
        std::cout << trace.monomial.to_string() << '\n';
        for (const auto& c : trace.components) {
          std::cout << "  " << curve_name(c.curve) << " {";
          for (std::size_t i = 0; i < c.vertices.size(); ++i)
            std::cout << (i ? " " : "") << c.vertices[i];
          std::cout << '}';
          if (c.walk) std::cout << " psi=" << c.walk->psi;
          std::cout << '\n';
        }
      } else {
        std::cout << pairing_trace_to_json(graph, trace).dump() << '\n';
      }
      return 0;
    }

    if (*cheb) {
      if (*cheb_verify) {
        std::vector<IdentityId> ids;
        if (identity == "all") ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
        else ids.push_back(parse_or_throw(identity_from_name(identity), "identity", identity));
        std::vector<Claim> claims;
        for (auto id : ids) {
          IndexRange range = default_range(id);
          const bool power = id == IdentityId::Cor2_4a || id == IdentityId::Cor2_4b ||
                             id == IdentityId::Cor2_6;
          if (lo) range.lo = *lo;
          if (hi) range.hi = *hi;
          if (kmax && power) range.hi = *kmax;
          claims.push_back({std::string(identity_name(id)), [id, range] { return verify_identity(id, range); }});
        }
        const auto failures = run_claims(claims, g.jobs, session.writer());
        session.writer().finish();
        return failures == 0 ? 0 : 1;
      }
      const auto kind = cheb_kind == "T" ? ChebyshevKind::First : ChebyshevKind::Second;
      const Polynomial p = ChebyshevTable::shared().get(kind, cheb_n);
      if (session.table()) std::cout << p.to_string() << '\n';
      else
        std::cout << json{{"kind", cheb_kind}, {"n", cheb_n}, {"polynomial", polynomial_to_json(p)},
                          {"text", p.to_string()}}.dump()
                  << '\n';
      return 0;
    }

    if (*gram) {
      const auto v = parse_or_throw(variant_from_name(gram_variant), "variant", gram_variant);
      const GramMatrix m = cached_gram(session.cache(), gram_n, v, g.jobs);
      if (session.table()) print_matrix(m);
      else std::cout << gram_to_json(m).dump() << '\n';
      return 0;
    }

    if (*det) {
      const auto v = parse_or_throw(variant_from_name(det_variant), "variant", det_variant);
      const auto backend = parse_or_throw(backend_from_name(det_backend), "backend", det_backend);
      // An explicit backend bypasses the cache so the requested code path runs.
      const Cache* cache = backend == DetBackend::Auto ? session.cache() : nullptr;
      const DetResult r = cached_det(cache, det_n, v, DetOptions{backend, g.jobs, {}});
      if (session.table()) {
        std::cout << r.value.to_string() << '\n';
      } else {
        json out = {{"n", det_n}, {"variant", det_variant},
                    {"polynomial", polynomial_to_json(r.value)},
                    {"provenance", {{"backend", backend_name(r.backend)}}}};
        if (!g.no_timing) out["provenance"]["milliseconds"] = r.milliseconds;
        std::cout << out.dump() << '\n';
      }
      return 0;
    }

    if (*verify) {
      if (!conjecture.empty()) {
        const auto id = parse_or_throw(conjecture_from_name(conjecture), "conjecture", conjecture);
        const Method m = method == "exact" ? Method::Exact : Method::Randomized;
        return session.emit(verify_conjecture(id, verify_n, m, session.context(), {g.seed, points}));
      }
      if (!theorem.empty()) return session.emit(verify_theorem_3_6(verify_n, session.context()));
      if (check == "figure4") return session.emit(verify_figure4());
      if (check == "block") return session.emit(verify_block_matrix());
      if (check == "counts") return session.emit(verify_enumeration_counts(verify_n));
      if (check == "mersenne") return session.emit(verify_mersenne_chain(verify_n));
      if (check == "equivalence") return session.emit(verify_formula_equivalence(2, verify_n, std::min(verify_n, 6)));
      if (check == "laws") return session.emit(verify_pairing_laws(verify_n));
      if (check == "psi") return session.emit(verify_walk_values(verify_n));
      if (check == "backends") return session.emit(verify_backend_agreement(g.jobs));
      if (check == "permutation") return session.emit(verify_permutation_invariance(g.seed));
      std::cerr << "verify: give one of --conjecture, --theorem or --check\n";
      return 2;
    }

    if (*suite) {
      SuiteOptions o;
      o.profile = parse_or_throw(profile_from_name(profile), "profile", profile);
      o.jobs = g.jobs;
      o.seed = g.seed;
      o.cache = session.cache();
      return run_suite(o, session.writer());
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
