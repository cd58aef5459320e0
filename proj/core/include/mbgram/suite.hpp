#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mbgram/checks.hpp"
#include "mbgram/report.hpp"

namespace mbgram {

/// quick: identities and n <= 2; full: everything through n = 4;
/// stretch: full plus the n = 5 tilde determinant.
enum class Profile { Quick, Full, Stretch };

std::string_view profile_name(Profile p);
std::optional<Profile> profile_from_name(std::string_view name);

struct SuiteOptions {
  Profile profile = Profile::Quick;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  const Cache* cache = nullptr;
};

/// A named unit of work producing one report.
struct Claim {
  std::string name;
  std::function<Report()> run;
};

std::vector<Claim> suite_claims(const SuiteOptions& options);

/// Runs the claims on up to `jobs` threads and writes the reports in claim
/// order as soon as each prefix is complete. An exception inside a claim
/// becomes a FAIL report carrying the message. Returns the number of FAIL
/// reports.
std::size_t run_claims(const std::vector<Claim>& claims, unsigned jobs, ReportWriter& writer);

/// Exit status 0 iff no claim failed.
int run_suite(const SuiteOptions& options, ReportWriter& writer);

}  // namespace mbgram
