#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "mbgram/determinant.hpp"
#include "mbgram/gram.hpp"

namespace mbgram {

/// Environment variable overriding the default cache directory.
inline constexpr const char* kCacheDirEnv = "MBGRAM_CACHE_DIR";

/// `$MBGRAM_CACHE_DIR` if set, otherwise "cache".
std::filesystem::path default_cache_dir();

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// On-disk JSON store. Each file holds
///   {"schema": "mbgram.cache/1", "kind", "key", "digest", "payload"}
/// where digest is the SHA-256 of payload.dump(). A missing file, a schema
/// or key mismatch, unparsable JSON and a digest mismatch all read as a miss.
class Cache {
 public:
  static constexpr const char* kSchema = "mbgram.cache/1";

  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file(const std::string& kind, const std::string& key) const;

  std::optional<nlohmann::json> read(const std::string& kind, const std::string& key) const;
  /// Writes atomically (temp file + rename). Throws std::filesystem errors.
  void write(const std::string& kind, const std::string& key, const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
};

/// Gram matrix from `cache/gram_{variant}_{n}.json`, assembling and storing it
/// on a miss. A null cache always assembles.
GramMatrix cached_gram(const Cache* cache, int n, GramVariant variant, unsigned jobs = 1);

/// Determinant of the Gram matrix from `cache/det_{variant}_{n}.json`; the
/// stored provenance records the backend and the time of the original run.
DetResult cached_det(const Cache* cache, int n, GramVariant variant, const DetOptions& options = {});

}  // namespace mbgram
