#include "mbgram/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "mbgram/serialize.hpp"

namespace mbgram {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return env;
  return "cache";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

fs::path Cache::file(const std::string& kind, const std::string& key) const {
  return dir_ / (kind + "_" + key + ".json");
}

std::optional<nlohmann::json> Cache::read(const std::string& kind, const std::string& key) const {
  std::ifstream in(file(kind, key), std::ios::binary);
  if (!in) return std::nullopt;
  const auto doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object() || doc.value("schema", "") != kSchema || doc.value("kind", "") != kind ||
      doc.value("key", "") != key || !doc.contains("payload"))
    return std::nullopt;
  if (doc.value("digest", "") != sha256_hex(doc["payload"].dump())) return std::nullopt;
  return doc["payload"];
}

void Cache::write(const std::string& kind, const std::string& key,
                  const nlohmann::json& payload) const {
  fs::create_directories(dir_);
  const nlohmann::json doc = {{"schema", kSchema},
                              {"kind", kind},
                              {"key", key},
                              {"digest", sha256_hex(payload.dump())},
                              {"payload", payload}};
  const fs::path target = file(kind, key);
  std::ostringstream suffix;
  suffix << ".tmp" << std::hash<std::string>{}(target.string() + std::to_string(std::rand()));
  const fs::path tmp = target.string() + suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
    out << doc.dump() << '\n';
  }
  fs::rename(tmp, target);
}

namespace {

std::string gram_key(int n, GramVariant v) {
  return std::string(variant_name(v)) + "_" + std::to_string(n);
}

}  // namespace

GramMatrix cached_gram(const Cache* cache, int n, GramVariant variant, unsigned jobs) {
  const std::string key = gram_key(n, variant);
  if (cache) {
    if (auto hit = cache->read("gram", key)) {
      try {
        return gram_from_json(*hit);
      } catch (const std::exception&) {
        // fall through to recompute
      }
    }
  }
  GramMatrix g = assemble_gram(n, variant, jobs);
  if (cache) cache->write("gram", key, gram_to_json(g));
  return g;
}

DetResult cached_det(const Cache* cache, int n, GramVariant variant, const DetOptions& options) {
  const std::string key = gram_key(n, variant);
  if (cache) {
    if (auto hit = cache->read("det", key)) {
      try {
        DetResult r;
        r.value = polynomial_terms_from_json(hit->at("polynomial"));
        const auto& prov = hit->at("provenance");
        r.backend = backend_from_name(prov.at("backend").get<std::string>()).value_or(DetBackend::Auto);
        r.milliseconds = prov.at("milliseconds").get<double>();
        return r;
      } catch (const std::exception&) {
        // fall through to recompute
      }
    }
  }
  const GramMatrix g = cached_gram(cache, n, variant, options.jobs);
  DetResult r = determinant(g.entries, options);
  if (cache)
    cache->write("det", key, {{"polynomial", polynomial_terms_to_json(r.value)},
                              {"provenance", r.provenance()}});
  return r;
}

}  // namespace mbgram
