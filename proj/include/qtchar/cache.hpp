#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace qtchar {

inline constexpr const char* kEngineVersion = "qtchar-v1";

// Content-addressed key for one computed character.  The canonical form is
// byte-identical for equal monomials (sorted factors, no whitespace), so a
// version bump or any input change lands in a different file.
struct CacheKey {
  std::string family;
  int rank = 0;
  std::string kind;      // chiq | chiqt | ft | et | twisted
  std::string monomial;  // canonical text form
  std::string version = kEngineVersion;

  std::string canonical() const;
  std::string filename() const;  // fnv1a64 of the canonical form, hex + ".json"
};

// One JSON file per entry under a cache directory; writes go through a
// temporary file and an atomic rename.  Corrupt or mismatching entries are
// treated as misses (with a warning) and overwritten by the recomputation.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<nlohmann::json> load(const CacheKey& key) const;
  void store(const CacheKey& key, const nlohmann::json& value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace qtchar
