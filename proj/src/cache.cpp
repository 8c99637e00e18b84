#include "qtchar/cache.hpp"

#include <cstdio>
#include <unistd.h>
#include <fstream>

namespace qtchar {

std::string CacheKey::canonical() const {
  return "family=" + family + ";rank=" + std::to_string(rank) + ";kind=" + kind +
         ";m=" + monomial + ";v=" + version;
}

std::string CacheKey::filename() const {
  const std::string c = canonical();
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char b : c) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string(buf) + ".json";
}

std::optional<nlohmann::json> DiskCache::load(const CacheKey& key) const {
  const auto path = dir_ / key.filename();
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.contains("key") || !j.contains("value") ||
      j["key"] != key.canonical()) {
    std::fprintf(stderr, "warning: corrupt cache entry %s, recomputing\n",
                 path.string().c_str());
    return std::nullopt;
  }
  return j["value"];
}

void DiskCache::store(const CacheKey& key, const nlohmann::json& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = dir_ / key.filename();
  const auto tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "warning: cache directory not writable: %s\n",
                   dir_.string().c_str());
      return;
    }
    nlohmann::json j;
    j["key"] = key.canonical();
    j["value"] = value;
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::fprintf(stderr, "warning: cache write failed: %s\n", ec.message().c_str());
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace qtchar
