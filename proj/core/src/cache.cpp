#include "mondepth/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mondepth {

std::string cache_key(const std::string& key_material) {
  // Two FNV-1a passes with distinct offsets; collisions are caught by the
  // verbatim key-material comparison in cache_lookup anyway.
  auto fnv = [&](std::uint64_t h) {
    for (unsigned char c : key_material) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  std::uint64_t a = fnv(0xcbf29ce484222325ULL);
  std::uint64_t b = fnv(0x84222325cbf29ce4ULL);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a),
                static_cast<unsigned long long>(b));
  return buf;
}

std::optional<Json> cache_lookup(const CacheConfig& cfg, const std::string& key_material) {
  if (!cfg.enabled()) return std::nullopt;
  namespace fs = std::filesystem;
  fs::path file = fs::path(cfg.dir) / (cache_key(key_material) + ".json");
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  Json entry;
  try {
    entry = Json::parse(buf.str());
    if (!entry.is_object() || !entry.contains("key_material") ||
        entry["key_material"].get<std::string>() != key_material ||
        !entry.contains("report"))
      throw std::runtime_error("key mismatch or missing fields");
  } catch (const std::exception& e) {
    std::cerr << "mondepth: warning: ignoring corrupt cache entry " << file
              << " (" << e.what() << ")\n";
    return std::nullopt;
  }
  return entry["report"];
}

void cache_store(const CacheConfig& cfg, const std::string& key_material,
                 const Json& report) {
  if (!cfg.enabled()) return;
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.dir, ec);
  if (ec) {
    std::cerr << "mondepth: warning: cannot create cache dir " << cfg.dir << "\n";
    return;
  }
  Json entry;
  entry["key_material"] = key_material;
  entry["report"] = report;
  fs::path file = fs::path(cfg.dir) / (cache_key(key_material) + ".json");
  fs::path tmp = file;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) {
      std::cerr << "mondepth: warning: cannot write cache entry " << tmp << "\n";
      return;
    }
    out << entry.dump(2) << "\n";
  }
  fs::rename(tmp, file, ec);
  if (ec) {
    std::cerr << "mondepth: warning: cache rename failed for " << file << "\n";
    fs::remove(tmp, ec);
  }
}

}
