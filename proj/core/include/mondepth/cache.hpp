#ifndef MONDEPTH_CACHE_HPP
#define MONDEPTH_CACHE_HPP

#include <optional>
#include <string>

#include "mondepth/report.hpp"

namespace mondepth {

/// Content-addressed report cache. `dir` empty = disabled. Entries are keyed
/// by a hash of (tool version, command, canonical inputs); the stored key
/// material is compared verbatim on lookup, so hash collisions cannot serve a
/// wrong report. Writes are atomic (write-then-rename); corrupt entries are
/// ignored with a warning on stderr.
struct CacheConfig {
  std::string dir;
  bool enabled() const { return !dir.empty(); }
};

std::string cache_key(const std::string& key_material);

std::optional<Json> cache_lookup(const CacheConfig& cfg, const std::string& key_material);
void cache_store(const CacheConfig& cfg, const std::string& key_material, const Json& report);

}

#endif
