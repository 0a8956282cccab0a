#pragma once

#include <optional>
#include <string>

namespace rsym {

// Content-addressed result cache: key = FNV-1a hash of the canonical run
// configuration string; writes are atomic (temp file + rename).
std::string cache_key(const std::string& canonical_config);
std::optional<std::string> cache_get(const std::string& dir, const std::string& key);
void cache_put(const std::string& dir, const std::string& key, const std::string& bytes);

}  // namespace rsym
