#include "rsym/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rsym {

std::string cache_key(const std::string& canonical_config) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_config) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::optional<std::string> cache_get(const std::string& dir, const std::string& key) {
    std::filesystem::path p = std::filesystem::path(dir) / (key + ".out");
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void cache_put(const std::string& dir, const std::string& key, const std::string& bytes) {
    std::filesystem::create_directories(dir);
    std::filesystem::path target = std::filesystem::path(dir) / (key + ".out");
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << bytes;
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace rsym
