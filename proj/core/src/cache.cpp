#include "lctkit/cache.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lctkit {

namespace fs = std::filesystem;

QueryCache::QueryCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path QueryCache::resolve_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return fs::path(flag_value);
    if (const char* env = std::getenv("LCTKIT_CACHE"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "lctkit";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "lctkit";
    return fs::temp_directory_path() / "lctkit-cache";
}

std::string QueryCache::fingerprint(const std::string& canonical_query) {
    // FNV-1a, 64 bit: stable across platforms, cheap, collision-checked by
    // storing the query in the entry
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_query) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

fs::path QueryCache::entry_path(const std::string& canonical_query) const {
    return dir_ / (fingerprint(canonical_query) + ".json");
}

std::optional<std::string> QueryCache::get(const std::string& canonical_query, std::string* warning) const {
    fs::path path = entry_path(canonical_query);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        nlohmann::json entry = nlohmann::json::parse(buf.str());
        if (entry.at("query").get<std::string>() != canonical_query) return std::nullopt;
        return entry.at("result").get<std::string>();
    } catch (const std::exception&) {
        if (warning) *warning = "ignoring corrupt cache entry " + path.string() + "; recomputing";
        return std::nullopt;
    }
}

void QueryCache::put(const std::string& canonical_query, const std::string& result_doc) const {
    nlohmann::json entry{{"query", canonical_query}, {"result", result_doc}};
    fs::path final_path = entry_path(canonical_query);
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump();
    }
    fs::rename(tmp, final_path);
}

void QueryCache::clear() const {
    if (!fs::exists(dir_)) return;
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.path().extension() == ".json") fs::remove(e.path());
}

}  // namespace lctkit
