#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace lctkit {

/// Content-addressed on-disk cache for enumeration results.  Files are named
/// by a stable hash of the canonical JSON query and store the query next to
/// the result, so hits can be validated and corrupt files are recomputed
/// instead of trusted.  Writes go through a temp file plus rename, so a
/// concurrent reader never sees a partial document.
class QueryCache {
public:
    explicit QueryCache(std::filesystem::path dir);

    /// --cache-dir flag value, else LCTKIT_CACHE, else ~/.cache/lctkit.
    static std::filesystem::path resolve_dir(const std::string& flag_value);

    static std::string fingerprint(const std::string& canonical_query);

    /// Cached result document for the query; nullopt on miss or corruption.
    /// `warning` receives a note when a corrupt file was ignored.
    std::optional<std::string> get(const std::string& canonical_query, std::string* warning = nullptr) const;

    void put(const std::string& canonical_query, const std::string& result_doc) const;

    const std::filesystem::path& dir() const { return dir_; }
    void clear() const;

private:
    std::filesystem::path entry_path(const std::string& canonical_query) const;

    std::filesystem::path dir_;
};

}  // namespace lctkit
