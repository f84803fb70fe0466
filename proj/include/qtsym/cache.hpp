#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qtsym/serialize.hpp"

namespace qtsym {

/// Bumped whenever cached values could change meaning.
inline constexpr int kCacheVersion = 1;

struct CacheKey {
    std::string family;  // "macdonald", "hl", "kostka", ...
    std::string index;   // partition or other argument, as text
    std::string engine;
    int version = kCacheVersion;

    json to_json() const;
    std::string digest() const;  // SHA-256 hex of the canonical key
};

std::string sha256_hex(const std::string& data);

/// One JSON file per entry: {"key":..,"value":..,"checksum":..}. Entries
/// whose checksum or version does not match are treated as absent.
class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    /// --cache-dir if given, else $QTSYM_CACHE_DIR, else $XDG_CACHE_HOME/qtsym,
    /// else ~/.cache/qtsym.
    static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const CacheKey& key) const;

    std::optional<json> get(const CacheKey& key) const;
    void put(const CacheKey& key, const json& value) const;

    struct Stats {
        std::size_t entries = 0;
        std::size_t invalid = 0;
        std::uintmax_t bytes = 0;
    };
    Stats stats() const;
    /// Removes every entry file; returns how many.
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

}  // namespace qtsym
