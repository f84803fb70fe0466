#include "qtsym/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace qtsym {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

json CacheKey::to_json() const {
    return {{"family", family}, {"index", index}, {"engine", engine}, {"version", version}};
}

std::string CacheKey::digest() const { return sha256_hex(canonical(to_json())); }

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("QTSYM_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "qtsym";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "qtsym";
    return fs::temp_directory_path() / "qtsym-cache";
}

fs::path Cache::path_for(const CacheKey& key) const { return dir_ / (key.digest() + ".json"); }

namespace {

std::optional<json> read_entry(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc = json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("value") || !doc.contains("checksum") ||
        !doc.contains("key"))
        return std::nullopt;
    if (!doc["checksum"].is_string() || doc["checksum"].get<std::string>() != sha256_hex(canonical(doc["value"])))
        return std::nullopt;
    return doc;
}

}  // namespace

std::optional<json> Cache::get(const CacheKey& key) const {
    auto doc = read_entry(path_for(key));
    if (!doc || (*doc)["key"] != key.to_json()) return std::nullopt;
    return (*doc)["value"];
}

void Cache::put(const CacheKey& key, const json& value) const {
    static std::atomic<unsigned> counter{0};
    fs::create_directories(dir_);
    json doc = {{"key", key.to_json()}, {"value", value}, {"checksum", sha256_hex(canonical(value))}};
    const fs::path target = path_for(key);
    std::ostringstream tmp_name;
    tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
             << counter++;
    const fs::path tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << canonical(doc) << '\n';
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, target);
}

Cache::Stats Cache::stats() const {
    Stats s;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return s;
    for (const auto& f : fs::directory_iterator(dir_)) {
        if (f.path().extension() != ".json") continue;
        ++s.entries;
        s.bytes += f.file_size();
        auto doc = read_entry(f.path());
        if (!doc || (*doc)["key"].value("version", -1) != kCacheVersion) ++s.invalid;
    }
    return s;
}

std::size_t Cache::clear() const {
    std::size_t n = 0;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return 0;
    for (const auto& f : fs::directory_iterator(dir_)) {
        const std::string name = f.path().filename().string();
        if (f.path().extension() == ".json" || name.find(".json.tmp.") != std::string::npos) {
            fs::remove(f.path());
            ++n;
        }
    }
    return n;
}

}  // namespace qtsym
