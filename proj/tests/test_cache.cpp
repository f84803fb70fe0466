#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qtsym/cache.hpp"
#include "qtsym/verify.hpp"

using namespace qtsym;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("qtsym-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("SHA-256 digests") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache round trip and invalidation") {
    Cache c(fresh_dir("rt"));
    const QTPoly t = QTPoly::t();
    SymF f = SymF::s(Partition{2, 1}) * (t + QTPoly::monomial(1, -2, Rational(3, 5))) + SymF::one();
    CacheKey key{"macdonald", "[2,1]", "ribbon"};
    CHECK(!c.get(key));
    c.put(key, to_json(f));
    auto back = c.get(key);
    REQUIRE(back);
    CHECK(symf_from_json(*back) == f);
    CHECK(!c.get({"macdonald", "[2,1]", "twist"}));
    CHECK(c.stats().entries == 1);
    CHECK(c.stats().invalid == 0);

    // A different version number is a different key, and a stale file on disk is ignored.
    CacheKey old = key;
    old.version = kCacheVersion - 1;
    CHECK(old.digest() != key.digest());
    json doc = json::parse(slurp(c.path_for(key)));
    doc["key"]["version"] = kCacheVersion - 1;
    {
        std::ofstream out(c.path_for(key));
        out << doc.dump();
    }
    CHECK(!c.get(key));
    CHECK(c.stats().invalid == 1);

    // Tampered value fails the checksum.
    c.put(key, to_json(f));
    doc = json::parse(slurp(c.path_for(key)));
    doc["value"]["terms"][0]["coeff"][0]["c"] = "2";
    {
        std::ofstream out(c.path_for(key));
        out << doc.dump();
    }
    CHECK(!c.get(key));
    {
        std::ofstream out(c.path_for(key));
        out << "{not json";
    }
    CHECK(!c.get(key));

    c.put(key, to_json(f));
    CHECK(c.get(key));
    CHECK(c.clear() == 1);
    CHECK(!c.get(key));
    fs::remove_all(c.dir());
}

TEST_CASE("cache directory resolution") {
    CHECK(Cache::resolve_dir(std::string("/x/y")) == fs::path("/x/y"));
    ::setenv("QTSYM_CACHE_DIR", "/from/env", 1);
    CHECK(Cache::resolve_dir(std::nullopt) == fs::path("/from/env"));
    ::unsetenv("QTSYM_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/xdg", 1);
    CHECK(Cache::resolve_dir(std::nullopt) == fs::path("/xdg/qtsym"));
    ::unsetenv("XDG_CACHE_HOME");
}

TEST_CASE("verification reports") {
    json r = run_verify("operators", 3);
    CHECK(r["pass"] == true);
    CHECK(r["suite"] == "operators");
    CHECK(r["checks"].size() > 5);
    CHECK_THROWS_AS(run_verify("nope", 3), std::invalid_argument);

    json g = run_verify("genkostka", 3);
    CHECK(g["pass"] == true);
    CHECK(g["expected_negative"]["found"] == true);

    json e = run_verify("eigen", 2);
    CHECK(e["pass"] == true);
    CHECK(e["eigenvalues"].size() == 3);

    const QTPoly q = QTPoly::q();
    SymF h11 = SymF::s(Partition{1, 1}) + SymF::s(Partition{2}) * QTPoly::t();
    CHECK(eigenvalue(scale(q, identity_op()), h11) == q);
    CHECK(!eigenvalue(skewing_op(SymF::s(Partition{1})), h11));
}
