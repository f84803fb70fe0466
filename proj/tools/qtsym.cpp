#include <cctype>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "qtsym/cache.hpp"
#include "qtsym/dsl.hpp"
#include "qtsym/qt_bases.hpp"
#include "qtsym/ribbon_ops.hpp"
#include "qtsym/verify.hpp"

using namespace qtsym;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw UsageError(std::string(flag) + ": empty part in '" + text + "'");
        if (cur.size() > 6) throw UsageError(std::string(flag) + ": part too large in '" + text + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ' ') continue;
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            throw UsageError(std::string(flag) + ": '" + text + "' is not a list of positive integers");
        }
    }
    if (!text.empty()) flush();
    return parts;
}

Partition parse_partition(const std::string& text, const char* flag) {
    std::vector<int> parts = parse_int_list(text, flag);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] <= 0 || (i && parts[i] > parts[i - 1]))
            throw UsageError(std::string(flag) + ": '" + text + "' is not a partition");
    return Partition(parts);
}

std::string partition_key(const Partition& p) { return p.to_string(); }

struct Options {
    std::optional<std::string> cache_dir;
    bool no_cache = false;
    std::string format = "json";
    int jobs = 1;
};

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<Cache> open_cache(const Options& o) {
    if (o.no_cache) return std::nullopt;
    return Cache(Cache::resolve_dir(o.cache_dir));
}

// Computes through the cache; unreadable entries are recomputed and replaced.
SymF cached_symf(const std::optional<Cache>& cache, const CacheKey& key, const std::function<SymF()>& compute) {
    if (cache) {
        if (auto j = cache->get(key)) {
            try {
                return symf_from_json(*j);
            } catch (const std::exception&) {
            }
        }
    }
    SymF f = compute();
    if (cache) cache->put(key, to_json(f));
    return f;
}

void emit(const SymF& f, const std::string& format) {
    if (format == "json")
        std::cout << canonical(to_json(f)) << "\n";
    else if (format == "latex")
        std::cout << to_latex(f) << "\n";
    else
        std::cout << to_text(f) << "\n";
}

// One JSON line per generalized ribbon term of each column operator in e.
void emit_ribbon_terms(const OpExpr& e, int max_k, std::set<std::string>& seen) {
    for (const auto& a : e.args) emit_ribbon_terms(a, max_k, seen);
    if (e.kind != OpExpr::Kind::call || (e.name != "maccol" && e.name != "hlcol")) return;
    const int m = e.ints[0];
    if (m == 0 || !seen.insert(e.name + std::to_string(m)).second) return;
    const int top = e.name == "maccol" ? max_k : 0;
    for (const auto& r : ribbons_of(m))
        for (int k = 0; k <= top; ++k)
            for (const auto& v : thickness_vectors(m, k)) {
                GenRibbonTerm g = gen_ribbon_term(r, v);
                StraightenedOp s = straighten(g.alpha, g.beta, g.sign);
                json line = {{"op", e.name + "(" + std::to_string(m) + ")"},
                             {"ribbon", r.descents},
                             {"v", v},
                             {"sign", g.sign},
                             {"alpha", g.alpha},
                             {"beta", g.beta},
                             {"straightened",
                              {{"sign", s.sign}, {"alpha", s.is_zero() ? json(nullptr) : to_json(s.skew)}, {"beta", s.columns}}}};
                std::cerr << canonical(line) << "\n";
            }
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
}

std::string engine_list() { return "ribbon|twist|oracle"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (q,t) symmetric functions: Hall-Littlewood and Macdonald families, operator calculus"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cache-dir", o.cache_dir, "Cache directory (default $QTSYM_CACHE_DIR or ~/.cache/qtsym)");
    app.add_flag("--no-cache", o.no_cache, "Do not read or write the cache");

    std::string mu_text, eta_text, engine_text = "ribbon", op_text, to_text_arg = "1", suite = "all", cache_action;
    int n = 0, max_n = 4;
    bool debug_terms = false;

    auto* hl = app.add_subcommand("hl", "Hall-Littlewood function H_mu[X;t] in the Schur basis");
    hl->add_option("--mu", mu_text, "Partition, e.g. 2,1")->required();
    add_format(hl, o);

    auto* mac = app.add_subcommand("macdonald", "Macdonald function H_mu[X;q,t] in the Schur basis");
    mac->add_option("--mu", mu_text, "Partition, e.g. 2,1")->required();
    mac->add_option("--engine", engine_text, engine_list())->check(CLI::IsMember({"ribbon", "twist", "oracle"}));
    add_format(mac, o);

    auto* kos = app.add_subcommand("kostka", "Table of q,t-Kostka coefficients for all partitions of n");
    kos->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 12));
    kos->add_option("--engine", engine_text, engine_list())->check(CLI::IsMember({"ribbon", "twist", "oracle"}));
    kos->add_option("--jobs", o.jobs, "Worker threads (0: one per core)")->check(CLI::NonNegativeNumber);
    add_format(kos, o);

    auto* gk = app.add_subcommand("genkostka", "Generalized Kostka function for mu cut into blocks by eta");
    gk->add_option("--mu", mu_text, "Partition, e.g. 2,2,1")->required();
    gk->add_option("--eta", eta_text, "Block lengths summing to the length of mu, e.g. 1,2")->required();
    add_format(gk, o);

    auto* hom = app.add_subcommand("homog", "Twisted homogeneous column composition for lambda");
    hom->add_option("--lambda,--mu", mu_text, "Partition, e.g. 2,1")->required();
    add_format(hom, o);

    auto* ap = app.add_subcommand("apply", "Apply an operator expression to a symmetric function");
    ap->add_option("--op", op_text, "Operator expression, e.g. \"qtwist(S(2))\"")->required();
    ap->add_option("--to", to_text_arg, "Operand, e.g. \"s[2,1] + q h[3]\"");
    ap->add_flag("--debug-terms", debug_terms, "Print the generalized ribbon terms of hlcol/maccol as JSON lines on stderr");
    add_format(ap, o);

    auto* ver = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    ver->add_option("--suite", suite, "all|operators|ribbons|macdonald|genkostka|homogeneous|eigen")
        ->check(CLI::IsMember(verify_suites()));
    ver->add_option("--max-n", max_n, "Largest degree checked")->check(CLI::Range(1, 8));
    ver->add_option("--jobs", o.jobs, "Worker threads (0: one per core)")->check(CLI::NonNegativeNumber);

    auto* cc = app.add_subcommand("cache", "Inspect or clear the on-disk cache");
    cc->add_option("action", cache_action, "path|stats|clear")->required()->check(CLI::IsMember({"path", "stats", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto cache = open_cache(o);
        if (hl->parsed()) {
            Partition mu = parse_partition(mu_text, "--mu");
            emit(cached_symf(cache, {"hl", partition_key(mu), "jing"}, [&] { return hall_littlewood(mu); }), o.format);
        } else if (mac->parsed()) {
            Partition mu = parse_partition(mu_text, "--mu");
            Engine eng = engine_from_name(engine_text);
            emit(cached_symf(cache, {"macdonald", partition_key(mu), engine_text}, [&] { return macdonald(mu, eng); }),
                 o.format);
        } else if (kos->parsed()) {
            Engine eng = engine_from_name(engine_text);
            KostkaTable tab;
            tab.n = n;
            tab.engine = eng;
            std::vector<Partition> missing;
            for (const auto& mu : partitions_of(n)) {
                std::optional<json> hit = cache ? cache->get({"macdonald", partition_key(mu), engine_text}) : std::nullopt;
                try {
                    if (hit) {
                        tab.rows.emplace(mu, symf_from_json(*hit));
                        continue;
                    }
                } catch (const std::exception&) {
                }
                missing.push_back(mu);
            }
            if (!missing.empty()) {
                KostkaTable full = qt_kostka(n, eng, effective_jobs(o.jobs));
                for (const auto& mu : missing) {
                    tab.rows[mu] = full.rows.at(mu);
                    if (cache) cache->put({"macdonald", partition_key(mu), engine_text}, to_json(full.rows.at(mu)));
                }
            }
            if (o.format == "json")
                std::cout << canonical(to_json(tab)) << "\n";
            else if (o.format == "latex")
                std::cout << to_latex(tab);
            else
                std::cout << to_text(tab);
        } else if (gk->parsed()) {
            Partition mu = parse_partition(mu_text, "--mu");
            std::vector<int> eta = parse_int_list(eta_text, "--eta");
            for (int x : eta)
                if (x <= 0) throw UsageError("--eta parts must be positive");
            Composition comp(eta);
            if (comp.size() != mu.length()) throw UsageError("--eta must sum to the length of --mu");
            std::vector<int> parts(mu.begin(), mu.end());
            emit(cached_symf(cache, {"genkostka", partition_key(mu) + "/" + eta_text, "twist"},
                             [&] { return gen_kostka(parts, comp); }),
                 o.format);
        } else if (hom->parsed()) {
            Partition lam = parse_partition(mu_text, "--lambda");
            emit(cached_symf(cache, {"homog", partition_key(lam), "twist"}, [&] { return homogeneous_q_family(lam); }),
                 o.format);
        } else if (ap->parsed()) {
            OpExpr e = parse_op(op_text);
            SymF operand = parse_symf(to_text_arg);
            if (debug_terms) {
                std::set<std::string> seen;
                emit_ribbon_terms(e, operand.is_zero() ? 0 : operand.max_degree(), seen);
            }
            emit(build_op(e)(operand), o.format);
        } else if (ver->parsed()) {
            json report = run_verify(suite, max_n, effective_jobs(o.jobs));
            std::cout << canonical(report) << "\n";
            return report["pass"].get<bool>() ? 0 : 1;
        } else if (cc->parsed()) {
            Cache c(Cache::resolve_dir(o.cache_dir));
            if (cache_action == "path") {
                std::cout << c.dir().string() << "\n";
            } else if (cache_action == "stats") {
                auto s = c.stats();
                std::cout << canonical({{"dir", c.dir().string()},
                                        {"entries", s.entries},
                                        {"invalid", s.invalid},
                                        {"bytes", s.bytes},
                                        {"version", kCacheVersion}})
                          << "\n";
            } else {
                std::cout << "removed " << c.clear() << " entries\n";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << e.diagnostic() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
