#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opplus/composer.hpp"
#include "opplus/equipartite.hpp"
#include "opplus/search.hpp"
#include "opplus/starter.hpp"
#include "opplus/verifier.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::vector<int> parse_length_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, sep)) {
        if (tok.empty())
            throw std::invalid_argument("empty entry in length list '" + s + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty())
        throw std::invalid_argument("empty length list");
    return out;
}

std::vector<opplus::Edge> parse_pair_list(const std::string& s, int n) {
    std::vector<opplus::Edge> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("expected u-v pair, got '" + tok + "'");
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("bad pair '" + tok + "'");
        out.push_back(opplus::make_edge(u, v));
    }
    return out;
}

void emit_certificate(const opplus::FactorizationCertificate& cert, const std::string& out_path) {
    if (out_path.empty())
        std::cout << opplus::export_certificate(cert);
    else
        opplus::write_certificate_file(out_path, cert);
}

std::string cache_dir_or_env(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    const char* env = std::getenv("OPPLUS_CACHE_DIR");
    return env ? env : "";
}

struct SolveArgs {
    int n = 0;
    int m = 0;
    std::string lengths;
    std::string provider_cert;
    std::string cache_dir;
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t max_steps = 50'000'000;
    double max_seconds = 0;
};

int run_solve(const SolveArgs& args) {
    if ((args.m != 0) == !args.lengths.empty()) {
        std::cerr << "solve: exactly one of --m and --lengths is required\n";
        return kExitUsage;
    }
    opplus::ProblemSpec spec =
        args.m != 0 ? opplus::ProblemSpec::kn_plus_i_uniform(args.n, args.m)
                    : opplus::ProblemSpec::kn_plus_i(args.n, parse_length_list(args.lengths, ','));

    opplus::SolveOptions options;
    options.budget.seed = args.seed;
    options.budget.max_steps = args.max_steps;
    options.budget.max_seconds = args.max_seconds;
    options.cache_dir = cache_dir_or_env(args.cache_dir);
    if (!args.provider_cert.empty())
        options.provider_cert = opplus::read_certificate_file(args.provider_cert);

    opplus::SolveResult result = opplus::solve(spec, options);
    switch (result.status) {
    case opplus::SolveResult::Status::Certificate:
        emit_certificate(*result.cert, args.out);
        std::cerr << "solved (" << opplus::authority_name(result.authority) << "): "
                  << result.cert->factors.size() << " factors\n";
        return 0;
    case opplus::SolveResult::Status::Unsolvable:
        std::cerr << "unsolvable (" << opplus::authority_name(result.authority) << ")\n";
        return 2;
    case opplus::SolveResult::Status::Open:
        std::cerr << "open (" << opplus::authority_name(result.authority) << "): "
                  << result.note << "\n";
        return 3;
    case opplus::SolveResult::Status::ConstructionUnsupported:
        std::cerr << "solvable but unsupported (" << opplus::authority_name(result.authority)
                  << "): " << result.note << "\n";
        return 3;
    case opplus::SolveResult::Status::Incomplete:
        std::cerr << "incomplete: " << result.note << "\n";
        return 4;
    }
    return kExitUsage;
}

struct VerifyArgs {
    std::string file;
    std::string spec;
};

int run_verify(const VerifyArgs& args) {
    opplus::FactorizationCertificate cert;
    try {
        cert = opplus::read_certificate_file(args.file);
    } catch (const opplus::CertificateParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    if (!args.spec.empty()) {
        std::string tok;
        std::istringstream in(args.spec);
        int want_n = 0, want_m = 0;
        std::vector<int> want_lengths;
        while (std::getline(in, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad --spec entry '" + tok + "'");
            std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "n")
                want_n = std::stoi(value);
            else if (key == "m")
                want_m = std::stoi(value);
            else if (key == "lengths")
                want_lengths = parse_length_list(value, '+');
            else
                throw std::invalid_argument("unknown --spec key '" + key + "'");
        }
        if (want_n != 0 && want_n != cert.spec.n) {
            std::cout << "REJECT\n  spec mismatch: certificate has n=" << cert.spec.n
                      << ", spec requires n=" << want_n << "\n";
            return 1;
        }
        if (want_m != 0) {
            if (cert.spec.n % want_m != 0) {
                std::cout << "REJECT\n  spec mismatch: m=" << want_m << " does not divide n="
                          << cert.spec.n << "\n";
                return 1;
            }
            cert.spec.lengths.assign(cert.spec.n / want_m, want_m);
        }
        if (!want_lengths.empty())
            cert.spec.lengths = want_lengths;
    }

    opplus::VerificationReport report = opplus::verify_factorization(cert);
    std::cout << report.to_text();
    return report.accepted ? 0 : 1;
}

struct SearchArgs {
    std::string variant = "opplus";
    std::string mode = "hillclimb";
    int n = 0;
    int m = 0;
    std::string lengths;
    std::string missing;
    int alpha = 0, k = 0, ell = 0;
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t max_steps = 50'000'000;
    double max_seconds = 0;
};

int run_search(const SearchArgs& args) {
    opplus::SearchBudget budget;
    budget.seed = args.seed;
    budget.max_steps = args.max_steps;
    budget.max_seconds = args.max_seconds;
    budget.mode = args.mode == "exhaustive" ? opplus::SearchMode::Exhaustive
                                            : opplus::SearchMode::HillClimb;

    if (args.variant == "equipartite") {
        opplus::EquipartiteSpec spec{args.alpha, args.k, args.ell};
        if (spec.alpha == 0 || spec.part_size == 0 || spec.cycle_len == 0) {
            std::cerr << "search --variant equipartite needs --alpha, --k, --ell\n";
            return kExitUsage;
        }
        opplus::ProviderResult res = opplus::find_equipartite_factorization(spec, budget);
        if (res.found()) {
            emit_certificate(*res.cert, args.out);
            std::cerr << "found: " << res.cert->factors.size() << " factors\n";
            return 0;
        }
        if (res.status == opplus::ProviderResult::Status::Infeasible) {
            std::cerr << "no factorization exists (condition "
                      << opplus::liu_conditions(spec).failed_condition << " fails)\n";
            return 2;
        }
        std::cerr << "not found within budget\n";
        return 3;
    }

    if ((args.m != 0) == !args.lengths.empty()) {
        std::cerr << "search: exactly one of --m and --lengths is required\n";
        return kExitUsage;
    }
    std::vector<int> lengths;
    if (args.m != 0) {
        if (args.n % args.m != 0) {
            std::cerr << "search: m must divide n\n";
            return kExitUsage;
        }
        lengths.assign(args.n / args.m, args.m);
    } else {
        lengths = parse_length_list(args.lengths, ',');
    }

    opplus::SearchResult res;
    if (args.variant == "opplus") {
        res = opplus::search_op_plus(opplus::ProblemSpec::kn_plus_i(args.n, lengths), budget);
    } else if (args.variant == "opminus") {
        std::vector<opplus::Edge> missing;
        if (!args.missing.empty()) {
            missing = parse_pair_list(args.missing, args.n);
        } else {
            for (int i = 0; i + 1 < args.n; i += 2)
                missing.push_back({i, i + 1});
        }
        res = opplus::search_kn_minus_i(args.n, lengths, missing, budget);
    } else {
        std::cerr << "unknown variant '" << args.variant << "'\n";
        return kExitUsage;
    }

    switch (res.status) {
    case opplus::SearchResult::Status::Found:
        emit_certificate(*res.cert, args.out);
        std::cerr << "found after " << res.steps << " steps\n";
        return 0;
    case opplus::SearchResult::Status::ProvedNone:
        std::cerr << "proved: no factorization exists (exhausted after " << res.steps
                  << " steps)\n";
        return 2;
    case opplus::SearchResult::Status::NotFound:
        std::cerr << "not found within budget (" << res.steps << " steps)\n";
        return 3;
    }
    return kExitUsage;
}

struct EquipartiteArgs {
    int alpha = 0, k = 0, ell = 0;
    bool search = false;
    std::string import_file;
    std::string cache_dir;
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t max_steps = 50'000'000;
    double max_seconds = 0;
};

int run_equipartite(const EquipartiteArgs& args) {
    opplus::EquipartiteSpec spec{args.alpha, args.k, args.ell};
    opplus::Feasibility feas = opplus::liu_conditions(spec);
    if (!feas.exists()) {
        std::cout << "no C_" << args.ell << "-factorization of K_{" << args.alpha << "["
                  << args.k << "]} exists (condition " << feas.failed_condition << " fails)\n";
        return 2;
    }
    std::cout << "a C_" << args.ell << "-factorization of K_{" << args.alpha << "[" << args.k
              << "]} exists (" << spec.problem().factor_count_required() << " factors)\n";

    std::string cache_dir = cache_dir_or_env(args.cache_dir);

    if (!args.import_file.empty()) {
        opplus::FactorizationCertificate cert;
        try {
            cert = opplus::read_certificate_file(args.import_file);
        } catch (const opplus::CertificateParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return kExitParse;
        }
        cert.spec = spec.problem();
        opplus::VerificationReport report = opplus::verify_factorization(cert);
        if (!report.accepted) {
            std::cerr << report.to_text();
            return 1;
        }
        if (!cache_dir.empty())
            opplus::CertificateCache(cache_dir).store(spec, cert);
        emit_certificate(cert, args.out);
        return 0;
    }

    if (args.search) {
        if (!cache_dir.empty()) {
            std::string note;
            if (auto hit = opplus::CertificateCache(cache_dir).lookup(spec, &note)) {
                std::cerr << "cache hit\n";
                emit_certificate(*hit, args.out);
                return 0;
            } else if (note != "miss") {
                std::cerr << note << "\n";
            }
        }
        opplus::SearchBudget budget;
        budget.seed = args.seed;
        budget.max_steps = args.max_steps;
        budget.max_seconds = args.max_seconds;
        opplus::ProviderResult res = opplus::find_equipartite_factorization(spec, budget);
        if (!res.found()) {
            std::cerr << "search budget exhausted\n";
            return 4;
        }
        if (!cache_dir.empty())
            opplus::CertificateCache(cache_dir).store(spec, *res.cert);
        emit_certificate(*res.cert, args.out);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, search for, and verify 2-factorizations of K_n+I "
                 "(minimum-covering Oberwolfach solver)"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "construct an OP+ solution");
    solve->add_option("--n", solve_args.n, "number of vertices")->required();
    solve->add_option("--m", solve_args.m, "uniform cycle length");
    solve->add_option("--lengths", solve_args.lengths, "comma-separated cycle lengths");
    solve->add_option("--provider-cert", solve_args.provider_cert,
                      "equipartite / K_n-I certificate file to use instead of searching");
    solve->add_option("--cache-dir", solve_args.cache_dir,
                      "certificate cache directory (or OPPLUS_CACHE_DIR)");
    solve->add_option("--seed", solve_args.seed, "search seed");
    solve->add_option("--max-steps", solve_args.max_steps, "search step budget");
    solve->add_option("--max-seconds", solve_args.max_seconds, "search time budget");
    solve->add_option("--out", solve_args.out, "certificate output file (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "verify a certificate file");
    verify->add_option("file", verify_args.file, "certificate file")->required();
    verify->add_option("--spec", verify_args.spec,
                       "problem spec, e.g. \"n=10,m=5\" or \"n=10,lengths=4+6\"");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "search for a factorization");
    search->add_option("--variant", search_args.variant, "opplus | opminus | equipartite");
    search->add_option("--n", search_args.n, "number of vertices");
    search->add_option("--m", search_args.m, "uniform cycle length");
    search->add_option("--lengths", search_args.lengths, "comma-separated cycle lengths");
    search->add_option("--missing", search_args.missing,
                       "opminus: missing matching as 0-1,2-3,... (default consecutive)");
    search->add_option("--alpha", search_args.alpha, "equipartite: number of parts");
    search->add_option("--k", search_args.k, "equipartite: part size");
    search->add_option("--ell", search_args.ell, "equipartite: cycle length");
    search->add_option("--mode", search_args.mode, "exhaustive | hillclimb");
    search->add_option("--seed", search_args.seed, "search seed");
    search->add_option("--max-steps", search_args.max_steps, "step budget");
    search->add_option("--max-seconds", search_args.max_seconds, "time budget");
    search->add_option("--out", search_args.out, "certificate output file");

    int obstruct_m = 0;
    auto* obstruct = app.add_subcommand("obstruct", "rotational starter obstruction at n=4m");
    obstruct->add_option("--m", obstruct_m, "odd cycle length")->required();

    EquipartiteArgs eq_args;
    auto* eq = app.add_subcommand("equipartite", "equipartite feasibility / certificates");
    eq->add_option("--alpha", eq_args.alpha, "number of parts")->required();
    eq->add_option("--k", eq_args.k, "part size")->required();
    eq->add_option("--ell", eq_args.ell, "cycle length")->required();
    eq->add_flag("--search", eq_args.search, "search for a certificate");
    eq->add_option("--import", eq_args.import_file, "import and verify a certificate file");
    eq->add_option("--cache-dir", eq_args.cache_dir,
                   "certificate cache directory (or OPPLUS_CACHE_DIR)");
    eq->add_option("--seed", eq_args.seed, "search seed");
    eq->add_option("--max-steps", eq_args.max_steps, "step budget");
    eq->add_option("--max-seconds", eq_args.max_seconds, "time budget");
    eq->add_option("--out", eq_args.out, "certificate output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed())
            return run_solve(solve_args);
        if (verify->parsed())
            return run_verify(verify_args);
        if (search->parsed())
            return run_search(search_args);
        if (obstruct->parsed()) {
            std::cout << opplus::obstruction_4m(obstruct_m).to_text();
            return 0;
        }
        if (eq->parsed())
            return run_equipartite(eq_args);
    } catch (const opplus::CertificateParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
