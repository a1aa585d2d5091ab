#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "opplus/equipartite.hpp"
#include "opplus/search.hpp"
#include "opplus/verifier.hpp"

using namespace opplus;

namespace {

// Ground-truth existence by exhaustive enumeration (tiny n only).
bool brute_force_exists(int alpha, int k, int ell) {
    const int n = alpha * k;
    if (n % ell != 0)
        return false;
    if ((k * (alpha - 1)) % 2 != 0)
        return false; // odd degree, no 2-factorization
    ProblemSpec spec = ProblemSpec::equipartite(alpha, k, ell);
    detail::DecomposeProblem pb;
    pb.n = n;
    pb.lengths = spec.lengths;
    pb.target.assign(n * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (spec.part_of(u) != spec.part_of(v))
                pb.target[u * n + v] = 1;
    pb.factor_count = spec.factor_count_required();
    auto res = detail::exhaustive_decompose(pb, 500'000'000ull);
    REQUIRE(res.exhausted);
    return res.factors.has_value();
}

} // namespace

TEST_CASE("exception list entries are infeasible") {
    Feasibility f = liu_conditions({3, 2, 3}); // (k,alpha,ell) = (2,3,3)
    CHECK(!f.exists());
    CHECK(f.failed_condition == 4);
}

TEST_CASE("(alpha=3, k=10, ell=5) is feasible") {
    CHECK(liu_conditions({3, 10, 5}).exists());
}

TEST_CASE("odd cycles cannot factor a bipartite graph") {
    Feasibility f = liu_conditions({2, 3, 3}); // alpha=2, k=3, ell=3
    CHECK(!f.exists());
    CHECK(f.failed_condition == 3);
}

TEST_CASE("divisibility and degree parity conditions") {
    CHECK(liu_conditions({3, 3, 4}).failed_condition == 1); // 4 does not divide 9
    CHECK(liu_conditions({4, 3, 4}).failed_condition == 2); // k(alpha-1) = 9 odd
}

TEST_CASE("parameter range violations throw") {
    CHECK_THROWS_AS(liu_conditions({1, 5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(liu_conditions({3, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(liu_conditions({3, 3, 10}), std::invalid_argument);
}

TEST_CASE("liu conditions agree with brute force for alpha*k <= 9") {
    for (int alpha = 2; alpha <= 9; ++alpha) {
        for (int k = 1; alpha * k <= 9; ++k) {
            for (int ell = 3; ell <= alpha * k; ++ell) {
                CAPTURE(alpha);
                CAPTURE(k);
                CAPTURE(ell);
                bool exists = brute_force_exists(alpha, k, ell);
                CHECK(liu_conditions({alpha, k, ell}).exists() == exists);
            }
        }
    }
}

TEST_CASE("provider finds K_{4,4} into two C_4-factors") {
    SearchBudget budget;
    budget.seed = 1;
    ProviderResult res = find_equipartite_factorization({2, 4, 4}, budget);
    REQUIRE(res.found());
    CHECK(res.cert->factors.size() == 2);
    CHECK(verify_factorization(*res.cert).accepted);
}

TEST_CASE("provider finds K_{3[3]} into C_3-factors") {
    SearchBudget budget;
    ProviderResult res = find_equipartite_factorization({3, 3, 3}, budget);
    REQUIRE(res.found());
    CHECK((int)res.cert->factors.size() == res.cert->spec.factor_count_required());
    CHECK(verify_factorization(*res.cert).accepted);
}

TEST_CASE("provider reports infeasible specs") {
    SearchBudget budget;
    ProviderResult res = find_equipartite_factorization({3, 2, 3}, budget);
    CHECK(res.status == ProviderResult::Status::Infeasible);
}

TEST_CASE("provider times out rather than guessing") {
    SearchBudget budget;
    budget.max_steps = 10;
    ProviderResult res = find_equipartite_factorization({3, 14, 7}, budget);
    CHECK(res.status == ProviderResult::Status::Timeout);
}

TEST_CASE("certificate cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "opplus_cache_test";
    fs::remove_all(dir);
    CertificateCache cache(dir);
    EquipartiteSpec spec{2, 4, 4};

    SUBCASE("lookup of a never-stored spec is a miss") {
        std::string note;
        CHECK(!cache.lookup(spec, &note).has_value());
        CHECK(note == "miss");
    }

    SUBCASE("store then lookup round-trips") {
        SearchBudget budget;
        ProviderResult res = find_equipartite_factorization(spec, budget);
        REQUIRE(res.found());
        cache.store(spec, *res.cert);
        auto back = cache.lookup(spec);
        REQUIRE(back.has_value());
        CHECK(export_certificate(*back) == export_certificate(*res.cert));
    }

    SUBCASE("tampered entries are evicted and reported") {
        SearchBudget budget;
        ProviderResult res = find_equipartite_factorization(spec, budget);
        REQUIRE(res.found());
        cache.store(spec, *res.cert);
        fs::path entry = cache.entry_path(spec);
        {
            std::ofstream out(entry, std::ios::app);
            out << "FACTOR 2: (0 4 1 5)\n"; // extra factor: verification fails
        }
        std::string note;
        CHECK(!cache.lookup(spec, &note).has_value());
        CHECK(note.find("evicted") != std::string::npos);
        CHECK(!fs::exists(entry));
    }

    SUBCASE("entries under a different key are not returned") {
        SearchBudget budget;
        ProviderResult res = find_equipartite_factorization(spec, budget);
        REQUIRE(res.found());
        cache.store(spec, *res.cert);
        fs::copy_file(cache.entry_path(spec), cache.entry_path({2, 4, 8}),
                      fs::copy_options::overwrite_existing);
        std::string note;
        CHECK(!cache.lookup({2, 4, 8}, &note).has_value());
    }

    fs::remove_all(dir);
}
