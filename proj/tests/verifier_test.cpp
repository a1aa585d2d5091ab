#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "opplus/starter.hpp"
#include "opplus/verifier.hpp"

using namespace opplus;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

// Relabel every vertex of a certificate through `perm`.
FactorizationCertificate relabel(const FactorizationCertificate& cert,
                                 const std::vector<int>& perm) {
    FactorizationCertificate out = cert;
    for (TwoFactor& f : out.factors)
        for (Cycle& c : f.cycles)
            for (int& v : c)
                v = perm[v];
    for (Edge& e : out.special_matching)
        e = make_edge(perm[e.first], perm[e.second]);
    return out;
}

// Swap two adjacent vertices inside one cycle (changes two pairs for cycles
// of length >= 4), or cross-swap vertices of two cycles for short ones.
FactorizationCertificate tamper(const FactorizationCertificate& cert, std::mt19937& rng) {
    FactorizationCertificate out = cert;
    for (int guard = 0; guard < 200; ++guard) {
        TwoFactor& f = out.factors[rng() % out.factors.size()];
        if (f.cycles.size() >= 2 && rng() % 2 == 0) {
            std::size_t i = rng() % f.cycles.size();
            std::size_t j = rng() % f.cycles.size();
            if (i == j)
                continue;
            Cycle& a = f.cycles[i];
            Cycle& b = f.cycles[j];
            std::swap(a[rng() % a.size()], b[rng() % b.size()]);
        } else {
            Cycle& c = f.cycles[rng() % f.cycles.size()];
            if (c.size() < 4)
                continue;
            std::size_t p = rng() % c.size();
            std::swap(c[p], c[(p + 1) % c.size()]);
        }
        return out;
    }
    return out;
}

} // namespace

TEST_CASE("the m=5 starter factor verifies against lengths {5,5}") {
    TwoFactor f = build_starter(5).as_two_factor();
    CHECK(verify_two_factor(f, ProblemSpec::kn_plus_i_uniform(10, 5)).empty());
}

TEST_CASE("a single 10-cycle has the wrong cycle lengths for {5,5}") {
    Cycle ten(10);
    std::iota(ten.begin(), ten.end(), 0);
    auto violations = verify_two_factor(TwoFactor{{ten}}, ProblemSpec::kn_plus_i_uniform(10, 5));
    CHECK(has_kind(violations, ViolationKind::WrongCycleLengths));
    CHECK(!has_kind(violations, ViolationKind::NotSpanning));
}

TEST_CASE("two 5-cycles sharing a vertex are not 2-regular") {
    TwoFactor f{{{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8}}};
    auto violations = verify_two_factor(f, ProblemSpec::kn_plus_i_uniform(10, 5));
    CHECK(has_kind(violations, ViolationKind::NotTwoRegular));
    CHECK(has_kind(violations, ViolationKind::NotSpanning)); // vertex 9 uncovered
}

TEST_CASE("starter factorizations verify end to end") {
    for (int m : {5, 7, 9, 11, 13}) {
        CAPTURE(m);
        auto report = verify_factorization(factorize_k2m_plus_i(m));
        CHECK(report.accepted);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("swapping one edge to a non-adjacent pair is rejected with multiplicities") {
    FactorizationCertificate cert = factorize_k2m_plus_i(5);
    // Swapping two adjacent vertices of a 5-cycle rewires two pairs.
    Cycle& c = cert.factors[3].cycles[0];
    std::swap(c[0], c[1]);
    auto report = verify_factorization(cert);
    CHECK(!report.accepted);
    CHECK(std::count_if(report.violations.begin(), report.violations.end(),
                        [](const Violation& v) {
                            return v.kind == ViolationKind::EdgeMultiplicity;
                        }) >= 2);
}

TEST_CASE("100 random single-edge tampers are all rejected") {
    FactorizationCertificate cert = factorize_k2m_plus_i(7);
    REQUIRE(verify_factorization(cert).accepted);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        FactorizationCertificate bad = tamper(cert, rng);
        CHECK(!verify_factorization(bad).accepted);
    }
}

TEST_CASE("acceptance is invariant under reordering, rotation, reflection, relabeling") {
    FactorizationCertificate cert = factorize_k2m_plus_i(7);
    const int n = cert.spec.n;

    SUBCASE("factor reorder") {
        std::reverse(cert.factors.begin(), cert.factors.end());
        CHECK(verify_factorization(cert).accepted);
    }
    SUBCASE("cycle rotation and reflection") {
        Cycle& c = cert.factors[0].cycles[0];
        std::rotate(c.begin(), c.begin() + 2, c.end());
        Cycle& d = cert.factors[1].cycles[1];
        std::reverse(d.begin(), d.end());
        CHECK(verify_factorization(cert).accepted);
    }
    SUBCASE("vertex relabeling") {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 rng(3);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(verify_factorization(relabel(cert, perm)).accepted);
    }
}

TEST_CASE("edge accounting: accepted KnPlusI certificates carry n^2/2 edge slots") {
    for (int m : {5, 9}) {
        FactorizationCertificate cert = factorize_k2m_plus_i(m);
        REQUIRE(verify_factorization(cert).accepted);
        std::size_t slots = 0;
        for (const TwoFactor& f : cert.factors)
            slots += f.edges().size();
        CHECK(slots == (std::size_t)(cert.spec.n * cert.spec.n / 2));
    }
}

TEST_CASE("wrong factor count is flagged") {
    FactorizationCertificate cert = factorize_k2m_plus_i(5);
    cert.factors.pop_back();
    auto report = verify_factorization(cert);
    CHECK(!report.accepted);
    CHECK(has_kind(report.violations, ViolationKind::FactorCountWrong));
}

TEST_CASE("broken duplicated matching is flagged") {
    FactorizationCertificate cert = factorize_k2m_plus_i(5);
    cert.special_matching[0] = cert.special_matching[1];
    auto report = verify_factorization(cert);
    CHECK(!report.accepted);
    CHECK(has_kind(report.violations, ViolationKind::MatchingInvalid));
}

TEST_CASE("malformed spec throws instead of rejecting") {
    FactorizationCertificate cert = factorize_k2m_plus_i(5);
    cert.spec.n = 9; // odd
    CHECK_THROWS_AS(verify_factorization(cert), std::invalid_argument);
    cert.spec.n = 10;
    cert.spec.lengths = {3, 3}; // sums to 6, not 10
    CHECK_THROWS_AS(verify_factorization(cert), std::invalid_argument);
}

TEST_CASE("equipartite factors may not use intra-part edges") {
    ProblemSpec spec = ProblemSpec::equipartite(2, 2, 4);
    TwoFactor good{{{0, 2, 1, 3}}};
    CHECK(verify_two_factor(good, spec).empty());
    TwoFactor bad{{{0, 1, 2, 3}}};
    CHECK(has_kind(verify_two_factor(bad, spec), ViolationKind::EdgeMultiplicity));
}

TEST_CASE("K_{2[2]} decomposes into one C_4-factor") {
    FactorizationCertificate cert;
    cert.spec = ProblemSpec::equipartite(2, 2, 4);
    cert.factors = {TwoFactor{{{0, 2, 1, 3}}}};
    CHECK(verify_factorization(cert).accepted);
}
