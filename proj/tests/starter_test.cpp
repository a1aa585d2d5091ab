#include <doctest.h>

#include <set>

#include "opplus/starter.hpp"
#include "opplus/verifier.hpp"

using namespace opplus;

namespace {

std::vector<SideVertex> xp(std::initializer_list<std::pair<char, int>> terms, int m) {
    std::vector<SideVertex> out;
    for (auto [side, i] : terms)
        out.push_back(side == 'x' ? SideVertex::x(i, m) : SideVertex::y(i, m));
    return out;
}

std::set<Edge> cycle_edge_set(const Cycle& c) {
    auto es = cycle_edges(c);
    return {es.begin(), es.end()};
}

Cycle side_cycle(std::initializer_list<std::pair<char, int>> terms, int m) {
    Cycle out;
    for (auto [side, i] : terms)
        out.push_back((side == 'x' ? SideVertex::x(i, m) : SideVertex::y(i, m)).flat(m));
    return out;
}

} // namespace

TEST_CASE("m=7 paths match the closed formulas") {
    StarterPaths paths = build_paths_3mod4(7);
    CHECK(paths.p.vertices == xp({{'x', 0}, {'y', 0}, {'x', 1}, {'y', -1}, {'x', 3}}, 7));
    // Q' for m in {7,15,23} is the bare residue tail, no periodic segments
    CHECK(paths.q_prime.vertices == xp({{'y', 2}, {'y', -3}, {'y', -2}, {'y', 1}}, 7));
    CHECK(paths.p.valid(7));
    CHECK(paths.p_prime.valid(7));
    CHECK(paths.q.valid(7));
    CHECK(paths.q_prime.valid(7));
}

TEST_CASE("m=15 Q covers each pure left difference once") {
    StarterPaths paths = build_paths_3mod4(15);
    DifferenceCensus census = difference_census(paths.q.flat_edges(15), 15);
    for (int d = 1; d <= 7; ++d)
        CHECK(census.count(DifferenceClass::pure_left(d)) == 1);
    CHECK(census.total() == 7);
    // and Q' likewise on the right side (m=15 has no periodic segments)
    DifferenceCensus qp = difference_census(paths.q_prime.flat_edges(15), 15);
    for (int d = 1; d <= 7; ++d)
        CHECK(qp.count(DifferenceClass::pure_right(d)) == 1);
}

TEST_CASE("all 3 mod 4 path families satisfy their censuses up to m=199") {
    for (int m = 7; m <= 199; m += 4) {
        if (m == 11)
            continue;
        StarterPaths paths = build_paths_3mod4(m);
        CAPTURE(m);
        CHECK(paths.p.valid(m));
        CHECK(paths.p_prime.valid(m));
        CHECK(paths.q.valid(m));
        CHECK(paths.q_prime.valid(m));
    }
}

TEST_CASE("all 1 mod 4 path families satisfy their censuses up to m=199") {
    for (int m = 13; m <= 199; m += 4) {
        StarterPaths paths = build_paths_1mod4(m);
        CAPTURE(m);
        CHECK(paths.p.valid(m));
        CHECK(paths.p_prime.valid(m));
        CHECK(paths.q.valid(m));
        CHECK(paths.q_prime.valid(m));
    }
}

TEST_CASE("printed Q replacements for small 1 mod 4 members") {
    CHECK(build_paths_1mod4(13).q.vertices ==
          xp({{'x', -4}, {'x', 6}, {'x', 4}, {'x', -5}, {'x', -6}, {'x', 0}}, 13));
    CHECK(build_paths_1mod4(17).q.vertices ==
          xp({{'x', -5}, {'x', 8}, {'x', 7}, {'x', -7}, {'x', 5}, {'x', -6}, {'x', -8},
              {'x', 0}},
             17));
}

TEST_CASE("m=29 Q census misses (m-3)/2, which P' consumes") {
    const int m = 29;
    StarterPaths paths = build_paths_1mod4(m);
    DifferenceCensus census = difference_census(paths.q.flat_edges(m), m);
    for (int d = 1; d <= (m - 5) / 2; ++d)
        CHECK(census.count(DifferenceClass::pure_left(d)) == 1);
    CHECK(census.count(DifferenceClass::pure_left((m - 3) / 2)) == 0);
    CHECK(census.count(DifferenceClass::pure_left((m - 1) / 2)) == 1);
    DifferenceCensus pp = difference_census(paths.p_prime.flat_edges(m), m);
    CHECK(pp.count(DifferenceClass::pure_left((m - 3) / 2)) == 1);
}

TEST_CASE("path builders reject out-of-range m") {
    CHECK_THROWS_AS(build_paths_3mod4(11), std::invalid_argument);
    CHECK_THROWS_AS(build_paths_3mod4(13), std::invalid_argument);
    CHECK_THROWS_AS(build_paths_1mod4(9), std::invalid_argument);
    CHECK_THROWS_AS(build_paths_1mod4(15), std::invalid_argument);
}

TEST_CASE("the m=5 starter is the printed pair of cycles") {
    StarterFactor f = build_starter(5);
    Cycle c = side_cycle({{'x', 0}, {'y', 1}, {'y', -1}, {'x', -1}, {'x', -2}}, 5);
    Cycle cp = side_cycle({{'y', 0}, {'x', 1}, {'y', -2}, {'y', 2}, {'x', 2}}, 5);
    CHECK(cycle_edge_set(f.cycle_c) == cycle_edge_set(c));
    CHECK(cycle_edge_set(f.cycle_cprime) == cycle_edge_set(cp));
    CHECK(f.duplicated == DifferenceClass::mixed(0));
}

TEST_CASE("the m=11 starter uses the printed exceptional P' and Q'") {
    StarterFactor f = build_starter(11);
    CHECK(f.duplicated == DifferenceClass::mixed(2));
    // C' glued from P' = y1 x-1 y2 x-2 y4 x3 y5 and Q' = y5 y-4 y-5 y3 y-3 y1
    Cycle cp = side_cycle({{'y', 1}, {'x', -1}, {'y', 2}, {'x', -2}, {'y', 4}, {'x', 3},
                           {'y', 5}, {'y', -4}, {'y', -5}, {'y', 3}, {'y', -3}},
                          11);
    CHECK(cycle_edge_set(f.cycle_cprime) == cycle_edge_set(cp));
}

TEST_CASE("the m=9 starter uses the printed exceptional P' and Q") {
    StarterFactor f = build_starter(9);
    CHECK(f.duplicated == DifferenceClass::mixed(7)); // -2 mod 9
    Cycle c = side_cycle({{'x', 0}, {'y', 0}, {'x', 1}, {'y', -1}, {'x', 2}, {'y', -2},
                          {'x', -3}, {'x', 3}, {'x', 4}},
                         9);
    CHECK(cycle_edge_set(f.cycle_c) == cycle_edge_set(c));
    Cycle cp = side_cycle({{'y', 3}, {'y', -3}, {'y', 4}, {'y', -4}, {'y', 1}, {'x', -1},
                           {'y', 2}, {'x', -2}, {'x', -4}},
                          9);
    CHECK(cycle_edge_set(f.cycle_cprime) == cycle_edge_set(cp));
}

TEST_CASE("duplicated mixed differences follow the case table") {
    CHECK(build_starter(5).duplicated == DifferenceClass::mixed(0));
    CHECK(build_starter(7).duplicated == DifferenceClass::mixed(0));   // general 3 mod 4
    CHECK(build_starter(9).duplicated == DifferenceClass::mixed(7));   // -2
    CHECK(build_starter(11).duplicated == DifferenceClass::mixed(2));
    CHECK(build_starter(13).duplicated == DifferenceClass::mixed(12)); // -1, general 1 mod 4
    CHECK(build_starter(19).duplicated == DifferenceClass::mixed(0));
    CHECK(build_starter(29).duplicated == DifferenceClass::mixed(28));
}

TEST_CASE("build_starter rejects m < 5 and even m") {
    CHECK_THROWS_AS(build_starter(3), std::invalid_argument);
    CHECK_THROWS_AS(build_starter(4), std::invalid_argument);
    CHECK_THROWS_AS(build_starter(6), std::invalid_argument);
    CHECK_THROWS_AS(build_starter(1), std::invalid_argument);
}

TEST_CASE("starter censuses have the starter shape for every odd m to 199") {
    for (int m = 5; m <= 199; m += 2) {
        CAPTURE(m);
        StarterFactor f = build_starter(m);
        DifferenceCensus census = difference_census(f.as_two_factor().edges(), m);
        DifferenceClass dup = DifferenceClass::mixed(0);
        CHECK(census.is_starter_shape(m, &dup));
        CHECK(dup == f.duplicated);
        std::set<int> span(f.cycle_c.begin(), f.cycle_c.end());
        span.insert(f.cycle_cprime.begin(), f.cycle_cprime.end());
        CHECK((int)span.size() == 2 * m);
    }
}

TEST_CASE("factorize_k2m_plus_i produces verified certificates") {
    SUBCASE("m=5: duplicated matching is x_i y_i") {
        FactorizationCertificate cert = factorize_k2m_plus_i(5);
        REQUIRE(cert.factors.size() == 5);
        std::vector<Edge> want;
        for (int i = 0; i < 5; ++i)
            want.push_back({i, 5 + i});
        std::vector<Edge> got = cert.special_matching;
        std::sort(got.begin(), got.end());
        CHECK(got == want);
        CHECK(verify_factorization(cert).accepted);
    }
    SUBCASE("m=7: duplicated difference 0") {
        FactorizationCertificate cert = factorize_k2m_plus_i(7);
        REQUIRE(cert.factors.size() == 7);
        std::vector<Edge> got = cert.special_matching;
        std::sort(got.begin(), got.end());
        CHECK(got.front() == Edge{0, 7});
        CHECK(verify_factorization(cert).accepted);
    }
    SUBCASE("m=13: duplicated difference -1") {
        FactorizationCertificate cert = factorize_k2m_plus_i(13);
        REQUIRE(cert.factors.size() == 13);
        // x_0 pairs with y_{-1} = vertex 13 + 12
        std::vector<Edge> got = cert.special_matching;
        std::sort(got.begin(), got.end());
        CHECK(got.front() == Edge{0, 25});
        CHECK(verify_factorization(cert).accepted);
    }
}
