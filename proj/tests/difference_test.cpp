#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "opplus/difference.hpp"
#include "opplus/starter.hpp"
#include "opplus/verifier.hpp"

using namespace opplus;

namespace {

int x(int i, int m) { return SideVertex::x(i, m).flat(m); }
int y(int i, int m) { return SideVertex::y(i, m).flat(m); }

} // namespace

TEST_CASE("adjacent same-side pair is pure difference 1") {
    CHECK(canonical_difference({x(0, 5), x(1, 5)}, 5) == DifferenceClass::pure_left(1));
    CHECK(canonical_difference({y(0, 5), y(1, 5)}, 5) == DifferenceClass::pure_right(1));
}

TEST_CASE("mixed difference is side-directed, not argument-ordered") {
    CHECK(canonical_difference({x(0, 5), y(1, 5)}, 5) == DifferenceClass::mixed(1));
    CHECK(canonical_difference({y(1, 5), x(0, 5)}, 5) == DifferenceClass::mixed(1));
    CHECK(canonical_difference({x(4, 5), y(0, 5)}, 5) == DifferenceClass::mixed(1));
}

TEST_CASE("negative indices canonicalize") {
    // x_{-2} = x_3 at m=5
    CHECK(canonical_difference({x(2, 5), x(-2, 5)}, 5) == DifferenceClass::pure_left(1));
    CHECK(canonical_difference({y(0, 5), y(-2, 5)}, 5) == DifferenceClass::pure_right(2));
}

TEST_CASE("pure differences match the min((i-j) mod m, (j-i) mod m) oracle") {
    for (int m : {5, 7, 9}) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j)
                    continue;
                int oracle = std::min(SideVertex::mod(i - j, m), SideVertex::mod(j - i, m));
                CHECK(canonical_difference({x(i, m), x(j, m)}, m) ==
                      DifferenceClass::pure_left(oracle));
                CHECK(canonical_difference({y(i, m), y(j, m)}, m) ==
                      DifferenceClass::pure_right(oracle));
            }
        }
    }
}

TEST_CASE("canonical_difference rejects bad input") {
    CHECK_THROWS_AS(canonical_difference({0, 10}, 5), std::invalid_argument);
    CHECK_THROWS_AS(canonical_difference({0, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(canonical_difference({3, 3}, 5), std::invalid_argument);
}

TEST_CASE("rotation by zero is the identity") {
    TwoFactor f = build_starter(5).as_two_factor();
    TwoFactor r = rotate_factor(f, Rotation{0}, 5);
    CHECK(same_factor(f, r));
}

TEST_CASE("rotation preserves the census") {
    CHECK(rotate_edge({x(0, 5), y(1, 5)}, Rotation{1}, 5) == make_edge(x(1, 5), y(2, 5)));

    std::mt19937 rng(7);
    for (int m : {5, 9, 13}) {
        std::vector<Edge> edges;
        for (int trial = 0; trial < 30; ++trial) {
            int u = (int)(rng() % (2 * m)), v = (int)(rng() % (2 * m));
            if (u != v)
                edges.push_back(make_edge(u, v));
        }
        DifferenceCensus before = difference_census(edges, m);
        for (int shift : {1, 2, m - 1}) {
            DifferenceCensus after = difference_census(rotate_edges(edges, Rotation{shift}, m), m);
            CHECK(before.counts == after.counts);
        }
    }
}

TEST_CASE("rotated starter factors overlap only on the duplicated matching") {
    // In the K_{2m}+I multigraph the orbit factors are edge-disjoint; as
    // vertex-pair sets two of them can share exactly one pair, and that pair
    // belongs to the duplicated matching (the doubled class has two edges in
    // the starter, which are rotations of each other).
    const int m = 5;
    StarterFactor starter = build_starter(m);
    TwoFactor f = starter.as_two_factor();
    FactorizationCertificate cert = factorize_k2m_plus_i(m);
    std::set<Edge> matching(cert.special_matching.begin(), cert.special_matching.end());

    for (int shift = 1; shift < m; ++shift) {
        auto base = f.edges();
        auto rotated = rotate_factor(f, Rotation{shift}, m).edges();
        std::set<Edge> seen(base.begin(), base.end());
        int shared = 0;
        for (Edge e : rotated) {
            if (seen.count(e)) {
                ++shared;
                CHECK(matching.count(e) == 1);
            }
        }
        CHECK(shared <= 1);
    }
}

TEST_CASE("orbit of the m=5 starter covers K_10 plus one matching") {
    const int m = 5;
    TwoFactor f = build_starter(m).as_two_factor();
    auto orbit = orbit_expand(f, m);
    REQUIRE(orbit.size() == 5);

    std::map<Edge, int> mult;
    for (const TwoFactor& g : orbit) {
        auto edges = g.edges();
        CHECK(edges.size() == 10);
        for (Edge e : edges)
            ++mult[e];
    }
    int total = 0, twice = 0;
    for (const auto& [e, c] : mult) {
        total += c;
        CHECK((c == 1 || c == 2));
        if (c == 2)
            ++twice;
    }
    CHECK(total == 2 * m * m);      // |E(K_10 + I)|
    CHECK(twice == m);              // one perfect matching duplicated
    CHECK(mult.size() == m * (2 * m - 1));
}

TEST_CASE("orbit of a non-spanning cycle fails factor verification") {
    const int m = 5;
    Cycle xs{0, 1, 2, 3, 4}; // x side only
    auto orbit = orbit_expand(TwoFactor{{xs}}, m);
    ProblemSpec spec = ProblemSpec::kn_plus_i_uniform(10, 5);
    for (const TwoFactor& g : orbit)
        CHECK(!verify_two_factor(g, spec).empty());
}

TEST_CASE("census of the m=5 starter has the starter shape") {
    const int m = 5;
    DifferenceCensus census = difference_census(build_starter(m).as_two_factor().edges(), m);
    for (int d = 1; d <= 2; ++d) {
        CHECK(census.count(DifferenceClass::pure_left(d)) == 1);
        CHECK(census.count(DifferenceClass::pure_right(d)) == 1);
    }
    CHECK(census.count(DifferenceClass::mixed(0)) == 2);
    for (int d = 1; d <= 4; ++d)
        CHECK(census.count(DifferenceClass::mixed(d)) == 1);

    DifferenceClass dup = DifferenceClass::mixed(99);
    CHECK(census.is_starter_shape(m, &dup));
    CHECK(dup == DifferenceClass::mixed(0));
    CHECK(census.total() == 2 * m);
}

TEST_CASE("census of the empty set is empty") {
    DifferenceCensus census = difference_census({}, 5);
    CHECK(census.total() == 0);
    CHECK(census.counts.empty());
}

TEST_CASE("census of the full K_10 edge set is uniform 5") {
    const int m = 5;
    std::vector<Edge> edges;
    for (int u = 0; u < 2 * m; ++u)
        for (int v = u + 1; v < 2 * m; ++v)
            edges.push_back({u, v});
    DifferenceCensus census = difference_census(edges, m);
    for (int d = 1; d <= (m - 1) / 2; ++d) {
        CHECK(census.count(DifferenceClass::pure_left(d)) == m);
        CHECK(census.count(DifferenceClass::pure_right(d)) == m);
    }
    for (int d = 0; d < m; ++d)
        CHECK(census.count(DifferenceClass::mixed(d)) == m);
}

TEST_CASE("pure values stay within 1..(m-1)/2 and mixed within 0..m-1") {
    std::mt19937 rng(11);
    for (int m : {5, 7, 11, 19}) {
        for (int trial = 0; trial < 200; ++trial) {
            int u = (int)(rng() % (2 * m)), v = (int)(rng() % (2 * m));
            if (u == v)
                continue;
            DifferenceClass c = canonical_difference(make_edge(u, v), m);
            if (c.kind == DiffKind::Mixed) {
                CHECK(c.value >= 0);
                CHECK(c.value <= m - 1);
            } else {
                CHECK(c.value >= 1);
                CHECK(c.value <= (m - 1) / 2);
            }
        }
    }
}
