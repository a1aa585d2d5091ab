#pragma once

#include <vector>

#include "opplus/certificate.hpp"
#include "opplus/difference.hpp"

namespace opplus {

// A walk on the two-sided labelling together with the difference multiset it
// is required to realize (each class exactly as often as listed).
struct PathSegment {
    std::vector<SideVertex> vertices;
    std::vector<DifferenceClass> expected; // sorted multiset

    std::vector<Edge> flat_edges(int m) const;
    std::vector<int> flat_vertices(int m) const;
    // True path (no repeated vertex) realizing exactly `expected`.
    bool valid(int m) const;
};

struct StarterPaths {
    PathSegment p, p_prime, q, q_prime;
};

// One starter C_m-factor {C, C'} of K_{2m}+I: two disjoint m-cycles whose
// census hits every pure difference once and every mixed difference once,
// plus one extra edge of `duplicated`.
struct StarterFactor {
    int m = 0;
    Cycle cycle_c;
    Cycle cycle_cprime;
    DifferenceClass duplicated{DiffKind::Mixed, 0};

    TwoFactor as_two_factor() const { return TwoFactor{{cycle_c, cycle_cprime}}; }
};

// Residue-class path builders. Both throw std::invalid_argument outside
// their range; the exceptional m handled elsewhere are rejected here.
StarterPaths build_paths_3mod4(int m); // m = 3 (mod 4), m >= 7, m != 11
StarterPaths build_paths_1mod4(int m); // m = 1 (mod 4), m >= 13

// Dispatches across all residue cases and the exceptional m in
// {5, 9, 11, 13, 17, 21, 25}, glues the paths into the two cycles, and
// validates every starter invariant. Throws std::invalid_argument for even
// m or m < 5.
StarterFactor build_starter(int m);

// The full C_m-factorization of K_{2m}+I: the rotation orbit of the starter,
// with the duplicated matching { x_i y_{i+d0} } induced by the duplicated
// mixed difference d0.
FactorizationCertificate factorize_k2m_plus_i(int m);

} // namespace opplus
