#pragma once

#include <utility>
#include <vector>

namespace opplus {

// Vertices are flat integer labels 0..n-1. An edge is an unordered pair,
// stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// A cycle is a vertex sequence; the closing edge back to the front is
// implicit. Cycles of length < 3 are never valid.
using Cycle = std::vector<int>;

// A 2-factor: disjoint cycles meant to cover every vertex exactly once.
// Whether a given instance actually is one is the verifier's business.
struct TwoFactor {
    std::vector<Cycle> cycles;

    std::vector<Edge> edges() const;
    // Cycle lengths, sorted ascending.
    std::vector<int> cycle_lengths() const;
    int vertex_count() const;
};

// Canonical form: cycle starts at its least vertex and proceeds toward the
// lesser of that vertex's two neighbours.
Cycle canonical_cycle(const Cycle& c);

// Canonicalizes every cycle and orders cycles by least vertex.
TwoFactor canonical_factor(const TwoFactor& f);

// Exact equality after canonicalization.
bool same_factor(const TwoFactor& a, const TwoFactor& b);

std::vector<Edge> cycle_edges(const Cycle& c);

} // namespace opplus
