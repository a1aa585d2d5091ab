#include "opplus/factor.hpp"

#include <algorithm>

namespace opplus {

std::vector<Edge> cycle_edges(const Cycle& c) {
    std::vector<Edge> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
    return out;
}

std::vector<Edge> TwoFactor::edges() const {
    std::vector<Edge> out;
    for (const Cycle& c : cycles) {
        auto es = cycle_edges(c);
        out.insert(out.end(), es.begin(), es.end());
    }
    return out;
}

std::vector<int> TwoFactor::cycle_lengths() const {
    std::vector<int> lens;
    lens.reserve(cycles.size());
    for (const Cycle& c : cycles)
        lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

int TwoFactor::vertex_count() const {
    int total = 0;
    for (const Cycle& c : cycles)
        total += static_cast<int>(c.size());
    return total;
}

Cycle canonical_cycle(const Cycle& c) {
    if (c.size() < 3)
        return c;
    const std::size_t k = c.size();
    std::size_t p = std::min_element(c.begin(), c.end()) - c.begin();
    int next = c[(p + 1) % k];
    int prev = c[(p + k - 1) % k];
    Cycle out;
    out.reserve(k);
    if (next <= prev) {
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(c[(p + i) % k]);
    } else {
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(c[(p + k - i) % k]);
    }
    return out;
}

TwoFactor canonical_factor(const TwoFactor& f) {
    TwoFactor out;
    out.cycles.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles)
        out.cycles.push_back(canonical_cycle(c));
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
    return out;
}

bool same_factor(const TwoFactor& a, const TwoFactor& b) {
    return canonical_factor(a).cycles == canonical_factor(b).cycles;
}

} // namespace opplus
