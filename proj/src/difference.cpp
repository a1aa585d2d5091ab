#include "opplus/difference.hpp"

#include <stdexcept>
#include <string>

namespace opplus {

namespace {

void check_m(int m) {
    if (m < 3)
        throw std::invalid_argument("modulus m must be >= 3, got " + std::to_string(m));
    if (m % 2 == 0)
        throw std::invalid_argument("modulus m must be odd, got " + std::to_string(m) +
                                    " (pure differences have no canonical form at m/2)");
}

void check_vertex(int v, int m) {
    if (v < 0 || v >= 2 * m)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(2 * m - 1));
}

} // namespace

int DifferenceCensus::total() const {
    int t = 0;
    for (const auto& [cls, cnt] : counts)
        t += cnt;
    return t;
}

int DifferenceCensus::count(DifferenceClass c) const {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
}

bool DifferenceCensus::is_starter_shape(int m, DifferenceClass* duplicated) const {
    for (int d = 1; d <= (m - 1) / 2; ++d) {
        if (count(DifferenceClass::pure_left(d)) != 1)
            return false;
        if (count(DifferenceClass::pure_right(d)) != 1)
            return false;
    }
    int twos = 0;
    DifferenceClass dup = DifferenceClass::mixed(0);
    for (int d = 0; d < m; ++d) {
        int c = count(DifferenceClass::mixed(d));
        if (c == 2) {
            ++twos;
            dup = DifferenceClass::mixed(d);
        } else if (c != 1) {
            return false;
        }
    }
    if (twos != 1)
        return false;
    if (total() != 2 * m) // nothing censused beyond the classes above
        return false;
    if (duplicated)
        *duplicated = dup;
    return true;
}

DifferenceClass canonical_difference(Edge e, int m) {
    check_m(m);
    check_vertex(e.first, m);
    check_vertex(e.second, m);
    if (e.first == e.second)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(e.first));
    SideVertex a = SideVertex::from_flat(e.first, m);
    SideVertex b = SideVertex::from_flat(e.second, m);
    if (a.side == b.side) {
        int d = SideVertex::mod(a.index - b.index, m);
        int canon = std::min(d, m - d);
        return {a.side == Side::X ? DiffKind::PureLeft : DiffKind::PureRight, canon};
    }
    const SideVertex& xv = a.side == Side::X ? a : b;
    const SideVertex& yv = a.side == Side::X ? b : a;
    return DifferenceClass::mixed(SideVertex::mod(yv.index - xv.index, m));
}

int rotate_vertex(int v, Rotation r, int m) {
    check_m(m);
    check_vertex(v, m);
    return v < m ? SideVertex::mod(v + r.shift, m) : m + SideVertex::mod(v - m + r.shift, m);
}

Edge rotate_edge(Edge e, Rotation r, int m) {
    return make_edge(rotate_vertex(e.first, r, m), rotate_vertex(e.second, r, m));
}

std::vector<Edge> rotate_edges(const std::vector<Edge>& es, Rotation r, int m) {
    std::vector<Edge> out;
    out.reserve(es.size());
    for (Edge e : es)
        out.push_back(rotate_edge(e, r, m));
    return out;
}

TwoFactor rotate_factor(const TwoFactor& f, Rotation r, int m) {
    TwoFactor out;
    out.cycles.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles) {
        Cycle rc;
        rc.reserve(c.size());
        for (int v : c)
            rc.push_back(rotate_vertex(v, r, m));
        out.cycles.push_back(std::move(rc));
    }
    return out;
}

std::vector<TwoFactor> orbit_expand(const TwoFactor& f, int m) {
    std::vector<TwoFactor> out;
    out.reserve(m);
    for (int shift = 0; shift < m; ++shift)
        out.push_back(rotate_factor(f, Rotation{shift}, m));
    return out;
}

DifferenceCensus difference_census(const std::vector<Edge>& edges, int m) {
    DifferenceCensus census;
    for (Edge e : edges)
        ++census.counts[canonical_difference(e, m)];
    return census;
}

} // namespace opplus
