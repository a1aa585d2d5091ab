#pragma once

#include <compare>
#include <map>
#include <vector>

#include "opplus/factor.hpp"

namespace opplus {

// Two-sided labelling of the 2m vertices: x_i <-> i, y_i <-> m+i, with
// indices living in Z_m. This is the substrate for the rotational starter
// constructions; m is always odd here.

enum class Side { X, Y };

struct SideVertex {
    Side side;
    int index; // canonical residue, 0 <= index < m

    static SideVertex x(int i, int m) { return {Side::X, mod(i, m)}; }
    static SideVertex y(int i, int m) { return {Side::Y, mod(i, m)}; }
    static int mod(int a, int m) { return ((a % m) + m) % m; }

    int flat(int m) const { return side == Side::X ? index : m + index; }
    static SideVertex from_flat(int v, int m) {
        return v < m ? SideVertex{Side::X, v} : SideVertex{Side::Y, v - m};
    }

    auto operator<=>(const SideVertex&) const = default;
};

enum class DiffKind { PureLeft, PureRight, Mixed };

// Classification of an edge under the two-sided labelling. Pure values are
// canonical representatives min(d, m-d) in 1..(m-1)/2; mixed values are the
// directed residue (y index - x index) mod m in 0..m-1.
struct DifferenceClass {
    DiffKind kind;
    int value;

    auto operator<=>(const DifferenceClass&) const = default;

    static DifferenceClass pure_left(int v) { return {DiffKind::PureLeft, v}; }
    static DifferenceClass pure_right(int v) { return {DiffKind::PureRight, v}; }
    static DifferenceClass mixed(int v) { return {DiffKind::Mixed, v}; }
};

// The cyclic action x_i -> x_{i+shift}, y_i -> y_{i+shift}.
struct Rotation {
    int shift;
};

struct DifferenceCensus {
    std::map<DifferenceClass, int> counts;

    int total() const;
    int count(DifferenceClass c) const;
    // Starter shape: every pure left and pure right difference exactly once,
    // every mixed difference exactly once except a single mixed class twice.
    // On success stores that class in `duplicated`.
    bool is_starter_shape(int m, DifferenceClass* duplicated = nullptr) const;
};

// Throws std::invalid_argument if m is even or < 3, or an endpoint is
// outside 0..2m-1.
DifferenceClass canonical_difference(Edge e, int m);

int rotate_vertex(int v, Rotation r, int m);
Edge rotate_edge(Edge e, Rotation r, int m);
std::vector<Edge> rotate_edges(const std::vector<Edge>& es, Rotation r, int m);
TwoFactor rotate_factor(const TwoFactor& f, Rotation r, int m);

// [rho^0(F), ..., rho^{m-1}(F)] in shift order.
std::vector<TwoFactor> orbit_expand(const TwoFactor& f, int m);

DifferenceCensus difference_census(const std::vector<Edge>& edges, int m);

} // namespace opplus
