#include "opplus/starter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace opplus {

namespace {

int mod(int a, int m) { return SideVertex::mod(a, m); }

// Index arithmetic helpers bound to one modulus. Walks are assembled from
// index formulas evaluated at runtime so the census checks below validate
// the transcription for every m at once.
struct Walk {
    int m;
    std::vector<SideVertex> v;

    void x(int i) { v.push_back(SideVertex::x(i, m)); }
    void y(int i) { v.push_back(SideVertex::y(i, m)); }

    // Appends a later segment that starts on our current terminus.
    void join(const Walk& next) {
        if (v.empty() || next.v.empty() || !(v.back() == next.v.front()))
            throw std::logic_error("segment junction mismatch");
        v.insert(v.end(), next.v.begin() + 1, next.v.end());
    }
};

std::vector<DifferenceClass> sorted(std::vector<DifferenceClass> d) {
    std::sort(d.begin(), d.end());
    return d;
}

// Mixed expectations are written with the paper-style signed values and
// reduced mod m here.
std::vector<DifferenceClass> mixed_set(const std::vector<int>& values, int m) {
    std::vector<DifferenceClass> out;
    out.reserve(values.size());
    for (int v : values)
        out.push_back(DifferenceClass::mixed(mod(v, m)));
    return sorted(std::move(out));
}

std::vector<DifferenceClass> pure_range(DiffKind kind, int lo, int hi) {
    std::vector<DifferenceClass> out;
    for (int d = lo; d <= hi; ++d)
        out.push_back({kind, d});
    return out;
}

PathSegment make_segment(const Walk& w, std::vector<DifferenceClass> expected) {
    return PathSegment{w.v, sorted(std::move(expected))};
}

// ---- case m = 3 (mod 4), m >= 7, m != 11 --------------------------------

Walk walk_p_3mod4(int m) {
    Walk w{m, {}};
    for (int k = 0; k <= (m - 3) / 4; ++k) {
        w.x(k);
        w.y(-k);
    }
    w.x((m + 5) / 4);
    return w;
}

Walk walk_pprime_3mod4(int m) {
    Walk w{m, {}};
    for (int k = 1; k <= (m - 3) / 4; ++k) {
        w.y(k);
        w.x(-k);
    }
    w.y((m + 5) / 4);
    w.x((m + 1) / 4);
    w.y((m + 1) / 4);
    return w;
}

Walk walk_q_3mod4(int m) {
    Walk w{m, {}};
    for (int j = 0; j <= (m - 7) / 4; ++j) {
        w.x((m + 5) / 4 + j);
        w.x(-((m + 1) / 4 + j));
    }
    w.x(-(m - 1) / 2);
    w.x(0);
    return w;
}

// The 6-path on the y side whose edges realize pure right differences
// 2i+1 .. 2i+6.
Walk y_hexpath(int m, int i) {
    Walk w{m, {}};
    w.y(i);
    w.y(-(i + 1));
    w.y(i + 2);
    w.y(-i);
    w.y(i + 4);
    w.y(-(i + 2));
    w.y(i + 3);
    return w;
}

Walk walk_qprime_3mod4(int m) {
    // Periodic segments start at i = (m+1)/4 and step by 3; how many fit is
    // dictated by the residue tail, which closes the walk at y_1.
    int segments;
    switch (m % 12) {
    case 3: segments = (m - 15) / 12; break;
    case 7: segments = (m - 7) / 12; break;
    default: segments = (m - 23) / 12; break; // m = 11 (mod 12)
    }

    Walk w{m, {}};
    for (int j = 0; j < segments; ++j) {
        Walk seg = y_hexpath(m, (m + 1) / 4 + 3 * j);
        if (j == 0)
            w = seg;
        else
            w.join(seg);
    }

    Walk tail{m, {}};
    if (m % 12 == 3) {
        tail.y((m - 7) / 2);
        tail.y(-(m - 5) / 2);
        tail.y((m - 3) / 2);
        tail.y(-(m - 7) / 2);
        tail.y(-(m - 1) / 2);
        tail.y((m - 1) / 2);
        tail.y(-(m - 3) / 2);
        tail.y(1);
    } else if (m % 12 == 7) {
        tail.y((m - 3) / 2);
        tail.y(-(m - 1) / 2);
        tail.y(-(m - 3) / 2);
        tail.y(1);
    } else {
        tail.y((m - 11) / 2);
        tail.y(-(m - 9) / 2);
        tail.y((m - 7) / 2);
        tail.y(-(m - 11) / 2);
        tail.y((m - 3) / 2);
        tail.y(-(m - 5) / 2);
        tail.y((m - 5) / 2);
        tail.y(-(m - 7) / 2);
        tail.y(-(m - 1) / 2);
        tail.y((m - 1) / 2);
        tail.y(-(m - 3) / 2);
        tail.y(1);
    }
    if (segments == 0)
        return tail;
    w.join(tail);
    return w;
}

// ---- case m = 1 (mod 4), m >= 13 (P and Q' shapes also serve m = 9) ------

Walk walk_p_1mod4(int m) {
    Walk w{m, {}};
    for (int k = 0; k <= (m - 1) / 4; ++k) {
        w.x(k);
        w.y(-k);
    }
    w.x(-(m + 3) / 4);
    return w;
}

Walk walk_pprime_1mod4(int m) {
    Walk w{m, {}};
    for (int k = 1; k <= (m - 1) / 4; ++k) {
        w.y(k);
        w.x(-k);
    }
    w.x((m + 7) / 4);
    w.y((m + 3) / 4);
    return w;
}

Walk walk_qprime_1mod4(int m) {
    Walk w{m, {}};
    for (int k = (m + 3) / 4; k <= (m - 1) / 2; ++k) {
        w.y(k);
        w.y(-k);
    }
    w.y(1);
    return w;
}

// The 6-path on the x side realizing pure left differences 2i-1 .. 2i+4.
Walk x_hexpath(int m, int i) {
    Walk w{m, {}};
    w.x(-(i - 3));
    w.x(i + 2);
    w.x(-(i + 2));
    w.x(i + 1);
    w.x(-(i + 1));
    w.x(i);
    w.x(-i);
    return w;
}

// Leading segment of Q covering pure left differences (m-15)/2 .. (m-5)/2.
Walk x_leadpath(int m) {
    Walk w{m, {}};
    w.x(-(m + 3) / 4);
    w.x((m + 15) / 4);
    w.x(-(m + 15) / 4);
    w.x((m + 11) / 4);
    w.x(-(m + 11) / 4);
    w.x((m + 3) / 4);
    w.x(-(m + 7) / 4);
    return w;
}

Walk walk_q_1mod4(int m) {
    // Printed replacements for the small members of each residue class.
    if (m == 13 || m == 17 || m == 21 || m == 25) {
        Walk w{m, {}};
        switch (m) {
        case 13:
            for (int i : {-4, 6, 4, -5, -6, 0}) w.x(i);
            break;
        case 17:
            for (int i : {-5, 8, 7, -7, 5, -6, -8, 0}) w.x(i);
            break;
        case 21:
            for (int i : {-6, 9, 10, -9, 8, -8, 6, -7, -10, 0}) w.x(i);
            break;
        default: // 25
            for (int i : {-7, 10, 12, -8, 7, -9, 9, -10, 11, -11, -12, 0}) w.x(i);
            break;
        }
        return w;
    }

    int segments;
    switch (m % 12) {
    case 1: segments = (m - 37) / 12; break;
    case 5: segments = (m - 29) / 12; break;
    default: segments = (m - 33) / 12; break; // m = 9 (mod 12)
    }

    Walk w = x_leadpath(m);
    for (int j = 0; j < segments; ++j)
        w.join(x_hexpath(m, (m + 19) / 4 + 3 * j));

    Walk tail{m, {}};
    if (m % 12 == 1) {
        tail.x(-(m - 15) / 2);
        tail.x((m - 5) / 2);
        tail.x((m - 1) / 2);
        tail.x(-(m - 9) / 2);
        tail.x((m - 9) / 2);
        tail.x(-(m - 7) / 2);
        tail.x((m - 7) / 2);
        tail.x(-(m - 5) / 2);
        tail.x((m - 3) / 2);
        tail.x(-(m - 3) / 2);
        tail.x(-(m - 1) / 2);
        tail.x(0);
    } else if (m % 12 == 5) {
        tail.x(-(m - 11) / 2);
        tail.x((m - 1) / 2);
        tail.x((m - 3) / 2);
        tail.x(-(m - 3) / 2);
        tail.x((m - 5) / 2);
        tail.x(-(m - 5) / 2);
        tail.x(-(m - 1) / 2);
        tail.x(0);
    } else {
        tail.x(-(m - 13) / 2);
        tail.x((m - 3) / 2);
        tail.x((m - 1) / 2);
        tail.x(-(m - 3) / 2);
        tail.x((m - 5) / 2);
        tail.x(-(m - 5) / 2);
        tail.x((m - 7) / 2);
        tail.x(-(m - 7) / 2);
        tail.x(-(m - 1) / 2);
        tail.x(0);
    }
    w.join(tail);
    return w;
}

// ---- expected difference sets --------------------------------------------

std::vector<DifferenceClass> expected_p_3mod4(int m) {
    std::vector<int> vals{0};
    for (int d = 1; d <= (m - 3) / 2; ++d)
        vals.push_back(-d);
    vals.push_back((m - 1) / 2);
    return mixed_set(vals, m);
}

std::vector<DifferenceClass> expected_pprime_3mod4(int m) {
    std::vector<int> vals{0};
    for (int d = 1; d <= (m - 3) / 2; ++d)
        vals.push_back(d);
    vals.push_back(-(m - 1) / 2);
    return mixed_set(vals, m);
}

std::vector<DifferenceClass> expected_p_1mod4(int m) {
    std::vector<int> vals{0, 1};
    for (int d = 1; d <= (m - 1) / 2; ++d)
        vals.push_back(-d);
    return mixed_set(vals, m);
}

std::vector<DifferenceClass> expected_pprime_1mod4(int m) {
    std::vector<int> vals{-1};
    for (int d = 2; d <= (m - 1) / 2; ++d)
        vals.push_back(d);
    auto out = mixed_set(vals, m);
    out.push_back(DifferenceClass::pure_left((m - 3) / 2));
    return sorted(std::move(out));
}

std::vector<DifferenceClass> expected_q_1mod4(int m) {
    auto out = pure_range(DiffKind::PureLeft, 1, (m - 5) / 2);
    out.push_back(DifferenceClass::pure_left((m - 1) / 2));
    return out;
}

// ---- glue and validation ---------------------------------------------------

// first runs a -> b, second runs b -> a; the closed cycle drops both shared
// endpoints from `second`.
Cycle glue_cycle(const PathSegment& first, const PathSegment& second, int m) {
    const auto& u = first.vertices;
    const auto& v = second.vertices;
    if (u.empty() || v.empty() || !(u.back() == v.front()) || !(v.back() == u.front()))
        throw std::logic_error("paths do not share endpoints");
    Cycle c;
    c.reserve(u.size() + v.size() - 2);
    for (const SideVertex& s : u)
        c.push_back(s.flat(m));
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        c.push_back(v[i].flat(m));
    return c;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::logic_error("starter construction invariant failed: " + what);
}

StarterFactor assemble(int m, const PathSegment& p, const PathSegment& q,
                       const PathSegment& pprime, const PathSegment& qprime,
                       bool cprime_starts_with_qprime, DifferenceClass expected_dup) {
    for (const PathSegment* seg : {&p, &q, &pprime, &qprime})
        require(seg->valid(m), "path census for m=" + std::to_string(m));

    StarterFactor f;
    f.m = m;
    f.cycle_c = glue_cycle(p, q, m);
    f.cycle_cprime = cprime_starts_with_qprime ? glue_cycle(qprime, pprime, m)
                                               : glue_cycle(pprime, qprime, m);

    require((int)f.cycle_c.size() == m && (int)f.cycle_cprime.size() == m,
            "cycle lengths for m=" + std::to_string(m));
    std::set<int> seen(f.cycle_c.begin(), f.cycle_c.end());
    seen.insert(f.cycle_cprime.begin(), f.cycle_cprime.end());
    require((int)seen.size() == 2 * m, "cycles span 2m vertices for m=" + std::to_string(m));

    DifferenceCensus census = difference_census(f.as_two_factor().edges(), m);
    DifferenceClass dup = DifferenceClass::mixed(0);
    require(census.is_starter_shape(m, &dup), "starter census for m=" + std::to_string(m));
    require(dup == expected_dup, "duplicated difference for m=" + std::to_string(m));
    f.duplicated = dup;
    return f;
}

PathSegment explicit_segment(std::initializer_list<SideVertex> vs,
                             std::vector<DifferenceClass> expected) {
    PathSegment seg;
    seg.vertices.assign(vs);
    seg.expected = sorted(std::move(expected));
    return seg;
}

} // namespace

std::vector<int> PathSegment::flat_vertices(int m) const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (const SideVertex& s : vertices)
        out.push_back(s.flat(m));
    return out;
}

std::vector<Edge> PathSegment::flat_edges(int m) const {
    std::vector<Edge> out;
    auto flat = flat_vertices(m);
    for (std::size_t i = 0; i + 1 < flat.size(); ++i)
        out.push_back(make_edge(flat[i], flat[i + 1]));
    return out;
}

bool PathSegment::valid(int m) const {
    auto flat = flat_vertices(m);
    std::set<int> distinct(flat.begin(), flat.end());
    if (distinct.size() != flat.size())
        return false;
    std::vector<DifferenceClass> realized;
    for (Edge e : flat_edges(m))
        realized.push_back(canonical_difference(e, m));
    std::sort(realized.begin(), realized.end());
    return realized == expected;
}

StarterPaths build_paths_3mod4(int m) {
    if (m % 4 != 3 || m < 7 || m == 11)
        throw std::invalid_argument("build_paths_3mod4 requires m = 3 (mod 4), m >= 7, m != 11");
    StarterPaths paths;
    paths.p = make_segment(walk_p_3mod4(m), expected_p_3mod4(m));
    paths.p_prime = make_segment(walk_pprime_3mod4(m), expected_pprime_3mod4(m));
    paths.q = make_segment(walk_q_3mod4(m), pure_range(DiffKind::PureLeft, 1, (m - 1) / 2));
    paths.q_prime =
        make_segment(walk_qprime_3mod4(m), pure_range(DiffKind::PureRight, 1, (m - 1) / 2));
    return paths;
}

StarterPaths build_paths_1mod4(int m) {
    if (m % 4 != 1 || m < 13)
        throw std::invalid_argument("build_paths_1mod4 requires m = 1 (mod 4), m >= 13");
    StarterPaths paths;
    paths.p = make_segment(walk_p_1mod4(m), expected_p_1mod4(m));
    paths.p_prime = make_segment(walk_pprime_1mod4(m), expected_pprime_1mod4(m));
    paths.q = make_segment(walk_q_1mod4(m), expected_q_1mod4(m));
    paths.q_prime =
        make_segment(walk_qprime_1mod4(m), pure_range(DiffKind::PureRight, 1, (m - 1) / 2));
    return paths;
}

StarterFactor build_starter(int m) {
    if (m < 5 || m % 2 == 0)
        throw std::invalid_argument("starter factors exist for odd m >= 5 only, got " +
                                    std::to_string(m));

    if (m == 5) {
        StarterFactor f;
        f.m = m;
        f.cycle_c = {SideVertex::x(0, m).flat(m), SideVertex::y(1, m).flat(m),
                     SideVertex::y(-1, m).flat(m), SideVertex::x(-1, m).flat(m),
                     SideVertex::x(-2, m).flat(m)};
        f.cycle_cprime = {SideVertex::y(0, m).flat(m), SideVertex::x(1, m).flat(m),
                          SideVertex::y(-2, m).flat(m), SideVertex::y(2, m).flat(m),
                          SideVertex::x(2, m).flat(m)};
        DifferenceCensus census = difference_census(f.as_two_factor().edges(), m);
        DifferenceClass dup = DifferenceClass::mixed(0);
        require(census.is_starter_shape(m, &dup) && dup == DifferenceClass::mixed(0),
                "m=5 starter census");
        f.duplicated = dup;
        return f;
    }

    if (m == 9) {
        PathSegment p = make_segment(walk_p_1mod4(m), expected_p_1mod4(m));
        PathSegment qprime =
            make_segment(walk_qprime_1mod4(m), pure_range(DiffKind::PureRight, 1, 4));
        auto pprime_expected = mixed_set({2, 3, 4, -2}, m);
        pprime_expected.push_back(DifferenceClass::pure_left(2));
        PathSegment pprime = explicit_segment(
            {SideVertex::y(1, m), SideVertex::x(-1, m), SideVertex::y(2, m),
             SideVertex::x(-2, m), SideVertex::x(-4, m), SideVertex::y(3, m)},
            std::move(pprime_expected));
        PathSegment q = explicit_segment({SideVertex::x(-3, m), SideVertex::x(3, m),
                                          SideVertex::x(4, m), SideVertex::x(0, m)},
                                         {DifferenceClass::pure_left(1),
                                          DifferenceClass::pure_left(3),
                                          DifferenceClass::pure_left(4)});
        return assemble(m, p, q, pprime, qprime, /*cprime_starts_with_qprime=*/true,
                        DifferenceClass::mixed(m - 2));
    }

    if (m == 11) {
        StarterPaths g;
        g.p = make_segment(walk_p_3mod4(m), expected_p_3mod4(m));
        g.q = make_segment(walk_q_3mod4(m), pure_range(DiffKind::PureLeft, 1, 5));
        PathSegment pprime = explicit_segment(
            {SideVertex::y(1, m), SideVertex::x(-1, m), SideVertex::y(2, m),
             SideVertex::x(-2, m), SideVertex::y(4, m), SideVertex::x(3, m),
             SideVertex::y(5, m)},
            mixed_set({2, 3, 4, -5, 1, 2}, m));
        PathSegment qprime = explicit_segment(
            {SideVertex::y(5, m), SideVertex::y(-4, m), SideVertex::y(-5, m),
             SideVertex::y(3, m), SideVertex::y(-3, m), SideVertex::y(1, m)},
            pure_range(DiffKind::PureRight, 1, 5));
        return assemble(m, g.p, g.q, pprime, qprime, /*cprime_starts_with_qprime=*/false,
                        DifferenceClass::mixed(2));
    }

    if (m % 4 == 3) {
        StarterPaths paths = build_paths_3mod4(m);
        return assemble(m, paths.p, paths.q, paths.p_prime, paths.q_prime,
                        /*cprime_starts_with_qprime=*/false, DifferenceClass::mixed(0));
    }
    StarterPaths paths = build_paths_1mod4(m);
    return assemble(m, paths.p, paths.q, paths.p_prime, paths.q_prime,
                    /*cprime_starts_with_qprime=*/true, DifferenceClass::mixed(m - 1));
}

FactorizationCertificate factorize_k2m_plus_i(int m) {
    StarterFactor starter = build_starter(m);
    FactorizationCertificate cert;
    cert.spec = ProblemSpec::kn_plus_i_uniform(2 * m, m);
    cert.factors = orbit_expand(starter.as_two_factor(), m);
    int d0 = starter.duplicated.value;
    for (int i = 0; i < m; ++i)
        cert.special_matching.push_back(
            make_edge(i, SideVertex::y(i + d0, m).flat(m)));
    return cert;
}

} // namespace opplus
