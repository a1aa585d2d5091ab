#include "opplus/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace opplus {

namespace {

std::string edge_str(int u, int v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

std::string lengths_str(const std::vector<int>& lens) {
    std::string s = "{";
    for (std::size_t i = 0; i < lens.size(); ++i)
        s += (i ? "," : "") + std::to_string(lens[i]);
    return s + "}";
}

void check_spec(const ProblemSpec& spec) {
    if (spec.n <= 0)
        throw std::invalid_argument("spec: n must be positive");
    if (spec.variant != Variant::Equipartite && spec.n % 2 != 0)
        throw std::invalid_argument("spec: n must be even for K_n variants");
    if (spec.variant == Variant::Equipartite &&
        (spec.alpha < 2 || spec.part_size < 1 || spec.alpha * spec.part_size != spec.n))
        throw std::invalid_argument("spec: equipartite needs alpha >= 2 and n = alpha*k");
    if (!spec.lengths.empty()) {
        long sum = std::accumulate(spec.lengths.begin(), spec.lengths.end(), 0L);
        if (sum != spec.n)
            throw std::invalid_argument("spec: cycle lengths must sum to n");
        if (*std::min_element(spec.lengths.begin(), spec.lengths.end()) < 3)
            throw std::invalid_argument("spec: cycle lengths must be >= 3");
    }
}

// true iff `pairs` is a perfect matching on 0..n-1
bool is_perfect_matching(const std::vector<Edge>& pairs, int n) {
    if ((int)pairs.size() != n / 2)
        return false;
    std::vector<char> hit(n, 0);
    for (Edge e : pairs) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n ||
            e.first == e.second)
            return false;
        if (hit[e.first] || hit[e.second])
            return false;
        hit[e.first] = hit[e.second] = 1;
    }
    return true;
}

} // namespace

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::NotTwoRegular: return "NotTwoRegular";
    case ViolationKind::NotSpanning: return "NotSpanning";
    case ViolationKind::WrongCycleLengths: return "WrongCycleLengths";
    case ViolationKind::EdgeMultiplicity: return "EdgeMultiplicity";
    case ViolationKind::MatchingInvalid: return "MatchingInvalid";
    case ViolationKind::FactorCountWrong: return "FactorCountWrong";
    }
    return "?";
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << (accepted ? "ACCEPT" : "REJECT") << "\n";
    for (const Violation& v : violations)
        out << "  " << violation_kind_name(v.kind) << ": " << v.detail << "\n";
    return out.str();
}

std::vector<Violation> verify_two_factor(const TwoFactor& f, const ProblemSpec& spec) {
    std::vector<Violation> out;
    const int n = spec.n;

    std::vector<int> occur(n, 0);
    bool range_ok = true;
    for (const Cycle& c : f.cycles) {
        if (c.size() < 3)
            out.push_back({ViolationKind::NotTwoRegular,
                           "cycle of length " + std::to_string(c.size())});
        for (int v : c) {
            if (v < 0 || v >= n) {
                out.push_back({ViolationKind::NotSpanning,
                               "vertex " + std::to_string(v) + " outside 0.." +
                                   std::to_string(n - 1)});
                range_ok = false;
            } else {
                ++occur[v];
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (occur[v] == 0)
            out.push_back({ViolationKind::NotSpanning, "vertex " + std::to_string(v) +
                                                           " not covered"});
        else if (occur[v] > 1)
            out.push_back({ViolationKind::NotTwoRegular,
                           "vertex " + std::to_string(v) + " on " +
                               std::to_string(occur[v]) + " cycle positions"});
    }

    if (!spec.lengths.empty()) {
        std::vector<int> want = spec.lengths;
        std::sort(want.begin(), want.end());
        std::vector<int> got = f.cycle_lengths();
        if (got != want)
            out.push_back({ViolationKind::WrongCycleLengths,
                           "cycle lengths " + lengths_str(got) + ", required " +
                               lengths_str(want)});
    }

    if (spec.variant == Variant::Equipartite && range_ok) {
        for (Edge e : f.edges())
            if (spec.part_of(e.first) == spec.part_of(e.second))
                out.push_back({ViolationKind::EdgeMultiplicity,
                               "edge " + edge_str(e.first, e.second) + " inside part " +
                                   std::to_string(spec.part_of(e.first))});
    }
    return out;
}

VerificationReport verify_factorization(const FactorizationCertificate& cert) {
    check_spec(cert.spec);
    ProblemSpec spec = cert.spec;
    const int n = spec.n;
    VerificationReport report;

    // Lengths not prescribed: all factors must agree with the first.
    if (spec.lengths.empty() && !cert.factors.empty())
        spec.lengths = cert.factors.front().cycle_lengths();

    int required = spec.factor_count_required();
    if ((int)cert.factors.size() != required)
        report.violations.push_back(
            {ViolationKind::FactorCountWrong, std::to_string(cert.factors.size()) +
                                                  " factors, required " +
                                                  std::to_string(required)});

    for (std::size_t i = 0; i < cert.factors.size(); ++i)
        for (Violation v : verify_two_factor(cert.factors[i], spec)) {
            v.detail = "factor " + std::to_string(i) + ": " + v.detail;
            report.violations.push_back(std::move(v));
        }

    // Raw pair-multiplicity accounting; no difference arithmetic, no trust
    // in how the factors were built.
    std::vector<int> mult(n * n, 0);
    for (const TwoFactor& f : cert.factors)
        for (Edge e : f.edges())
            if (e.first >= 0 && e.second >= 0 && e.first < n && e.second < n)
                ++mult[e.first * n + e.second];

    std::vector<int> target(n * n, 0);
    switch (spec.variant) {
    case Variant::KnPlusI: {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                target[u * n + v] = 1;
        if (!is_perfect_matching(cert.special_matching, n)) {
            report.violations.push_back(
                {ViolationKind::MatchingInvalid,
                 "duplicated matching is not a perfect matching on 0.." +
                     std::to_string(n - 1)});
        } else {
            for (Edge e : cert.special_matching)
                target[e.first * n + e.second] = 2;
        }
        break;
    }
    case Variant::KnMinusI: {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                target[u * n + v] = 1;
        std::vector<Edge> missing = cert.special_matching;
        if (missing.empty()) {
            // Infer: the uncovered pairs must form a perfect matching.
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (mult[u * n + v] == 0)
                        missing.push_back({u, v});
        }
        if (!is_perfect_matching(missing, n)) {
            report.violations.push_back({ViolationKind::MatchingInvalid,
                                         "missing edges do not form a perfect matching"});
        } else {
            for (Edge e : missing)
                target[e.first * n + e.second] = 0;
        }
        break;
    }
    case Variant::Equipartite: {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (spec.part_of(u) != spec.part_of(v))
                    target[u * n + v] = 1;
        break;
    }
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mult[u * n + v] != target[u * n + v])
                report.violations.push_back(
                    {ViolationKind::EdgeMultiplicity,
                     "pair " + edge_str(u, v) + " found " + std::to_string(mult[u * n + v]) +
                         ", expected " + std::to_string(target[u * n + v])});

    report.accepted = report.violations.empty();
    return report;
}

} // namespace opplus
