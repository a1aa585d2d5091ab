#include "opplus/equipartite.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "opplus/verifier.hpp"

namespace opplus {

Feasibility liu_conditions(const EquipartiteSpec& spec) {
    const int a = spec.alpha, k = spec.part_size, l = spec.cycle_len;
    if (a < 2 || k < 1)
        throw std::invalid_argument("equipartite spec needs alpha >= 2 and k >= 1");
    if (l < 3 || l > a * k)
        throw std::invalid_argument("cycle length must satisfy 3 <= ell <= alpha*k");

    Feasibility f;
    if ((a * k) % l != 0) {
        f.failed_condition = 1;
        return f;
    }
    // bipartite parity before degree parity: both can fail at once and the
    // odd-cycle-in-bipartite reason is the sharper one to report
    if (a == 2 && l % 2 != 0) {
        f.failed_condition = 3;
        return f;
    }
    if ((k * (a - 1)) % 2 != 0) {
        f.failed_condition = 2;
        return f;
    }
    const std::set<std::tuple<int, int, int>> exceptions{
        {2, 3, 3}, {6, 3, 3}, {2, 6, 3}, {6, 2, 6}}; // (k, alpha, ell)
    if (exceptions.count({k, a, l})) {
        f.failed_condition = 4;
        return f;
    }
    f.verdict = Feasibility::Verdict::Exists;
    return f;
}

namespace {

std::vector<int> equipartite_target(const ProblemSpec& spec) {
    const int n = spec.n;
    std::vector<int> target(n * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (spec.part_of(u) != spec.part_of(v))
                target[u * n + v] = 1;
    return target;
}

FactorizationCertificate make_cert(const EquipartiteSpec& spec,
                                   std::vector<TwoFactor> factors) {
    FactorizationCertificate cert;
    cert.spec = spec.problem();
    cert.factors = std::move(factors);
    return cert;
}

// ---- rotational starter search for alpha = 3 -------------------------------
//
// Label the 3k vertices as Z_{3k} with parts the residue classes mod 3; the
// shift-by-3 rotation is then a part-preserving automorphism with k cosets.
// A starter C_ell-factor containing exactly one edge per (canonical
// difference, tail residue) slot tiles the whole edge set under that
// rotation. The block-layout certificate is obtained by relabelling
// v -> (v mod 3)*k + v/3 at the end.
struct RotationalSearch {
    int k, ell, n;
    std::uint64_t max_steps;
    std::uint64_t attempt_cap = 0;
    std::uint64_t steps = 0;
    std::mt19937_64 rng;

    std::vector<char> used;
    std::vector<char> slot_used; // (d, tail residue) -> taken
    std::vector<Cycle> cycles;

    RotationalSearch(int k_, int ell_, const SearchBudget& budget)
        : k(k_), ell(ell_), n(3 * k_), max_steps(budget.max_steps), rng(budget.seed) {}

    bool slot(int u, int v, int* out) const {
        int d = (v - u) % n;
        if (d < 0)
            d += n;
        int tail = u;
        if (2 * d > n) {
            d = n - d;
            tail = v;
        }
        if (d % 3 == 0 || 2 * d == n)
            return false; // same part, or the half-difference (never cross-part here)
        *out = d * 3 + tail % 3;
        return true;
    }

    bool extend_cycle(Cycle& c, int start) {
        if (++steps > attempt_cap)
            return false;
        if ((int)c.size() == ell) {
            int s;
            if (!slot(c.back(), start, &s) || slot_used[s])
                return false;
            slot_used[s] = 1;
            cycles.push_back(c);
            bool ok = place_next_cycle();
            if (!ok) {
                cycles.pop_back();
                slot_used[s] = 0;
            }
            return ok;
        }
        int cur = c.back();
        std::vector<int> cands;
        for (int w = 0; w < n; ++w) {
            int s;
            if (!used[w] && slot(cur, w, &s) && !slot_used[s])
                cands.push_back(w);
        }
        std::shuffle(cands.begin(), cands.end(), rng);
        for (int w : cands) {
            int s;
            slot(cur, w, &s);
            slot_used[s] = 1;
            used[w] = 1;
            c.push_back(w);
            if (extend_cycle(c, start))
                return true;
            c.pop_back();
            used[w] = 0;
            slot_used[s] = 0;
            if (steps > attempt_cap)
                return false;
        }
        return false;
    }

    bool place_next_cycle() {
        int start = 0;
        while (start < n && used[start])
            ++start;
        if (start == n)
            return true;
        used[start] = 1;
        Cycle c{start};
        bool ok = extend_cycle(c, start);
        if (!ok)
            used[start] = 0;
        return ok;
    }

    std::optional<TwoFactor> find_starter() {
        // Restart the randomized DFS rather than letting one attempt sink
        // the whole budget into a bad subtree.
        const std::uint64_t per_attempt = 60'000;
        while (steps < max_steps) {
            attempt_cap = std::min(steps + per_attempt, max_steps);
            used.assign(n, 0);
            slot_used.assign(3 * (n / 2 + 1), 0);
            cycles.clear();
            if (place_next_cycle())
                return TwoFactor{cycles};
        }
        return std::nullopt;
    }
};

std::optional<std::vector<TwoFactor>> rotational_factorization(int k, int ell,
                                                               const SearchBudget& budget,
                                                               std::uint64_t* steps) {
    RotationalSearch search(k, ell, budget);
    auto starter = search.find_starter();
    *steps += search.steps;
    if (!starter)
        return std::nullopt;
    const int n = 3 * k;
    auto relabel = [&](int v) { return (v % 3) * k + v / 3; };
    std::vector<TwoFactor> factors;
    for (int j = 0; j < k; ++j) {
        TwoFactor f;
        for (const Cycle& c : starter->cycles) {
            Cycle rc;
            for (int v : c)
                rc.push_back(relabel((v + 3 * j) % n));
            f.cycles.push_back(std::move(rc));
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

} // namespace

ProviderResult find_equipartite_factorization(const EquipartiteSpec& spec,
                                              const SearchBudget& budget) {
    ProviderResult out;
    if (!liu_conditions(spec).exists()) {
        out.status = ProviderResult::Status::Infeasible;
        return out;
    }

    const ProblemSpec pspec = spec.problem();
    auto accept = [&](std::vector<TwoFactor> factors) {
        FactorizationCertificate cert = make_cert(spec, std::move(factors));
        VerificationReport report = verify_factorization(cert);
        if (!report.accepted)
            return false;
        out.status = ProviderResult::Status::Found;
        out.cert = std::move(cert);
        return true;
    };

    if (spec.n() <= 12) {
        detail::DecomposeProblem pb;
        pb.n = spec.n();
        pb.lengths = pspec.lengths;
        pb.target = equipartite_target(pspec);
        pb.factor_count = pspec.factor_count_required();
        auto res = detail::exhaustive_decompose(pb, budget.max_steps);
        if (res.factors && accept(std::move(*res.factors)))
            return out;
        return out; // Timeout; Liu already ruled existence, so never NotExists
    }

    std::uint64_t steps = 0;
    if (spec.alpha == 3) {
        SearchBudget rot = budget;
        rot.max_steps = std::max<std::uint64_t>(budget.max_steps / 4, 200'000);
        auto factors = rotational_factorization(spec.part_size, spec.cycle_len, rot, &steps);
        if (factors && accept(std::move(*factors)))
            return out;
    }

    detail::DecomposeProblem pb;
    pb.n = spec.n();
    pb.lengths = pspec.lengths;
    pb.target = equipartite_target(pspec);
    pb.factor_count = pspec.factor_count_required();
    SearchBudget rest = budget;
    rest.max_steps = budget.max_steps > steps ? budget.max_steps - steps : 0;
    auto res = detail::hillclimb_decompose(pb, rest);
    if (res.factors)
        accept(std::move(*res.factors));
    return out;
}

// -------------------------------------------------------------------- cache

CertificateCache::CertificateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path CertificateCache::entry_path(const EquipartiteSpec& spec) const {
    std::ostringstream name;
    name << "eq_a" << spec.alpha << "_k" << spec.part_size << "_l" << spec.cycle_len
         << ".cert";
    return dir_ / name.str();
}

std::optional<FactorizationCertificate> CertificateCache::lookup(const EquipartiteSpec& spec,
                                                                 std::string* note) {
    namespace fs = std::filesystem;
    fs::path path = entry_path(spec);
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        if (note)
            *note = "miss";
        return std::nullopt;
    }

    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cache entry unreadable: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("cache read failed: " + path.string());

    auto evict = [&](const std::string& why) {
        fs::remove(path, ec);
        if (note)
            *note = "evicted " + path.string() + ": " + why;
        return std::nullopt;
    };

    FactorizationCertificate cert;
    try {
        cert = parse_certificate(buf.str());
    } catch (const CertificateParseError& e) {
        return evict(std::string("parse error: ") + e.what());
    }

    ProblemSpec want = spec.problem();
    if (cert.spec.variant != Variant::Equipartite || cert.spec.alpha != want.alpha ||
        cert.spec.part_size != want.part_size || cert.spec.n != want.n)
        return evict("entry is for a different spec");
    cert.spec = want; // pins the cycle length the key demands
    VerificationReport report = verify_factorization(cert);
    if (!report.accepted)
        return evict("failed verification: " + report.to_text());
    return cert;
}

void CertificateCache::store(const EquipartiteSpec& spec, const FactorizationCertificate& cert) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw std::runtime_error("cannot create cache dir: " + dir_.string());
    write_certificate_file(entry_path(spec).string(), cert);
}

} // namespace opplus
