#include "opplus/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "opplus/verifier.hpp"

namespace opplus {

// ---------------------------------------------------------------- obstruction

ObstructionReport obstruction_4m(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("obstruction_4m requires odd m >= 3");
    ObstructionReport r;
    r.m = m;
    // Two-sided labelling of K_{4m}+I over Z_{2m}: pure differences 1..m on
    // each side (m is the half-difference), mixed differences 0..2m-1.
    for (int d = 1; d <= m; ++d) {
        if (d % 2 != 0) {
            ++r.odd_pure_left;
            ++r.odd_pure_right;
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (d % 2 != 0)
            ++r.odd_mixed;
    r.total_odd = r.odd_pure_left + r.odd_pure_right + r.odd_mixed;
    // Pure difference m sits in an orbit of length m, so those edges must be
    // the duplicated 1-factor; no freedom of choice remains.
    r.duplicated_factor_forced = true;
    r.rotational_starter_impossible = r.total_odd % 2 == 1;
    return r;
}

std::string ObstructionReport::to_text() const {
    std::ostringstream out;
    out << "rotational starter obstruction for n = 4m, m = " << m << " (labelling over Z_"
        << 2 * m << ")\n";
    out << "  odd pure left differences:  " << odd_pure_left << " of 1.." << m << "\n";
    out << "  odd pure right differences: " << odd_pure_right << " of 1.." << m << "\n";
    out << "  odd mixed differences:      " << odd_mixed << " of 0.." << 2 * m - 1 << "\n";
    out << "  total odd: " << total_odd << " (= 2m+1)\n";
    out << "  duplicated 1-factor forced: " << (duplicated_factor_forced ? "yes" : "no")
        << " (half-difference orbits have length m)\n";
    if (rotational_starter_impossible)
        out << "  conclusion: every cycle uses an even number of odd differences, but the\n"
               "  starter would have to use an odd total; no rotational starter exists\n";
    return out.str();
}

// ------------------------------------------------------------ shared plumbing

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at{};
    bool active = false;

    static Deadline from_seconds(double s) {
        Deadline d;
        if (s > 0) {
            d.active = true;
            d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(s));
        }
        return d;
    }
    bool passed() const { return active && Clock::now() >= at; }
};

void check_lengths(int n, const std::vector<int>& lengths) {
    if (lengths.empty())
        throw std::invalid_argument("cycle lengths must be given");
    long sum = std::accumulate(lengths.begin(), lengths.end(), 0L);
    if (sum != n)
        throw std::invalid_argument("cycle lengths must sum to n");
    if (*std::min_element(lengths.begin(), lengths.end()) < 3)
        throw std::invalid_argument("cycle lengths must be >= 3");
}

bool is_matching_on(const std::vector<Edge>& pairs, int n) {
    std::vector<char> hit(n, 0);
    if ((int)pairs.size() != n / 2)
        return false;
    for (Edge e : pairs) {
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n ||
            e.first == e.second || hit[e.first] || hit[e.second])
            return false;
        hit[e.first] = hit[e.second] = 1;
    }
    return true;
}

FactorizationCertificate checked(FactorizationCertificate cert) {
    VerificationReport report = verify_factorization(cert);
    if (!report.accepted)
        throw std::logic_error("search produced a certificate the verifier rejects:\n" +
                               report.to_text());
    return cert;
}

} // namespace

namespace detail {

std::vector<std::vector<Edge>> all_perfect_matchings(int n) {
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> cur;
    std::vector<char> used(n, 0);
    // pair the least unmatched vertex with every larger unmatched vertex
    auto rec = [&](auto&& self) -> void {
        int u = 0;
        while (u < n && used[u])
            ++u;
        if (u == n) {
            out.push_back(cur);
            return;
        }
        used[u] = 1;
        for (int v = u + 1; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            cur.push_back({u, v});
            self(self);
            cur.pop_back();
            used[v] = 0;
        }
        used[u] = 0;
    };
    if (n % 2 == 0 && n > 0)
        rec(rec);
    return out;
}

// ----------------------------------------------------------------- exhaustive

namespace {

// Factors are compared by the encoding [len, v0, v1, ...] per cycle, cycles
// in least-vertex order; chained factors must strictly increase, which gives
// every unordered factor set exactly one enumeration order (the least factor
// is generated first).
struct ExhaustiveCtx {
    const DecomposeProblem* pb = nullptr;
    int n = 0;
    std::uint64_t max_steps = 0;
    std::uint64_t steps = 0;
    bool aborted = false;

    std::vector<int> rem; // upper-triangular multiplicities
    std::vector<char> used;
    std::vector<Cycle> cur_cycles;
    std::vector<int> cur_encoding;
    std::vector<int> cur_lengths; // remaining lengths of the factor being built

    std::vector<TwoFactor> chosen;
    std::vector<std::vector<int>> encodings;
    std::optional<std::vector<TwoFactor>> result;

    int& rem_at(int u, int v) {
        return u < v ? rem[u * n + v] : rem[v * n + u];
    }
    bool step() {
        if (++steps > max_steps) {
            aborted = true;
            return false;
        }
        return true;
    }
};

bool dfs_chain(ExhaustiveCtx& ctx);

// Extends the cycle currently being built; `start` is its fixed least vertex.
bool dfs_cycle(ExhaustiveCtx& ctx, Cycle& path, int start, int want_len) {
    if (ctx.aborted)
        return false;
    if (!ctx.step())
        return false;

    if ((int)path.size() == want_len) {
        int closing = path.back();
        if (ctx.rem_at(closing, start) == 0)
            return false;
        if (path[1] > path.back()) // reflection canonicality
            return false;
        --ctx.rem_at(closing, start);
        ctx.cur_cycles.push_back(path);
        ctx.cur_encoding.push_back(want_len);
        ctx.cur_encoding.insert(ctx.cur_encoding.end(), path.begin(), path.end());

        bool stop = dfs_chain(ctx);

        ctx.cur_encoding.resize(ctx.cur_encoding.size() - want_len - 1);
        ctx.cur_cycles.pop_back();
        ++ctx.rem_at(closing, start);
        return stop;
    }

    int cur = path.back();
    for (int w = 0; w < ctx.n; ++w) {
        if (ctx.used[w] || ctx.rem_at(cur, w) == 0)
            continue;
        --ctx.rem_at(cur, w);
        ctx.used[w] = 1;
        path.push_back(w);
        bool stop = dfs_cycle(ctx, path, start, want_len);
        path.pop_back();
        ctx.used[w] = 0;
        ++ctx.rem_at(cur, w);
        if (stop || ctx.aborted)
            return stop;
    }
    return false;
}

// Continues the current factor (next cycle) or, when complete, advances the
// chain of factors.
bool dfs_chain(ExhaustiveCtx& ctx) {
    if (ctx.aborted)
        return false;

    int start = 0;
    while (start < ctx.n && ctx.used[start])
        ++start;

    if (start < ctx.n) { // factor incomplete: open the next cycle at `start`
        int prev_len = 0;
        for (std::size_t li = 0; li < ctx.cur_lengths.size(); ++li) {
            int len = ctx.cur_lengths[li];
            if (len == prev_len)
                continue;
            prev_len = len;
            ctx.cur_lengths.erase(ctx.cur_lengths.begin() + li);
            ctx.used[start] = 1;
            Cycle path{start};
            bool stop = dfs_cycle(ctx, path, start, len);
            ctx.used[start] = 0;
            ctx.cur_lengths.insert(ctx.cur_lengths.begin() + li, len);
            if (stop || ctx.aborted)
                return stop;
        }
        return false;
    }

    // factor complete: enforce the ascending chain
    if (!ctx.encodings.empty() && !(ctx.cur_encoding > ctx.encodings.back()))
        return false;

    ctx.chosen.push_back(TwoFactor{ctx.cur_cycles});
    ctx.encodings.push_back(ctx.cur_encoding);

    bool stop = false;
    if ((int)ctx.chosen.size() == ctx.pb->factor_count) {
        ctx.result = ctx.chosen;
        stop = true;
    } else {
        // an edge needed more often than there are factors left is a dead end
        int left = ctx.pb->factor_count - (int)ctx.chosen.size();
        bool feasible = true;
        for (int u = 0; u < ctx.n && feasible; ++u)
            for (int v = u + 1; v < ctx.n; ++v)
                if (ctx.rem[u * ctx.n + v] > left) {
                    feasible = false;
                    break;
                }
        if (feasible) {
            std::vector<Cycle> saved_cycles;
            std::vector<int> saved_encoding;
            std::swap(saved_cycles, ctx.cur_cycles);
            std::swap(saved_encoding, ctx.cur_encoding);
            stop = dfs_chain(ctx);
            std::swap(saved_cycles, ctx.cur_cycles);
            std::swap(saved_encoding, ctx.cur_encoding);
        }
    }

    ctx.encodings.pop_back();
    ctx.chosen.pop_back();
    return stop;
}

} // namespace

DecomposeResult exhaustive_decompose(const DecomposeProblem& problem, std::uint64_t max_steps) {
    ExhaustiveCtx ctx;
    ctx.pb = &problem;
    ctx.n = problem.n;
    ctx.max_steps = max_steps;
    ctx.rem = problem.target;
    ctx.used.assign(problem.n, 0);
    ctx.cur_lengths = problem.lengths;
    std::sort(ctx.cur_lengths.begin(), ctx.cur_lengths.end());

    dfs_chain(ctx);

    DecomposeResult res;
    res.factors = ctx.result;
    res.exhausted = !ctx.aborted;
    res.steps = ctx.steps;
    return res;
}

// ----------------------------------------------------------------- hill climb

namespace {

// Conflict-minimizing local search over complete factor assignments.
// Score = sum over pairs of |multiplicity - target|; moves are in-cycle
// segment reversals, vertex swaps between cycles of one factor, and whole
// factor resampling; plateaus trigger restarts.
struct HillClimber {
    const DecomposeProblem& pb;
    int n;
    std::mt19937_64 rng;
    std::uint64_t max_steps;
    std::uint64_t steps = 0;
    Deadline deadline;

    std::vector<TwoFactor> factors;
    std::vector<int> mult;
    long score = 0;

    HillClimber(const DecomposeProblem& problem, const SearchBudget& budget)
        : pb(problem), n(problem.n), rng(budget.seed), max_steps(budget.max_steps),
          deadline(Deadline::from_seconds(budget.max_seconds)) {}

    int idx(int u, int v) const { return u < v ? u * n + v : v * n + u; }
    int target(int u, int v) const { return pb.target[idx(u, v)]; }
    bool allowed(int u, int v) const { return target(u, v) > 0; }

    bool out_of_budget() {
        if (steps > max_steps)
            return true;
        if ((steps & 1023) == 0 && deadline.passed())
            return true;
        return false;
    }

    void apply_edge(int u, int v, int delta) {
        int& m = mult[idx(u, v)];
        int t = target(u, v);
        score -= std::abs(m - t);
        m += delta;
        score += std::abs(m - t);
    }

    void apply_factor(const TwoFactor& f, int delta) {
        for (const Cycle& c : f.cycles)
            for (std::size_t i = 0; i < c.size(); ++i)
                apply_edge(c[i], c[(i + 1) % c.size()], delta);
    }

    int rand_below(int k) { return (int)(rng() % (std::uint64_t)k); }

    // One random spanning factor with the prescribed lengths; candidate
    // edges are weighted by how much coverage they still need under `bias`.
    std::optional<TwoFactor> sample_factor(const std::vector<int>& bias, int tries) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int attempt = 0; attempt < tries; ++attempt) {
            ++steps;
            std::vector<char> used(n, 0);
            TwoFactor f;
            bool ok = true;
            std::shuffle(order.begin(), order.end(), rng);
            std::size_t scan = 0;
            for (int len : pb.lengths) {
                while (scan < order.size() && used[order[scan]])
                    ++scan;
                if (scan == order.size()) {
                    ok = false;
                    break;
                }
                int start = order[scan];
                Cycle c{start};
                used[start] = 1;
                for (int k = 1; k < len && ok; ++k) {
                    int cur = c.back();
                    long total = 0;
                    static thread_local std::vector<std::pair<int, long>> cand;
                    cand.clear();
                    for (int w = 0; w < n; ++w) {
                        if (used[w] || !allowed(cur, w))
                            continue;
                        if (k == len - 1 && !allowed(w, start))
                            continue;
                        int b = bias[idx(cur, w)];
                        long wt = 1 + (b > 0 ? 16L * b : 0);
                        if (k == len - 1) {
                            int b2 = bias[idx(w, start)];
                            wt += (b2 > 0 ? 16L * b2 : 0);
                        }
                        cand.emplace_back(w, wt);
                        total += wt;
                    }
                    if (cand.empty()) {
                        ok = false;
                        break;
                    }
                    long pick = (long)(rng() % (std::uint64_t)total);
                    int w = cand.back().first;
                    for (const auto& [v, wt] : cand) {
                        if (pick < wt) {
                            w = v;
                            break;
                        }
                        pick -= wt;
                    }
                    c.push_back(w);
                    used[w] = 1;
                }
                if (!ok)
                    break;
                f.cycles.push_back(std::move(c));
            }
            if (ok)
                return f;
        }
        return std::nullopt;
    }

    bool init_state() {
        factors.clear();
        mult.assign(n * n, 0);
        score = 0;
        for (const int t : pb.target)
            score += t;
        std::vector<int> bias = pb.target;
        for (int j = 0; j < pb.factor_count; ++j) {
            auto f = sample_factor(bias, 60);
            if (!f)
                return false;
            apply_factor(*f, +1);
            for (Edge e : f->edges())
                --bias[idx(e.first, e.second)];
            factors.push_back(std::move(*f));
        }
        return true;
    }

    std::vector<std::pair<int, int>> conflicted_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (mult[u * n + v] > target(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    // Locates (factor, cycle, position) of an oriented occurrence of {u,v}.
    struct EdgeLoc {
        int factor = -1, cycle = -1, pos = -1;
    };
    std::vector<EdgeLoc> locate(int u, int v) const {
        std::vector<EdgeLoc> locs;
        for (int j = 0; j < (int)factors.size(); ++j) {
            const TwoFactor& f = factors[j];
            for (int ci = 0; ci < (int)f.cycles.size(); ++ci) {
                const Cycle& c = f.cycles[ci];
                for (int p = 0; p < (int)c.size(); ++p) {
                    int a = c[p], b = c[(p + 1) % c.size()];
                    if ((a == u && b == v) || (a == v && b == u))
                        locs.push_back({j, ci, p});
                }
            }
        }
        return locs;
    }

    // In-cycle segment reversal removing the cycle edge at position `pos`:
    // reversing c[a..b] with a = pos+1 drops edges (c[pos],c[a]) and
    // (c[b],c[b+1]) and adds (c[pos],c[b]) and (c[a],c[b+1]). Offsets are
    // kept in 2..L-2 so the four pairs are pairwise distinct and the delta
    // below is exact.
    bool try_reversal(int j, int ci, int pos, int samples) {
        Cycle& c = factors[j].cycles[ci];
        int L = (int)c.size();
        if (L < 4)
            return false;
        long best_delta = 1;
        int best_b = -1;
        int a = (pos + 1) % L;
        for (int s = 0; s < samples; ++s) {
            int off = 2 + rand_below(L - 3);
            int b = (a + off - 1) % L;
            int after = (b + 1) % L;
            int ra = c[pos], rb = c[a], rc = c[b], rd = c[after];
            if (!allowed(ra, rc) || !allowed(rb, rd))
                continue;
            long delta = 0;
            delta -= std::abs(mult[idx(ra, rb)] - target(ra, rb));
            delta += std::abs(mult[idx(ra, rb)] - 1 - target(ra, rb));
            delta -= std::abs(mult[idx(rc, rd)] - target(rc, rd));
            delta += std::abs(mult[idx(rc, rd)] - 1 - target(rc, rd));
            delta -= std::abs(mult[idx(ra, rc)] - target(ra, rc));
            delta += std::abs(mult[idx(ra, rc)] + 1 - target(ra, rc));
            delta -= std::abs(mult[idx(rb, rd)] - target(rb, rd));
            delta += std::abs(mult[idx(rb, rd)] + 1 - target(rb, rd));
            if (delta < best_delta) {
                best_delta = delta;
                best_b = b;
            }
        }
        if (best_b < 0)
            return false;
        int b = best_b;
        int after = (b + 1) % L;
        apply_edge(c[pos], c[a], -1);
        apply_edge(c[b], c[after], -1);
        apply_edge(c[pos], c[b], +1);
        apply_edge(c[a], c[after], +1);
        Cycle seg;
        for (int p = a;; p = (p + 1) % L) {
            seg.push_back(c[p]);
            if (p == b)
                break;
        }
        std::reverse(seg.begin(), seg.end());
        for (std::size_t k2 = 0; k2 < seg.size(); ++k2)
            c[(a + k2) % L] = seg[k2];
        return true;
    }

    // Swap two vertices between different cycles of factor j.
    bool try_vertex_swap(int j, int samples) {
        TwoFactor& f = factors[j];
        if (f.cycles.size() < 2)
            return false;
        long old_score = score;
        for (int s = 0; s < samples; ++s) {
            int c1 = rand_below((int)f.cycles.size());
            int c2 = rand_below((int)f.cycles.size());
            if (c1 == c2)
                continue;
            Cycle& A = f.cycles[c1];
            Cycle& B = f.cycles[c2];
            int p1 = rand_below((int)A.size());
            int p2 = rand_below((int)B.size());
            int u = A[p1], w = B[p2];
            int ua = A[(p1 + A.size() - 1) % A.size()], ub = A[(p1 + 1) % A.size()];
            int wa = B[(p2 + B.size() - 1) % B.size()], wb = B[(p2 + 1) % B.size()];
            if (!allowed(ua, w) || !allowed(w, ub) || !allowed(wa, u) || !allowed(u, wb))
                continue;
            apply_factor(f, -1);
            std::swap(A[p1], B[p2]);
            apply_factor(f, +1);
            if (score <= old_score)
                return true;
            apply_factor(f, -1);
            std::swap(A[p1], B[p2]);
            apply_factor(f, +1);
        }
        return false;
    }

    bool try_resample(int j) {
        std::vector<int> bias = pb.target;
        for (int q = 0; q < (int)factors.size(); ++q) {
            if (q == j)
                continue;
            for (Edge e : factors[q].edges())
                --bias[idx(e.first, e.second)];
        }
        long old_score = score;
        TwoFactor saved = factors[j];
        auto f = sample_factor(bias, 25);
        if (!f)
            return false;
        apply_factor(saved, -1);
        apply_factor(*f, +1);
        factors[j] = std::move(*f);
        if (score <= old_score)
            return true;
        // keep a worsening resample occasionally to escape local minima
        if (rng() % 100 < 5)
            return true;
        apply_factor(factors[j], -1);
        apply_factor(saved, +1);
        factors[j] = std::move(saved);
        return false;
    }

    std::optional<std::vector<TwoFactor>> run() {
        while (!out_of_budget()) {
            if (!init_state())
                continue;
            long best = score;
            int plateau = 0;
            const int plateau_limit = 300 + 60 * pb.factor_count;
            while (!out_of_budget() && plateau < plateau_limit) {
                ++steps;
                if (score == 0)
                    return factors;
                auto conflicts = conflicted_pairs();
                if (conflicts.empty()) {
                    // score > 0 with no overuse cannot happen (sums match)
                    break;
                }
                auto [u, v] = conflicts[rand_below((int)conflicts.size())];
                auto locs = locate(u, v);
                if (locs.empty())
                    break;
                EdgeLoc loc = locs[rand_below((int)locs.size())];
                int roll = rand_below(100);
                if (roll < 45)
                    try_reversal(loc.factor, loc.cycle, loc.pos, 14);
                else if (roll < 75)
                    try_vertex_swap(loc.factor, 14);
                else
                    try_resample(loc.factor);
                if (score < best) {
                    best = score;
                    plateau = 0;
                } else {
                    ++plateau;
                }
            }
            if (score == 0)
                return factors;
        }
        return std::nullopt;
    }
};

} // namespace

DecomposeResult hillclimb_decompose(const DecomposeProblem& problem, const SearchBudget& budget) {
    HillClimber climber(problem, budget);
    DecomposeResult res;
    res.factors = climber.run();
    res.exhausted = false;
    res.steps = climber.steps;
    return res;
}

} // namespace detail

// ------------------------------------------------------------------- searches

namespace {

std::vector<int> full_graph_target(int n, const std::vector<Edge>& special, int special_mult) {
    std::vector<int> target(n * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            target[u * n + v] = 1;
    for (Edge e : special)
        target[std::min(e.first, e.second) * n + std::max(e.first, e.second)] = special_mult;
    return target;
}

} // namespace

SearchResult search_op_plus(const ProblemSpec& spec, const SearchBudget& budget) {
    if (spec.variant != Variant::KnPlusI)
        throw std::invalid_argument("search_op_plus expects a KnPlusI spec");
    const int n = spec.n;
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("n must be even and >= 4");
    check_lengths(n, spec.lengths);

    SearchResult out;
    if (budget.mode == SearchMode::Exhaustive) {
        if (n > kExhaustiveCap)
            throw std::invalid_argument("Exhaustive mode is capped at n <= " +
                                        std::to_string(kExhaustiveCap));
        std::uint64_t left = budget.max_steps;
        for (const auto& matching : detail::all_perfect_matchings(n)) {
            detail::DecomposeProblem pb;
            pb.n = n;
            pb.lengths = spec.lengths;
            pb.target = full_graph_target(n, matching, 2);
            pb.factor_count = n / 2;
            auto res = detail::exhaustive_decompose(pb, left);
            out.steps += res.steps;
            left = left > res.steps ? left - res.steps : 0;
            if (res.factors) {
                FactorizationCertificate cert;
                cert.spec = spec;
                cert.special_matching = matching;
                cert.factors = *res.factors;
                out.status = SearchResult::Status::Found;
                out.cert = checked(std::move(cert));
                return out;
            }
            if (!res.exhausted) {
                out.status = SearchResult::Status::NotFound;
                return out;
            }
        }
        out.status = SearchResult::Status::ProvedNone;
        return out;
    }

    // Hill climb fixes the duplicated matching up front; any perfect matching
    // serves, since relabelling maps solutions across matchings.
    std::vector<Edge> matching;
    for (int i = 0; i < n / 2; ++i)
        matching.push_back({2 * i, 2 * i + 1});
    detail::DecomposeProblem pb;
    pb.n = n;
    pb.lengths = spec.lengths;
    pb.target = full_graph_target(n, matching, 2);
    pb.factor_count = n / 2;
    auto res = detail::hillclimb_decompose(pb, budget);
    out.steps = res.steps;
    if (res.factors) {
        FactorizationCertificate cert;
        cert.spec = spec;
        cert.special_matching = matching;
        cert.factors = *res.factors;
        out.status = SearchResult::Status::Found;
        out.cert = checked(std::move(cert));
    }
    return out;
}

SearchResult search_kn_minus_i(int n, const std::vector<int>& lengths,
                               const std::vector<Edge>& missing, const SearchBudget& budget) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("n must be even and >= 4");
    check_lengths(n, lengths);
    if (!is_matching_on(missing, n))
        throw std::invalid_argument("missing edges must form a perfect matching");

    detail::DecomposeProblem pb;
    pb.n = n;
    pb.lengths = lengths;
    std::sort(pb.lengths.begin(), pb.lengths.end());
    pb.target = full_graph_target(n, missing, 0);
    pb.factor_count = (n - 2) / 2;

    SearchResult out;
    detail::DecomposeResult res;
    if (budget.mode == SearchMode::Exhaustive) {
        if (n > kExhaustiveCap)
            throw std::invalid_argument("Exhaustive mode is capped at n <= " +
                                        std::to_string(kExhaustiveCap));
        res = detail::exhaustive_decompose(pb, budget.max_steps);
        if (!res.factors && res.exhausted) {
            out.status = SearchResult::Status::ProvedNone;
            out.steps = res.steps;
            return out;
        }
    } else {
        res = detail::hillclimb_decompose(pb, budget);
    }
    out.steps = res.steps;
    if (res.factors) {
        FactorizationCertificate cert;
        cert.spec = ProblemSpec::kn_minus_i(n, lengths);
        cert.special_matching = missing;
        cert.factors = *res.factors;
        out.status = SearchResult::Status::Found;
        out.cert = checked(std::move(cert));
    }
    return out;
}

} // namespace opplus
