#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opplus/certificate.hpp"

namespace opplus {

enum class SearchMode { Exhaustive, HillClimb };

struct SearchBudget {
    std::uint64_t max_steps = 50'000'000;
    double max_seconds = 0; // 0 = no wall-clock cap
    std::uint64_t seed = 1;
    SearchMode mode = SearchMode::HillClimb;
};

// Largest n for which Exhaustive mode (and hence a ProvedNone claim) is
// allowed for the K_n variants.
inline constexpr int kExhaustiveCap = 8;

struct SearchResult {
    enum class Status { Found, NotFound, ProvedNone };
    Status status = Status::NotFound;
    std::optional<FactorizationCertificate> cert;
    std::uint64_t steps = 0;

    bool found() const { return status == Status::Found; }
};

// Parity obstruction for a rotational starter on K_{4m}+I under the
// Z_{2m} two-sided labelling: counts of odd difference values per class.
// total_odd = 2m+1 is odd, while any cycle of a starter factor would use an
// even number of odd differences, so no such starter exists.
struct ObstructionReport {
    int m = 0;
    int odd_pure_left = 0;
    int odd_pure_right = 0;
    int odd_mixed = 0;
    int total_odd = 0;
    bool duplicated_factor_forced = false; // the half-difference orbits force I
    bool rotational_starter_impossible = false;

    std::string to_text() const;
};

// m odd >= 3; counts by direct enumeration of the difference ranges.
ObstructionReport obstruction_4m(int m);

// Searches for a solution of OP+ on spec (variant KnPlusI). Exhaustive mode
// (n <= kExhaustiveCap only) enumerates every duplicated matching and every
// factor chain, so ProvedNone is a completed-enumeration claim. HillClimb
// returns Found or NotFound, never ProvedNone. Any returned certificate has
// already passed verify_factorization.
SearchResult search_op_plus(const ProblemSpec& spec, const SearchBudget& budget);

// Same machinery for K_n - I with a prescribed missing matching.
SearchResult search_kn_minus_i(int n, const std::vector<int>& lengths,
                               const std::vector<Edge>& missing, const SearchBudget& budget);

namespace detail {

// Shared decomposition engine: partition the edge multiset given by `target`
// (n*n symmetric multiplicity matrix) into `factor_count` 2-factors with the
// given cycle lengths. Used by the searches above and by the equipartite
// provider.
struct DecomposeProblem {
    int n = 0;
    std::vector<int> lengths;     // per-factor, sorted
    std::vector<int> target;      // n*n, symmetric, diagonal 0
    int factor_count = 0;
};

struct DecomposeResult {
    std::optional<std::vector<TwoFactor>> factors;
    bool exhausted = false; // enumeration ran to completion (exhaustive only)
    std::uint64_t steps = 0;
};

DecomposeResult exhaustive_decompose(const DecomposeProblem& problem, std::uint64_t max_steps);
DecomposeResult hillclimb_decompose(const DecomposeProblem& problem, const SearchBudget& budget);

// All perfect matchings of K_n in canonical order (least unmatched vertex
// pairs first). n <= kExhaustiveCap keeps this tiny.
std::vector<std::vector<Edge>> all_perfect_matchings(int n);

} // namespace detail

} // namespace opplus
