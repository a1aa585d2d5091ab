#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "opplus/certificate.hpp"
#include "opplus/search.hpp"

namespace opplus {

// Which established result settles the verdict.
enum class Authority {
    Divisibility,          // m must divide n
    TriplesClassification, // uniform length 3: solvable iff t even, t >= 6
    TwoTableStarter,       // n = 2m, m odd: rotational starter construction
    OddComposition,        // n = tm, t even >= 6, m odd: block composition
    EvenLengths,           // all cycle lengths even: lift of a K_n - I solution
    FourTablesOpen,        // n = 4m, m odd: conjectured, unresolved
    MixedParityUnsupported // variable lengths with odd entries: out of scope
};

const char* authority_name(Authority a);

struct Solvability {
    enum class Verdict { Solvable, Unsolvable, Open };
    Verdict verdict = Verdict::Open;
    Authority authority = Authority::Divisibility;
    int tables = 0; // t = n/m for uniform specs, else 0
};

// Existence verdict for OP+ (variant KnPlusI). Throws std::invalid_argument
// for odd n, lengths not summing to n, or lengths < 3.
Solvability decide_solvability(const ProblemSpec& spec);

// n = tm block composition: t/2 groups of 2m vertices each carry a shifted
// starter factorization whose j-th factors are merged across groups; the
// equipartite certificate for (alpha=t/2, k=2m, ell=m) supplies the rest.
// Throws std::invalid_argument on spec mismatch or an invalid eq_cert.
FactorizationCertificate compose_odd(int m, int t, const FactorizationCertificate& eq_cert);

// T = disjoint cycles on consecutive blocks, one per length; edges assigned
// alternately to I (even positions) and I'. All lengths must be even >= 4.
struct AlternatingFactor {
    TwoFactor factor;
    std::vector<Edge> matching_i;
    std::vector<Edge> matching_i_prime;
};

AlternatingFactor build_alternating_factor(const std::vector<int>& lengths);

// Lifts a (C_{m1},...)-factorization of K_n - I (missing matching exactly
// the alternation I) to an OP+ certificate: add the factor T, duplicate I'.
FactorizationCertificate even_lift(const std::vector<int>& lengths,
                                   const FactorizationCertificate& kn_minus_i_cert);

struct SolveOptions {
    SearchBudget budget;
    std::optional<FactorizationCertificate> provider_cert;
    std::filesystem::path cache_dir; // empty = no cache
};

struct SolveResult {
    enum class Status {
        Certificate,
        Unsolvable,
        Open,
        ConstructionUnsupported, // solvable, but the construction is out of scope
        Incomplete               // provider/search budget exhausted
    };
    Status status = Status::Incomplete;
    std::optional<FactorizationCertificate> cert;
    Authority authority = Authority::Divisibility;
    std::string note;
};

// Top-level dispatch: decide, then construct via starter, composition, or
// even lift. Every returned certificate has passed the verifier.
SolveResult solve(const ProblemSpec& spec, const SolveOptions& options);

} // namespace opplus
