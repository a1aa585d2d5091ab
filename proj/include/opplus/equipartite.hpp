#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "opplus/certificate.hpp"
#include "opplus/search.hpp"

namespace opplus {

// C_ell-factorization request for the complete equipartite graph
// K_{alpha[k]}; parts are the consecutive blocks {0..k-1}, {k..2k-1}, ...
struct EquipartiteSpec {
    int alpha = 0;
    int part_size = 0;
    int cycle_len = 0;

    int n() const { return alpha * part_size; }
    ProblemSpec problem() const { return ProblemSpec::equipartite(alpha, part_size, cycle_len); }
};

struct Feasibility {
    enum class Verdict { Exists, NotExists };
    Verdict verdict = Verdict::NotExists;
    // 1..4 when NotExists: which condition failed (divisibility, parity,
    // bipartite odd length, exception list). 0 otherwise.
    int failed_condition = 0;

    bool exists() const { return verdict == Verdict::Exists; }
};

// Necessary and sufficient existence conditions (Liu's theorem) for a
// C_ell-factorization of K_{alpha[k]}. Throws std::invalid_argument when
// alpha < 2 or ell outside 3..alpha*k.
Feasibility liu_conditions(const EquipartiteSpec& spec);

struct ProviderResult {
    enum class Status { Found, Timeout, Infeasible };
    Status status = Status::Timeout;
    std::optional<FactorizationCertificate> cert;

    bool found() const { return status == Status::Found; }
};

// Search-backed provider: exhaustive for alpha*k <= 12, otherwise a
// rotational starter search (alpha = 3) falling back to hill-climbing.
// Timeout is a budget statement, never a nonexistence claim; every returned
// certificate has passed the verifier.
ProviderResult find_equipartite_factorization(const EquipartiteSpec& spec,
                                              const SearchBudget& budget);

// File-backed certificate store keyed by (alpha, k, ell). Entries are
// re-verified on load; corrupt or invalid files are evicted and reported
// through `note`. I/O failures throw std::runtime_error.
class CertificateCache {
public:
    explicit CertificateCache(std::filesystem::path dir);

    std::optional<FactorizationCertificate> lookup(const EquipartiteSpec& spec,
                                                   std::string* note = nullptr);
    void store(const EquipartiteSpec& spec, const FactorizationCertificate& cert);

    std::filesystem::path entry_path(const EquipartiteSpec& spec) const;

private:
    std::filesystem::path dir_;
};

} // namespace opplus
