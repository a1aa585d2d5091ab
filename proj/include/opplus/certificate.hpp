#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "opplus/factor.hpp"

namespace opplus {

// Which graph the 2-factorization is supposed to decompose.
enum class Variant {
    KnPlusI,     // K_n with one perfect matching duplicated
    KnMinusI,    // K_n with one perfect matching removed
    Equipartite, // complete equipartite K_{alpha[k]}
};

struct ProblemSpec {
    Variant variant = Variant::KnPlusI;
    int n = 0;
    // Cycle lengths required of every factor. Empty means "not prescribed"
    // (the verifier then requires all factors to agree with the first).
    std::vector<int> lengths;
    // Nonzero when the spec was posed as "uniform length m"; kept separately
    // so m not dividing n is representable (lengths stays empty then).
    int uniform_m = 0;
    // Equipartite only: alpha parts of part_size consecutive vertices.
    int alpha = 0;
    int part_size = 0;

    static ProblemSpec kn_plus_i(int n, std::vector<int> lengths);
    static ProblemSpec kn_plus_i_uniform(int n, int m);
    static ProblemSpec kn_minus_i(int n, std::vector<int> lengths);
    static ProblemSpec equipartite(int alpha, int part_size, int cycle_len);

    bool uniform() const;
    int factor_count_required() const;
    // Part index of a vertex (Equipartite only).
    int part_of(int v) const { return v / part_size; }
};

// The universal exchange object: a duplicated/missing matching plus an
// ordered list of 2-factors. `special_matching` holds the duplicated
// matching for KnPlusI, the missing matching for KnMinusI, and stays empty
// for Equipartite.
struct FactorizationCertificate {
    ProblemSpec spec;
    std::vector<Edge> special_matching;
    std::vector<TwoFactor> factors;
};

// line:0 means the error is not tied to a specific line.
class CertificateParseError : public std::runtime_error {
public:
    CertificateParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format, one certificate per file:
//   OPCERT v1 KN_PLUS_I n=10
//   DUP 0-5 1-6 2-7 3-8 4-9
//   FACTOR 0: (0 5 9 4 3) (1 6 2 8 7)
//   ...
// '#' lines are comments. Exporters emit canonical form (cycles least-first,
// toward the lesser neighbour, sorted by least vertex); the parser accepts
// any rotation/reflection/ordering and canonicalizes on load.
FactorizationCertificate parse_certificate(const std::string& text);
std::string export_certificate(const FactorizationCertificate& cert);

FactorizationCertificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const FactorizationCertificate& cert);

} // namespace opplus
