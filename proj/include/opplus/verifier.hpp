#pragma once

#include <string>
#include <vector>

#include "opplus/certificate.hpp"

namespace opplus {

enum class ViolationKind {
    NotTwoRegular,
    NotSpanning,
    WrongCycleLengths,
    EdgeMultiplicity,
    MatchingInvalid,
    FactorCountWrong,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct VerificationReport {
    bool accepted = false;
    std::vector<Violation> violations;

    std::string to_text() const;
};

const char* violation_kind_name(ViolationKind k);

// Empty result iff f is a spanning disjoint-cycle cover of 0..spec.n-1 whose
// cycle-length multiset matches spec.lengths (all violations are collected,
// never thrown). For Equipartite additionally flags edges inside a part.
std::vector<Violation> verify_two_factor(const TwoFactor& f, const ProblemSpec& spec);

// Full independent check: factor count, per-factor validity, and raw
// edge-multiplicity accounting over all factors. Trusts nothing about how
// the certificate was produced.
VerificationReport verify_factorization(const FactorizationCertificate& cert);

} // namespace opplus
