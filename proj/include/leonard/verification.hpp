#ifndef LEONARD_VERIFICATION_HPP
#define LEONARD_VERIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "leonard/transition.hpp"

namespace leonard {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed_ids; // capped, for diagnostics
    std::string note;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string instance;
    std::vector<SuiteResult> suites;
    double total_seconds = 0.0;

    bool all_pass() const;
};

struct VerifyOptions {
    /// Subset of {"axioms","bases","split","d4","scalars","reductions",
    /// "transitions"}; empty means all, in that order.
    std::vector<std::string> suites;
    /// Repeat the scalar, reduction, and transition suites on all 8
    /// relatives.
    bool relatives = false;
    /// Explicit anchor seed (defaults to the standard-basis scan).
    std::optional<Vector> anchor_seed;
    /// Rerun with independently rescaled anchors and Gram form and require
    /// identical verdicts.
    bool rescale_check = false;
    /// Number of random (u,v,w) triples for the composition check.
    std::size_t composition_triples = 100;
    unsigned rng_seed = 12345;
};

const std::vector<std::string>& all_suite_names();

VerificationReport run_verification(const LeonardSystem& sys, const ParameterArray& pa,
                                    const VerifyOptions& opt = {});

} // namespace leonard

#endif
