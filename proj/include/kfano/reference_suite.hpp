#pragma once

#include "kfano/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kfano {

struct SuiteCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteSummary {
    std::vector<SuiteCheck> checks;
    int passed = 0;
    int failed = 0;

    bool all_pass() const { return failed == 0; }
};

struct SuiteOptions {
    /// Replaces c = 2/9 in every pair-dependent check (betas, valuations,
    /// Futaki, the A2 pipeline run). A perturbed value makes the vanishing
    /// checks fail; the summary then reports the mismatches. Diagnostic knob.
    std::optional<Rational> c_a2_override;
};

/// Recomputes every reference constant through the public engine and compares
/// exactly. All checks pass on the default options.
SuiteSummary run_reference_suite(const SuiteOptions& options = {});

std::string suite_text(const SuiteSummary& summary);
std::string suite_json(const SuiteSummary& summary);

}  // namespace kfano
