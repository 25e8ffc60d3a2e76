#pragma once

#include "kfano/homog_poly.hpp"
#include "kfano/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kfano {

/// One named exact value together with the anchor it reproduces.
struct Computation {
    std::string name;
    Rational value;
    std::string anchor;

    friend bool operator==(const Computation&, const Computation&) = default;
};

/// A certification condition and its outcome: "pass", "fail", "assumed"
/// (recorded input data, not verified here), or "discrepancy-noted"
/// (a presentational inconsistency that does not affect certification).
struct ChecklistItem {
    std::string condition;
    std::string status;

    friend bool operator==(const ChecklistItem&, const ChecklistItem&) = default;
};

/// One step of the deduction chain. "computed" steps are established by this
/// tool's arithmetic; "cited" steps are recorded reductions with their
/// citation keys, never re-verified here.
struct DeductionStep {
    std::string step;
    std::string kind;  // "computed" | "cited"
    std::string citation;

    friend bool operator==(const DeductionStep&, const DeductionStep&) = default;
};

struct CertificationReport {
    std::string input_surface;  // canonical form of the parsed quartic
    std::string subfamily;      // "A1" | "A2" | "DEGENERATE"
    std::array<long, 4> degeneration_weights{0, 0, 0, 0};
    std::string degeneration_limit;  // canonical form of the 1-PS limit
    Rational chosen_c;
    std::vector<Computation> computations;
    std::vector<ChecklistItem> checklist;
    std::vector<DeductionStep> deductions;
    std::string verdict;  // K_SEMISTABLE_PAIR_CERTIFIED | NOT_APPLICABLE | DEGENERATE_INPUT

    friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

struct CertifyOptions {
    /// Replaces the subfamily default coefficient (3/17 or 2/9). The default
    /// values certify; overriding explores where the checks fail.
    std::optional<Rational> c_override;
    /// Sample parameter s for the generic member of the tangent family T_s.
    long generic_s = 2;
};

/// Parses the branch quartic, classifies the double point at p, runs the
/// subfamily's invariant suite on the 1-PS limit, and assembles the report.
/// Parse and normalization errors propagate; a degenerate classification is a
/// DEGENERATE_INPUT report, not an exception.
CertificationReport certify(std::string_view surface_text, const CertifyOptions& options = {});

enum class ReportFormat { Json, Text };

/// Deterministic serialization; byte-identical across runs for equal reports.
std::string emit_report(const CertificationReport& report, ReportFormat format);

/// Inverse of emit_report(·, Json) on the report data model.
CertificationReport report_from_json(const std::string& text);

}  // namespace kfano
