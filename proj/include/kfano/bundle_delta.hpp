#pragma once

#include "kfano/rational.hpp"

#include <optional>

namespace kfano {

/// Input of the stability-threshold formula for P(O + L) over a log Fano base
/// (V, Delta) of dimension n, where L ~ -r^{-1}(K_V + Delta), the boundary is
/// a*V_0 + b*V_infty (zero and infinity sections), and delta_base is the
/// stability threshold delta(V, Delta) of the base, supplied by the caller.
struct BundleDeltaInput {
    int n = 1;
    Rational r;
    Rational a;
    Rational b;
    Rational delta_base;

    /// Validates the hypotheses; throws std::domain_error naming the violated
    /// inequality. Requires 0 <= a < 1, 0 <= b < 1, r > 0, delta_base > 0,
    /// and r - (1 - a) >= 0 so the truncated cone has nonnegative inner radius.
    BundleDeltaInput(int n_in, Rational r_in, Rational a_in, Rational b_in,
                     Rational delta_base_in);
};

/// The three competing thresholds, their minimum, and the mean radius M.
struct DeltaBreakdown {
    Rational term_base;   // r * delta_base / M
    Rational term_zero;   // (1 - a) / (M - A)
    Rational term_infty;  // (1 - b) / (B - M)
    Rational delta;       // min of the three
    Rational mean_m;      // (n+1)/(n+2) * (B^{n+2} - A^{n+2}) / (B^{n+1} - A^{n+1})
};

/// Evaluates the bundle formula with A = r - (1-a), B = r + (1-b).
DeltaBreakdown delta_bundle(const BundleDeltaInput& input);

/// delta(P^2, c * conic) as recorded input data: 1 for 0 < c < 3/4, unknown
/// (nullopt) for 3/4 <= c < 1. Throws std::domain_error outside (0, 1).
std::optional<Rational> delta_conic_pair(const Rational& c);

/// Specialization to the family: n = 2, r = 3 - 2c, a = 0, b = 2c,
/// delta_base = delta_conic_pair(c). Asserts the closed forms
///   28(3-2c)/(45(2-2c)), 28/(17(2-2c)), 28(1-2c)/(11(2-2c))
/// against the generic formula before returning.
DeltaBreakdown family_a_terms(const Rational& c);

/// The unique c in (0, 1/2) where term_zero = term_infty, i.e. 11 = 17(1-2c);
/// verifies that all three terms equal 1 there. Returns 3/17.
Rational find_balanced_c();

/// The ratio M/A for the family shape B = 2A is constant in c. The published
/// form of this quantity is 15/7, while direct evaluation gives 45/28; the
/// check computes the ratio from the engine and records both values so the
/// report can flag the inconsistency.
struct MeanRatioCheck {
    Rational computed;   // 45/28
    Rational published;  // 15/7
    bool consistent = false;
};

MeanRatioCheck mean_ratio_check();

}  // namespace kfano
