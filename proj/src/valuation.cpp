#include "kfano/valuation.hpp"

#include "kfano/slab.hpp"

namespace kfano {

Rational s_invariant_valuation(const LogPairY& pair, const MonomialValuation& v) {
    SlabPolytope p(Rational(4), Rational(2), v.weights);
    return (Rational(1) - pair.c) * Rational(6, 56) * integral_linear_over_slab(p);
}

Rational a_invariant_valuation(const LogPairY& pair, const MonomialValuation& v) {
    return v.log_discrepancy() - pair.c * monomial_value(v, pair.boundary);
}

Rational beta_valuation(const LogPairY& pair, const MonomialValuation& v) {
    return a_invariant_valuation(pair, v) - s_invariant_valuation(pair, v);
}

FutakiReport futaki_vanishing_check(const LogPairY& pair) {
    Rational b0 = beta_valuation(pair, MonomialValuation(Rational(3), Rational(0), Rational(1)));
    Rational b1 = beta_valuation(pair, MonomialValuation(Rational(0), Rational(3), Rational(1)));
    FutakiReport report;
    report.pass = b0.is_zero() && b1.is_zero();
    report.beta_lambda0 = std::move(b0);
    report.beta_lambda1 = std::move(b1);
    return report;
}

}  // namespace kfano
