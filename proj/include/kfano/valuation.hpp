#pragma once

#include "kfano/divisor.hpp"
#include "kfano/homog_poly.hpp"
#include "kfano/rational.hpp"

namespace kfano {

/// S_{(Y,cD)}(v) for a monomial valuation centered at p, via the toric
/// identity vol(-K_Y - t v) = 3! * vol(P_t) with P the (4,2) slab carrying
/// the weight functional: (1 - c) * (1/56) * 6 * integral of ell over P.
Rational s_invariant_valuation(const LogPairY& pair, const MonomialValuation& v);

/// A_{(Y,cD)}(v) = (w_x + w_y + w_z) - c * v(boundary). The blow-down to P^3
/// is an isomorphism at the generic point of the center, so the ambient log
/// discrepancy is the plain weight sum.
Rational a_invariant_valuation(const LogPairY& pair, const MonomialValuation& v);

/// beta = A - S.
Rational beta_valuation(const LogPairY& pair, const MonomialValuation& v);

/// Futaki character evaluated on the two basis one-parameter subgroups of the
/// maximal torus, via Fut(lambda) = beta(v_lambda).
struct FutakiReport {
    bool pass = false;       // both values exactly zero
    Rational beta_lambda0;   // v = (3,0,1)
    Rational beta_lambda1;   // v = (0,3,1)
};

/// Computes beta for both basis valuations directly. A nonzero value yields a
/// FAIL report rather than an exception.
FutakiReport futaki_vanishing_check(const LogPairY& pair);

}  // namespace kfano
