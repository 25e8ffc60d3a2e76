#include "kfano/divisor.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace kfano {

Rational cube(const DivisorClass& d) {
    return d.h.pow(3) + d.e.pow(3);
}

bool is_nef(const DivisorClass& d) {
    // d = s*(1,0) + u*(1,-1) with s, u >= 0.
    return d.e.sign() <= 0 && (d.h + d.e).sign() >= 0;
}

bool is_pseff(const DivisorClass& d) {
    // d = s*(1,-1) + u*(0,1) with s, u >= 0.
    return d.h.sign() >= 0 && (d.h + d.e).sign() >= 0;
}

std::optional<DivisorClass> zariski_positive_part(const DivisorClass& d) {
    if (!is_pseff(d))
        return std::nullopt;
    if (is_nef(d))
        return d;
    // Pseff but not nef forces e > 0; the negative part is e*E.
    return DivisorClass{d.h, 0};
}

Rational volume(const DivisorClass& d) {
    auto pos = zariski_positive_part(d);
    return pos ? cube(*pos) : Rational(0);
}

Rational pseff_threshold(const DivisorClass& f) {
    if (!is_pseff(f) || f == DivisorClass{0, 0})
        throw std::domain_error("pseff_threshold: F must be pseudoeffective and nonzero");
    // -K_Y - t*F = (4 - t*f.h, -2 - t*f.e) stays pseff while
    // 4 - t*f.h >= 0 and 2 - t*(f.h + f.e) >= 0.
    std::optional<Rational> tau;
    if (f.h.sign() > 0)
        tau = Rational(4) / f.h;
    Rational he = f.h + f.e;
    if (he.sign() > 0) {
        Rational wall = Rational(2) / he;
        if (!tau || wall < *tau)
            tau = wall;
    }
    // F pseff nonzero guarantees one of the two walls exists.
    return *tau;
}

PiecewisePoly vol_ray(const DivisorClass& f) {
    Rational tau = pseff_threshold(f);
    // h(t) = 4 - f.h*t, e(t) = -2 - f.e*t along the ray.
    UniPoly h_t = UniPoly::linear(4, -f.h);
    UniPoly e_t = UniPoly::linear(-2, -f.e);
    UniPoly with_e = h_t.pow(3) + e_t.pow(3);  // nef region, e(t) <= 0
    UniPoly without_e = h_t.pow(3);            // positive part (h, 0), e(t) > 0

    std::vector<Rational> breaks{0};
    std::vector<UniPoly> pieces;
    // e(t) changes sign at t* = 2 / (-f.e) when f.e < 0.
    std::optional<Rational> t_star;
    if (f.e.sign() < 0) {
        Rational cross = Rational(2) / (-f.e);
        if (Rational(0) < cross && cross < tau)
            t_star = cross;
    }
    if (t_star) {
        breaks.push_back(*t_star);
        pieces.push_back(with_e);
        pieces.push_back(without_e);
    } else {
        // e(0) = -2, so without a crossing the ray is nef up to tau.
        pieces.push_back(with_e);
    }
    breaks.push_back(tau);
    PiecewisePoly result(std::move(breaks), std::move(pieces));
    if (!result.is_continuous())
        throw std::logic_error("vol_ray: volume function discontinuous");
    return result;
}

Rational s_invariant_of_y(const DivisorClass& f) {
    PiecewisePoly v = vol_ray(f);
    return v.integrate_all() / cube(kAnticanonical);
}

LogPairY::LogPairY(Rational c_in, HomogPoly boundary_in)
    : c(std::move(c_in)), boundary(std::move(boundary_in)) {
    if (c.sign() < 0 || c >= Rational(1))
        throw std::invalid_argument("LogPairY: coefficient c must lie in [0, 1)");
    if (boundary.degree() != 4 || boundary.is_zero())
        throw std::invalid_argument("LogPairY: boundary must be a nonzero quartic");
    if (mult_at_p(boundary) != 2)
        throw std::invalid_argument(
            "LogPairY: boundary must have multiplicity 2 at p so its strict transform is "
            "anticanonical, class (4, -2)");
}

Rational s_invariant(const LogPairY& pair, const DivisorClass& f) {
    return (Rational(1) - pair.c) * s_invariant_of_y(f);
}

DivisorOnY DivisorOnY::exceptional() {
    return DivisorOnY{DivisorClass{0, 1}, std::nullopt, true, "E"};
}

DivisorOnY DivisorOnY::from_equation(std::string name, const HomogPoly& equation) {
    if (equation.is_zero() || equation.degree() == 0)
        throw std::invalid_argument("DivisorOnY: equation must be nonconstant");
    DivisorClass cls{Rational(equation.degree()), Rational(-mult_at_p(equation))};
    return DivisorOnY{cls, equation, false, std::move(name)};
}

int mult_at_p(const HomogPoly& equation) {
    int best = equation.degree();
    for (const auto& [e, c] : equation.terms()) {
        (void)c;
        best = std::min(best, e[0] + e[1] + e[2]);
    }
    return best;
}

Rational beta_divisor(const LogPairY& pair, const DivisorOnY& f) {
    int ord = 0;
    if (!f.is_exceptional) {
        if (!f.equation)
            throw std::invalid_argument("beta_divisor: non-exceptional divisor needs an equation");
        ord = multiplicity(*f.equation, pair.boundary);
    }
    Rational a = Rational(1) - pair.c * Rational(ord);
    if (a.sign() <= 0)
        throw std::domain_error("beta_divisor: log discrepancy A = " + a.str() +
                                " is not positive for divisor " + f.name);
    return a - s_invariant(pair, f.cls);
}

}  // namespace kfano
