#pragma once

#include "kfano/homog_poly.hpp"
#include "kfano/polynomial.hpp"
#include "kfano/rational.hpp"

#include <optional>

namespace kfano {

/// Divisor class h*H_w + e*E on Y = Bl_p P^3, where H_w is the hyperplane
/// pullback and E the exceptional plane. In this basis -K_Y = (4, -2) and the
/// cube form is h^3 + e^3.
struct DivisorClass {
    Rational h;
    Rational e;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) = default;
    DivisorClass scaled(const Rational& s) const { return {h * s, e * s}; }
};

inline const DivisorClass kAnticanonical{4, -2};

Rational cube(const DivisorClass& d);

/// Nef cone is spanned by H_w = (1,0) and H_x = (1,-1).
bool is_nef(const DivisorClass& d);

/// Pseudoeffective cone is spanned by H_x = (1,-1) and E = (0,1).
bool is_pseff(const DivisorClass& d);

/// Positive part of the Zariski decomposition: the class itself when nef,
/// (h, 0) when the negative part is e*E, nullopt outside the pseff cone.
std::optional<DivisorClass> zariski_positive_part(const DivisorClass& d);

/// Cube of the Zariski positive part; zero outside the pseff cone.
Rational volume(const DivisorClass& d);

/// Smallest t >= 0 at which -K_Y - t*F leaves the pseudoeffective cone.
Rational pseff_threshold(const DivisorClass& f);

/// t -> vol(-K_Y - t*F) as an exact piecewise cubic on [0, pseff_threshold].
/// Breakpoints are the wall crossings of the ray, found algebraically.
/// Throws std::domain_error when F is zero or not pseudoeffective.
PiecewisePoly vol_ray(const DivisorClass& f);

/// S_Y(F) = (1/(-K_Y)^3) * Integral_0^inf vol(-K_Y - t*F) dt.
Rational s_invariant_of_y(const DivisorClass& f);

/// Log pair (Y, c * boundary) where the boundary is the strict transform of
/// a quartic through p; its class is -K_Y = (4, -2).
struct LogPairY {
    Rational c;          // in [0, 1); c = 0 recovers the plain invariants of Y
    HomogPoly boundary;  // degree-4 equation in P^3

    LogPairY(Rational c_in, HomogPoly boundary_in);
};

/// S_{(Y, c*D)}(F) = (1 - c) * S_Y(F).
Rational s_invariant(const LogPairY& pair, const DivisorClass& f);

/// A prime divisor on Y: the exceptional plane E, or a divisor cut out by an
/// equation in P^3 (its class is then (deg, -mult_p)).
struct DivisorOnY {
    DivisorClass cls;
    std::optional<HomogPoly> equation;
    bool is_exceptional = false;
    std::string name;

    static DivisorOnY exceptional();
    static DivisorOnY from_equation(std::string name, const HomogPoly& equation);
};

/// Vanishing order of the equation at p = [0,0,0,1] (minimal total degree in
/// x, y, z after dehomogenizing at w = 1).
int mult_at_p(const HomogPoly& equation);

/// beta = A - S with A = 1 - c * ord_F(boundary) and S = s_invariant(pair, F.cls).
/// ord_E(boundary) = 0 since the boundary is a strict transform.
/// Throws std::domain_error when A <= 0, reporting the value.
Rational beta_divisor(const LogPairY& pair, const DivisorOnY& f);

}  // namespace kfano
