#pragma once

#include "kfano/rational.hpp"

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kfano {

/// Univariate polynomial in t with exact rational coefficients.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are trimmed,
/// so the zero polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational a) { return UniPoly{std::move(a)}; }
    /// a + b*t
    static UniPoly linear(Rational a, Rational b) { return UniPoly{std::move(a), std::move(b)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& t) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;
    UniPoly pow(unsigned e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    /// Exact definite integral over [lo, hi].
    Rational integrate(const Rational& lo, const Rational& hi) const;

    /// Unique interpolating polynomial of degree < points.size() through the
    /// given (t, value) pairs; abscissae must be pairwise distinct.
    static UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

    std::string str() const;

private:
    void trim();

    std::vector<Rational> c_;
};

/// Piecewise polynomial over strictly increasing rational breakpoints
/// t_0 < ... < t_k, one polynomial per interval [t_i, t_{i+1}].
/// Evaluation at a shared breakpoint is taken from the left piece.
class PiecewisePoly {
public:
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces);

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<UniPoly>& pieces() const { return pieces_; }
    const Rational& domain_lo() const { return breaks_.front(); }
    const Rational& domain_hi() const { return breaks_.back(); }

    Rational eval(const Rational& t) const;

    /// Exact definite integral; [lo, hi] must lie inside the domain.
    Rational integrate(const Rational& lo, const Rational& hi) const;
    Rational integrate_all() const { return integrate(domain_lo(), domain_hi()); }

    /// Adjacent pieces agree at every interior breakpoint.
    bool is_continuous() const;

private:
    std::vector<Rational> breaks_;
    std::vector<UniPoly> pieces_;
};

}  // namespace kfano
