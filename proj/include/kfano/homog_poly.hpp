#pragma once

#include "kfano/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kfano {

/// Exponent tuple (e_x, e_y, e_z, e_w).
using Exponents = std::array<int, 4>;

inline constexpr std::array<char, 4> kVarNames = {'x', 'y', 'z', 'w'};

struct Monomial {
    Rational coeff;  // nonzero
    Exponents exp;
};

/// Sparse homogeneous polynomial in x, y, z, w. Terms are keyed by exponent
/// tuple; zero coefficients are never stored. The zero polynomial (empty term
/// set) keeps a nominal degree so that w-degree parts of a quartic remember
/// which graded piece they are.
class HomogPoly {
public:
    explicit HomogPoly(int degree = 0) : degree_(degree) {
        if (degree < 0)
            throw std::invalid_argument("HomogPoly: negative degree");
    }

    static HomogPoly monomial(Rational coeff, Exponents exp);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Coefficient of the given exponent tuple (0 when absent).
    Rational coeff(const Exponents& exp) const;

    /// Adds coeff * x^e, combining like terms and dropping zeros.
    /// The exponents must sum to degree().
    void add_term(const Exponents& exp, const Rational& coeff);

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    HomogPoly scaled(const Rational& s) const;

    /// Substitutes z -> s*z.
    HomogPoly rescale_z(const Rational& s) const;

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Canonical text; parse_poly(str()) reproduces the same term set.
    std::string str() const;

private:
    int degree_;
    std::map<Exponents, Rational> terms_;
};

/// Syntax error with 0-based position into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// Parses the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := rational | var ('^' int)? | '(' expr ')' ('^' int)?
/// over the variables x, y, z, w with rational coefficients "p" or "p/q".
/// Whitespace is insignificant; juxtaposition multiplies.
/// Throws ParseError on syntax errors, std::domain_error when the input is
/// not homogeneous or cancels to the zero polynomial.
HomogPoly parse_poly(std::string_view text);

struct WParts {
    HomogPoly f2, f3, f4;  // S = f2*w^2 + f3*w + f4 with f_i in x,y,z of degree i
};

/// Splits a quartic into its w-degree parts. Throws std::domain_error when a
/// term of w-degree >= 3 is present (the surface is then smooth at p or has
/// multiplicity < 2 there) or when S is not of degree 4.
WParts collect_by_w(const HomogPoly& S);

/// Rank of the symmetric 3x3 matrix of a quadratic form in x, y, z,
/// by exact Gaussian elimination.
int quadratic_rank(const HomogPoly& f2);

enum class SingTag { A1, A2, Degenerate };

struct SingularityClass {
    SingTag tag;
    std::string detail;
};

/// Classifies the singularity of the quartic at p = [0,0,0,1]:
///   A1 when rank(f2) = 3, A2 when f2 is a nonzero multiple of x*y and f3 has
///   a nonzero z^3 coefficient, Degenerate otherwise.
/// A rank-2 form not proportional to x*y is rejected with std::domain_error
/// asking for a coordinate change.
SingularityClass classify_singularity(const HomogPoly& S);

/// Terms of S of maximal weight under the one-parameter subgroup acting with
/// the given weights on (x, y, z, w); this is the t -> 0 pushforward limit.
HomogPoly limit_1ps(const HomogPoly& S, const std::array<long, 4>& weights);

/// Largest k such that divisor^k divides S (repeated exact division).
int multiplicity(const HomogPoly& divisor, const HomogPoly& S);

/// Exact single-divisor division: on success writes S / divisor to quotient.
bool try_divide(const HomogPoly& divisor, const HomogPoly& S, HomogPoly* quotient);

/// Monomial valuation on the affine chart w = 1 centered at p, with
/// nonnegative rational weights on (x, y, z).
struct MonomialValuation {
    std::array<Rational, 3> weights;

    MonomialValuation(Rational wx, Rational wy, Rational wz);

    /// Log discrepancy over P^3: the weight sum.
    Rational log_discrepancy() const { return weights[0] + weights[1] + weights[2]; }
};

/// Value of the valuation on S: min over terms of the weighted exponent sum
/// after dehomogenizing at w = 1.
Rational monomial_value(const MonomialValuation& v, const HomogPoly& S);

}  // namespace kfano
