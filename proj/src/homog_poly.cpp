#include "kfano/homog_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kfano {

namespace {

int total_degree(const Exponents& e) {
    return e[0] + e[1] + e[2] + e[3];
}

}  // namespace

HomogPoly HomogPoly::monomial(Rational coeff, Exponents exp) {
    HomogPoly p(total_degree(exp));
    p.add_term(exp, coeff);
    return p;
}

Rational HomogPoly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogPoly::add_term(const Exponents& exp, const Rational& coeff) {
    for (int e : exp)
        if (e < 0)
            throw std::invalid_argument("HomogPoly: negative exponent");
    if (total_degree(exp) != degree_)
        throw std::invalid_argument("HomogPoly: exponent sum does not match degree");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r(degree_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("HomogPoly: degree mismatch in sum");
    if (is_zero())
        degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
    return *this += -o;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly r(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    return r;
}

HomogPoly HomogPoly::scaled(const Rational& s) const {
    HomogPoly r(degree_);
    if (s.is_zero())
        return r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

HomogPoly HomogPoly::rescale_z(const Rational& s) const {
    HomogPoly r(degree_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c * s.pow(e[2]));
    return r;
}

std::string HomogPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex on (e_x, e_y, e_z, e_w).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational a = it->second;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        const Exponents& e = it->first;
        bool has_var = e[0] + e[1] + e[2] + e[3] > 0;
        bool need_coeff = !(a == Rational(1)) || !has_var;
        if (need_coeff)
            os << a.str();
        bool need_star = need_coeff;
        for (size_t v = 0; v < 4; ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                os << "*";
            os << kVarNames[v];
            if (e[v] > 1)
                os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

WParts collect_by_w(const HomogPoly& S) {
    if (S.degree() != 4)
        throw std::domain_error("collect_by_w: expected a degree-4 form");
    WParts parts{HomogPoly(2), HomogPoly(3), HomogPoly(4)};
    for (const auto& [e, c] : S.terms()) {
        if (e[3] >= 3)
            throw std::domain_error(
                "collect_by_w: term of w-degree >= 3 present; the surface is smooth or has "
                "multiplicity < 2 at p");
        Exponents stripped{e[0], e[1], e[2], 0};
        switch (e[3]) {
            case 2: parts.f2.add_term(stripped, c); break;
            case 1: parts.f3.add_term(stripped, c); break;
            default: parts.f4.add_term(stripped, c); break;
        }
    }
    return parts;
}

int quadratic_rank(const HomogPoly& f2) {
    if (f2.degree() != 2)
        throw std::invalid_argument("quadratic_rank: expected a quadratic form");
    for (const auto& [e, c] : f2.terms()) {
        (void)c;
        if (e[3] != 0)
            throw std::invalid_argument("quadratic_rank: form must involve only x, y, z");
    }
    const Rational half(1, 2);
    // Symmetric matrix of the form: m[i][j] with off-diagonals halved.
    std::array<std::array<Rational, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Exponents e{0, 0, 0, 0};
            e[i] += 1;
            e[j] += 1;
            m[i][j] = (i == j) ? f2.coeff(e) : f2.coeff(e) * half;
        }
    // Exact Gaussian elimination with column pivoting.
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = -1;
        for (int row = rank; row < 3; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[pivot], m[rank]);
        for (int row = rank + 1; row < 3; ++row) {
            if (m[row][col].is_zero())
                continue;
            Rational factor = m[row][col] / m[rank][col];
            for (int j = col; j < 3; ++j)
                m[row][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

SingularityClass classify_singularity(const HomogPoly& S) {
    WParts parts = collect_by_w(S);
    int rank = quadratic_rank(parts.f2);
    if (rank == 3)
        return {SingTag::A1, "rank(f2) = 3: the branch quartic has an ordinary double point at p"};
    if (rank <= 1)
        return {SingTag::Degenerate,
                "rank(f2) = " + std::to_string(rank) +
                    ": the intersection with the exceptional plane is a double line or worse"};
    // Rank 2: the normal form f2 = xy must be presented by the caller.
    const Exponents xy{1, 1, 0, 0};
    Rational gamma2 = parts.f2.coeff(xy);
    if (gamma2.is_zero() || parts.f2.term_count() != 1)
        throw std::domain_error(
            "non-normalized rank-2 form: apply a coordinate change so that f2 is a multiple of "
            "x*y");
    Rational z3 = parts.f3.coeff({0, 0, 3, 0});
    if (z3.is_zero())
        return {SingTag::Degenerate,
                "f3 has no z^3 term: the branch quartic is singular along the z-direction "
                "(worse than a cusp at p)"};
    return {SingTag::A2, "f2 = " + gamma2.str() + "*x*y and coeff(f3, z^3) = " + z3.str() +
                             ": cusp-type double point at p"};
}

HomogPoly limit_1ps(const HomogPoly& S, const std::array<long, 4>& weights) {
    if (S.is_zero())
        throw std::domain_error("limit_1ps: zero polynomial");
    bool have_max = false;
    BigInt max_weight = 0;
    auto term_weight = [&weights](const Exponents& e) {
        BigInt ww = 0;
        for (int i = 0; i < 4; ++i)
            ww += BigInt(weights[i]) * e[i];
        return ww;
    };
    for (const auto& [e, c] : S.terms()) {
        (void)c;
        BigInt ww = term_weight(e);
        if (!have_max || ww > max_weight) {
            max_weight = ww;
            have_max = true;
        }
    }
    HomogPoly limit(S.degree());
    for (const auto& [e, c] : S.terms())
        if (term_weight(e) == max_weight)
            limit.add_term(e, c);
    return limit;
}

bool try_divide(const HomogPoly& divisor, const HomogPoly& S, HomogPoly* quotient) {
    if (divisor.is_zero())
        throw std::domain_error("try_divide: zero divisor");
    if (S.is_zero())
        return false;
    if (S.degree() < divisor.degree())
        return false;
    HomogPoly q(S.degree() - divisor.degree());
    HomogPoly rem = S;
    const auto& dlead = *divisor.terms().rbegin();  // lex-leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents qe;
        for (int i = 0; i < 4; ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0)
                return false;  // leading term not divisible, so neither is S
        }
        Rational qc = rlead.second / dlead.second;
        HomogPoly qt = HomogPoly::monomial(qc, qe);
        q += qt;
        rem -= qt * divisor;
    }
    if (quotient)
        *quotient = std::move(q);
    return true;
}

int multiplicity(const HomogPoly& divisor, const HomogPoly& S) {
    if (divisor.is_zero() || divisor.degree() == 0)
        throw std::domain_error("multiplicity: divisor must be nonconstant");
    int k = 0;
    HomogPoly current = S;
    HomogPoly q(0);
    while (try_divide(divisor, current, &q)) {
        ++k;
        current = q;
        if (current.degree() == 0)
            break;
    }
    return k;
}

MonomialValuation::MonomialValuation(Rational wx, Rational wy, Rational wz)
    : weights{std::move(wx), std::move(wy), std::move(wz)} {
    for (const auto& wi : weights)
        if (wi.sign() < 0)
            throw std::invalid_argument("MonomialValuation: weights must be nonnegative");
    if (weights[0].is_zero() && weights[1].is_zero() && weights[2].is_zero())
        throw std::invalid_argument("MonomialValuation: weights must not all be zero");
}

Rational monomial_value(const MonomialValuation& v, const HomogPoly& S) {
    if (S.is_zero())
        throw std::domain_error("monomial_value: zero polynomial");
    bool have_min = false;
    Rational min_val = 0;
    for (const auto& [e, c] : S.terms()) {
        (void)c;
        Rational val = v.weights[0] * e[0] + v.weights[1] * e[1] + v.weights[2] * e[2];
        if (!have_min || val < min_val) {
            min_val = val;
            have_min = true;
        }
    }
    return min_val;
}

}  // namespace kfano
