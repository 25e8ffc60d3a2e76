#include "kfano/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace kfano {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& ci : r.c_)
        ci = -ci;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero())
        return UniPoly();
    UniPoly r = *this;
    for (auto& ci : r.c_)
        ci *= s;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = UniPoly::constant(1);
    UniPoly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            acc = acc * base;
        if (e > 1)
            base = base * base;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::antiderivative() const {
    if (c_.empty())
        return UniPoly();
    std::vector<Rational> a(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        a[i + 1] = c_[i] / Rational(static_cast<long long>(i + 1));
    return UniPoly(std::move(a));
}

Rational UniPoly::integrate(const Rational& lo, const Rational& hi) const {
    UniPoly F = antiderivative();
    return F.eval(hi) - F.eval(lo);
}

UniPoly UniPoly::interpolate(std::span<const std::pair<Rational, Rational>> points) {
    UniPoly result;
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(1);
        Rational denom = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * UniPoly::linear(-points[j].first, 1);
            denom *= points[i].first - points[j].first;
        }
        result += basis.scaled(points[i].second / denom);
    }
    return result;
}

std::string UniPoly::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero())
            continue;
        Rational a = c_[k];
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
        if (k == 0 || !(a == Rational(1)))
            os << a.str();
        if (k > 0) {
            if (!(a == Rational(1)))
                os << "*";
            os << "t";
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2)
        throw std::invalid_argument("PiecewisePoly: need at least two breakpoints");
    if (pieces_.size() + 1 != breaks_.size())
        throw std::invalid_argument("PiecewisePoly: piece count must be breakpoint count - 1");
    for (size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must be strictly increasing");
}

Rational PiecewisePoly::eval(const Rational& t) const {
    if (t < domain_lo() || t > domain_hi())
        throw std::domain_error("PiecewisePoly: evaluation outside domain");
    // Left-piece rule: the piece whose closed interval has t as right endpoint wins.
    for (size_t i = 0; i < pieces_.size(); ++i)
        if (t <= breaks_[i + 1])
            return pieces_[i].eval(t);
    return pieces_.back().eval(t);
}

Rational PiecewisePoly::integrate(const Rational& lo, const Rational& hi) const {
    if (lo > hi)
        throw std::domain_error("PiecewisePoly: integration bounds out of order");
    if (lo < domain_lo() || hi > domain_hi())
        throw std::domain_error("PiecewisePoly: integration range outside domain");
    Rational total = 0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Rational a = std::max(lo, breaks_[i]);
        Rational b = std::min(hi, breaks_[i + 1]);
        if (a < b)
            total += pieces_[i].integrate(a, b);
    }
    return total;
}

bool PiecewisePoly::is_continuous() const {
    for (size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (!(pieces_[i].eval(breaks_[i + 1]) == pieces_[i + 1].eval(breaks_[i + 1])))
            return false;
    return true;
}

}  // namespace kfano
