#include "kfano/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <charconv>

namespace kfano {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0)
        throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    Rational base = *this;
    Rational acc = 1;
    for (unsigned long k = static_cast<unsigned long>(e); k > 0; k >>= 1) {
        if (k & 1)
            acc *= base;
        if (k > 1)
            base *= base;
    }
    return acc;
}

namespace {

// Exact integer cube root: returns r with r^3 == n, or nullopt.
std::optional<BigInt> icbrt(const BigInt& n) {
    if (n < 0) {
        auto r = icbrt(-n);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (n <= 1)
        return n;
    BigInt lo = 1, hi = n;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt c = mid * mid * mid;
        if (c == n)
            return mid;
        if (c < n)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Rational> Rational::cube_root() const {
    auto rn = icbrt(num_);
    if (!rn) return std::nullopt;
    auto rd = icbrt(den_);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string Rational::fraction_str() const {
    return num_.str() + "/" + den_.str();
}

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    auto is_int = [](std::string_view v) {
        if (v.empty()) return false;
        size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto to_bigint = [](std::string_view v) {  // leading '+' is ours to strip
        return BigInt(std::string(v[0] == '+' ? v.substr(1) : v));
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rational(to_bigint(s));
        }
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) return std::nullopt;
        BigInt den = to_bigint(q);
        if (den == 0) return std::nullopt;
        return Rational(to_bigint(p), std::move(den));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace kfano
