#include "kfano/homog_poly.hpp"

#include <cctype>
#include <map>

namespace kfano {

namespace {

// Intermediate sparse polynomial without the homogeneity constraint;
// validated and converted to HomogPoly once the whole expression is read.
using GenPoly = std::map<Exponents, Rational>;

void gen_add(GenPoly& p, const Exponents& e, const Rational& c) {
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

GenPoly gen_mul(const GenPoly& a, const GenPoly& b) {
    GenPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            gen_add(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
}

GenPoly gen_pow(GenPoly base, int e) {
    GenPoly acc{{{0, 0, 0, 0}, Rational(1)}};
    for (; e > 0; e >>= 1) {
        if (e & 1)
            acc = gen_mul(acc, base);
        if (e > 1)
            base = gen_mul(base, base);
    }
    return acc;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GenPoly parse() {
        GenPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    GenPoly parse_expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        GenPoly acc = parse_term();
        if (sign < 0)
            negate(acc);
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            GenPoly t = parse_term();
            if (c == '-')
                negate(t);
            for (const auto& [e, coeff] : t)
                gen_add(acc, e, coeff);
        }
        return acc;
    }

    GenPoly parse_term() {
        GenPoly acc = parse_factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = gen_mul(acc, parse_factor());
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || is_var(c)) {
                acc = gen_mul(acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    GenPoly parse_factor() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return parse_rational();
        if (is_var(c)) {
            ++pos_;
            int var = var_index(c);
            int e = parse_optional_exponent();
            Exponents exp{0, 0, 0, 0};
            exp[var] = e;
            return GenPoly{{exp, Rational(1)}};
        }
        if (c == '(') {
            ++pos_;
            GenPoly inner = parse_expr();
            skip_ws();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            int e = parse_optional_exponent();
            return e == 1 ? inner : gen_pow(std::move(inner), e);
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail("unknown variable; only x, y, z, w are allowed");
        fail(c == '\0' ? "unexpected end of input" : "expected a factor");
    }

    GenPoly parse_rational() {
        BigInt num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            size_t save = pos_;
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                // Not a rational literal; leave '/' for the caller (it will fail there).
                pos_ = save;
                return GenPoly{{{0, 0, 0, 0}, Rational(std::move(num))}};
            }
            BigInt den = parse_integer();
            if (den == 0)
                fail("zero denominator in coefficient");
            return GenPoly{{{0, 0, 0, 0}, Rational(std::move(num), std::move(den))}};
        }
        return GenPoly{{{0, 0, 0, 0}, Rational(std::move(num))}};
    }

    int parse_optional_exponent() {
        skip_ws();
        if (peek() != '^')
            return 1;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative integer exponent");
        BigInt e = parse_integer();
        if (e > 64)
            fail("exponent too large");
        return static_cast<int>(e);
    }

    BigInt parse_integer() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

    static int var_index(char c) {
        switch (c) {
            case 'x': return 0;
            case 'y': return 1;
            case 'z': return 2;
            default: return 3;
        }
    }

    static void negate(GenPoly& p) {
        for (auto& [e, c] : p) {
            (void)e;
            c = -c;
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

HomogPoly parse_poly(std::string_view text) {
    GenPoly p = Parser(text).parse();
    if (p.empty())
        throw std::domain_error("empty polynomial: all terms cancel");
    int degree = -1;
    for (const auto& [e, c] : p) {
        (void)c;
        int d = e[0] + e[1] + e[2] + e[3];
        if (degree < 0)
            degree = d;
        else if (d != degree)
            throw std::domain_error("non-homogeneous polynomial: terms of degree " +
                                    std::to_string(degree) + " and " + std::to_string(d));
    }
    HomogPoly result(degree);
    for (const auto& [e, c] : p)
        result.add_term(e, c);
    return result;
}

}  // namespace kfano
