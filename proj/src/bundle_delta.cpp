#include "kfano/bundle_delta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kfano {

namespace {

[[noreturn]] void hypothesis_error(const std::string& inequality, const std::string& name,
                                   const Rational& got) {
    std::ostringstream os;
    os << "delta_bundle: hypothesis violated: " << inequality << " (got " << name << " = "
       << got.str() << ")";
    throw std::domain_error(os.str());
}

}  // namespace

BundleDeltaInput::BundleDeltaInput(int n_in, Rational r_in, Rational a_in, Rational b_in,
                                   Rational delta_base_in)
    : n(n_in), r(std::move(r_in)), a(std::move(a_in)), b(std::move(b_in)),
      delta_base(std::move(delta_base_in)) {
    if (n < 1)
        throw std::domain_error("delta_bundle: hypothesis violated: n >= 1");
    if (r.sign() <= 0)
        hypothesis_error("r > 0", "r", r);
    if (a.sign() < 0)
        hypothesis_error("a >= 0", "a", a);
    if (a >= Rational(1))
        hypothesis_error("a < 1", "a", a);
    if (b.sign() < 0)
        hypothesis_error("b >= 0", "b", b);
    if (b >= Rational(1))
        hypothesis_error("b < 1", "b", b);
    Rational inner = r - (Rational(1) - a);
    if (inner.sign() < 0)
        hypothesis_error("r - (1 - a) >= 0", "r - (1 - a)", inner);
    if (delta_base.sign() <= 0)
        hypothesis_error("delta_base > 0", "delta_base", delta_base);
}

DeltaBreakdown delta_bundle(const BundleDeltaInput& input) {
    Rational one(1);
    Rational a_cap = input.r - (one - input.a);  // inner radius A
    Rational b_cap = input.r + (one - input.b);  // outer radius B
    long n = input.n;
    Rational m = Rational(n + 1, n + 2) * (b_cap.pow(n + 2) - a_cap.pow(n + 2)) /
                 (b_cap.pow(n + 1) - a_cap.pow(n + 1));
    if (!(a_cap < m && m < b_cap))
        throw std::logic_error("delta_bundle: mean radius escaped (A, B)");

    DeltaBreakdown out;
    out.mean_m = m;
    out.term_base = input.r * input.delta_base / m;
    out.term_zero = (one - input.a) / (m - a_cap);
    out.term_infty = (one - input.b) / (b_cap - m);
    out.delta = std::min({out.term_base, out.term_zero, out.term_infty});
    return out;
}

std::optional<Rational> delta_conic_pair(const Rational& c) {
    if (c.sign() <= 0 || c >= Rational(1))
        throw std::domain_error("delta_conic_pair: coefficient must lie in (0, 1)");
    if (c < Rational(3, 4))
        return Rational(1);
    return std::nullopt;  // outside the range of the cited threshold result
}

DeltaBreakdown family_a_terms(const Rational& c) {
    auto base = delta_conic_pair(c);
    if (!base)
        throw std::domain_error("family_a_terms: base threshold unknown for c >= 3/4");
    Rational two(2), three(3);
    BundleDeltaInput input(2, three - two * c, Rational(0), two * c, *base);
    DeltaBreakdown out = delta_bundle(input);

    // Closed forms with B = 2A, A = 2 - 2c; any mismatch is an engine bug.
    Rational denom = two - two * c;
    Rational expect_base = Rational(28) * (three - two * c) / (Rational(45) * denom);
    Rational expect_zero = Rational(28) / (Rational(17) * denom);
    Rational expect_infty = Rational(28) * (Rational(1) - two * c) / (Rational(11) * denom);
    if (!(out.term_base == expect_base && out.term_zero == expect_zero &&
          out.term_infty == expect_infty))
        throw std::logic_error("family_a_terms: closed forms disagree with the bundle formula");
    return out;
}

Rational find_balanced_c() {
    // term_zero = term_infty  <=>  11 = 17(1 - 2c)  <=>  c = (17 - 11)/34.
    Rational c = Rational(17 - 11, 34);
    DeltaBreakdown at = family_a_terms(c);
    Rational one(1);
    if (!(at.term_base == one && at.term_zero == one && at.term_infty == one))
        throw std::logic_error("find_balanced_c: balance point does not give three equal terms");
    return c;
}

MeanRatioCheck mean_ratio_check() {
    auto ratio_at = [](const Rational& c) {
        DeltaBreakdown d = family_a_terms(c);
        return d.mean_m / (Rational(2) - Rational(2) * c);
    };
    Rational computed = ratio_at(Rational(1, 4));
    if (!(computed == ratio_at(Rational(1, 3))))
        throw std::logic_error("mean_ratio_check: M/A is not constant in c");
    MeanRatioCheck chk;
    chk.computed = std::move(computed);
    chk.published = Rational(15, 7);
    chk.consistent = (chk.computed == chk.published);
    return chk;
}

}  // namespace kfano
