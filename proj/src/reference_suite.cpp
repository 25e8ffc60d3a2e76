#include "kfano/reference_suite.hpp"

#include "kfano/bundle_delta.hpp"
#include "kfano/divisor.hpp"
#include "kfano/pipeline.hpp"
#include "kfano/slab.hpp"
#include "kfano/valuation.hpp"

#include "json.hpp"

#include <sstream>

namespace kfano {

namespace {

const char* kSurfaceA1 = "x^2*w^2 + y^2*w^2 + z^2*w^2 + z^3*w + x^4 + y^4 + z^4";
const char* kSurfaceA2 = "x*y*w^2 + z^3*w + x^4 + y^4 + z^4";
const char* kSurfaceDegenerate = "x*y*w^2 + (x^3 + y^3)*w + x^4";

}  // namespace

SuiteSummary run_reference_suite(const SuiteOptions& options) {
    SuiteSummary summary;
    auto check_rat = [&summary](std::string name, const Rational& actual,
                                const Rational& expected) {
        summary.checks.push_back({std::move(name), expected.fraction_str(), actual.fraction_str(),
                                  actual == expected});
    };
    auto check_text = [&summary](std::string name, std::string actual, std::string expected) {
        bool ok = actual == expected;
        summary.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    };

    // Intersection theory on Y.
    check_rat("cube(-K_Y) = cube(4H - 2E)", cube(kAnticanonical), Rational(56));
    check_rat("cube(H - E)", cube(DivisorClass{Rational(1), Rational(-1)}), Rational(0));

    // S-invariants of the four divisor classes.
    DivisorClass cls_e{Rational(0), Rational(1)};
    DivisorClass cls_hw{Rational(1), Rational(0)};
    DivisorClass cls_hx{Rational(1), Rational(-1)};
    DivisorClass cls_ts{Rational(3), Rational(-2)};
    check_rat("S_Y(E)", s_invariant_of_y(cls_e), Rational(17, 14));
    check_rat("S_Y(H_w)", s_invariant_of_y(cls_hw), Rational(11, 14));
    check_rat("S_Y(H_x)", s_invariant_of_y(cls_hx), Rational(15, 14));
    check_rat("S_Y(T_s)", s_invariant_of_y(cls_ts), Rational(29, 84));

    // The torus-invariant pair checklist at c (default 2/9).
    Rational c = options.c_a2_override.value_or(Rational(2, 9));
    LogPairY pair(c, parse_poly("x*y*w^2 + z^3*w"));
    check_rat("S_{(Y,cD)}(E) at c = 2/9", s_invariant(pair, cls_e), Rational(17, 18));
    check_rat("beta(E)", beta_divisor(pair, DivisorOnY::exceptional()), Rational(1, 18));
    check_rat("beta(H_w)", beta_divisor(pair, DivisorOnY::from_equation("H_w", parse_poly("w"))),
              Rational(1, 6));
    check_rat("beta(H_x)", beta_divisor(pair, DivisorOnY::from_equation("H_x", parse_poly("x"))),
              Rational(1, 6));
    check_rat("beta(T_1)",
              beta_divisor(pair, DivisorOnY::from_equation("T_1", parse_poly("x*y*w + z^3"))),
              Rational(55, 108));
    check_rat("beta(T_2)",
              beta_divisor(pair, DivisorOnY::from_equation("T_2", parse_poly("x*y*w + 2*z^3"))),
              Rational(79, 108));

    // Monomial valuation v with v(x) = 3, v(z) = 1.
    MonomialValuation v(Rational(3), Rational(0), Rational(1));
    check_rat("A(v), v = (3,0,1)", a_invariant_valuation(pair, v), Rational(10, 3));
    check_rat("S(v), v = (3,0,1)", s_invariant_valuation(pair, v), Rational(10, 3));
    SlabPolytope big(Rational(4), Rational(2), v.weights);
    check_rat("integral of vol(-K_Y - t*v) over t >= 0",
              Rational(6) * integral_linear_over_slab(big), Rational(240));
    FutakiReport futaki = futaki_vanishing_check(pair);
    check_rat("Fut(lambda_0) = beta((3,0,1))", futaki.beta_lambda0, Rational(0));
    check_rat("Fut(lambda_1) = beta((0,3,1))", futaki.beta_lambda1, Rational(0));

    // Slice volumes of the unit slab Q with ell = 3u_0 + u_2.
    SlabPolytope q(Rational(1), Rational(0), v.weights);
    check_rat("vol(Q_0)", slice_volume(q, Rational(0)), Rational(1, 6));
    check_rat("vol(Q_{1/2})", slice_volume(q, Rational(1, 2)), Rational(29, 216));
    check_rat("vol(Q_1)", slice_volume(q, Rational(1)), Rational(2, 27));
    check_rat("vol(Q_2)", slice_volume(q, Rational(2)), Rational(1, 108));
    check_rat("vol(Q_3)", slice_volume(q, Rational(3)), Rational(0));
    check_rat("integral of vol(Q_t) over [0, 3]", slice_profile(q).integrate_all(),
              Rational(1, 6));
    auto scaled = scaling_check(Rational(4), Rational(2), Rational(5), v.weights);
    check_rat("vol(P_5) = 4^3 vol(Q_{5/4}) - 2^3 vol(Q_{5/2})", scaled.first, scaled.second);

    // Bundle threshold for the shape (r, a, b) = (3-2c, 0, 2c).
    DeltaBreakdown balanced = family_a_terms(Rational(3, 17));
    check_rat("family term 28(3-2c)/(45(2-2c)) at c = 3/17", balanced.term_base, Rational(1));
    check_rat("family term 28/(17(2-2c)) at c = 3/17", balanced.term_zero, Rational(1));
    check_rat("family term 28(1-2c)/(11(2-2c)) at c = 3/17", balanced.term_infty, Rational(1));
    check_rat("find_balanced_c()", find_balanced_c(), Rational(3, 17));
    MeanRatioCheck ratio = mean_ratio_check();
    check_rat("mean ratio M/(2-2c), computed", ratio.computed, Rational(45, 28));
    check_text("printed (delta-2) mean ratio flagged inconsistent",
               ratio.consistent ? "consistent" : "inconsistent", "inconsistent");

    // End-to-end pipeline on the three reference inputs.
    CertifyOptions pipeline_options;
    pipeline_options.c_override = options.c_a2_override;
    CertificationReport a1 = certify(kSurfaceA1);
    CertificationReport a2 = certify(kSurfaceA2, pipeline_options);
    CertificationReport degenerate = certify(kSurfaceDegenerate);
    check_text("pipeline A1 example: subfamily/verdict", a1.subfamily + "/" + a1.verdict,
               "A1/K_SEMISTABLE_PAIR_CERTIFIED");
    check_text("pipeline A2 example: subfamily/verdict", a2.subfamily + "/" + a2.verdict,
               "A2/K_SEMISTABLE_PAIR_CERTIFIED");
    check_text("pipeline A2 example: degenerate limit", a2.degeneration_limit,
               "x*y*w^2 + z^3*w");
    check_text("pipeline degenerate example: verdict", degenerate.verdict, "DEGENERATE_INPUT");

    for (const auto& chk : summary.checks)
        (chk.pass ? summary.passed : summary.failed)++;
    return summary;
}

std::string suite_text(const SuiteSummary& summary) {
    std::ostringstream os;
    for (const auto& chk : summary.checks) {
        os << "  [" << (chk.pass ? "pass" : "FAIL") << "] " << chk.name << ": expected "
           << chk.expected;
        if (!chk.pass)
            os << ", got " << chk.actual;
        os << "\n";
    }
    os << "reference suite: " << summary.checks.size() << " checks, " << summary.passed
       << " passed, " << summary.failed << " failed\n";
    return os.str();
}

std::string suite_json(const SuiteSummary& summary) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& chk : summary.checks)
        j["checks"].push_back({{"name", chk.name},
                               {"expected", chk.expected},
                               {"actual", chk.actual},
                               {"pass", chk.pass}});
    j["passed"] = summary.passed;
    j["failed"] = summary.failed;
    return j.dump(2) + "\n";
}

}  // namespace kfano
