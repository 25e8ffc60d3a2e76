#include "kfano/pipeline.hpp"

#include "kfano/bundle_delta.hpp"
#include "kfano/divisor.hpp"
#include "kfano/valuation.hpp"

#include "json.hpp"

#include <future>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kfano {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::array<long, 4> kA1Weights = {0, 0, 0, 1};
const std::array<long, 4> kA2Weights = {0, 0, 1, 3};

HomogPoly a2_normal_form() {
    HomogPoly model(4);
    model.add_term({1, 1, 0, 2}, Rational(1));  // x*y*w^2
    model.add_term({0, 0, 3, 1}, Rational(1));  // z^3*w
    return model;
}

bool any_failed(const std::vector<ChecklistItem>& checklist) {
    for (const auto& item : checklist)
        if (item.status.rfind("fail", 0) == 0)
            return true;
    return false;
}

void append_reduction_chain(CertificationReport& report) {
    report.deductions.push_back(
        {"a one-parameter subgroup degenerates (Y, cS) to (Y, c*limit); openness of "
         "K-semistability transfers the certificate back to (Y, cS)",
         "cited", "BLX19; Xu19"});
    report.deductions.push_back(
        {"(Y, (1-eps)S) is K-stable for all small eps > 0", "cited", "ADL21; JMR16"});
    report.deductions.push_back(
        {"interpolation between c and 1-eps gives K-stability of (Y, (1/2)S)", "cited", "ADL19"});
    report.deductions.push_back(
        {"the double cover X -> Y branched along S is K-stable; Aut(X) is finite", "cited",
         "Der16; LZ22; Zhu20; CPS19"});
}

void certify_a1(const HomogPoly& surface, const CertifyOptions& options,
                CertificationReport& report) {
    report.subfamily = "A1";
    report.degeneration_weights = kA1Weights;
    report.degeneration_limit = limit_1ps(surface, kA1Weights).str();

    Rational c = options.c_override.value_or(Rational(3, 17));
    report.chosen_c = c;

    auto base = delta_conic_pair(c);  // throws when c is outside (0, 1)
    if (!base) {
        report.checklist.push_back(
            {"threshold of the base pair (P^2, c*conic) known: requires c < 3/4", "fail"});
        report.verdict = "NOT_APPLICABLE";
        return;
    }
    report.checklist.push_back(
        {"threshold of the base pair (P^2, c*conic) equals 1 (c < 3/4)", "pass"});
    report.computations.push_back({"delta(P^2, c*C_0)", *base, "Prop. 2.8(a)"});

    DeltaBreakdown terms;
    try {
        terms = family_a_terms(c);
    } catch (const std::domain_error& err) {
        report.checklist.push_back(
            {"bundle threshold hypotheses hold for (r, a, b) = (3-2c, 0, 2c)",
             std::string("fail: ") + err.what()});
        report.verdict = "NOT_APPLICABLE";
        return;
    }
    report.checklist.push_back(
        {"bundle threshold hypotheses hold for (r, a, b) = (3-2c, 0, 2c)", "pass"});

    report.computations.push_back({"28(3-2c)/(45(2-2c))", terms.term_base, "(delta-3)"});
    report.computations.push_back({"28/(17(2-2c))", terms.term_zero, "(delta-3)"});
    report.computations.push_back({"28(1-2c)/(11(2-2c))", terms.term_infty, "(delta-3)"});
    report.computations.push_back({"delta(Y, c*limit)", terms.delta, "(delta-1)"});

    MeanRatioCheck ratio = mean_ratio_check();
    report.computations.push_back({"M/(2-2c) computed", ratio.computed, "(delta-2)"});
    report.computations.push_back({"M/(2-2c) as printed", ratio.published, "(delta-2)"});
    report.checklist.push_back(
        {"printed (delta-2) mean coefficient equals the computed 45/28",
         ratio.consistent ? "pass" : "discrepancy-noted: computation uses 45/28"});

    report.checklist.push_back({"delta(Y, c*limit) >= 1 (K-semistability of the degenerate pair)",
                                terms.delta >= Rational(1) ? "pass" : "fail"});

    report.deductions.push_back(
        {"delta(Y, c*limit) = 1 by the bundle threshold formula with base threshold 1", "computed",
         "ZZ22; LS14; Fuj20; FO16; BJ17"});
    append_reduction_chain(report);

    report.verdict = any_failed(report.checklist) ? "NOT_APPLICABLE" : "K_SEMISTABLE_PAIR_CERTIFIED";
}

void certify_a2(const HomogPoly& surface, const CertifyOptions& options,
                CertificationReport& report) {
    report.subfamily = "A2";
    report.degeneration_weights = kA2Weights;

    HomogPoly limit = limit_1ps(surface, kA2Weights);
    Rational gamma2 = limit.coeff({1, 1, 0, 2});
    Rational gamma3 = limit.coeff({0, 0, 3, 1});
    if (gamma2.is_zero() || gamma3.is_zero() || limit.term_count() != 2)
        throw std::logic_error("certify: A2 limit is not of the form a*x*y*w^2 + b*z^3*w");

    HomogPoly scaled = limit.scaled(gamma2.inverse());  // x*y*w^2 + gamma*z^3*w
    report.degeneration_limit = scaled.str();
    HomogPoly model = a2_normal_form();
    Rational gamma = gamma3 / gamma2;
    if (gamma == Rational(1)) {
        report.checklist.push_back(
            {"degenerate limit equals the normal form x*y*w^2 + z^3*w", "pass"});
    } else if (auto s = gamma.inverse().cube_root()) {
        if (!(scaled.rescale_z(*s) == model))
            throw std::logic_error("certify: exact z-rescaling failed to reach the normal form");
        report.checklist.push_back(
            {"degenerate limit reaches the normal form x*y*w^2 + z^3*w by the exact rescaling "
             "z -> (" + s->str() + ")*z",
             "pass"});
    } else {
        report.checklist.push_back(
            {"degenerate limit x*y*w^2 + (" + gamma.str() +
                 ")*z^3*w is projectively equivalent to the normal form x*y*w^2 + z^3*w "
                 "(z-rescaling by a real cube root)",
             "assumed"});
    }

    Rational c = options.c_override.value_or(Rational(2, 9));
    report.chosen_c = c;
    LogPairY pair(c, model);  // throws when c is outside [0, 1)

    struct Entry {
        DivisorOnY divisor;
        std::string s_name, beta_name, anchor;
        Rational s_value;
    };
    if (options.generic_s == 0 || options.generic_s == 1)
        throw std::invalid_argument("certify: generic_s must differ from 0 and 1");
    HomogPoly t1(3);
    t1.add_term({1, 1, 0, 1}, Rational(1));
    t1.add_term({0, 0, 3, 0}, Rational(1));
    HomogPoly ts(3);
    ts.add_term({1, 1, 0, 1}, Rational(1));
    ts.add_term({0, 0, 3, 0}, Rational(options.generic_s));
    std::vector<Entry> entries;
    entries.push_back({DivisorOnY::exceptional(), "S_Y(E)", "beta(E)", "§3(i)", {}});
    entries.push_back({DivisorOnY::from_equation("H_w", parse_poly("w")), "S_Y(H_w)", "beta(H_w)",
                       "§3(ii)", {}});
    entries.push_back({DivisorOnY::from_equation("H_x", parse_poly("x")), "S_Y(H_x)", "beta(H_x)",
                       "§3(iii)", {}});
    entries.push_back({DivisorOnY::from_equation("T_1", t1), "S_Y(T_s) (s-independent)",
                       "beta(T_1)", "§3(iv)", {}});
    entries.push_back({DivisorOnY::from_equation("T_" + std::to_string(options.generic_s), ts),
                       "", "beta(T_s), s != 1", "§3(iv)", {}});

    // The per-divisor computations are independent; run them concurrently and
    // fold the results back in the fixed report order.
    std::vector<std::future<Rational>> betas;
    betas.reserve(entries.size());
    for (auto& entry : entries) {
        entry.s_value = s_invariant_of_y(entry.divisor.cls);
        betas.push_back(std::async(std::launch::async, beta_divisor, std::cref(pair),
                                   std::cref(entry.divisor)));
    }

    bool all_positive = true;
    for (size_t i = 0; i < entries.size(); ++i) {
        Rational beta = betas[i].get();
        if (!entries[i].s_name.empty())
            report.computations.push_back({entries[i].s_name, entries[i].s_value,
                                           entries[i].anchor});
        report.computations.push_back({entries[i].beta_name, beta, entries[i].anchor});
        if (beta.sign() <= 0)
            all_positive = false;
    }

    MonomialValuation v(Rational(3), Rational(0), Rational(1));
    report.computations.push_back({"A(v), v = (3,0,1)", a_invariant_valuation(pair, v), "eq:Av"});
    report.computations.push_back({"S(v), v = (3,0,1)", s_invariant_valuation(pair, v), "eq:Sv"});
    FutakiReport futaki = futaki_vanishing_check(pair);
    report.computations.push_back({"Fut(lambda_0) = beta((3,0,1))", futaki.beta_lambda0, "§3"});
    report.computations.push_back({"Fut(lambda_1) = beta((0,3,1))", futaki.beta_lambda1, "§3"});

    report.checklist.push_back(
        {"(1) beta > 0 for every vertical T-invariant prime divisor "
         "(classes (0,1), (1,0), (1,-1), (3,-2))",
         all_positive ? "pass" : "fail"});
    report.checklist.push_back(
        {"(2) no horizontal T-invariant prime divisors (input data from the divisor "
         "classification)",
         "assumed"});
    report.checklist.push_back(
        {"(3) Futaki character vanishes on the cocharacter lattice (both basis 1-PS)",
         futaki.pass ? "pass" : "fail"});

    report.deductions.push_back(
        {"beta > 0 on the vertical divisor list and Fut = 0 on the torus, hence (Y, c*limit) "
         "is K-polystable, in particular K-semistable",
         "computed", "ACC+; IS17; Fuj16"});
    append_reduction_chain(report);

    report.verdict = any_failed(report.checklist) ? "NOT_APPLICABLE" : "K_SEMISTABLE_PAIR_CERTIFIED";
}

ordered_json to_json(const CertificationReport& r) {
    ordered_json j;
    j["input"] = r.input_surface;
    j["subfamily"] = r.subfamily;
    j["degeneration"]["weights"] = r.degeneration_weights;
    j["degeneration"]["limit"] = r.degeneration_limit;
    j["c"] = r.chosen_c.fraction_str();
    j["computations"] = ordered_json::array();
    for (const auto& comp : r.computations)
        j["computations"].push_back(
            {{"name", comp.name}, {"value", comp.value.fraction_str()}, {"anchor", comp.anchor}});
    j["checklist"] = ordered_json::array();
    for (const auto& item : r.checklist)
        j["checklist"].push_back({{"condition", item.condition}, {"status", item.status}});
    j["deductions"] = ordered_json::array();
    for (const auto& step : r.deductions)
        j["deductions"].push_back(
            {{"step", step.step}, {"kind", step.kind}, {"citation", step.citation}});
    j["verdict"] = r.verdict;
    return j;
}

Rational parse_fraction(const std::string& text, const char* field) {
    auto value = Rational::parse(text);
    if (!value)
        throw std::invalid_argument(std::string("report_from_json: malformed rational in ") +
                                    field + ": " + text);
    return *value;
}

std::string to_text(const CertificationReport& r) {
    std::ostringstream os;
    os << "kfano certification report\n";
    os << "==========================\n";
    os << "input:        " << r.input_surface << "\n";
    os << "subfamily:    " << r.subfamily << "\n";
    os << "degeneration: weights (" << r.degeneration_weights[0] << ", "
       << r.degeneration_weights[1] << ", " << r.degeneration_weights[2] << ", "
       << r.degeneration_weights[3] << ") -> " << r.degeneration_limit << "\n";
    os << "c:            " << r.chosen_c.fraction_str() << "\n";
    os << "\ncomputations:\n";
    for (const auto& comp : r.computations)
        os << "  " << comp.name << " = " << comp.value.fraction_str() << "   [" << comp.anchor
           << "]\n";
    os << "\nchecklist:\n";
    for (const auto& item : r.checklist)
        os << "  [" << item.status << "] " << item.condition << "\n";
    os << "\ndeductions:\n";
    for (const auto& step : r.deductions)
        os << "  [" << step.kind << "] " << step.step << " (" << step.citation << ")\n";
    os << "\nverdict: " << r.verdict << "\n";
    return os.str();
}

}  // namespace

CertificationReport certify(std::string_view surface_text, const CertifyOptions& options) {
    HomogPoly surface = parse_poly(surface_text);
    SingularityClass cls = classify_singularity(surface);

    CertificationReport report;
    report.input_surface = surface.str();

    if (cls.tag == SingTag::Degenerate) {
        report.subfamily = "DEGENERATE";
        report.chosen_c = Rational(0);
        report.checklist.push_back(
            {"the branch quartic acquires an A1 or A2 double point at p", "fail: " + cls.detail});
        report.verdict = "DEGENERATE_INPUT";
        return report;
    }

    if (cls.tag == SingTag::A1)
        certify_a1(surface, options, report);
    else
        certify_a2(surface, options, report);
    return report;
}

std::string emit_report(const CertificationReport& report, ReportFormat format) {
    if (format == ReportFormat::Json)
        return to_json(report).dump(2) + "\n";
    return to_text(report);
}

CertificationReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    CertificationReport r;
    r.input_surface = j.at("input").get<std::string>();
    r.subfamily = j.at("subfamily").get<std::string>();
    const auto& weights = j.at("degeneration").at("weights");
    if (weights.size() != 4)
        throw std::invalid_argument("report_from_json: degeneration.weights must have 4 entries");
    for (size_t i = 0; i < 4; ++i)
        r.degeneration_weights[i] = weights[i].get<long>();
    r.degeneration_limit = j.at("degeneration").at("limit").get<std::string>();
    r.chosen_c = parse_fraction(j.at("c").get<std::string>(), "c");
    for (const auto& comp : j.at("computations"))
        r.computations.push_back({comp.at("name").get<std::string>(),
                                  parse_fraction(comp.at("value").get<std::string>(), "value"),
                                  comp.at("anchor").get<std::string>()});
    for (const auto& item : j.at("checklist"))
        r.checklist.push_back(
            {item.at("condition").get<std::string>(), item.at("status").get<std::string>()});
    for (const auto& step : j.at("deductions"))
        r.deductions.push_back({step.at("step").get<std::string>(),
                                step.at("kind").get<std::string>(),
                                step.at("citation").get<std::string>()});
    r.verdict = j.at("verdict").get<std::string>();
    return r;
}

}  // namespace kfano
