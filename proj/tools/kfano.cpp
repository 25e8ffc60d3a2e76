#include "kfano/bundle_delta.hpp"
#include "kfano/pipeline.hpp"
#include "kfano/reference_suite.hpp"
#include "kfano/slab.hpp"

#include "CLI11.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

kfano::Rational parse_rational_arg(const std::string& text, const std::string& flag) {
    auto value = kfano::Rational::parse(text);
    if (!value)
        throw CLI::ValidationError(flag, "expected a rational 'p' or 'p/q', got '" + text + "'");
    return *value;
}

int run_certify(const std::string& surface, const std::optional<std::string>& c_text,
                const std::string& format, const std::optional<std::string>& out_path) {
    kfano::CertifyOptions options;
    if (c_text)
        options.c_override = parse_rational_arg(*c_text, "--c");
    kfano::CertificationReport report = kfano::certify(surface, options);
    std::string rendered = kfano::emit_report(
        report, format == "json" ? kfano::ReportFormat::Json : kfano::ReportFormat::Text);
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out) {
            std::cerr << "kfano: cannot open output file: " << *out_path << "\n";
            return kExitUsage;
        }
        out << rendered;
    } else {
        std::cout << rendered;
    }
    return report.verdict == "K_SEMISTABLE_PAIR_CERTIFIED" ? kExitOk : kExitFailedCheck;
}

int run_classify(const std::string& surface) {
    kfano::SingularityClass cls = kfano::classify_singularity(kfano::parse_poly(surface));
    const char* tag = cls.tag == kfano::SingTag::A1
                          ? "A1"
                          : (cls.tag == kfano::SingTag::A2 ? "A2" : "DEGENERATE");
    std::cout << "subfamily: " << tag << "\n";
    std::cout << "detail: " << cls.detail << "\n";
    return cls.tag == kfano::SingTag::Degenerate ? kExitFailedCheck : kExitOk;
}

int run_suite(bool as_json) {
    kfano::SuiteSummary summary = kfano::run_reference_suite();
    std::cout << (as_json ? kfano::suite_json(summary) : kfano::suite_text(summary));
    return summary.all_pass() ? kExitOk : kExitFailedCheck;
}

int run_delta_bundle(int n, const std::string& r, const std::string& a, const std::string& b,
                     const std::string& delta_base) {
    kfano::BundleDeltaInput input(n, parse_rational_arg(r, "--r"), parse_rational_arg(a, "--a"),
                                  parse_rational_arg(b, "--b"),
                                  parse_rational_arg(delta_base, "--delta-base"));
    kfano::DeltaBreakdown out = kfano::delta_bundle(input);
    std::cout << "term_base  = " << out.term_base.fraction_str() << "\n";
    std::cout << "term_zero  = " << out.term_zero.fraction_str() << "\n";
    std::cout << "term_infty = " << out.term_infty.fraction_str() << "\n";
    std::cout << "mean_M     = " << out.mean_m.fraction_str() << "\n";
    std::cout << "delta      = " << out.delta.fraction_str() << "\n";
    return kExitOk;
}

int run_slab(const std::string& d, const std::string& m, const std::string& weights,
             const std::optional<std::string>& t_text) {
    std::array<kfano::Rational, 3> ell;
    {
        std::string rest = weights;
        for (int i = 0; i < 3; ++i) {
            size_t comma = rest.find(',');
            bool last = (i == 2);
            if (last != (comma == std::string::npos))
                throw CLI::ValidationError("--weights", "expected three comma-separated rationals");
            ell[i] = parse_rational_arg(last ? rest : rest.substr(0, comma), "--weights");
            if (!last)
                rest = rest.substr(comma + 1);
        }
    }
    kfano::SlabPolytope slab(parse_rational_arg(d, "--d"), parse_rational_arg(m, "--m"), ell);
    if (t_text) {
        kfano::Rational t = parse_rational_arg(*t_text, "--t");
        std::cout << "slice_volume = " << kfano::slice_volume(slab, t).fraction_str() << "\n";
    } else {
        std::cout << "volume        = " << kfano::slab_volume(slab).fraction_str() << "\n";
        std::cout << "integral(ell) = " << kfano::integral_linear_over_slab(slab).fraction_str()
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K-stability certification for double covers of Bl_p P^3 (family 2.8)"};
    app.require_subcommand(1);

    std::string surface, format = "text";
    std::optional<std::string> c_text, out_path, t_text;
    bool suite_as_json = false;
    int n = 0;
    std::string r, a, b, delta_base, d, m, weights;

    CLI::App* certify = app.add_subcommand("certify", "certify a member from its branch quartic");
    certify->add_option("--surface", surface, "branch quartic in x, y, z, w")->required();
    certify->add_option("--c", c_text, "override the boundary coefficient (rational)");
    certify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    certify->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* classify = app.add_subcommand("classify", "classify the double point at p");
    classify->add_option("--surface", surface, "branch quartic in x, y, z, w")->required();

    CLI::App* suite = app.add_subcommand("suite", "run the full reference-value suite");
    suite->add_flag("--json", suite_as_json, "machine-readable summary");

    CLI::App* bundle = app.add_subcommand("delta-bundle",
                                          "stability threshold of a P^1-bundle log pair");
    bundle->add_option("--n", n, "dimension of the base")->required();
    bundle->add_option("--r", r, "r with L ~ -(1/r)(K_V + Delta)")->required();
    bundle->add_option("--a", a, "coefficient of the zero section")->required();
    bundle->add_option("--b", b, "coefficient of the infinity section")->required();
    bundle->add_option("--delta-base", delta_base, "threshold of the base pair")->required();

    CLI::App* slab = app.add_subcommand("slab", "exact slab-polytope volumes and integrals");
    slab->add_option("--d", d, "outer simplex scale")->required();
    slab->add_option("--m", m, "inner simplex scale")->required();
    slab->add_option("--weights", weights, "functional coefficients r,r,r")->required();
    slab->add_option("--t", t_text, "slice height; prints vol(P intersect {ell >= t})");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*certify)
            return run_certify(surface, c_text, format, out_path);
        if (*classify)
            return run_classify(surface);
        if (*suite)
            return run_suite(suite_as_json);
        if (*bundle)
            return run_delta_bundle(n, r, a, b, delta_base);
        if (*slab)
            return run_slab(d, m, weights, t_text);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "kfano: " << e.what() << "\n";
        return kExitUsage;
    } catch (const kfano::ParseError& e) {
        std::cerr << "kfano: surface does not parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "kfano: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
