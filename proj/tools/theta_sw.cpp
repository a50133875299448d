#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetasw/suites.hpp"

namespace {

using namespace thetasw;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void check_format(const std::string& format) {
    if (format != "text" && format != "json") throw UsageError("format must be text or json");
}

int cmd_verify(const std::string& suite, const std::string& g_range, const std::string& n_range,
               const std::string& format) {
    check_format(format);
    SuiteParams params;
    if (!g_range.empty()) {
        const IntRange g = IntRange::parse(g_range);
        params.counts_g = g;
        params.independence_g = g;
    }
    if (!n_range.empty()) {
        const IntRange n = IntRange::parse(n_range);
        params.polyrec_n = n;
        params.sigmastate_n = n;
    }
    const VerificationReport report = run_suite(suite, params);
    if (format == "json") {
        std::cout << nlohmann::json(report).dump(2) << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.passed() ? kExitPass : kExitFail;
}

int cmd_decompose(int g, const std::string& parity, const std::string& format) {
    check_format(format);
    const ThetaFilter filter = parse_filter(parity);
    const auto view = DecompositionView::from_algebra(g, to_string(filter), decompose(g, filter));
    if (format == "json") {
        std::cout << nlohmann::json(view).dump(2) << "\n";
    } else {
        std::cout << view.to_text();
    }
    return kExitPass;
}

int cmd_alpha(int g, const std::string& parity, int degree, const std::string& format) {
    check_format(format);
    const ThetaFilter filter = parse_filter(parity);
    const EtaleAlgebra algebra = decompose(g, filter);
    const auto top = static_cast<int>(algebra.degree() / 2);
    if (degree < 0 || degree > top) {
        throw UsageError("degree must lie in [0, " + std::to_string(top) + "]");
    }
    const RingElement x = alpha_total(algebra, degree)[degree];
    if (format == "json") {
        const nlohmann::json j = {{"g", g},
                                  {"parity", to_string(filter)},
                                  {"degree", degree},
                                  {"class", x.to_string()},
                                  {"terms", ring_element_json(x)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << x.to_string() << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks on Galois Stiefel-Whitney classes of theta characteristics", "theta-sw"};
    app.require_subcommand(1);

    std::string suite;
    std::string g_range;
    std::string n_range;
    std::string format = "text";
    int g = 0;
    std::string parity;
    int degree = 0;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "all|genus3|counts|sigmastate|independence|polyrec")->required();
    verify->add_option("--g", g_range, "genus range A..B");
    verify->add_option("--n", n_range, "polynomial index range A..B");
    verify->add_option("--format", format, "text|json");

    auto* dec = app.add_subcommand("decompose", "etale algebra of theta characteristics");
    dec->add_option("--g", g, "genus")->required();
    dec->add_option("--parity", parity, "odd|even|all")->required();
    dec->add_option("--format", format, "text|json");

    auto* alpha = app.add_subcommand("alpha", "one Galois Stiefel-Whitney class");
    alpha->add_option("--g", g, "genus")->required();
    alpha->add_option("--parity", parity, "odd|even|all")->required();
    alpha->add_option("--degree", degree, "class degree")->required();
    alpha->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, g_range, n_range, format);
        if (dec->parsed()) return cmd_decompose(g, parity, format);
        return cmd_alpha(g, parity, degree, format);
    } catch (const UsageError& e) {
        std::cerr << "theta-sw: " << e.what() << "\n";
        return kExitUsage;
    }
}
