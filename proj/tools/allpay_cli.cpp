// Command-line front end: solve/verify/sweep/dist/h with JSON and CSV output.
// Machine output goes to stdout; notices and errors go to stderr.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verify found a profile
// that is not an equilibrium.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "allpay/certify.hpp"
#include "allpay/dist.hpp"
#include "allpay/equilibria.hpp"
#include "allpay/payoff.hpp"
#include "allpay/statics.hpp"

namespace {

using allpay::FiniteDist;
using allpay::Rational;
using allpay::Valuations;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Orders the valuations stronger-first, with a stderr notice when the input
// had them the other way around. `swapped` tells the caller to swap any
// player-indexed inputs the same way.
Valuations oriented(const std::string& v1_text, const std::string& v2_text, bool& swapped) {
    Rational a = Rational::parse(v1_text);
    Rational b = Rational::parse(v2_text);
    swapped = a < b;
    if (swapped) {
        std::cerr << "note: v1 < v2 on input; roles swapped (output player 1 is the stronger player)\n";
        return Valuations(b, a);
    }
    return Valuations(a, b);
}

int run_solve(const std::string& v1_text, const std::string& v2_text, const std::string& params_text,
              bool all_ranges) {
    bool swapped = false;
    Valuations val = oriented(v1_text, v2_text, swapped);
    allpay::EqParams params =
        params_text.empty() ? allpay::canonical_params(val) : allpay::params_from_json(val, params_text);
    allpay::Profile profile = allpay::build_equilibrium(val, params);
    allpay::PayoffRange range = allpay::payoff_range(val);
    if (all_ranges) {
        allpay::ParamSpace space = allpay::param_space(val);
        std::cout << allpay::profile_to_json(val, params, profile, &range, &space) << '\n';
    } else {
        std::cout << allpay::profile_to_json(val, params, profile, &range) << '\n';
    }
    return 0;
}

int run_verify(const std::string& v1_text, const std::string& v2_text, const std::string& x_path,
               const std::string& y_path) {
    bool swapped = false;
    Valuations val = oriented(v1_text, v2_text, swapped);
    FiniteDist x = allpay::dist_from_json(slurp(x_path));
    FiniteDist y = allpay::dist_from_json(slurp(y_path));
    if (swapped) std::swap(x, y);
    allpay::Certificate cert = allpay::certify_allpay(val, x, y);
    std::cout << allpay::certificate_to_json(cert) << '\n';
    return cert.is_equilibrium ? 0 : 2;
}

int run_sweep(const std::string& v1_text, const std::string& lo_text, const std::string& hi_text,
              const std::string& step_text, int decimal) {
    auto rows = allpay::sweep(Rational::parse(v1_text), Rational::parse(lo_text), Rational::parse(hi_text),
                              Rational::parse(step_text));
    allpay::write_sweep_csv(std::cout, rows, decimal);
    return 0;
}

int run_dist(const std::string& builder, const std::vector<int>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("builder '" + builder + "' takes " + std::to_string(n) + " argument(s)");
    };
    FiniteDist d = allpay::dirac(0);
    if (builder == "dirac") {
        need(1);
        d = allpay::dirac(args[0]);
    } else if (builder == "uniform-odd") {
        need(1);
        d = allpay::uniform_odd(args[0]);
    } else if (builder == "uniform-even") {
        need(1);
        d = allpay::uniform_even(args[0]);
    } else if (builder == "uniform-odd-shift") {
        need(1);
        d = allpay::uniform_odd_shift(args[0]);
    } else if (builder == "w") {
        need(2);
        d = allpay::w_dist(args[0], args[1]);
    } else if (builder == "v") {
        need(2);
        d = allpay::v_dist(args[0], args[1]);
    } else {
        throw std::invalid_argument(
            "unknown builder '" + builder +
            "' (expected dirac, uniform-odd, uniform-even, uniform-odd-shift, w, or v)");
    }
    std::cout << allpay::dist_to_json(d) << '\n';
    return 0;
}

int run_h(const std::string& x_path, const std::string& y_path) {
    FiniteDist x = allpay::dist_from_json(slurp(x_path));
    FiniteDist y = allpay::dist_from_json(slurp(y_path));
    std::cout << allpay::h_value(x, y).str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and verifier for discrete two-player all-pay auctions"};
    app.require_subcommand(1);

    std::string v1_text, v2_text, params_text, x_path, y_path;
    std::string lo_text, hi_text, step_text, builder;
    std::vector<int> builder_args;
    bool all_ranges = false;
    int decimal = -1;

    auto* solve = app.add_subcommand("solve", "Print an equilibrium profile with payoffs and payoff ranges");
    solve->add_option("--v1", v1_text, "Player 1's prize value (p/q or decimal)")->required();
    solve->add_option("--v2", v2_text, "Player 2's prize value")->required();
    solve->add_option("--params", params_text, "Explicit parameter point as a JSON object");
    solve->add_flag("--all-ranges", all_ranges, "Include the free-parameter region description");

    auto* verify = app.add_subcommand("verify", "Certify a profile read from two distribution JSON files");
    verify->add_option("--v1", v1_text)->required();
    verify->add_option("--v2", v2_text)->required();
    verify->add_option("x", x_path, "Player 1's distribution JSON file")->required();
    verify->add_option("y", y_path, "Player 2's distribution JSON file")->required();

    auto* sweep = app.add_subcommand("sweep", "CSV of player 2's payoff vs the continuous benchmark");
    sweep->add_option("--v1", v1_text)->required();
    sweep->add_option("--v2-min", lo_text)->required();
    sweep->add_option("--v2-max", hi_text)->required();
    sweep->add_option("--step", step_text)->required();
    sweep->add_option("--decimal", decimal, "Render k-digit decimal approximations instead of p/q");

    auto* dist = app.add_subcommand("dist", "Print a building-block distribution as JSON");
    dist->add_option("builder", builder, "dirac | uniform-odd | uniform-even | uniform-odd-shift | w | v")
        ->required();
    dist->add_option("args", builder_args, "Builder arguments");

    auto* h = app.add_subcommand("h", "Print H(X,Y) = Pr(X>Y) - Pr(X<Y) for two distribution files");
    h->add_option("x", x_path)->required();
    h->add_option("y", y_path)->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(v1_text, v2_text, params_text, all_ranges);
        if (verify->parsed()) return run_verify(v1_text, v2_text, x_path, y_path);
        if (sweep->parsed()) return run_sweep(v1_text, lo_text, hi_text, step_text, decimal);
        if (dist->parsed()) return run_dist(builder, builder_args);
        if (h->parsed()) return run_h(x_path, y_path);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
