#include "cli.hpp"

#include "adjpow/coefficients.hpp"
#include "adjpow/combinatorics.hpp"
#include "adjpow/lie_oracle.hpp"
#include "adjpow/render.hpp"
#include "adjpow/self_check.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace adjpow::cli {

namespace {

struct Options {
    std::string table_kind;
    int table_max = 0;

    int coeffs_k = -1;
    int coeffs_upto = -1;

    int series_k = 0;
    int series_order = 0;

    std::string verify_target;
    int verify_max = 30;
    int verify_kmax = 0;
    int verify_n = 0;
    std::string verify_format = "text";

    std::string format = "markdown";
};

int run_table(const Options& opt, std::ostream& out) {
    const auto format = parse_format(opt.format);
    if (opt.table_kind == "euler") {
        out << render(to_indexed(euler_table(opt.table_max)), format);
    } else if (opt.table_kind == "derangement") {
        const auto d = derangement_sequence(opt.table_max, DerangementMethod::adjacent);
        out << render(derangement_indexed(d), format);
    } else {
        out << render(to_indexed(higher_derangement_table(opt.table_max)), format);
    }
    return kExitOk;
}

int run_coeffs(const Options& opt, std::ostream& out) {
    const auto format = parse_format(opt.format);
    if ((opt.coeffs_k >= 0) == (opt.coeffs_upto >= 0)) {
        throw DomainError("coeffs needs exactly one of --k or --upto");
    }
    if (opt.coeffs_k >= 0) {
        out << render_row(coefficient_row(opt.coeffs_k), format);
    } else {
        out << render_table(decomposition_table(opt.coeffs_upto), format);
    }
    return kExitOk;
}

int run_series(const Options& opt, std::ostream& out) {
    const auto format = parse_format(opt.format);
    out << render(to_indexed(egf_coefficients(opt.series_k, opt.series_order)), format);
    return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const bool json = opt.verify_format == "json";
    if (opt.verify_target == "combinatorics") {
        const auto report = verify_combinatorics(opt.verify_max);
        out << (json ? report_to_json(report) : report_to_text(report));
        return report.pass ? kExitOk : kExitVerificationFailed;
    }
    if (opt.verify_kmax < 1) throw DomainError("verify oracle needs --kmax >= 1");
    const Rank rank(opt.verify_n);
    const auto report = verify_stable_decomposition(opt.verify_kmax, rank);
    out << (json ? report_to_json(report) : report_to_text(report));
    for (const auto& check : report.powers) {
        err << "k=" << check.k << " " << std::fixed << std::setprecision(1)
            << check.elapsed_ms << " ms\n";
    }
    err << "total " << std::fixed << std::setprecision(1) << report.elapsed_ms << " ms\n";
    return report.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Adjoint tensor power decomposition coefficients of A_n", "adjpow"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"markdown", "csv", "json"};

    auto* table = app.add_subcommand("table", "Euler difference table and derangement tables");
    table->add_option("kind", opt.table_kind, "euler, derangement or higher")
        ->required()
        ->check(CLI::IsMember({"euler", "derangement", "higher"}));
    table->add_option("--max", opt.table_max, "largest index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--format", opt.format)->check(CLI::IsMember(formats));

    auto* coeffs = app.add_subcommand("coeffs", "Decomposition coefficients c_j^k");
    auto* k_opt = coeffs->add_option("--k", opt.coeffs_k, "single power k")
                      ->check(CLI::NonNegativeNumber);
    auto* upto_opt = coeffs->add_option("--upto", opt.coeffs_upto, "rows 1..K")
                         ->check(CLI::NonNegativeNumber);
    k_opt->excludes(upto_opt);
    coeffs->add_option("--format", opt.format)->check(CLI::IsMember(formats));

    auto* series = app.add_subcommand("series", "Coefficients of e^{-x}/(1-x)^{k+1}");
    series->add_option("--k", opt.series_k)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--order", opt.series_order)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--format", opt.format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Cross-formula and Lie-theoretic checks");
    verify->add_option("target", opt.verify_target, "combinatorics or oracle")
        ->required()
        ->check(CLI::IsMember({"combinatorics", "oracle"}));
    verify->add_option("--max", opt.verify_max, "largest index for combinatorics")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--kmax", opt.verify_kmax, "largest power for oracle")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--n", opt.verify_n, "rank of A_n for oracle")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", opt.verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        // CLI11 consumes a vector from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "adjpow: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (table->parsed()) return run_table(opt, out);
        if (coeffs->parsed()) return run_coeffs(opt, out);
        if (series->parsed()) return run_series(opt, out);
        if (opt.verify_target == "oracle" && verify->count("--n") == 0) {
            throw DomainError("verify oracle needs --kmax and --n");
        }
        return run_verify(opt, out, err);
    } catch (const DomainError& e) {
        err << "adjpow: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // Exact-division and oracle failures falsify a formula.
        err << "adjpow: verification failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace adjpow::cli
