// Command-line front end: analyze / partition / resum / airy, JSON reports
// to stdout (or --out FILE).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "resurge/report.hpp"

namespace {

void emit(const resurge::Json& report, const std::string& out_path, bool summary) {
    std::string text = report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
    if (summary) {
        std::ostream& os = std::cerr;
        os << "# " << report.value("command", "?");
        if (report.contains("warnings") && !report["warnings"].empty())
            os << "  (" << report["warnings"].size() << " warning(s))";
        os << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resurgence analysis of holonomic ODEs and 0d partition functions"};
    app.require_subcommand(1);

    resurge::GlobalOptions opt;
    std::string out_path;
    bool summary = false;
    app.add_option("--precision", opt.precision, "working precision in bits")->default_val(256);
    app.add_option("--order", opt.order, "series truncation order")->default_val(60);
    app.add_option("--tol", opt.tol, "numeric tolerance")->default_val("1e-10");
    app.add_option("--out", out_path, "write the report to FILE instead of stdout");
    app.add_flag("--summary", summary, "print a one-line summary to stderr");

    auto* analyze = app.add_subcommand("analyze", "polygon, basis and Borel analysis");
    long k = 0;
    std::string op_text;
    analyze->add_option("--k", k, "partition-function family index");
    analyze->add_option("--op", op_text, "operator text, e.g. \"x*theta^2 + theta - 1\"");

    auto* partition = app.add_subcommand("partition", "quadrature vs series vs resummation");
    long pk = 2, pj = 0;
    std::string lambda_one, lambda_grid;
    partition->add_option("--k", pk, "potential phi^(2k)")->required();
    partition->add_option("--lambda", lambda_one, "single coupling value (rational)");
    partition->add_option("--lambda-grid", lambda_grid, "grid a:b:n of rationals");
    partition->add_option("--j", pj, "moment index (phi^(2j) weight)");

    auto* resum = app.add_subcommand("resum", "Borel-Pade-Laplace on a coefficient file");
    std::string coeffs_path, direction = "0", z_text;
    resum->add_option("--coeffs", coeffs_path, "file with one rational or 're im' per line")
        ->required();
    resum->add_option("--direction", direction, "Laplace direction theta in radians");
    resum->add_option("--z", z_text, "evaluation point z (or 're,im')")->required();

    auto* airy = app.add_subcommand("airy", "Airy coupling analysis");
    std::string q_text = "1";
    airy->add_option("--q", q_text, "position parameter q (rational or 're,im')")->required();

    CLI11_PARSE(app, argc, argv);

    resurge::set_precision_bits(opt.precision);

    try {
        if (analyze->parsed()) {
            if ((k > 0) == !op_text.empty()) {
                std::cerr << "analyze needs exactly one of --k or --op\n";
                return 2;
            }
            emit(resurge::run_analyze(op_text, k, opt), out_path, summary);
        } else if (partition->parsed()) {
            std::vector<resurge::Rational> lambdas;
            if (!lambda_one.empty()) {
                lambdas.push_back(resurge::parse_rational(lambda_one));
            } else if (!lambda_grid.empty()) {
                auto p1 = lambda_grid.find(':');
                auto p2 = lambda_grid.find(':', p1 == std::string::npos ? p1 : p1 + 1);
                if (p1 == std::string::npos || p2 == std::string::npos) {
                    std::cerr << "--lambda-grid expects a:b:n\n";
                    return 2;
                }
                resurge::Rational a = resurge::parse_rational(lambda_grid.substr(0, p1));
                resurge::Rational b = resurge::parse_rational(lambda_grid.substr(p1 + 1, p2 - p1 - 1));
                long n = std::stol(lambda_grid.substr(p2 + 1));
                if (n < 2 || !(b > a)) {
                    std::cerr << "--lambda-grid expects n >= 2 and b > a\n";
                    return 2;
                }
                for (long i = 0; i < n; ++i)
                    lambdas.push_back(a + (b - a) * resurge::Rational(i, n - 1));
            } else {
                std::cerr << "partition needs --lambda or --lambda-grid\n";
                return 2;
            }
            emit(resurge::run_partition(pk, lambdas, pj, opt), out_path, summary);
        } else if (resum->parsed()) {
            emit(resurge::run_resum(coeffs_path, direction, z_text, opt), out_path, summary);
        } else if (airy->parsed()) {
            emit(resurge::run_airy(q_text, opt), out_path, summary);
        }
    } catch (const resurge::Error& err) {
        resurge::Json j{{"error", {{"kind", resurge::error_kind_name(err.kind())},
                                   {"message", err.what()},
                                   {"index", err.index()}}}};
        std::cout << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& err) {
        resurge::Json j{{"error", {{"kind", "internal"}, {"message", err.what()}}}};
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
