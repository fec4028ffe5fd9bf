// Command-line front end: solve, sweep, singular, compare, check.

#include "zeff/zeff.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // bad arguments or unparsable input
constexpr int kExitValidation = 2; // structurally invalid network
constexpr int kExitCheckFailed = 3;
constexpr int kExitNumeric = 4;    // pole hit or iteration did not converge

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zeff::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

zeff::Complex parse_lambda(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw zeff::ParseError("--lambda expects RE,IM");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw zeff::ParseError("--lambda expects two real numbers");
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw zeff::ParseError("cannot write '" + out_path + "'");
    out << text;
}

struct SolveArgs {
    std::string file, out, lambda_text;
    bool symbolic = false;
    double omega = 0.0;
    bool has_omega = false;
    double tol = zeff::defaults::rank_tolerance;
};

int run_solve(const SolveArgs& args) {
    zeff::Network net = zeff::parse_netlist(read_file(args.file));
    std::string text;
    if (args.symbolic) {
        zeff::SymbolicImpedanceResult r = zeff::effective_symbolic(net);
        text = "Z " + zeff::format_ratfunc_record(r.Z) + "\n" + "P " + zeff::format_ratfunc_record(r.P) + "\n";
    } else {
        zeff::Complex lambda = args.has_omega ? zeff::Complex(0.0, args.omega) : parse_lambda(args.lambda_text);
        text = zeff::format_impedance_result(zeff::effective_complex(net, lambda, args.tol));
    }
    write_output(text, args.out);
    return kExitOk;
}

struct SweepArgs {
    std::string file, out;
    double omega_min = 0.0, omega_max = 0.0;
    int points = 0;
    bool log_spacing = false;
    double tol = zeff::defaults::rank_tolerance;
};

int run_sweep(const SweepArgs& args) {
    zeff::Network net = zeff::parse_netlist(read_file(args.file));
    auto rows = zeff::sweep(net, args.omega_min, args.omega_max, args.points, args.log_spacing, args.tol);
    write_output(zeff::sweep_csv(rows), args.out);
    return kExitOk;
}

int run_singular(const std::string& file, double tol) {
    zeff::Network net = zeff::parse_netlist(read_file(file));
    if (zeff::determinant_symbolic(net).is_zero()) {
        std::cout << "determinant=0\n";
        return kExitOk;
    }
    for (const auto& s : zeff::singular_frequencies(net, tol)) {
        std::cout << "root=" << zeff::format_complex(s.location) << " multiplicity=" << s.multiplicity
                  << " physical=" << (s.physical ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int run_compare(const std::string& file, const std::optional<double>& omega, const std::string& lambda_text,
                double tol) {
    zeff::Network net = zeff::parse_netlist(read_file(file));
    zeff::Complex lambda = omega ? zeff::Complex(0.0, *omega) : parse_lambda(lambda_text);

    if (!net.all_weights_positive()) {
        // The exact impedance does not exist for such weightings; report
        // the one-sided result instead of failing.
        zeff::ComplexImpedanceResult r = zeff::effective_complex(net, lambda, zeff::defaults::rank_tolerance);
        std::cout << "lambda=" << zeff::format_complex(lambda) << "\n"
                  << "Z1=" << zeff::format_ext_complex(r.Z) << "\n"
                  << "Z2=unavailable\n"
                  << "agree=false\n"
                  << "note=not-applicable\n";
        return kExitOk;
    }

    zeff::ComparisonReport report = zeff::compare_impedances(net, lambda, tol);
    std::cout << "lambda=" << zeff::format_complex(report.lambda) << "\n"
              << "Z1=" << zeff::format_ext_complex(report.Z1) << "\n"
              << "Z2=" << (report.z2_pole ? "pole" : zeff::format_ext_complex(report.Z2)) << "\n"
              << "agree=" << (report.agree ? "true" : "false") << "\n"
              << "note=" << zeff::note_name(report.note) << "\n";
    return kExitOk;
}

int run_check(const std::string& file, std::uint64_t seed, int trials) {
    zeff::Network net = zeff::parse_netlist(read_file(file));
    zeff::VerifyOptions options;
    options.thomson_trials = trials;
    auto reports = zeff::run_all(net, seed, options);
    bool failed = false;
    for (const auto& report : reports) {
        std::cout << zeff::format_check_report(report) << "\n";
        failed = failed || report.status == zeff::CheckStatus::Fail;
    }
    return failed ? kExitCheckFailed : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective impedance of finite RLC networks"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Effective impedance of one netlist");
    solve->add_option("file", solve_args.file, "netlist file")->required();
    auto* sym = solve->add_flag("--symbolic", solve_args.symbolic, "exact impedance as a rational function");
    auto* omega_opt = solve->add_option("--omega", solve_args.omega, "physical frequency; lambda = i*omega");
    auto* lambda_opt = solve->add_option("--lambda", solve_args.lambda_text, "complex lambda as RE,IM");
    sym->excludes(omega_opt)->excludes(lambda_opt);
    omega_opt->excludes(lambda_opt)->check(CLI::PositiveNumber);
    solve->add_option("--tol", solve_args.tol, "rank tolerance for the complex solve");
    solve->add_option("--out", solve_args.out, "write results to a file instead of stdout");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Impedance over a frequency grid (CSV)");
    sweep_cmd->add_option("file", sweep_args.file, "netlist file")->required();
    sweep_cmd->add_option("--omega-min", sweep_args.omega_min)->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--omega-max", sweep_args.omega_max)->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--points", sweep_args.points)->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--log", sweep_args.log_spacing, "geometric instead of uniform grid");
    sweep_cmd->add_option("--tol", sweep_args.tol, "rank tolerance for the complex solves");
    sweep_cmd->add_option("--out", sweep_args.out, "write the CSV to a file");

    std::string singular_file;
    double singular_tol = zeff::defaults::comparison_tolerance;
    auto* singular_cmd = app.add_subcommand("singular", "Zeros of the Dirichlet determinant");
    singular_cmd->add_option("file", singular_file, "netlist file")->required();
    singular_cmd->add_option("--tol", singular_tol, "classification tolerance");

    std::string compare_file, compare_lambda;
    double compare_omega = 0.0;
    double compare_tol = zeff::defaults::comparison_tolerance;
    auto* compare_cmd = app.add_subcommand("compare", "Numeric vs exact impedance at one frequency");
    compare_cmd->add_option("file", compare_file, "netlist file")->required();
    auto* c_omega = compare_cmd->add_option("--omega", compare_omega)->check(CLI::PositiveNumber);
    auto* c_lambda = compare_cmd->add_option("--lambda", compare_lambda, "complex lambda as RE,IM");
    c_omega->excludes(c_lambda);
    compare_cmd->add_option("--tol", compare_tol, "relative agreement tolerance");

    std::string check_file;
    std::uint64_t check_seed = 1;
    int check_trials = 100;
    auto* check_cmd = app.add_subcommand("check", "Run the randomized theorem suite");
    check_cmd->add_option("file", check_file, "netlist file")->required();
    check_cmd->add_option("--seed", check_seed, "seed for the randomized checks");
    check_cmd->add_option("--trials", check_trials, "energy-minimality competitors")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);

        if (*solve) {
            solve_args.has_omega = omega_opt->count() > 0;
            if (!solve_args.symbolic && !solve_args.has_omega && lambda_opt->count() == 0)
                throw CLI::RequiredError("one of --symbolic, --omega, --lambda");
            return run_solve(solve_args);
        }
        if (*sweep_cmd) return run_sweep(sweep_args);
        if (*singular_cmd) return run_singular(singular_file, singular_tol);
        if (*compare_cmd) {
            if (c_omega->count() == 0 && c_lambda->count() == 0)
                throw CLI::RequiredError("one of --omega, --lambda");
            std::optional<double> omega;
            if (c_omega->count() > 0) omega = compare_omega;
            return run_compare(compare_file, omega, compare_lambda, compare_tol);
        }
        if (*check_cmd) return run_check(check_file, check_seed, check_trials);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const zeff::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zeff::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const zeff::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
        return kExitNumeric;
    } catch (const zeff::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
