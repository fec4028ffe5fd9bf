// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any failed. Needs the paths to the CLI binary and the
// shipped netlists:
//
//   zeff_acceptance --cli <path-to-zeff> --netlists <dir>

#include "zeff/zeff.hpp"

#include "support/composition_oracle.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace zeff;
using namespace zeff::tests;

namespace {

std::string g_cli;
std::string g_netlists;

struct Criterion {
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok_ = false;
            std::cerr << "    failed: " << what << "\n";
        }
    }

    bool finish() const {
        std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << title_ << "\n";
        return ok_;
    }

private:
    std::string title_;
    bool ok_ = true;
};

std::string netlist_path(const std::string& name) { return g_netlists + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Network load(const std::string& name) { return parse_netlist(read_file(netlist_path(name))); }

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = g_cli + " " + args;
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

bool close(Complex a, Complex b, double tol = 1e-8) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// --- criteria ----------------------------------------------------------------

bool criterion_golden_symbolic() {
    Criterion c("criterion 1: golden exact impedances and interior solutions");

    Network bridge = load("nontrivial.net");
    auto bridge_z = effective_symbolic(bridge);
    c.expect(bridge_z.Z == rf({1, 3, 1, 1}, {1, 2, 3}), "bridge impedance");
    SymbolicSolution v = solve_symbolic(bridge);
    c.expect(v.values[static_cast<std::size_t>(vertex(bridge, "x"))] == rf({0, 1, 1, 1}, {1, 3, 1, 1}),
             "bridge interior v(x)");
    c.expect(v.values[static_cast<std::size_t>(vertex(bridge, "y"))] == rf({1, 2}, {1, 3, 1, 1}),
             "bridge interior v(y)");

    c.expect(effective_symbolic(load("complexomega.net")).Z == rf({1, 0, 1}, {1, 1, 1}),
             "five-vertex agree/disagree network impedance");
    c.expect(effective_symbolic(load("solutions.net")).Z == rf({1, 1, 3, 3}, {1, 2, 5, 1, 1}),
             "five-vertex resonant network impedance");
    c.expect(effective_symbolic(load("nonposw.net")).Z == RationalFunction::one(), "raw positive-weight network");
    return c.finish();
}

bool criterion_complex_classification() {
    Criterion c("criterion 2: complex classification and conventions");
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

    Network sols = load("solutions.net");
    auto multiple = effective_complex(sols, Complex(0.0, sqrt2));
    c.expect(multiple.cls == SolutionClass::Multiple, "resonant network: class at i*sqrt(2)");
    c.expect(!multiple.Z.infinite && close(multiple.Z.value, Complex(1.0, sqrt2)), "resonant network: Z at i*sqrt(2)");

    auto none = effective_complex(sols, Complex(0.0, inv_sqrt3));
    c.expect(none.cls == SolutionClass::None, "resonant network: class at i/sqrt(3)");
    c.expect(none.Z.value == Complex(0.0) && none.P.infinite, "no-solution convention Z=0, P=inf");

    Network bridge = load("nontrivial.net");
    auto at_i = effective_complex(bridge, Complex(0.0, 1.0));
    c.expect(at_i.cls == SolutionClass::Multiple, "bridge: class at i");
    c.expect(close(at_i.Z.value, Complex(0.5, -0.5)), "bridge: Z at i");
    auto bridge_cmp = compare_impedances(bridge, Complex(0.0, 1.0));
    c.expect(bridge_cmp.agree, "bridge: definitions agree at i");

    Network omega = load("complexomega.net");
    auto omega_at_i = compare_impedances(omega, Complex(0.0, 1.0));
    c.expect(omega_at_i.agree, "agree/disagree network: agree at i");
    c.expect(!omega_at_i.Z1.infinite && close(omega_at_i.Z1.value, Complex(0.0, 0.0)), "both impedances zero at i");
    c.expect(close(omega_at_i.Z2.value, Complex(0.0, 0.0)), "exact impedance zero at i");

    auto omega_at_minus1 = compare_impedances(omega, Complex(-1.0, 0.0));
    c.expect(!omega_at_minus1.agree, "agree/disagree network: disagree at -1");
    c.expect(close(omega_at_minus1.Z1.value, Complex(-2.0 / 3.0, 0.0)), "numeric -2/3 at -1");
    c.expect(close(omega_at_minus1.Z2.value, Complex(2.0, 0.0)), "exact 2 at -1");

    Network raw = load("nonposw.net");
    auto raw_result = effective_complex(raw, Complex(0.0, 1.0));
    c.expect(raw_result.cls == SolutionClass::None, "raw network: class None at i");
    auto raw_cmp = compare_impedances(raw, Complex(0.0, 1.0));
    c.expect(!raw_cmp.agree, "raw network: disagree at i");
    c.expect(raw_cmp.Z1.value == Complex(0.0) && close(raw_cmp.Z2.value, Complex(1.0, 0.0)),
             "raw network: 0 vs 1 at i");
    return c.finish();
}

bool criterion_singular_frequencies() {
    Criterion c("criterion 3: singular frequencies");
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

    auto sols = singular_frequencies(load("solutions.net"));
    std::vector<double> physical;
    for (const auto& s : sols) {
        if (s.physical) physical.push_back(s.location.imag());
    }
    std::sort(physical.begin(), physical.end());
    c.expect(physical.size() == 2, "resonant network: two physical singular frequencies");
    if (physical.size() == 2) {
        c.expect(std::abs(physical[0] - inv_sqrt3) <= 1e-8, "i/sqrt(3) located");
        c.expect(std::abs(physical[1] - sqrt2) <= 1e-8, "i*sqrt(2) located");
    }

    auto bridge = singular_frequencies(load("nontrivial.net"));
    int bridge_physical = 0;
    bool bridge_at_i = false;
    for (const auto& s : bridge) {
        if (s.physical) {
            ++bridge_physical;
            bridge_at_i = std::abs(s.location - Complex(0.0, 1.0)) <= 1e-8;
        }
    }
    c.expect(bridge_physical == 1 && bridge_at_i, "bridge: physical singular set {i}");

    bool degenerate_reported = false;
    try {
        singular_frequencies(load("minuslambda.net"));
    } catch (const ValidationError&) {
        degenerate_reported = true;
    }
    c.expect(degenerate_reported, "sign-flipped weighting: identically zero determinant reported");
    return c.finish();
}

bool criterion_theorem_suite() {
    Criterion c("criterion 4: randomized theorem suite (100 networks)");
    VerifyOptions options; // 100 competitors, 20 cramer points, 5 conservation points

    std::vector<Network> nets;
    Rng rng(20250810);
    for (int i = 0; i < 100; ++i) nets.push_back(random_strict_network(rng, 4, 8));
    // the worked examples force multiple-solution cases through the suite
    nets.push_back(load("solutions.net"));
    nets.push_back(load("nontrivial.net"));
    nets.push_back(load("complexomega.net"));
    nets.push_back(load("nonposw.net"));
    nets.push_back(load("minuslambda.net"));

    int failures = 0;
    int multiple_cases = 0;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        auto reports = run_all(nets[i], 1000 + i, options);
        for (const auto& report : reports) {
            if (report.status == CheckStatus::Fail) {
                ++failures;
                std::cerr << "    network " << i << ": " << format_check_report(report) << "\n";
            }
            if (report.name == "multiple-invariance") {
                auto pos = report.instance.find('=');
                if (pos != std::string::npos) multiple_cases += std::stoi(report.instance.substr(pos + 1));
            }
        }
    }
    c.expect(failures == 0, "no check may fail");
    c.expect(multiple_cases >= 4, "multiple-solution cases were exercised");
    return c.finish();
}

bool criterion_composition_oracle() {
    Criterion c("criterion 5: series/parallel reduction oracle");
    Rng rng(424242);
    const Rational pool[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(5)};
    auto draw = [&]() {
        for (;;) {
            Rational r = pool[rng.uniform_int(0, 4)], l = pool[rng.uniform_int(0, 4)], d = pool[rng.uniform_int(0, 4)];
            if (r == 0 && l == 0 && d == 0) continue;
            return std::array<Rational, 3>{r, l, d};
        }
    };

    for (int count = 1; count <= 4; ++count) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<RationalFunction> impedances;
            std::vector<std::string> names{"a0"};
            std::vector<EdgeSpec> edges;
            for (int k = 0; k < count; ++k) {
                auto [r, l, d] = draw();
                impedances.push_back(edge_impedance(r, l, d));
                std::string next = k + 1 == count ? "a1" : "m" + std::to_string(k);
                edges.push_back({names.back(), next, EdgeParams::rlc(r, l, d)});
                names.push_back(next);
            }
            Network chain = build_network(names, edges, "a0", "a1", NetworkMode::Strict);
            c.expect(effective_symbolic(chain).Z == series_impedance(impedances),
                     "series chain of " + std::to_string(count));
        }
    }

    for (int count = 2; count <= 4; ++count) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<RationalFunction> impedances;
            std::vector<EdgeSpec> edges;
            for (int k = 0; k < count; ++k) {
                auto [r, l, d] = draw();
                impedances.push_back(edge_impedance(r, l, d));
                edges.push_back({"a0", "a1", EdgeParams::rlc(r, l, d)});
            }
            Network bundle = build_network({"a0", "a1"}, edges, "a0", "a1", NetworkMode::Strict);
            c.expect(effective_symbolic(bundle).Z == parallel_impedance(impedances),
                     "parallel bundle of " + std::to_string(count));
        }
    }

    // two parallel pairs in series
    for (int trial = 0; trial < 8; ++trial) {
        auto [r1, l1, d1] = draw();
        auto [r2, l2, d2] = draw();
        auto [r3, l3, d3] = draw();
        auto [r4, l4, d4] = draw();
        Network net = build_network({"a0", "m", "a1"},
                                    {{"a0", "m", EdgeParams::rlc(r1, l1, d1)},
                                     {"a0", "m", EdgeParams::rlc(r2, l2, d2)},
                                     {"m", "a1", EdgeParams::rlc(r3, l3, d3)},
                                     {"m", "a1", EdgeParams::rlc(r4, l4, d4)}},
                                    "a0", "a1", NetworkMode::Strict);
        RationalFunction expected = series_impedance(
            {parallel_impedance({edge_impedance(r1, l1, d1), edge_impedance(r2, l2, d2)}),
             parallel_impedance({edge_impedance(r3, l3, d3), edge_impedance(r4, l4, d4)})});
        c.expect(effective_symbolic(net).Z == expected, "series of two parallel pairs");
    }
    return c.finish();
}

bool criterion_cli() {
    Criterion c("criterion 6: command-line interface on the shipped netlists");

    const std::array<const char*, 5> files{"solutions.net", "nontrivial.net", "minuslambda.net", "nonposw.net",
                                           "complexomega.net"};
    for (const char* file : files) {
        std::string path = netlist_path(file);
        bool degenerate = std::string(file) == "minuslambda.net";

        CliResult solve = run_cli(degenerate ? "solve " + path + " --omega 1" : "solve " + path + " --symbolic");
        c.expect(solve.exit_code == 0, std::string("solve exits 0 for ") + file);

        CliResult swept = run_cli("sweep " + path + " --omega-min 1 --omega-max 2 --points 3");
        c.expect(swept.exit_code == 0, std::string("sweep exits 0 for ") + file);
        c.expect(contains(swept.output, "omega,re_Z,im_Z,class"), std::string("sweep header for ") + file);

        CliResult singular = run_cli("singular " + path);
        c.expect(singular.exit_code == 0, std::string("singular exits 0 for ") + file);
        if (degenerate) c.expect(contains(singular.output, "determinant=0"), "degenerate determinant reported");

        std::string compare_args;
        if (std::string(file) == "complexomega.net") {
            compare_args = "compare " + path + " --lambda -1,0";
        } else if (std::string(file) == "nonposw.net") {
            compare_args = "compare " + path + " --lambda 0,1";
        } else {
            compare_args = "compare " + path + " --omega 1";
        }
        CliResult compared = run_cli(compare_args);
        c.expect(compared.exit_code == 0, std::string("compare exits 0 for ") + file);
        if (std::string(file) == "complexomega.net" || std::string(file) == "nonposw.net") {
            c.expect(contains(compared.output, "agree=false"),
                     std::string("disagreement is a result, not an error, for ") + file);
        }
        if (degenerate) c.expect(contains(compared.output, "note=not-applicable"), "degenerate compare note");

        CliResult checked = run_cli("check " + path + " --seed 7 --trials 25");
        c.expect(checked.exit_code == 0, std::string("check exits 0 for ") + file);
        c.expect(!contains(checked.output, "status=fail"), std::string("no failed checks for ") + file);
    }

    // the worked agreement case reports agree=true
    CliResult agreeing = run_cli("compare " + netlist_path("nontrivial.net") + " --lambda 0,1");
    c.expect(agreeing.exit_code == 0 && contains(agreeing.output, "agree=true"), "bridge agrees at i");

    // CSV output is byte-stable across runs
    namespace fs = std::filesystem;
    fs::path work = fs::temp_directory_path() / ("zeff-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(work);
    std::string csv1 = (work / "sweep1.csv").string();
    std::string csv2 = (work / "sweep2.csv").string();
    std::string sweep_args = netlist_path("solutions.net") + " --omega-min 0.5 --omega-max 3 --points 21";
    c.expect(run_cli("sweep " + sweep_args + " --out " + csv1).exit_code == 0, "sweep to file");
    c.expect(run_cli("sweep " + sweep_args + " --out " + csv2).exit_code == 0, "second sweep to file");
    std::string first = read_file(csv1), second = read_file(csv2);
    c.expect(!first.empty() && first == second, "identical bytes across two sweep runs");
    fs::remove_all(work);

    // exit-status contract
    c.expect(run_cli("solve " + netlist_path("nontrivial.net")).exit_code == 1, "solve without a mode is a usage error");
    c.expect(run_cli("solve /nonexistent.net --symbolic").exit_code == 1, "missing file is a usage error");
    c.expect(run_cli("solve " + netlist_path("nontrivial.net") + " --lambda 0,0").exit_code == 4,
             "admittance pole is a numeric failure");
    {
        fs::path bad = fs::temp_directory_path() / ("zeff-bad-" + std::to_string(::getpid()) + ".net");
        std::ofstream out(bad);
        out << "terminals a0 a1\nedge a0 a1\n"; // all-zero edge triple
        out.close();
        c.expect(run_cli("solve " + bad.string() + " --symbolic").exit_code == 2,
                 "validation failure exits 2");
        fs::remove(bad);
    }
    return c.finish();
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli") g_cli = argv[++i];
        if (arg == "--netlists") g_netlists = argv[++i];
    }
    if (g_cli.empty() || g_netlists.empty()) {
        std::cerr << "usage: zeff_acceptance --cli <zeff binary> --netlists <dir>\n";
        return 2;
    }

    bool ok = true;
    ok &= criterion_golden_symbolic();
    ok &= criterion_complex_classification();
    ok &= criterion_singular_frequencies();
    ok &= criterion_theorem_suite();
    ok &= criterion_composition_oracle();
    ok &= criterion_cli();
    return ok ? 0 : 1;
}
