#include "zeff/netlist.hpp"

#include "zeff/errors.hpp"
#include "zeff/impedance.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace zeff;
using namespace zeff::tests;

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("minimal netlist") {
    Network net = parse_netlist("terminals a0 a1\nedge a0 a1 R=1\n");
    CHECK(net.vertex_count() == 2);
    CHECK(net.merged_edges().size() == 1);
    CHECK(net.merged_edges()[0].admittance == RationalFunction::one());
}

TEST_CASE("the bridge parses to the same admittances in strict and raw form") {
    const char* strict_text =
        "terminals a0 a1\n"
        "edge a0 x L=1\n"
        "edge y a0 C=1\n"
        "edge x a1 C=1\n"
        "edge a1 y L=1\n"
        "edge x y R=1 L=1\n";
    const char* raw_text =
        "mode raw\n"
        "terminals a0 a1\n"
        "edge a0 x L=1\n"
        "edge y a0 C=1\n"
        "edge x a1 C=1\n"
        "edge a1 y L=1\n"
        "wedge x y num=1 den=1,1\n";

    Network strict = parse_netlist(strict_text);
    Network raw = parse_netlist(raw_text);
    REQUIRE(strict.merged_edges().size() == raw.merged_edges().size());
    for (std::size_t i = 0; i < strict.merged_edges().size(); ++i)
        CHECK(strict.merged_edges()[i].admittance == raw.merged_edges()[i].admittance);

    // and both agree with the programmatic fixture
    CHECK(effective_symbolic(strict).Z == rf({1, 3, 1, 1}, {1, 2, 3}));
    CHECK(effective_symbolic(raw).Z == rf({1, 3, 1, 1}, {1, 2, 3}));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_netlist(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    // a parameterless edge is grammatical; it fails validation instead
    CHECK_NOTHROW(parse_netlist_document("terminals a0 a1\nedge a0 a1\n"));
    CHECK_THROWS_AS(parse_netlist("terminals a0 a1\nedge a0 a1\n"), ValidationError);

    CHECK(line_of("terminals a0 a1\nedgy a0 a1 R=1\n") == 2);
    CHECK(line_of("terminals a0\n") == 1);
    CHECK(line_of("edge a0 a1 R=1\n") == 1); // edges before terminals
    CHECK(line_of("terminals a0 a1\nedge a0 a1 R=1 R=2\n") == 2);
    CHECK(line_of("terminals a0 a1\nedge a0 a1 Q=1\n") == 2);
    CHECK(line_of("terminals a0 a1\nedge a0 a1 R=x\n") == 2);
    CHECK(line_of("terminals a0 a1\nedge a0 a1 C=0\n") == 2);
    CHECK(line_of("terminals a0 a1\nwedge a0 a1 num=1 den=1\n") == 2); // wedge needs raw mode
    CHECK(line_of("mode raw\nterminals a0 a1\nwedge a0 a1 num=1 den=0\n") == 3);
    CHECK(line_of("mode raw\nterminals a0 a1\nwedge a0 a1 num=1\n") == 3);
    CHECK(line_of("terminals a0 a1\nmode raw\nedge a0 a1 R=1\n") == 2); // header order enforced
    CHECK(line_of("") == 1);
}

TEST_CASE("decimal and fraction literals build identical networks") {
    Network decimal = parse_netlist("terminals a b\nedge a b R=0.5 C=0.25\n");
    Network fraction = parse_netlist("terminals a b\nedge a b R=1/2 C=1/4\n");
    CHECK(decimal.merged_edges()[0].admittance == fraction.merged_edges()[0].admittance);
    // D = 1/C = 4
    CHECK(decimal.merged_edges()[0].admittance == rf({0, 1}, {4, Rational(1, 2)}));
}

TEST_CASE("capacitor bookkeeping") {
    Network inf_c = parse_netlist("terminals a b\nedge a b R=1 C=inf\n");
    CHECK(inf_c.merged_edges()[0].admittance == RationalFunction::one());

    NetlistDocument doc = parse_netlist_document("terminals a b\nedge a b C=2\n");
    CHECK(doc.edges[0].elastance == Rational(1, 2));
    CHECK(render_netlist(doc) == "terminals a b\nedge a b C=2\n");
}

TEST_CASE("comments and blank lines are ignored") {
    Network net = parse_netlist("# a comment\n\nnet demo\nterminals a0 a1 # trailing\n\nedge a0 a1 R=1 # more\n");
    CHECK(net.vertex_count() == 2);
}

TEST_CASE("rendering is idempotent at token level for the shipped netlists") {
    const char* files[] = {"solutions.net", "nontrivial.net", "minuslambda.net", "nonposw.net",
                           "complexomega.net"};
    for (const char* file : files) {
        std::string text = read_file(std::string(ZEFF_NETLIST_DIR) + "/" + file);
        NetlistDocument once = parse_netlist_document(text);
        std::string rendered = render_netlist(once);
        NetlistDocument twice = parse_netlist_document(rendered);
        CHECK(tokens_of(render_netlist(twice)) == tokens_of(rendered));
        // the rendered document still builds the same network
        Network a = build_network(once);
        Network b = build_network(twice);
        REQUIRE(a.merged_edges().size() == b.merged_edges().size());
        for (std::size_t i = 0; i < a.merged_edges().size(); ++i)
            CHECK(a.merged_edges()[i].admittance == b.merged_edges()[i].admittance);
    }
}

TEST_CASE("validation failures from the netlist surface verbatim") {
    CHECK_THROWS_AS(parse_netlist("terminals a a\nedge a b R=1\n"), ValidationError);
    CHECK_THROWS_AS(parse_netlist("terminals a b\nedge a b R=1\nedge c d R=1\n"), ValidationError);
}
