#pragma once

#include "zeff/network.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zeff {

// Line-oriented netlist format; '#' starts a comment, blank lines are
// ignored, header lines come in this order:
//
//   net <name>                    (optional)
//   mode strict|raw               (optional, strict is the default)
//   terminals <a0> <a1>
//   edge <x> <y> [R=<lit>] [L=<lit>] [C=<lit>|inf]
//   wedge <x> <y> num=<c0,c1,...> den=<c0,c1,...>
//
// Numeric literals are exact: "p/q" fractions, decimal strings, or
// integers. Omitted R and L default to 0; an omitted or "inf" C means no
// capacitor. wedge gives a raw rational-function weight by ascending
// coefficient lists and is only legal in raw mode. Vertices are declared
// implicitly by the edges.

/// One edge statement as written, keeping the exact parameters so a
/// document can be rendered back.
struct EdgeStatement {
    std::string x, y;
    bool is_raw = false;
    Rational resistance, inductance, elastance; // for edge lines
    RationalFunction weight;                    // for wedge lines
    int line = 0;
};

struct NetlistDocument {
    std::string name;
    NetworkMode mode = NetworkMode::Strict;
    std::string a0, a1;
    std::vector<EdgeStatement> edges;
};

/// Parses the textual format above. Throws ParseError (with the line
/// number) for malformed input; semantic problems surface later, from
/// build_network.
NetlistDocument parse_netlist_document(std::string_view text);

/// Builds the network a document describes: vertices appear in order of
/// first mention (terminals first), then build_network validation applies.
Network build_network(const NetlistDocument& doc);

/// parse + build in one step.
Network parse_netlist(std::string_view text);

/// Canonical rendering; parse(render(parse(text))) renders identically.
std::string render_netlist(const NetlistDocument& doc);

} // namespace zeff
