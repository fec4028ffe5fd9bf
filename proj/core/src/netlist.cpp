#include "zeff/netlist.hpp"

#include "zeff/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace zeff {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

bool valid_identifier(std::string_view token) {
    return !token.empty() && token.find('=') == std::string_view::npos;
}

Rational parse_literal(std::string_view text, int line) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
    }
}

Polynomial parse_coeff_list(std::string_view text, int line) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        coeffs.push_back(parse_literal(piece, line));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

// "key=value" split; returns nullopt when '=' is missing.
std::optional<std::pair<std::string_view, std::string_view>> split_assignment(std::string_view token) {
    auto eq = token.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    return std::make_pair(token.substr(0, eq), token.substr(eq + 1));
}

} // namespace

NetlistDocument parse_netlist_document(std::string_view text) {
    NetlistDocument doc;
    bool saw_name = false, saw_mode = false, saw_terminals = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens.front();

        if (keyword == "net") {
            if (saw_name || saw_mode || saw_terminals || !doc.edges.empty())
                throw ParseError("'net' must be the first statement", line_no);
            if (tokens.size() != 2) throw ParseError("expected: net <name>", line_no);
            doc.name = tokens[1];
            saw_name = true;
        } else if (keyword == "mode") {
            if (saw_mode || saw_terminals || !doc.edges.empty())
                throw ParseError("'mode' must come before 'terminals'", line_no);
            if (tokens.size() != 2 || (tokens[1] != "strict" && tokens[1] != "raw"))
                throw ParseError("expected: mode strict|raw", line_no);
            doc.mode = tokens[1] == "raw" ? NetworkMode::Raw : NetworkMode::Strict;
            saw_mode = true;
        } else if (keyword == "terminals") {
            if (saw_terminals) throw ParseError("duplicate 'terminals' line", line_no);
            if (tokens.size() != 3 || !valid_identifier(tokens[1]) || !valid_identifier(tokens[2]))
                throw ParseError("expected: terminals <a0> <a1>", line_no);
            doc.a0 = tokens[1];
            doc.a1 = tokens[2];
            saw_terminals = true;
        } else if (keyword == "edge" || keyword == "wedge") {
            if (!saw_terminals) throw ParseError("edges must come after 'terminals'", line_no);
            if (tokens.size() < 3 || !valid_identifier(tokens[1]) || !valid_identifier(tokens[2]))
                throw ParseError("expected: " + keyword + " <x> <y> ...", line_no);

            EdgeStatement edge;
            edge.x = tokens[1];
            edge.y = tokens[2];
            edge.line = line_no;

            if (keyword == "edge") {
                bool saw_r = false, saw_l = false, saw_c = false;
                for (std::size_t i = 3; i < tokens.size(); ++i) {
                    auto kv = split_assignment(tokens[i]);
                    if (!kv) throw ParseError("expected R=, L= or C= parameter, got '" + tokens[i] + "'", line_no);
                    auto [key, value] = *kv;
                    if (key == "R") {
                        if (saw_r) throw ParseError("duplicate R=", line_no);
                        edge.resistance = parse_literal(value, line_no);
                        saw_r = true;
                    } else if (key == "L") {
                        if (saw_l) throw ParseError("duplicate L=", line_no);
                        edge.inductance = parse_literal(value, line_no);
                        saw_l = true;
                    } else if (key == "C") {
                        if (saw_c) throw ParseError("duplicate C=", line_no);
                        saw_c = true;
                        if (value == "inf") {
                            edge.elastance = 0;
                        } else {
                            Rational c = parse_literal(value, line_no);
                            if (c <= 0) throw ParseError("capacitance must be positive or inf", line_no);
                            edge.elastance = Rational(1) / c;
                        }
                    } else {
                        throw ParseError("unknown edge parameter '" + std::string(key) + "'", line_no);
                    }
                }
            } else {
                if (doc.mode != NetworkMode::Raw) throw ParseError("wedge requires 'mode raw'", line_no);
                edge.is_raw = true;
                bool saw_num = false, saw_den = false;
                Polynomial num, den;
                for (std::size_t i = 3; i < tokens.size(); ++i) {
                    auto kv = split_assignment(tokens[i]);
                    if (!kv) throw ParseError("expected num= and den= lists, got '" + tokens[i] + "'", line_no);
                    auto [key, value] = *kv;
                    if (key == "num") {
                        if (saw_num) throw ParseError("duplicate num=", line_no);
                        num = parse_coeff_list(value, line_no);
                        saw_num = true;
                    } else if (key == "den") {
                        if (saw_den) throw ParseError("duplicate den=", line_no);
                        den = parse_coeff_list(value, line_no);
                        saw_den = true;
                    } else {
                        throw ParseError("unknown wedge parameter '" + std::string(key) + "'", line_no);
                    }
                }
                if (!saw_num || !saw_den) throw ParseError("wedge needs both num= and den=", line_no);
                if (den.is_zero()) throw ParseError("wedge denominator is zero", line_no);
                edge.weight = RationalFunction(std::move(num), std::move(den));
            }
            doc.edges.push_back(std::move(edge));
        } else {
            throw ParseError("unknown statement '" + keyword + "'", line_no);
        }
    }

    if (!saw_terminals) throw ParseError("missing 'terminals' line", line_no);
    if (doc.edges.empty()) throw ParseError("netlist has no edges", line_no);
    return doc;
}

Network build_network(const NetlistDocument& doc) {
    std::vector<std::string> vertices{doc.a0};
    if (doc.a1 != doc.a0) vertices.push_back(doc.a1);
    auto declare = [&](const std::string& name) {
        if (std::find(vertices.begin(), vertices.end(), name) == vertices.end()) vertices.push_back(name);
    };

    std::vector<EdgeSpec> edges;
    edges.reserve(doc.edges.size());
    for (const EdgeStatement& e : doc.edges) {
        declare(e.x);
        declare(e.y);
        EdgeParams params = e.is_raw ? EdgeParams::raw(e.weight)
                                     : EdgeParams::rlc(e.resistance, e.inductance, e.elastance);
        edges.push_back({e.x, e.y, std::move(params)});
    }
    return build_network(std::move(vertices), edges, doc.a0, doc.a1, doc.mode);
}

Network parse_netlist(std::string_view text) { return build_network(parse_netlist_document(text)); }

std::string render_netlist(const NetlistDocument& doc) {
    std::ostringstream out;
    if (!doc.name.empty()) out << "net " << doc.name << "\n";
    if (doc.mode == NetworkMode::Raw) out << "mode raw\n";
    out << "terminals " << doc.a0 << " " << doc.a1 << "\n";
    for (const EdgeStatement& e : doc.edges) {
        if (e.is_raw) {
            out << "wedge " << e.x << " " << e.y << " num=";
            const auto& num = e.weight.num().coeffs();
            const auto& den = e.weight.den().coeffs();
            for (std::size_t i = 0; i < num.size(); ++i) out << (i ? "," : "") << format_rational(num[i]);
            if (num.empty()) out << "0";
            out << " den=";
            for (std::size_t i = 0; i < den.size(); ++i) out << (i ? "," : "") << format_rational(den[i]);
            out << "\n";
        } else {
            out << "edge " << e.x << " " << e.y;
            if (e.resistance != 0) out << " R=" << format_rational(e.resistance);
            if (e.inductance != 0) out << " L=" << format_rational(e.inductance);
            if (e.elastance != 0) out << " C=" << format_rational(Rational(1) / e.elastance);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace zeff
