#include "zeff/network.hpp"

#include "zeff/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace zeff {

EdgeParams EdgeParams::rlc(Rational resistance, Rational inductance, Rational elastance) {
    if (resistance < 0 || inductance < 0 || elastance < 0)
        throw ValidationError("negative RLC parameter");
    if (resistance == 0 && inductance == 0 && elastance == 0)
        throw ValidationError("edge with zero resistance, inductance and elastance");
    EdgeParams p;
    p.kind_ = Kind::Rlc;
    p.resistance_ = std::move(resistance);
    p.inductance_ = std::move(inductance);
    p.elastance_ = std::move(elastance);
    return p;
}

EdgeParams EdgeParams::raw(RationalFunction weight) {
    if (weight.is_zero()) throw ValidationError("raw edge with zero weight");
    EdgeParams p;
    p.kind_ = Kind::Raw;
    p.weight_ = std::move(weight);
    return p;
}

RationalFunction admittance(const EdgeParams& params) {
    if (params.kind() == EdgeParams::Kind::Raw) return params.weight();
    Polynomial den{params.elastance(), params.resistance(), params.inductance()};
    return RationalFunction(Polynomial::variable(), std::move(den));
}

std::optional<int> Network::vertex_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::vector<int> Network::interior_vertices() const {
    std::vector<int> out;
    out.reserve(names_.size());
    for (int v = 0; v < vertex_count(); ++v) {
        if (v != a0_ && v != a1_) out.push_back(v);
    }
    return out;
}

bool Network::has_pole_at(Complex lambda, double tol) const {
    return std::any_of(merged_.begin(), merged_.end(),
                       [&](const MergedEdge& e) { return e.admittance.has_pole_at(lambda, tol); });
}

std::vector<Complex> Network::admittances_at(Complex lambda, double tol) const {
    std::vector<Complex> out;
    out.reserve(merged_.size());
    for (const MergedEdge& e : merged_) out.push_back(e.admittance.eval(lambda, tol));
    return out;
}

Network build_network(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                      const std::string& a0, const std::string& a1, NetworkMode mode) {
    Network net;
    net.mode_ = mode;

    std::unordered_map<std::string, int> index;
    for (const auto& name : vertices) {
        if (name.empty()) throw ValidationError("empty vertex name");
        if (!index.emplace(name, static_cast<int>(index.size())).second)
            throw ValidationError("repeated vertex '" + name + "'");
    }
    net.names_ = std::move(vertices);

    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError("unknown vertex '" + name + "'");
        return it->second;
    };
    net.a0_ = lookup(a0);
    net.a1_ = lookup(a1);
    if (net.a0_ == net.a1_) throw ValidationError("the two terminals must be distinct");

    if (edges.empty()) throw ValidationError("network without edges");

    std::map<std::pair<int, int>, RationalFunction> merged;
    for (const EdgeSpec& spec : edges) {
        int u = lookup(spec.x);
        int v = lookup(spec.y);
        if (u == v) throw ValidationError("self-loop at '" + spec.x + "'");
        if (mode == NetworkMode::Strict && !spec.params.is_rlc())
            throw ValidationError("raw weight on edge " + spec.x + "-" + spec.y + " requires raw mode");

        RationalFunction rho = admittance(spec.params);
        net.positive_.push_back(rho.is_positive());
        net.all_positive_ = net.all_positive_ && rho.is_positive();
        if (spec.params.is_rlc()) {
            net.pure_rc_ = net.pure_rc_ && spec.params.inductance() == 0;
            net.pure_rl_ = net.pure_rl_ && spec.params.elastance() == 0;
        } else {
            net.pure_rc_ = false;
            net.pure_rl_ = false;
        }

        auto key = std::minmax(u, v);
        merged[{key.first, key.second}] += rho;
        net.edges_.push_back({u, v, spec.params});
    }

    net.merged_.reserve(merged.size());
    for (auto& [key, rho] : merged) {
        if (rho.is_zero())
            throw ValidationError("parallel edges between '" + net.names_[static_cast<std::size_t>(key.first)] +
                                  "' and '" + net.names_[static_cast<std::size_t>(key.second)] +
                                  "' cancel to zero admittance");
        net.merged_.push_back({key.first, key.second, std::move(rho)});
    }

    const int n = net.vertex_count();
    net.adjacency_.assign(static_cast<std::size_t>(n), {});
    net.weights_.assign(static_cast<std::size_t>(n), RationalFunction{});
    for (std::size_t i = 0; i < net.merged_.size(); ++i) {
        const auto& e = net.merged_[i];
        net.adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(i)});
        net.adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(i)});
        net.weights_[static_cast<std::size_t>(e.u)] += e.admittance;
        net.weights_[static_cast<std::size_t>(e.v)] += e.admittance;
    }
    for (auto& list : net.adjacency_)
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });

    // Connectivity.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{net.a0_};
    seen[static_cast<std::size_t>(net.a0_)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& nb : net.adjacency_[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                seen[static_cast<std::size_t>(nb.vertex)] = true;
                stack.push_back(nb.vertex);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ValidationError("graph is not connected");

    return net;
}

VertexFunction<RationalFunction> laplacian_apply(const Network& net, const VertexFunction<RationalFunction>& f) {
    VertexFunction<RationalFunction> out(static_cast<std::size_t>(net.vertex_count()));
    for (const auto& e : net.merged_edges()) {
        RationalFunction flow = (f[static_cast<std::size_t>(e.v)] - f[static_cast<std::size_t>(e.u)]) * e.admittance;
        out[static_cast<std::size_t>(e.u)] += flow;
        out[static_cast<std::size_t>(e.v)] -= flow;
    }
    return out;
}

VertexFunction<Complex> laplacian_apply(const Network& net, const VertexFunction<Complex>& f, Complex lambda,
                                        double tol) {
    std::vector<Complex> rho = net.admittances_at(lambda, tol);
    VertexFunction<Complex> out(static_cast<std::size_t>(net.vertex_count()), Complex{});
    const auto& merged = net.merged_edges();
    for (std::size_t i = 0; i < merged.size(); ++i) {
        Complex flow = (f[static_cast<std::size_t>(merged[i].v)] - f[static_cast<std::size_t>(merged[i].u)]) * rho[i];
        out[static_cast<std::size_t>(merged[i].u)] += flow;
        out[static_cast<std::size_t>(merged[i].v)] -= flow;
    }
    return out;
}

} // namespace zeff
