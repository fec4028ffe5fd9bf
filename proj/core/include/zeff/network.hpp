#pragma once

#include "zeff/defaults.hpp"
#include "zeff/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace zeff {

template <typename T>
using VertexFunction = std::vector<T>;

enum class NetworkMode { Strict, Raw };

/// Per-edge electrical data. An RLC edge carries resistance, inductance and
/// elastance (inverse capacitance, so an absent capacitor is elastance 0);
/// at least one of the three must be nonzero. A raw edge carries an
/// arbitrary nonzero rational-function weight.
class EdgeParams {
public:
    enum class Kind { Rlc, Raw };

    static EdgeParams rlc(Rational resistance, Rational inductance, Rational elastance);
    static EdgeParams raw(RationalFunction weight);

    Kind kind() const { return kind_; }
    bool is_rlc() const { return kind_ == Kind::Rlc; }

    const Rational& resistance() const { return resistance_; }
    const Rational& inductance() const { return inductance_; }
    const Rational& elastance() const { return elastance_; }
    const RationalFunction& weight() const { return weight_; }

private:
    EdgeParams() = default;

    Kind kind_ = Kind::Rlc;
    Rational resistance_, inductance_, elastance_;
    RationalFunction weight_;
};

/// Admittance of one edge as a rational function of the frequency variable:
/// λ / (L λ² + R λ + D) for an RLC edge, the stored weight for a raw edge.
/// RLC admittances are always positive in the leading-coefficient order.
RationalFunction admittance(const EdgeParams& params);

struct EdgeSpec {
    std::string x, y;
    EdgeParams params;
};

/// Finite connected two-terminal network. Immutable once built; parallel
/// edges are merged by summing admittances, self-loops are rejected.
class Network {
public:
    struct Edge {
        int u, v;
        EdgeParams params;
    };
    struct MergedEdge {
        int u, v; // u < v
        RationalFunction admittance;
    };
    struct Neighbor {
        int vertex;
        int merged_edge; // index into merged_edges()
    };

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    /// Index of a named vertex, or nullopt.
    std::optional<int> vertex_index(std::string_view name) const;

    int a0() const { return a0_; }
    int a1() const { return a1_; }
    NetworkMode mode() const { return mode_; }
    bool strict() const { return mode_ == NetworkMode::Strict; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<MergedEdge>& merged_edges() const { return merged_; }
    const std::vector<Neighbor>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    /// Vertex weight ρ(x): the sum of the admittances at x.
    const RationalFunction& vertex_weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }

    /// Positivity of each input edge's weight in the rational-function
    /// order; always all-true in strict mode.
    const std::vector<bool>& edge_weight_positive() const { return positive_; }
    bool all_weights_positive() const { return all_positive_; }

    bool pure_rc() const { return pure_rc_; } // every edge has no inductor
    bool pure_rl() const { return pure_rl_; } // every edge has no capacitor

    /// Interior vertices (everything but the terminals) in input order.
    std::vector<int> interior_vertices() const;

    /// Whether some merged admittance has a pole at lambda.
    bool has_pole_at(Complex lambda, double tol) const;

    /// Every merged admittance evaluated at lambda; throws PoleError.
    std::vector<Complex> admittances_at(Complex lambda, double tol) const;

    friend Network build_network(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                                 const std::string& a0, const std::string& a1, NetworkMode mode);

private:
    Network() = default;

    std::vector<std::string> names_;
    int a0_ = 0, a1_ = 0;
    NetworkMode mode_ = NetworkMode::Strict;
    std::vector<Edge> edges_;
    std::vector<MergedEdge> merged_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<RationalFunction> weights_;
    std::vector<bool> positive_;
    bool all_positive_ = true;
    bool pure_rc_ = true;
    bool pure_rl_ = true;
};

/// Validates and assembles a network. Throws ValidationError for: an
/// unknown or repeated vertex name, identical terminals, a self-loop, a
/// raw edge in strict mode, parallel edges whose admittances cancel, or a
/// disconnected graph.
Network build_network(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                      const std::string& a0, const std::string& a1, NetworkMode mode);

/// Weighted graph Laplacian (Δf)(x) = Σ_y (f(y) - f(x)) ρ_xy, exactly over
/// the rational functions or numerically at a fixed lambda.
VertexFunction<RationalFunction> laplacian_apply(const Network& net, const VertexFunction<RationalFunction>& f);
VertexFunction<Complex> laplacian_apply(const Network& net, const VertexFunction<Complex>& f, Complex lambda,
                                        double tol = defaults::zero_tolerance);

} // namespace zeff
