#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gpl/graph.hpp"

namespace gpl {

/// Real-valued function on the vertices of a graph (dense storage).
class VertexFunction {
public:
    using Vertex = Graph::Vertex;

    VertexFunction(GraphPtr graph, std::vector<double> values);
    static VertexFunction zero(GraphPtr graph);
    static VertexFunction constant(GraphPtr graph, double c);
    static VertexFunction delta(GraphPtr graph, Vertex x, double mass = 1.0);

    const GraphPtr& graph() const { return graph_; }
    double operator[](Vertex v) const { return values_[v]; }
    double& operator[](Vertex v) { return values_[v]; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }
    Vertex size() const { return static_cast<Vertex>(values_.size()); }

    VertexFunction& operator+=(const VertexFunction& o);
    VertexFunction& operator-=(const VertexFunction& o);
    VertexFunction& operator*=(double s);
    friend VertexFunction operator+(VertexFunction a, const VertexFunction& b) { return a += b; }
    friend VertexFunction operator-(VertexFunction a, const VertexFunction& b) { return a -= b; }
    friend VertexFunction operator*(double s, VertexFunction a) { return a *= s; }

    double max_abs() const;
    double min_abs() const;
    double min() const;
    double max() const;

private:
    GraphPtr graph_;
    std::vector<double> values_;
};

/// Antisymmetric real function on oriented edges.  One value per unordered
/// edge is stored against the canonical orientation (smaller id -> larger
/// id); reading the reversed orientation negates.
class EdgeFlow {
public:
    using Vertex = Graph::Vertex;
    using EdgeId = Graph::EdgeId;

    EdgeFlow(GraphPtr graph, std::vector<double> values);
    static EdgeFlow zero(GraphPtr graph);

    const GraphPtr& graph() const { return graph_; }
    /// Signed value on the oriented edge (from, to).
    double at(Vertex from, Vertex to) const;
    double at_edge(EdgeId e) const { return values_[static_cast<std::size_t>(e)]; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }
    EdgeId size() const { return static_cast<EdgeId>(values_.size()); }

    EdgeFlow& operator+=(const EdgeFlow& o);
    EdgeFlow& operator-=(const EdgeFlow& o);
    EdgeFlow& operator*=(double s);
    friend EdgeFlow operator+(EdgeFlow a, const EdgeFlow& b) { return a += b; }
    friend EdgeFlow operator-(EdgeFlow a, const EdgeFlow& b) { return a -= b; }
    friend EdgeFlow operator*(double s, EdgeFlow a) { return a *= s; }

private:
    GraphPtr graph_;
    std::vector<double> values_;  // indexed by canonical edge id
};

/// Finitely supported probability measure on the vertices: nonnegative
/// masses summing to 1 within 1e-12.
class ProbabilityMeasure {
public:
    using Vertex = Graph::Vertex;
    static constexpr double kMassTolerance = 1e-12;

    /// entries need not be sorted; duplicates are rejected.
    ProbabilityMeasure(GraphPtr graph, std::vector<std::pair<Vertex, double>> entries);
    static ProbabilityMeasure delta(GraphPtr graph, Vertex x);
    /// Collects the nonzero entries of a dense nonnegative vector.
    static ProbabilityMeasure from_dense(GraphPtr graph, std::span<const double> dense);

    const GraphPtr& graph() const { return graph_; }
    const std::vector<std::pair<Vertex, double>>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    double mass_at(Vertex v) const;
    double total_mass() const;
    std::vector<double> to_dense() const;

    /// integral of g against this measure
    double integrate(const VertexFunction& g) const;
    /// lp norm over vertices, p in [1, inf]
    double lp_norm(double p) const;
    double sup_mass() const;

private:
    GraphPtr graph_;
    std::vector<std::pair<Vertex, double>> entries_;  // sorted by vertex, masses > 0
};

} // namespace gpl
