#include "gpl/values.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gpl {

static void require_finite(std::span<const double> xs, const char* what) {
    for (double x : xs)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

VertexFunction::VertexFunction(GraphPtr graph, std::vector<double> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
    if (!graph_) throw std::invalid_argument("VertexFunction: null graph");
    if (values_.size() != static_cast<std::size_t>(graph_->vertex_count()))
        throw std::invalid_argument("VertexFunction: length does not match vertex count");
    require_finite(values_, "VertexFunction");
}

VertexFunction VertexFunction::zero(GraphPtr graph) {
    auto n = graph->vertex_count();
    return VertexFunction(std::move(graph), std::vector<double>(n, 0.0));
}

VertexFunction VertexFunction::constant(GraphPtr graph, double c) {
    auto n = graph->vertex_count();
    return VertexFunction(std::move(graph), std::vector<double>(n, c));
}

VertexFunction VertexFunction::delta(GraphPtr graph, Vertex x, double mass) {
    graph->validate_vertex(x, "VertexFunction::delta");
    auto f = zero(std::move(graph));
    f[x] = mass;
    return f;
}

VertexFunction& VertexFunction::operator+=(const VertexFunction& o) {
    require_same_graph(graph_, o.graph_, "VertexFunction +");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}
VertexFunction& VertexFunction::operator-=(const VertexFunction& o) {
    require_same_graph(graph_, o.graph_, "VertexFunction -");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}
VertexFunction& VertexFunction::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

double VertexFunction::max_abs() const {
    double m = 0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}
double VertexFunction::min_abs() const {
    double m = std::numeric_limits<double>::infinity();
    for (double v : values_) m = std::min(m, std::fabs(v));
    return m;
}
double VertexFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double VertexFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

EdgeFlow::EdgeFlow(GraphPtr graph, std::vector<double> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
    if (!graph_) throw std::invalid_argument("EdgeFlow: null graph");
    if (values_.size() != static_cast<std::size_t>(graph_->edge_count()))
        throw std::invalid_argument("EdgeFlow: length does not match edge count");
    require_finite(values_, "EdgeFlow");
}

EdgeFlow EdgeFlow::zero(GraphPtr graph) {
    auto m = graph->edge_count();
    return EdgeFlow(std::move(graph), std::vector<double>(static_cast<std::size_t>(m), 0.0));
}

double EdgeFlow::at(Vertex from, Vertex to) const {
    const double v = values_[static_cast<std::size_t>(graph_->edge_index(from, to))];
    return from < to ? v : -v;
}

EdgeFlow& EdgeFlow::operator+=(const EdgeFlow& o) {
    require_same_graph(graph_, o.graph_, "EdgeFlow +");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}
EdgeFlow& EdgeFlow::operator-=(const EdgeFlow& o) {
    require_same_graph(graph_, o.graph_, "EdgeFlow -");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}
EdgeFlow& EdgeFlow::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

ProbabilityMeasure::ProbabilityMeasure(GraphPtr graph,
                                       std::vector<std::pair<Vertex, double>> entries)
    : graph_(std::move(graph)), entries_(std::move(entries)) {
    if (!graph_) throw std::invalid_argument("ProbabilityMeasure: null graph");
    std::sort(entries_.begin(), entries_.end());
    double sum = 0;
    Vertex prev = -1;
    for (auto& [v, mass] : entries_) {
        graph_->validate_vertex(v, "ProbabilityMeasure");
        if (v == prev) throw std::invalid_argument("ProbabilityMeasure: duplicate vertex");
        prev = v;
        if (!(mass >= 0) || !std::isfinite(mass))
            throw std::invalid_argument("ProbabilityMeasure: negative or non-finite mass");
        sum += mass;
    }
    // drop exact zeros, keep support nonempty
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const auto& e) { return e.second == 0.0; }),
                   entries_.end());
    if (entries_.empty()) throw std::invalid_argument("ProbabilityMeasure: empty support");
    if (std::fabs(sum - 1.0) > kMassTolerance)
        throw std::invalid_argument("ProbabilityMeasure: total mass " + std::to_string(sum) +
                                    " deviates from 1 beyond tolerance");
}

ProbabilityMeasure ProbabilityMeasure::delta(GraphPtr graph, Vertex x) {
    return ProbabilityMeasure(std::move(graph), {{x, 1.0}});
}

ProbabilityMeasure ProbabilityMeasure::from_dense(GraphPtr graph, std::span<const double> dense) {
    if (dense.size() != static_cast<std::size_t>(graph->vertex_count()))
        throw std::invalid_argument("ProbabilityMeasure: dense length mismatch");
    std::vector<std::pair<Vertex, double>> entries;
    for (std::size_t v = 0; v < dense.size(); ++v)
        if (dense[v] != 0.0) entries.emplace_back(static_cast<Vertex>(v), dense[v]);
    return ProbabilityMeasure(std::move(graph), std::move(entries));
}

double ProbabilityMeasure::mass_at(Vertex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(v, 0.0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    return (it != entries_.end() && it->first == v) ? it->second : 0.0;
}

double ProbabilityMeasure::total_mass() const {
    double s = 0;
    for (auto& [v, mass] : entries_) s += mass;
    return s;
}

std::vector<double> ProbabilityMeasure::to_dense() const {
    std::vector<double> dense(graph_->vertex_count(), 0.0);
    for (auto& [v, mass] : entries_) dense[v] = mass;
    return dense;
}

double ProbabilityMeasure::integrate(const VertexFunction& g) const {
    require_same_graph(graph_, g.graph(), "ProbabilityMeasure::integrate");
    double s = 0;
    for (auto& [v, mass] : entries_) s += mass * g[v];
    return s;
}

double ProbabilityMeasure::lp_norm(double p) const {
    if (p < 1) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) return sup_mass();
    if (p == 1.0) return total_mass();
    double s = 0;
    for (auto& [v, mass] : entries_) s += std::pow(mass, p);
    return std::pow(s, 1.0 / p);
}

double ProbabilityMeasure::sup_mass() const {
    double m = 0;
    for (auto& [v, mass] : entries_) m = std::max(m, mass);
    return m;
}

} // namespace gpl
