#include "gpl/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gpl/generators.hpp"
#include "gpl/parallel.hpp"

namespace gpl {

std::int64_t edge_boundary_size(const Graph& graph, std::span<const Graph::Vertex> set) {
    std::vector<std::uint8_t> in_set(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (Graph::Vertex v : set) in_set[static_cast<std::size_t>(v)] = 1;
    std::int64_t boundary = 0;
    for (Graph::Vertex v : set)
        for (Graph::Vertex y : graph.neighbors(v))
            if (!in_set[static_cast<std::size_t>(y)]) ++boundary;
    return boundary;
}

std::int64_t edge_boundary_size_degree_sum(const Graph& graph,
                                           std::span<const Graph::Vertex> set) {
    std::vector<std::uint8_t> in_set(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (Graph::Vertex v : set) in_set[static_cast<std::size_t>(v)] = 1;
    std::int64_t degree_sum = 0, internal = 0;
    for (Graph::Vertex v : set) {
        degree_sum += graph.degree(v);
        for (Graph::Vertex y : graph.neighbors(v))
            if (in_set[static_cast<std::size_t>(y)]) ++internal;  // counts both directions
    }
    return degree_sum - internal;
}

namespace {

double profile_value(const ProfileKind& kind, std::int64_t size) {
    if (kind.strong) return static_cast<double>(size);
    return std::pow(static_cast<double>(size), 1.0 - 1.0 / static_cast<double>(kind.d));
}

// BFS ball around `center` through non-frontier vertices only, stopped at
// `max_size` vertices.
std::vector<Graph::Vertex> grow_ball(const Graph& g, Graph::Vertex center,
                                     std::int64_t max_size) {
    std::vector<Graph::Vertex> set;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    set.push_back(center);
    seen[static_cast<std::size_t>(center)] = 1;
    for (std::size_t head = 0;
         head < set.size() && static_cast<std::int64_t>(set.size()) < max_size; ++head) {
        for (Graph::Vertex y : g.neighbors(set[head])) {
            if (seen[static_cast<std::size_t>(y)] || g.in_frontier(y)) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            set.push_back(y);
            if (static_cast<std::int64_t>(set.size()) >= max_size) break;
        }
    }
    return set;
}

// randomized BFS blob: grows by popping a random boundary vertex
std::vector<Graph::Vertex> grow_blob(const Graph& g, Graph::Vertex center, std::int64_t target,
                                     std::mt19937_64& rng) {
    std::vector<Graph::Vertex> set{center};
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[static_cast<std::size_t>(center)] = 1;
    std::vector<Graph::Vertex> candidates;
    auto push_candidates = [&](Graph::Vertex v) {
        for (Graph::Vertex y : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(y)] || g.in_frontier(y)) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            candidates.push_back(y);
        }
    };
    push_candidates(center);
    while (static_cast<std::int64_t>(set.size()) < target && !candidates.empty()) {
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng);
        const Graph::Vertex v = candidates[pick];
        candidates[pick] = candidates.back();
        candidates.pop_back();
        set.push_back(v);
        push_candidates(v);
    }
    return set;
}

}  // namespace

ProfileSample profile_scan(const GraphPtr& graph, ProfileKind kind, const SampleSpec& spec,
                           std::span<const std::vector<Graph::Vertex>> extra_sets) {
    const Graph& g = *graph;
    if (!kind.strong && kind.d < 1)
        throw std::invalid_argument("profile_scan: dimension must be >= 1");
    std::vector<Graph::Vertex> interior;
    for (Graph::Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.in_frontier(v)) interior.push_back(v);
    if (interior.size() < 2)
        throw std::invalid_argument("profile_scan: too few non-frontier vertices");
    const std::int64_t cap = spec.max_set_size > 0
                                 ? spec.max_set_size
                                 : std::max<std::int64_t>(1, interior.size() / 2);
    for (const auto& set : extra_sets)
        for (Graph::Vertex v : set)
            if (g.in_frontier(v))
                throw std::invalid_argument("profile_scan: extra set touches the frontier");

    const std::size_t total = static_cast<std::size_t>(spec.ball_samples) +
                              static_cast<std::size_t>(spec.blob_samples) + extra_sets.size();
    std::vector<ProfileSample::Entry> entries(total, {0, 0, 0.0});
    parallel_for(total, [&](std::size_t i) {
        std::vector<Graph::Vertex> set;
        if (i < static_cast<std::size_t>(spec.ball_samples)) {
            std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + i);
            const Graph::Vertex center =
                interior[std::uniform_int_distribution<std::size_t>(0, interior.size() - 1)(rng)];
            const std::int64_t size =
                std::uniform_int_distribution<std::int64_t>(1, cap)(rng);
            set = grow_ball(g, center, size);
        } else if (i < static_cast<std::size_t>(spec.ball_samples) +
                           static_cast<std::size_t>(spec.blob_samples)) {
            // keyed by the local blob index so growing the sample counts keeps
            // earlier samples identical (the min can only go down)
            std::mt19937_64 rng(spec.seed * 0xbf58476d1ce4e5b9ULL +
                                (i - static_cast<std::size_t>(spec.ball_samples)));
            const Graph::Vertex center =
                interior[std::uniform_int_distribution<std::size_t>(0, interior.size() - 1)(rng)];
            const std::int64_t size =
                std::uniform_int_distribution<std::int64_t>(1, cap)(rng);
            set = grow_blob(g, center, size, rng);
        } else {
            set = extra_sets[i - static_cast<std::size_t>(spec.ball_samples) -
                             static_cast<std::size_t>(spec.blob_samples)];
            if (static_cast<std::int64_t>(set.size()) > cap || set.empty()) return;  // skipped
        }
        const auto boundary = edge_boundary_size(g, set);
        entries[i] = {static_cast<std::int64_t>(set.size()), boundary,
                      static_cast<double>(boundary) /
                          profile_value(kind, static_cast<std::int64_t>(set.size()))};
    });

    ProfileSample sample;
    sample.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        if (e.size == 0) continue;  // skipped slot
        sample.entries.push_back(e);
        if (e.ratio < sample.min_ratio) {
            sample.min_ratio = e.ratio;
            sample.min_loc_size = e.size;
        }
    }
    if (sample.entries.empty())
        throw std::invalid_argument("profile_scan: no usable samples");
    return sample;
}

FuzzAmplification fuzz_amplification(const GraphPtr& graph, int n, const SampleSpec& spec) {
    const ProfileSample before = profile_scan(graph, ProfileKind::omega(), spec);
    if (!(before.min_ratio > 0))
        throw std::invalid_argument("fuzz_amplification: sampled strong ratio is not positive");
    const int n_eff = n > 0 ? n : static_cast<int>(std::ceil(1.0 / before.min_ratio));
    const GraphPtr fuzzed = fuzz(graph, n_eff);
    const ProfileSample after = profile_scan(fuzzed, ProfileKind::omega(), spec);
    return {before.min_ratio, after.min_ratio, n_eff};
}

SpectralEstimate is_omega_surrogate(const GraphPtr& graph) {
    if (!graph->has_frontier())
        throw std::invalid_argument("is_omega_surrogate: needs a nonempty frontier");
    return spectral_norm_estimate(make_kernel(graph, 0.0, /*dirichlet=*/true));
}

} // namespace gpl
