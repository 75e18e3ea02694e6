#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpl/graph.hpp"
#include "gpl/random_walk.hpp"

namespace gpl {

/// Which profile function F the ratio |boundary A| / F(|A|) is measured
/// against: F(t) = t^(1-1/d) (dimensional) or F(t) = t (strong).
struct ProfileKind {
    bool strong = false;
    int d = 1;
    static ProfileKind dimension(int d) { return {false, d}; }
    static ProfileKind omega() { return {true, 1}; }
};

struct SampleSpec {
    int ball_samples = 200;
    int blob_samples = 200;
    std::uint64_t seed = 1;
    std::int64_t max_set_size = 0;  // 0 = half the non-frontier vertex count
};

/// Sampled isoperimetric scan.  Sets avoid the frontier, so every counted
/// boundary edge is genuine (present in the untruncated graph).  The
/// minimum observed ratio upper-bounds the best profile constant: a scan
/// can refute a claimed constant, never certify one.
struct ProfileSample {
    struct Entry {
        std::int64_t size;
        std::int64_t boundary;
        double ratio;
    };
    std::vector<Entry> entries;
    double min_ratio = 0;
    std::int64_t min_loc_size = 0;  // |A| attaining the minimum
};

ProfileSample profile_scan(const GraphPtr& graph, ProfileKind kind, const SampleSpec& spec,
                           std::span<const std::vector<Graph::Vertex>> extra_sets = {});

/// |edges between A and its complement|, by scanning A's rows.
std::int64_t edge_boundary_size(const Graph& graph, std::span<const Graph::Vertex> set);
/// Same quantity via degree sums minus twice the internal edge count.
std::int64_t edge_boundary_size_degree_sum(const Graph& graph,
                                           std::span<const Graph::Vertex> set);

/// Strong-profile minimum before and after the n-fuzz.  n <= 0 picks
/// ceil(1/c) where c is the sampled minimum before.
struct FuzzAmplification {
    double before;
    double after;
    int n;
};

FuzzAmplification fuzz_amplification(const GraphPtr& graph, int n, const SampleSpec& spec);

/// Dirichlet spectral surrogate for the strong isoperimetric profile:
/// estimates bounded away from 1 across growing windows are evidence.
SpectralEstimate is_omega_surrogate(const GraphPtr& graph);

} // namespace gpl
