#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rbg/errors.hpp"

namespace rbg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// (generation, within-generation index) attached by the generators.
using VertexLabel = std::array<std::int32_t, 2>;

/// Finite simple undirected graph with sorted adjacency lists and a
/// "reliable core" mask. A vertex is core iff its full infinite-graph
/// neighborhood is present in this truncation, so degree statistics taken
/// over the core are exact.
struct Graph {
    std::vector<std::vector<Vertex>> adj;
    std::vector<std::uint8_t> core;
    std::optional<std::vector<VertexLabel>> labels;

    Vertex size() const { return static_cast<Vertex>(adj.size()); }
    std::int64_t degree(Vertex v) const { return static_cast<std::int64_t>(adj[v].size()); }
    bool is_core(Vertex v) const { return core[v] != 0; }
    std::int64_t edge_count() const;
    std::int64_t core_size() const;
    bool has_edge(Vertex u, Vertex v) const;
};

/// Validates simplicity, symmetry, index range and connectivity.
/// core_mask defaults to all-true.
Graph build_graph(Vertex n, std::span<const Edge> edges,
                  std::optional<std::vector<std::uint8_t>> core_mask = std::nullopt);

/// Convenience overload: n inferred as max index + 1.
Graph build_graph(std::span<const Edge> edges,
                  std::optional<std::vector<std::uint8_t>> core_mask = std::nullopt);

/// Checks all Graph invariants on an already-assembled adjacency structure.
/// Generators build adjacency directly and run this afterwards.
void validate_graph(const Graph& g);

/// Sorted nondecreasing degree sequence d_0 <= d_1 <= ... over the
/// reliable core.
struct DegreeProfile {
    std::vector<std::int64_t> degrees;

    std::int64_t k_max() const { return degrees.empty() ? 0 : degrees.back(); }
    std::int64_t core_count() const { return static_cast<std::int64_t>(degrees.size()); }
};

/// Profile of the graph's reliable core. Throws empty_core.
DegreeProfile degree_profile(const Graph& g);

/// Core vertex ids sorted by nondecreasing degree (ties by index); this is
/// the enumeration v_0, v_1, ... used by the basic degree lemma.
std::vector<Vertex> core_vertices_by_degree(const Graph& g);

/// eta(k) = number of reliable-core vertices with degree <= k.
std::int64_t eta(const DegreeProfile& p, std::int64_t k);
std::int64_t eta(const DegreeProfile& p, double k);

struct RateEstimate {
    double r_hat = 0.0;       // estimate of r = sup_k eta(k)/k
    double r_inf_hat = 0.0;   // windowed estimate of r_inf = limsup eta(k)/k
    std::int64_t argmax_k = 0;
    std::pair<std::int64_t, std::int64_t> window{0, 0}; // k-range of r_inf_hat
};

/// r_hat = max over k in [1, k_max]; r_inf_hat = max over the top
/// tail_fraction of that range. eta(k)/k is decreasing between degree
/// values, so both maxima are attained at degree values (or the window's
/// left edge) and are evaluated there.
RateEstimate estimate_rates(const DegreeProfile& p, double tail_fraction = 0.5);

/// B_n(v): all vertices within graph distance n of v, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex v, std::int64_t n);

struct VolBoundary {
    std::int64_t vol = 0;            // sum of full degrees over U
    std::int64_t boundary_edges = 0; // #{(v,w) : v in U, w not in U, v~w}
};

VolBoundary vol_and_boundary(const Graph& g, std::span<const Vertex> U);

/// True iff (k+1)/s <= d_k for every k >= n0 in the core enumeration.
bool check_basic_lemma(const DegreeProfile& p, double s, std::int64_t n0);

/// Smallest n0 for which the basic lemma holds at rate s, if any.
std::optional<std::int64_t> lemma_threshold(const DegreeProfile& p, double s);

} // namespace rbg
