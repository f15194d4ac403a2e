#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "rbg/graph.hpp"

namespace rbg {

/// Exact nonnegative rational, used for the block-family rate s so that
/// ceil(j/s) is computed in integer arithmetic (floating ceil misrounds at
/// exact multiples, e.g. 9/0.45).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Accepts "0.45", ".5", "9/20" or plain integers.
Rational parse_rational(const std::string& text);

/// ceil(j / s) for j >= 0, s = num/den > 0.
std::int64_t ceil_div_rate(std::int64_t j, const Rational& s);

enum class Boundary {
    full, // boundary layer is the honest induced truncation
    thin, // boundary layer keeps only edges incident to the core; all
          // reliable-core quantities are identical to full mode
};

struct GenBudget {
    std::int64_t max_vertices = 5'000'000;
    std::int64_t max_adjacency = 60'000'000; // directed adjacency entries
};

// ---------------------------------------------------------------------------
// Block family: complete graphs K_0, K_1, ... of sizes l(0)=2,
// l(n+1) = ceil(1/s) l(n)^2, with v_j^(n) attached to the next
// (ceil(j/s) - l(n))+ unused vertices of K_{n+1} in index order.
// ---------------------------------------------------------------------------

struct BlockGraphSpec {
    Rational s;          // in (0,1)
    int depth = 1;       // blocks K_0..K_depth; K_depth is the non-core boundary
    Boundary boundary = Boundary::full;
    GenBudget budget{};
};

/// Closed-form data of the block family; exact integers throughout.
/// Usable far beyond what can be materialized as an explicit graph.
struct BlockModel {
    Rational s;
    std::vector<std::int64_t> l; // block sizes l(0..depth)
    std::vector<std::int64_t> F; // forward cross-edge counts F(0..depth-1)

    int depth() const { return static_cast<int>(l.size()) - 1; }
    /// Degree of v_j^(n) (1-based j) when blocks n-1..n+1 are all present.
    std::int64_t degree(int n, std::int64_t j) const;
    /// Exact per-block data for blocks with full neighborhoods (n < depth).
    struct BlockStats {
        std::int64_t size = 0;
        std::int64_t vol = 0;            // sum of degrees over V_n
        std::int64_t boundary_edges = 0; // #dV_n
        std::int64_t intra_edges = 0;    // undirected edges inside K_n
    };
    BlockStats stats(int n) const;
    /// Core degree profile of the depth-truncation (blocks 0..depth-1).
    DegreeProfile core_profile() const;
};

BlockModel block_model(const Rational& s, int depth);

std::vector<std::int64_t> block_sizes(const Rational& s, int depth);

Graph block_graph(const BlockGraphSpec& spec);

// ---------------------------------------------------------------------------
// Antitree family: spheres S_n of size sigma^n, every vertex joined to all
// others in S_{n-1} u S_n u S_{n+1}.
// ---------------------------------------------------------------------------

struct AntitreeSpec {
    int sigma = 2;  // >= 2
    int depth = 2;  // spheres S_0..S_depth; S_depth is the non-core boundary
    Boundary boundary = Boundary::full;
    GenBudget budget{};
};

struct AntitreeModel {
    int sigma = 2;
    int depth = 2;

    std::int64_t sphere_size(int n) const;
    /// Infinite-graph degree of a vertex in S_n.
    std::int64_t degree(int n) const;
    /// Degree within the S_0..S_depth truncation (S_depth misses S_{depth+1}).
    std::int64_t truncated_degree(int n) const;
    std::int64_t vertex_count() const;    // whole truncation
    std::int64_t core_count() const;      // spheres 0..depth-1
    std::int64_t boundary_min_degree() const { return truncated_degree(depth); }
    DegreeProfile core_profile() const;
    /// #B_n(root) and vol(B_n(root)); exact for n <= depth-1.
    std::int64_t ball_count(int n) const;
    std::int64_t ball_volume(int n) const;
};

AntitreeModel antitree_model(int sigma, int depth);

Graph antitree(const AntitreeSpec& spec);

// ---------------------------------------------------------------------------
// Baseline fixtures.
// ---------------------------------------------------------------------------

Graph path_graph(std::int64_t n);
Graph complete_graph(std::int64_t n);
/// Rooted tree, every non-leaf has `branching` children; leaves at max depth
/// are non-core.
Graph regular_tree(int branching, int depth);

} // namespace rbg
