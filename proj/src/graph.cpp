#include "rbg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace rbg {

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& row : adj) twice += static_cast<std::int64_t>(row.size());
    return twice / 2;
}

std::int64_t Graph::core_size() const {
    return std::count(core.begin(), core.end(), std::uint8_t{1});
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

namespace {

bool connected(const Graph& g) {
    const Vertex n = g.size();
    if (n == 0) return true;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace

void validate_graph(const Graph& g) {
    const Vertex n = g.size();
    if (g.core.size() != n)
        throw error(errc::length_mismatch, "core mask size does not match vertex count");
    if (g.labels && g.labels->size() != n)
        throw error(errc::length_mismatch, "label list size does not match vertex count");
    for (Vertex v = 0; v < n; ++v) {
        const auto& row = g.adj[v];
        if (!std::is_sorted(row.begin(), row.end()))
            throw error(errc::index_out_of_range, "adjacency list not sorted");
        for (std::size_t i = 0; i < row.size(); ++i) {
            Vertex w = row[i];
            if (w >= n)
                throw error(errc::index_out_of_range,
                            "neighbor " + std::to_string(w) + " out of range");
            if (w == v) throw error(errc::self_loop, "vertex " + std::to_string(v));
            if (i > 0 && row[i - 1] == w)
                throw error(errc::duplicate_edge,
                            "(" + std::to_string(v) + "," + std::to_string(w) + ")");
            if (!g.has_edge(w, v))
                throw error(errc::index_out_of_range, "adjacency not symmetric");
        }
    }
    if (!connected(g)) throw error(errc::disconnected, "graph is not connected");
}

Graph build_graph(Vertex n, std::span<const Edge> edges,
                  std::optional<std::vector<std::uint8_t>> core_mask) {
    Graph g;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw error(errc::index_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw error(errc::self_loop, "vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    if (core_mask) {
        if (core_mask->size() != n)
            throw error(errc::length_mismatch, "core mask size does not match vertex count");
        g.core = std::move(*core_mask);
    } else {
        g.core.assign(n, 1);
    }
    validate_graph(g);
    return g;
}

Graph build_graph(std::span<const Edge> edges,
                  std::optional<std::vector<std::uint8_t>> core_mask) {
    Vertex n = 0;
    for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
    return build_graph(n, edges, std::move(core_mask));
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.is_core(v)) p.degrees.push_back(g.degree(v));
    if (p.degrees.empty()) throw error(errc::empty_core, "no reliable-core vertices");
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

std::vector<Vertex> core_vertices_by_degree(const Graph& g) {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.is_core(v)) order.push_back(v);
    if (order.empty()) throw error(errc::empty_core, "no reliable-core vertices");
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    return order;
}

std::int64_t eta(const DegreeProfile& p, std::int64_t k) {
    return std::upper_bound(p.degrees.begin(), p.degrees.end(), k) - p.degrees.begin();
}

std::int64_t eta(const DegreeProfile& p, double k) {
    auto it = std::upper_bound(p.degrees.begin(), p.degrees.end(), k,
                               [](double lhs, std::int64_t rhs) {
                                   return lhs < static_cast<double>(rhs);
                               });
    return it - p.degrees.begin();
}

RateEstimate estimate_rates(const DegreeProfile& p, double tail_fraction) {
    if (p.degrees.empty()) throw error(errc::empty_core, "empty degree profile");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw error(errc::domain_error, "tail_fraction must lie in (0,1]");

    const std::int64_t kmax = std::max<std::int64_t>(p.k_max(), 1);
    RateEstimate est;
    est.argmax_k = 1;

    auto ratio = [&](std::int64_t k) { return static_cast<double>(eta(p, k)) / static_cast<double>(k); };

    // Candidate maximizers: k = 1 plus each distinct degree value (eta is
    // constant between degree values, so eta(k)/k decreases there).
    std::vector<std::int64_t> cand{1};
    for (std::size_t i = 0; i < p.degrees.size(); ++i)
        if ((i == 0 || p.degrees[i] != p.degrees[i - 1]) && p.degrees[i] >= 1)
            cand.push_back(p.degrees[i]);

    for (std::int64_t k : cand) {
        double v = ratio(k);
        if (v > est.r_hat) {
            est.r_hat = v;
            est.argmax_k = k;
        }
    }

    const std::int64_t klo = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(static_cast<double>(kmax) * (1.0 - tail_fraction))) + 1);
    est.window = {klo, kmax};
    est.r_inf_hat = ratio(klo);
    for (std::int64_t k : cand)
        if (k >= klo) est.r_inf_hat = std::max(est.r_inf_hat, ratio(k));
    return est;
}

std::vector<Vertex> ball(const Graph& g, Vertex v, std::int64_t n) {
    if (v >= g.size()) throw error(errc::index_out_of_range, "ball root out of range");
    std::vector<std::int64_t> dist(g.size(), -1);
    std::queue<Vertex> q;
    dist[v] = 0;
    q.push(v);
    std::vector<Vertex> out{v};
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] == n) continue;
        for (Vertex w : g.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                out.push_back(w);
                q.push(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VolBoundary vol_and_boundary(const Graph& g, std::span<const Vertex> U) {
    if (U.empty()) throw error(errc::empty_set, "vol_and_boundary of empty set");
    std::vector<std::uint8_t> in(g.size(), 0);
    for (Vertex v : U) {
        if (v >= g.size()) throw error(errc::index_out_of_range, "subset vertex out of range");
        in[v] = 1;
    }
    VolBoundary r;
    for (Vertex v : U) {
        if (!in[v]) continue; // duplicate entries count once
        in[v] = 2;            // mark visited
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (in[v] != 2) continue;
        r.vol += g.degree(v);
        for (Vertex w : g.adj[v])
            if (in[w] == 0) ++r.boundary_edges;
    }
    return r;
}

bool check_basic_lemma(const DegreeProfile& p, double s, std::int64_t n0) {
    if (!(s > 0.0)) throw error(errc::domain_error, "rate s must be positive");
    const std::int64_t n = p.core_count();
    for (std::int64_t k = std::max<std::int64_t>(n0, 0); k < n; ++k) {
        if (static_cast<double>(k + 1) > s * static_cast<double>(p.degrees[k])) return false;
    }
    return true;
}

std::optional<std::int64_t> lemma_threshold(const DegreeProfile& p, double s) {
    if (!(s > 0.0)) throw error(errc::domain_error, "rate s must be positive");
    const std::int64_t n = p.core_count();
    std::int64_t first_ok = n; // first index such that the lemma holds from there on
    for (std::int64_t k = n - 1; k >= 0; --k) {
        if (static_cast<double>(k + 1) <= s * static_cast<double>(p.degrees[k]))
            first_ok = k;
        else
            break;
    }
    if (first_ok == n) return std::nullopt;
    return first_ok;
}

} // namespace rbg
