#include "rbg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rbg {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked_mul(i64 a, i64 b, const char* what) {
    i128 p = static_cast<i128>(a) * b;
    if (p > static_cast<i128>(INT64_MAX))
        throw error(errc::budget, std::string(what) + " overflows 64-bit range");
    return static_cast<i64>(p);
}

/// sum_{i=0}^{n-1} floor((a*i + b)/m), exact.
i64 floor_sum(i64 n, i64 m, i64 a, i64 b) {
    i64 ans = 0;
    if (a >= m) {
        ans += (n - 1) * n / 2 * (a / m);
        a %= m;
    }
    if (b >= m) {
        ans += n * (b / m);
        b %= m;
    }
    i64 y_max = (a * n + b) / m;
    if (y_max == 0) return ans;
    i64 x_max = y_max * m - b;
    ans += (n - (x_max + a - 1) / a) * y_max;
    ans += floor_sum(y_max, a, m, (a - x_max % a) % a);
    return ans;
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw error(errc::domain_error, "cannot parse rate '" + text + "'"); };
    if (text.empty()) fail();
    Rational r;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            r.num = std::stoll(text.substr(0, slash));
            r.den = std::stoll(text.substr(slash + 1));
        } catch (...) {
            fail();
        }
    } else {
        auto dot = text.find('.');
        try {
            if (dot == std::string::npos) {
                r.num = std::stoll(text);
                r.den = 1;
            } else {
                std::string digits = text.substr(0, dot) + text.substr(dot + 1);
                std::size_t frac = text.size() - dot - 1;
                if (frac > 17) fail();
                r.num = digits.empty() ? 0 : std::stoll(digits);
                r.den = 1;
                for (std::size_t i = 0; i < frac; ++i) r.den = checked_mul(r.den, 10, "rate denominator");
            }
        } catch (const error&) {
            throw;
        } catch (...) {
            fail();
        }
    }
    if (r.den <= 0 || r.num < 0) fail();
    i64 g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

std::int64_t ceil_div_rate(std::int64_t j, const Rational& s) {
    // ceil(j * den / num)
    i128 t = static_cast<i128>(j) * s.den;
    i128 q = (t + s.num - 1) / s.num;
    if (q > static_cast<i128>(INT64_MAX)) throw error(errc::budget, "ceil(j/s) overflows");
    return static_cast<i64>(q);
}

// ---------------------------------------------------------------------------
// Block family
// ---------------------------------------------------------------------------

std::vector<std::int64_t> block_sizes(const Rational& s, int depth) {
    if (s.num <= 0 || s.num >= s.den)
        throw error(errc::domain_error, "block rate s must lie in (0,1)");
    if (depth < 1) throw error(errc::domain_error, "block depth must be >= 1");
    const i64 c = (s.den + s.num - 1) / s.num; // ceil(1/s)
    std::vector<i64> l{2};
    for (int n = 0; n < depth; ++n)
        l.push_back(checked_mul(c, checked_mul(l.back(), l.back(), "block size"), "block size"));
    return l;
}

BlockModel block_model(const Rational& s, int depth) {
    BlockModel m;
    m.s = s;
    m.l = block_sizes(s, depth);
    m.F.resize(depth);
    for (int n = 0; n < depth; ++n) {
        const i64 L = m.l[n];
        // smallest j with ceil(j den / num) > L  <=>  j > L num / den
        const i64 j0 = static_cast<i64>((static_cast<i128>(L) * s.num) / s.den) + 1;
        if (j0 > L) {
            m.F[n] = 0;
            continue;
        }
        // sum of ceil(j den / num) = sum floor((j den + num - 1)/num) for j in [j0, L]
        auto pref = [&](i64 hi) { return floor_sum(hi + 1, s.num, s.den, s.num - 1); };
        m.F[n] = pref(L) - pref(j0 - 1) - (L - j0 + 1) * L;
        if (m.F[n] > m.l[n + 1])
            throw error(errc::infeasible, "cross-edge feasibility violated"); // cannot occur
    }
    return m;
}

std::int64_t BlockModel::degree(int n, std::int64_t j) const {
    const i64 L = l[n];
    i64 d = L - 1 + std::max<i64>(0, ceil_div_rate(j, s) - L);
    if (n > 0 && j <= F[n - 1]) d += 1;
    return d;
}

BlockModel::BlockStats BlockModel::stats(int n) const {
    if (n < 0 || n >= depth())
        throw error(errc::domain_error, "block stats need the forward block present");
    BlockStats st;
    st.size = l[n];
    const i64 back = n > 0 ? F[n - 1] : 0;
    st.intra_edges = l[n] * (l[n] - 1) / 2;
    st.vol = l[n] * (l[n] - 1) + F[n] + back;
    st.boundary_edges = F[n] + back;
    return st;
}

DegreeProfile BlockModel::core_profile() const {
    i64 total = 0;
    for (int n = 0; n < depth(); ++n) total += l[n];
    if (total > 100'000'000)
        throw error(errc::budget, "core profile too large to materialize");
    DegreeProfile p;
    p.degrees.reserve(total);
    for (int n = 0; n < depth(); ++n)
        for (i64 j = 1; j <= l[n]; ++j) p.degrees.push_back(degree(n, j));
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

Graph block_graph(const BlockGraphSpec& spec) {
    BlockModel model = block_model(spec.s, spec.depth);
    const int depth = spec.depth;
    const auto& l = model.l;
    const bool thin = spec.boundary == Boundary::thin;

    const i64 boundary_size = thin ? model.F[depth - 1] : l[depth];
    i64 nv = boundary_size;
    for (int n = 0; n < depth; ++n) nv += l[n];
    i64 entries = thin ? 0 : l[depth] * (l[depth] - 1);
    for (int n = 0; n < depth; ++n) entries += l[n] * (l[n] - 1) + 2 * model.F[n];
    if (nv > spec.budget.max_vertices || entries > spec.budget.max_adjacency)
        throw error(errc::budget, "block graph exceeds vertex/edge budget (" +
                                      std::to_string(nv) + " vertices, " +
                                      std::to_string(entries) + " adjacency entries)");

    std::vector<i64> offset(depth + 2, 0);
    for (int n = 0; n <= depth; ++n)
        offset[n + 1] = offset[n] + (n == depth ? boundary_size : l[n]);

    Graph g;
    g.adj.assign(nv, {});
    g.core.assign(nv, 1);
    std::vector<VertexLabel> labels(nv);
    for (int n = 0; n <= depth; ++n) {
        const i64 sz = offset[n + 1] - offset[n];
        for (i64 i = 0; i < sz; ++i)
            labels[offset[n] + i] = {n, static_cast<std::int32_t>(i)};
        if (n == depth)
            for (i64 i = 0; i < sz; ++i) g.core[offset[n] + i] = 0;
    }

    // complete blocks (boundary block only in full mode)
    for (int n = 0; n <= (thin ? depth - 1 : depth); ++n) {
        const i64 a = offset[n], sz = offset[n + 1] - offset[n];
        for (i64 i = 0; i < sz; ++i) {
            auto& row = g.adj[a + i];
            row.reserve(sz - 1);
            for (i64 k = 0; k < sz; ++k)
                if (k != i) row.push_back(static_cast<Vertex>(a + k));
        }
    }

    // greedy cross edges: v_j^(n) takes the next unused targets of K_{n+1}
    for (int n = 0; n < depth; ++n) {
        i64 next = 0;
        const i64 cap = offset[n + 2] - offset[n + 1];
        for (i64 j = 1; j <= l[n]; ++j) {
            const i64 c = std::max<i64>(0, ceil_div_rate(j, spec.s) - l[n]);
            if (next + c > cap) throw error(errc::infeasible, "cross-edge assignment overflow");
            const Vertex src = static_cast<Vertex>(offset[n] + j - 1);
            for (i64 t = 0; t < c; ++t) {
                const Vertex dst = static_cast<Vertex>(offset[n + 1] + next + t);
                g.adj[src].push_back(dst);
                g.adj[dst].push_back(src);
            }
            next += c;
        }
    }

    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    g.labels = std::move(labels);
    validate_graph(g);
    return g;
}

// ---------------------------------------------------------------------------
// Antitree family
// ---------------------------------------------------------------------------

AntitreeModel antitree_model(int sigma, int depth) {
    if (sigma < 2) throw error(errc::domain_error, "antitree sigma must be >= 2");
    if (depth < 2) throw error(errc::domain_error, "antitree depth must be >= 2");
    return AntitreeModel{sigma, depth};
}

std::int64_t AntitreeModel::sphere_size(int n) const {
    i64 s = 1;
    for (int i = 0; i < n; ++i) s = checked_mul(s, sigma, "sphere size");
    return s;
}

std::int64_t AntitreeModel::degree(int n) const {
    if (n == 0) return sigma;
    return sphere_size(n - 1) + sphere_size(n) + sphere_size(n + 1) - 1;
}

std::int64_t AntitreeModel::truncated_degree(int n) const {
    i64 d = sphere_size(n) - 1;
    if (n > 0) d += sphere_size(n - 1);
    if (n < depth) d += sphere_size(n + 1);
    return d;
}

std::int64_t AntitreeModel::vertex_count() const {
    i64 t = 0;
    for (int n = 0; n <= depth; ++n) t += sphere_size(n);
    return t;
}

std::int64_t AntitreeModel::core_count() const { return vertex_count() - sphere_size(depth); }

DegreeProfile AntitreeModel::core_profile() const {
    if (core_count() > 100'000'000)
        throw error(errc::budget, "core profile too large to materialize");
    DegreeProfile p;
    p.degrees.reserve(core_count());
    for (int n = 0; n < depth; ++n) {
        const i64 d = degree(n); // core degrees are the infinite-graph degrees
        for (i64 i = 0; i < sphere_size(n); ++i) p.degrees.push_back(d);
    }
    return p; // already nondecreasing
}

std::int64_t AntitreeModel::ball_count(int n) const {
    i64 t = 0;
    for (int m = 0; m <= n; ++m) t += sphere_size(m);
    return t;
}

std::int64_t AntitreeModel::ball_volume(int n) const {
    if (n > depth - 1)
        throw error(errc::domain_error, "ball exceeds the reliable core");
    i64 v = 0;
    for (int m = 0; m <= n; ++m) v += checked_mul(sphere_size(m), degree(m), "ball volume");
    return v;
}

Graph antitree(const AntitreeSpec& spec) {
    AntitreeModel m = antitree_model(spec.sigma, spec.depth);
    const int depth = spec.depth;
    const bool thin = spec.boundary == Boundary::thin;

    const i64 nv = m.vertex_count();
    i64 entries = 0;
    for (int n = 0; n <= depth; ++n) {
        i64 d = m.truncated_degree(n);
        if (thin && n == depth) d = m.sphere_size(depth - 1); // drop boundary-internal edges
        entries += checked_mul(m.sphere_size(n), d, "adjacency entries");
    }
    if (nv > spec.budget.max_vertices || entries > spec.budget.max_adjacency)
        throw error(errc::budget, "antitree exceeds vertex/edge budget (" + std::to_string(nv) +
                                      " vertices, " + std::to_string(entries) +
                                      " adjacency entries)");

    std::vector<i64> offset(depth + 2, 0);
    for (int n = 0; n <= depth; ++n) offset[n + 1] = offset[n] + m.sphere_size(n);

    Graph g;
    g.adj.assign(nv, {});
    g.core.assign(nv, 1);
    std::vector<VertexLabel> labels(nv);
    for (int n = 0; n <= depth; ++n)
        for (i64 i = offset[n]; i < offset[n + 1]; ++i)
            labels[i] = {n, static_cast<std::int32_t>(i - offset[n])};
    for (i64 i = offset[depth]; i < offset[depth + 1]; ++i) g.core[i] = 0;

    for (int n = 0; n <= depth; ++n) {
        const i64 a = offset[n], b = offset[n + 1];
        const bool intra = !(thin && n == depth);
        for (i64 v = a; v < b; ++v) {
            auto& row = g.adj[v];
            i64 cap = (intra ? b - a - 1 : 0);
            if (n > 0) cap += offset[n] - offset[n - 1];
            if (n < depth) cap += offset[n + 2] - offset[n + 1];
            row.reserve(cap);
            if (n > 0)
                for (i64 w = offset[n - 1]; w < a; ++w) row.push_back(static_cast<Vertex>(w));
            if (intra)
                for (i64 w = a; w < b; ++w)
                    if (w != v) row.push_back(static_cast<Vertex>(w));
            if (n < depth)
                for (i64 w = b; w < offset[n + 2]; ++w) row.push_back(static_cast<Vertex>(w));
        }
    }
    // rows were appended in ascending order already
    g.labels = std::move(labels);
    validate_graph(g);
    return g;
}

// ---------------------------------------------------------------------------
// Baselines
// ---------------------------------------------------------------------------

Graph path_graph(std::int64_t n) {
    if (n < 1) throw error(errc::domain_error, "path needs >= 1 vertices");
    if (n > 10'000'000) throw error(errc::budget, "path too large");
    Graph g;
    g.adj.assign(n, {});
    g.core.assign(n, 1);
    for (i64 v = 0; v + 1 < n; ++v) {
        g.adj[v].push_back(static_cast<Vertex>(v + 1));
        g.adj[v + 1].push_back(static_cast<Vertex>(v));
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    validate_graph(g);
    return g;
}

Graph complete_graph(std::int64_t n) {
    if (n < 1) throw error(errc::domain_error, "complete graph needs >= 1 vertices");
    if (n > 10'000) throw error(errc::budget, "complete graph too large");
    Graph g;
    g.adj.assign(n, {});
    g.core.assign(n, 1);
    for (i64 v = 0; v < n; ++v)
        for (i64 w = 0; w < n; ++w)
            if (w != v) g.adj[v].push_back(static_cast<Vertex>(w));
    validate_graph(g);
    return g;
}

Graph regular_tree(int branching, int depth) {
    if (branching < 2) throw error(errc::domain_error, "tree branching must be >= 2");
    if (depth < 1) throw error(errc::domain_error, "tree depth must be >= 1");
    i64 nv = 0, level = 1;
    for (int d = 0; d <= depth; ++d) {
        nv += level;
        level = checked_mul(level, branching, "tree size");
        if (nv > 10'000'000) throw error(errc::budget, "tree too large");
    }
    Graph g;
    g.adj.assign(nv, {});
    g.core.assign(nv, 1);
    i64 first_child = 1;
    std::vector<i64> level_start{0};
    level = 1;
    for (int d = 0; d < depth; ++d) {
        i64 start = level_start.back();
        for (i64 i = 0; i < level; ++i) {
            i64 parent = start + i;
            for (int c = 0; c < branching; ++c) {
                i64 child = first_child + i * branching + c;
                g.adj[parent].push_back(static_cast<Vertex>(child));
                g.adj[child].push_back(static_cast<Vertex>(parent));
            }
        }
        level_start.push_back(first_child);
        first_child += level * branching;
        level *= branching;
    }
    for (i64 v = level_start.back(); v < nv; ++v) g.core[v] = 0; // leaves at max depth
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    validate_graph(g);
    return g;
}

} // namespace rbg
