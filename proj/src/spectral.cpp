#include "rbg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace rbg {

void LaplacianOperator::apply(std::span<const double> in, std::span<double> out) const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * in[i];
        for (std::size_t k = row_offset[i]; k < row_offset[i + 1]; ++k) acc -= in[cols[k]];
        out[i] = acc;
    }
}

double LaplacianOperator::quadratic_form(std::span<const double> phi) const {
    const std::size_t n = dim();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = diag[i] * phi[i];
        for (std::size_t k = row_offset[i]; k < row_offset[i + 1]; ++k) row -= phi[cols[k]];
        acc += row * phi[i];
    }
    return acc;
}

double LaplacianOperator::trace() const {
    double t = 0.0;
    for (double d : diag) t += d;
    return t;
}

std::vector<double> LaplacianOperator::dense() const {
    const std::size_t n = dim();
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = diag[i];
        for (std::size_t k = row_offset[i]; k < row_offset[i + 1]; ++k) m[i * n + cols[k]] -= 1.0;
    }
    return m;
}

LaplacianOperator assemble(const Graph& g, Bc bc) {
    LaplacianOperator op;
    op.bc = bc;
    if (bc == Bc::neumann) {
        op.vertices.resize(g.size());
        for (Vertex v = 0; v < g.size(); ++v) op.vertices[v] = v;
    } else {
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.is_core(v)) op.vertices.push_back(v);
        if (op.vertices.empty()) throw error(errc::empty_core, "dirichlet operator needs a core");
    }
    const std::size_t n = op.vertices.size();
    std::vector<std::uint32_t> to_row(g.size(), UINT32_MAX);
    for (std::size_t i = 0; i < n; ++i) to_row[op.vertices[i]] = static_cast<std::uint32_t>(i);

    op.diag.resize(n);
    op.row_offset.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = op.vertices[i];
        op.diag[i] = static_cast<double>(g.degree(v)); // full degree either way
        std::size_t kept = 0;
        for (Vertex w : g.adj[v])
            if (to_row[w] != UINT32_MAX) ++kept;
        op.row_offset[i + 1] = op.row_offset[i] + kept;
    }
    op.cols.resize(op.row_offset[n]);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = op.row_offset[i];
        for (Vertex w : g.adj[op.vertices[i]])
            if (to_row[w] != UINT32_MAX) op.cols[k++] = to_row[w];
    }
    return op;
}

namespace {

SpectrumResult dense_spectrum(const LaplacianOperator& op, std::int64_t count) {
    const auto n = static_cast<Eigen::Index>(op.dim());
    Eigen::MatrixXd m(n, n);
    m.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = op.diag[i];
        for (std::size_t k = op.row_offset[i]; k < op.row_offset[i + 1]; ++k)
            m(i, op.cols[k]) -= 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw error(errc::convergence_failure, "dense eigensolver failed");
    SpectrumResult r;
    r.bc = op.bc;
    r.solver_tolerance = 1e-9;
    const Eigen::Index keep = count == kAllEigenvalues ? n : std::min<Eigen::Index>(count, n);
    r.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + keep);
    return r;
}

/// Lanczos with full reorthogonalization for the lowest part of the
/// spectrum. Exact (up to rounding) once the Krylov space saturates.
SpectrumResult lanczos_spectrum(const LaplacianOperator& op, std::int64_t count,
                                std::size_t max_steps, double tol) {
    const std::size_t n = op.dim();
    const std::size_t want = static_cast<std::size_t>(count);
    max_steps = std::min(max_steps, n);
    if (want > max_steps)
        throw error(errc::too_large,
                    "iterative path supports only the lowest eigenvalues; requested " +
                        std::to_string(want));

    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta; // tridiagonal entries
    std::mt19937_64 rng(12345);
    Eigen::VectorXd v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) - 0.5;
    v.normalize();
    Eigen::VectorXd w(n);

    auto ritz = [&](Eigen::VectorXd& vals, Eigen::MatrixXd& vecs) {
        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        vals = es.eigenvalues();
        vecs = es.eigenvectors();
    };

    for (std::size_t step = 0; step < max_steps; ++step) {
        basis.push_back(v);
        op.apply(std::span<const double>(v.data(), n), std::span<double>(w.data(), n));
        if (step > 0) w -= beta[step - 1] * basis[step - 1];
        alpha.push_back(w.dot(v));
        w -= alpha[step] * v;
        for (const auto& b : basis) w -= b.dot(w) * b; // full reorthogonalization
        const double nb = w.norm();

        const bool saturated = nb < 1e-12 || step + 1 == n;
        if (step + 1 >= want && (saturated || (step + 1) % 8 == 0 || step + 1 == max_steps)) {
            Eigen::VectorXd vals;
            Eigen::MatrixXd vecs;
            ritz(vals, vecs);
            bool ok = true;
            if (!saturated) {
                for (std::size_t i = 0; i < want && ok; ++i) {
                    const double resid = nb * std::abs(vecs(vecs.rows() - 1, i));
                    if (resid > tol * std::max(1.0, std::abs(vals[i]))) ok = false;
                }
            }
            if (ok || saturated) {
                SpectrumResult r;
                r.bc = op.bc;
                r.solver_tolerance = tol;
                const std::size_t keep = saturated
                                             ? std::min<std::size_t>(want, alpha.size())
                                             : want;
                r.eigenvalues.assign(vals.data(), vals.data() + keep);
                return r;
            }
        }
        if (saturated) break;
        beta.push_back(nb);
        v = w / nb;
    }
    throw error(errc::convergence_failure, "lanczos stagnated before reaching tolerance");
}

} // namespace

SpectrumResult eigenvalues(const LaplacianOperator& op, std::int64_t count) {
    const std::size_t n = op.dim();
    if (count != kAllEigenvalues && (count < 1 || static_cast<std::size_t>(count) > n))
        throw error(errc::domain_error, "eigenvalue count out of range");
    if (n <= 2000) return dense_spectrum(op, count);
    if (count == kAllEigenvalues)
        throw error(errc::too_large,
                    "full spectrum needs the dense path (dim <= 2000); request a count");
    return lanczos_spectrum(op, count, std::max<std::size_t>(4 * count + 64, 256), 1e-7);
}

double gamma(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw error(errc::domain_error, "gamma needs s in [0,1]");
    const double a = (1.0 - s) * (1.0 - s) / (1.0 + s * s);
    return std::sqrt(std::max(0.0, 1.0 - a * a));
}

double reliable_window_top(const Graph& g, double c) {
    std::int64_t dmin = -1;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!g.is_core(v) && (dmin < 0 || g.degree(v) < dmin)) dmin = g.degree(v);
    if (dmin < 0) return std::numeric_limits<double>::infinity();
    return c * static_cast<double>(dmin);
}

namespace {

std::int64_t count_leq(const std::vector<double>& sorted, double x) {
    return std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
}

} // namespace

std::vector<WeylRow> counting_and_weyl(const SpectrumResult& spec, const DegreeProfile& profile,
                                       std::span<const double> grid, double window_top) {
    std::vector<WeylRow> rows;
    rows.reserve(grid.size());
    for (double lam : grid) {
        if (lam < 0.0 || lam > window_top)
            throw error(errc::grid_out_of_range,
                        "grid point " + std::to_string(lam) + " outside [0, window]");
        WeylRow r;
        r.lambda = lam;
        r.count = count_leq(spec.eigenvalues, lam + kTieTolerance);
        r.eta = eta(profile, lam + kTieTolerance);
        if (r.eta > 0)
            r.ratio = static_cast<double>(r.count) / static_cast<double>(r.eta);
        else
            r.ratio = r.count == 0 ? 0.0 : std::numeric_limits<double>::infinity();
        rows.push_back(r);
    }
    return rows;
}

std::vector<double> weyl_event_grid(const SpectrumResult& spec, const DegreeProfile& profile,
                                    double window_top) {
    const double lo = static_cast<double>(profile.degrees.front());
    std::vector<double> grid{lo};
    for (double lam : spec.eigenvalues)
        if (lam >= lo && lam <= window_top) grid.push_back(lam);
    for (std::size_t i = 0; i < profile.degrees.size(); ++i) {
        if (i > 0 && profile.degrees[i] == profile.degrees[i - 1]) continue;
        const double d = static_cast<double>(profile.degrees[i]);
        if (d >= lo && d <= window_top) grid.push_back(d);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<double> eigen_ratios(const SpectrumResult& spec, const DegreeProfile& profile) {
    if (spec.eigenvalues.size() != profile.degrees.size())
        throw error(errc::length_mismatch,
                    "spectrum (" + std::to_string(spec.eigenvalues.size()) + ") vs profile (" +
                        std::to_string(profile.degrees.size()) + ")");
    std::vector<double> out(spec.eigenvalues.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = spec.eigenvalues[k] / static_cast<double>(profile.degrees[k]);
    return out;
}

RatioSummary ratio_summary(std::span<const double> ratios, std::size_t lo, std::size_t hi) {
    RatioSummary s;
    hi = std::min(hi, ratios.size());
    if (lo >= hi) return s;
    std::vector<double> w(ratios.begin() + lo, ratios.begin() + hi);
    std::sort(w.begin(), w.end());
    s.count = static_cast<std::int64_t>(w.size());
    s.min = w.front();
    s.max = w.back();
    s.median = w.size() % 2 ? w[w.size() / 2] : 0.5 * (w[w.size() / 2 - 1] + w[w.size() / 2]);
    return s;
}

double form_inequality_check(const Graph& g, double alpha, int trials, std::uint64_t seed,
                             int max_support) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw error(errc::domain_error, "alpha must lie in [0,1]");
    if (trials < 1) throw error(errc::domain_error, "need at least one trial");
    const double root = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); };

    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> phi(g.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
        // random connected support grown from a random root
        std::vector<Vertex> support{static_cast<Vertex>(rng() % g.size())};
        std::vector<std::uint8_t> in(g.size(), 0);
        in[support[0]] = 1;
        const std::size_t target = 1 + rng() % static_cast<std::uint64_t>(max_support);
        while (support.size() < target) {
            std::vector<Vertex> frontier;
            for (Vertex v : support)
                for (Vertex w : g.adj[v])
                    if (!in[w]) frontier.push_back(w);
            if (frontier.empty()) break;
            Vertex pick = frontier[rng() % frontier.size()];
            in[pick] = 1;
            support.push_back(pick);
        }
        for (Vertex v : support) phi[v] = 2.0 * unit() - 1.0;

        double q = 0.0, m = 0.0;
        for (Vertex v : support) {
            m += static_cast<double>(g.degree(v)) * phi[v] * phi[v];
            for (Vertex w : g.adj[v]) {
                if (!in[w])
                    q += phi[v] * phi[v];
                else if (w > v)
                    q += (phi[v] - phi[w]) * (phi[v] - phi[w]);
            }
        }
        worst = std::min(worst, q - (1.0 - root) * m);
        worst = std::min(worst, (1.0 + root) * m - q);
        for (Vertex v : support) phi[v] = 0.0;
    }
    return worst;
}

NormalizedBottom normalized_bottom(const Graph& g) {
    LaplacianOperator op = assemble(g, Bc::dirichlet);
    const std::size_t n = op.dim();
    if (n > 2000)
        throw error(errc::too_large, "normalized bottom uses the dense path (core <= 2000)");
    NormalizedBottom out;
    Eigen::MatrixXd m(n, n);
    m.setZero();
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        for (std::size_t k = op.row_offset[i]; k < op.row_offset[i + 1]; ++k)
            m(i, op.cols[k]) -= 1.0 / std::sqrt(op.diag[i] * op.diag[op.cols[k]]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw error(errc::convergence_failure, "dense eigensolver failed");
    out.lambda0 = solver.eigenvalues()[0];
    out.r_hat = estimate_rates(degree_profile(g)).r_hat;
    const double r = std::min(out.r_hat, 1.0);
    out.bound_one_minus_gamma = 1.0 - gamma(r);
    out.bound_gamma = gamma(r);
    out.holds_one_minus_gamma = out.lambda0 >= out.bound_one_minus_gamma - 1e-9;
    out.holds_gamma = out.lambda0 >= out.bound_gamma - 1e-9;
    out.note = std::string("lambda0(normalized dirichlet) = ") + std::to_string(out.lambda0) +
               "; bound 1-gamma(r) " + (out.holds_one_minus_gamma ? "holds" : "fails") +
               ", bound gamma(r) " + (out.holds_gamma ? "holds" : "fails") +
               (out.r_hat > 1.0 ? " (r_hat > 1, bounds evaluated at r=1)" : "");
    return out;
}

namespace {

SpectrumResult antitree_structured(const AntitreeModel& m, Bc bc,
                                   bool normalized) {
    const int nspheres = bc == Bc::dirichlet ? m.depth : m.depth + 1;
    std::vector<double> deg(nspheres);
    for (int n = 0; n < nspheres; ++n)
        deg[n] = static_cast<double>(bc == Bc::dirichlet ? m.degree(n)
                                                         : m.truncated_degree(n));
    const double sigma = static_cast<double>(m.sigma);

    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(nspheres, nspheres);
    for (int n = 0; n < nspheres; ++n) {
        q(n, n) = deg[n] - (std::pow(sigma, n) - 1.0);
        if (n + 1 < nspheres) q(n, n + 1) = q(n + 1, n) = -std::pow(sigma, n + 0.5);
    }
    if (normalized) {
        Eigen::VectorXd dh(nspheres);
        for (int n = 0; n < nspheres; ++n) dh[n] = 1.0 / std::sqrt(deg[n]);
        q = dh.asDiagonal() * q * dh.asDiagonal();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw error(errc::convergence_failure, "quotient eigensolver failed");

    SpectrumResult r;
    r.bc = bc;
    r.solver_tolerance = 1e-12;
    std::int64_t total = nspheres;
    for (int n = 0; n < nspheres; ++n) total += m.sphere_size(n) - 1;
    if (total > 100'000'000) throw error(errc::budget, "spectrum too large to materialize");
    r.eigenvalues.reserve(total);
    for (int i = 0; i < nspheres; ++i) r.eigenvalues.push_back(solver.eigenvalues()[i]);
    for (int n = 0; n < nspheres; ++n) {
        const double lam = normalized ? (deg[n] + 1.0) / deg[n] : deg[n] + 1.0;
        for (std::int64_t i = 0; i < m.sphere_size(n) - 1; ++i) r.eigenvalues.push_back(lam);
    }
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
    return r;
}

} // namespace

SpectrumResult antitree_spectrum(const AntitreeModel& m, Bc bc) {
    return antitree_structured(m, bc, false);
}

std::vector<double> antitree_normalized_spectrum(const AntitreeModel& m, Bc bc) {
    return antitree_structured(m, bc, true).eigenvalues;
}

} // namespace rbg
