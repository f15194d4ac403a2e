#pragma once
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rbg/generators.hpp"
#include "rbg/graph.hpp"

namespace rbg {

enum class Bc {
    neumann,   // plain finite-graph Laplacian on the whole truncation
    dirichlet, // rows/columns restricted to the reliable core, full degrees
               // kept on the diagonal (restriction of the infinite-graph
               // form to functions supported in the core)
};

/// Sparse symmetric action phi |-> deg(v) phi(v) - sum_{w~v} phi(w).
class LaplacianOperator {
public:
    Bc bc = Bc::neumann;
    std::vector<double> diag;           // full degrees
    std::vector<std::size_t> row_offset; // CSR offsets, size dim()+1
    std::vector<std::uint32_t> cols;     // operator-indexed neighbors
    std::vector<Vertex> vertices;        // operator row -> graph vertex

    std::size_t dim() const { return diag.size(); }
    void apply(std::span<const double> in, std::span<double> out) const;
    double quadratic_form(std::span<const double> phi) const; // <L phi, phi>
    double trace() const;
    /// Row-major dense matrix, for the dense eigensolver and for tests.
    std::vector<double> dense() const;
};

LaplacianOperator assemble(const Graph& g, Bc bc);

struct SpectrumResult {
    std::vector<double> eigenvalues; // sorted nondecreasing
    Bc bc = Bc::neumann;
    double solver_tolerance = 0.0;
};

inline constexpr std::int64_t kAllEigenvalues = -1;

/// Smallest `count` eigenvalues (all if kAllEigenvalues). Dense
/// diagonalization for dim <= 2000 (tol 1e-9), Lanczos with full
/// reorthogonalization above that (tol 1e-7).
SpectrumResult eigenvalues(const LaplacianOperator& op, std::int64_t count = kAllEigenvalues);

/// gamma(s) = sqrt(1 - (1-s)^4/(1+s^2)^2) on [0,1]; endpoints exact.
double gamma(double s);

/// Top of the reliable spectral window: c * min degree over excised
/// (non-core) vertices; +inf when the graph is all-core.
double reliable_window_top(const Graph& g, double c = 0.5);

struct WeylRow {
    double lambda = 0.0;
    std::int64_t count = 0; // N(lambda) = #{k : lambda_k <= lambda + tie_tol}
    std::int64_t eta = 0;
    double ratio = 0.0;
};

inline constexpr double kTieTolerance = 1e-8;

/// Pointwise N(lambda)/eta(lambda) over the given grid. Grid points must
/// lie in [0, window_top].
std::vector<WeylRow> counting_and_weyl(const SpectrumResult& spec, const DegreeProfile& profile,
                                       std::span<const double> grid,
                                       double window_top = std::numeric_limits<double>::infinity());

/// Every lambda at which N or eta jumps, within [min core degree,
/// window_top]. Evaluating the Weyl ratio here captures the entire step
/// function on the window.
std::vector<double> weyl_event_grid(const SpectrumResult& spec, const DegreeProfile& profile,
                                    double window_top);

/// lambda_k / d_k over the shared core ordering.
std::vector<double> eigen_ratios(const SpectrumResult& spec, const DegreeProfile& profile);

struct RatioSummary {
    double min = 0.0, median = 0.0, max = 0.0;
    std::int64_t count = 0;
};

RatioSummary ratio_summary(std::span<const double> ratios, std::size_t lo, std::size_t hi);

/// Random-vector check of the two-sided form inequality
/// (1 -+ sqrt(1-alpha^2)) <deg phi, phi> <= <L phi, phi> <= ... ; returns the
/// worst slack over `trials` seeded vectors with connected support.
double form_inequality_check(const Graph& g, double alpha, int trials,
                             std::uint64_t seed = 42, int max_support = 32);

struct NormalizedBottom {
    double lambda0 = 0.0;
    double r_hat = 0.0;
    double bound_one_minus_gamma = 0.0; // 1 - gamma(r_hat)
    double bound_gamma = 0.0;           // gamma(r_hat)
    bool holds_one_minus_gamma = false;
    bool holds_gamma = false;
    std::string note;
};

/// Bottom of the degree-normalized Dirichlet Laplacian, compared against
/// both candidate bounds gamma(r) and 1-gamma(r) (the source states them
/// inconsistently); reports which holds instead of guessing.
NormalizedBottom normalized_bottom(const Graph& g);

/// Exact spectrum of an antitree truncation via the sphere-symmetry
/// decomposition: functions with zero mean on a sphere S_n are eigenvectors
/// with eigenvalue deg_n + 1 (multiplicity sigma^n - 1); the orthogonal
/// complement is the sphere-averaged quotient, a small Jacobi matrix. Exact
/// for any sigma/depth, including truncations far beyond explicit storage.
SpectrumResult antitree_spectrum(const AntitreeModel& m, Bc bc);

/// Same decomposition for the degree-normalized operator.
std::vector<double> antitree_normalized_spectrum(const AntitreeModel& m, Bc bc);

} // namespace rbg
