#include "rbg/errors.hpp"

namespace rbg {

const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::self_loop: return "SelfLoop";
        case errc::disconnected: return "Disconnected";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::empty_core: return "EmptyCore";
        case errc::empty_set: return "EmptySet";
        case errc::too_large: return "TooLarge";
        case errc::budget: return "Budget";
        case errc::infeasible: return "Infeasible";
        case errc::missing_labels: return "MissingLabels";
        case errc::domain_error: return "DomainError";
        case errc::convergence_failure: return "ConvergenceFailure";
        case errc::grid_out_of_range: return "GridOutOfRange";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::rate_too_high: return "RateTooHigh";
        case errc::lemma_fails: return "LemmaFails";
        case errc::boundary_vertex: return "BoundaryVertex";
        case errc::solver_failure: return "SolverFailure";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace rbg
