#pragma once
#include <stdexcept>
#include <string>

namespace rbg {

enum class errc {
    duplicate_edge,
    self_loop,
    disconnected,
    index_out_of_range,
    empty_core,
    empty_set,
    too_large,
    budget,
    infeasible,
    missing_labels,
    domain_error,
    convergence_failure,
    grid_out_of_range,
    length_mismatch,
    rate_too_high,
    lemma_fails,
    boundary_vertex,
    solver_failure,
    io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace rbg
