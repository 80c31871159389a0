#ifndef QEMBED_ERROR_HPP
#define QEMBED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qembed {

/// Machine-checkable failure categories for all library operations.
enum class errc {
    invalid_argument,
    out_of_range_vertex,
    self_loop,
    empty_part,
    empty_subset,
    disconnected_graph,
    too_large,
    g6_invalid_byte,
    g6_truncated,
    g6_trailing_garbage,
    g6_nonzero_padding,
    g6_unsupported_format,
    g6_unsupported_size,
    eigen_no_convergence,
    not_embeddable,
    dimension_mismatch,
    diameter_out_of_range,
    pole_hit,
    not_a_stationary_alpha,
    precondition_violated,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Thrown when a distance matrix fails Schoenberg's criterion; carries the
/// offending numeric QE constant.
class NotEmbeddable : public Error {
public:
    NotEmbeddable(double qec, const std::string& message)
        : Error(errc::not_embeddable, message), qec_(qec) {}

    double qec() const noexcept { return qec_; }

private:
    double qec_;
};

} // namespace qembed

#endif
