#pragma once

#include <stdexcept>
#include <string>

namespace matchbook {

// Failure classes. The CLI maps each class onto a fixed exit code, so keep
// the grouping stable: document syntax, input validation, resource caps, and
// internal invariants that only a bug (or misuse of a narrow contract) can
// trip.
enum class errc {
    // syntax of a serialized document
    parse,

    // input validation
    invalid_graph,
    not_biconnected,
    not_outerplanar,
    not_a_cycle,
    domain_mismatch,
    invalid_certificate,
    unknown_family,
    start_not_degree2,
    precondition,

    // resource caps
    cap_exceeded,

    // internal invariants; reaching these means a contract the construction
    // relies on was violated
    no_reduction,
    invalid_step,
    no_free_page,
    rotation_invalid,
    order_mismatch,
    page_collision,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Syntax error in a serialized document, with 1-based line and column.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(errc::parse,
                "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

inline bool is_internal_error(errc code) {
    switch (code) {
        case errc::no_reduction:
        case errc::invalid_step:
        case errc::no_free_page:
        case errc::rotation_invalid:
        case errc::order_mismatch:
        case errc::page_collision:
        case errc::internal:
            return true;
        default:
            return false;
    }
}

}  // namespace matchbook
