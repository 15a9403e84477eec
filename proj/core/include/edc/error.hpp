#pragma once

#include <stdexcept>
#include <string>

namespace edc {

// Every failure mode the engine can report. Codes are part of the API:
// tests and the CLI dispatch on them, messages are for humans.
enum class errc {
    disjoint,
    concentric,
    coincident,
    degenerate_axis,
    degenerate_input,
    degenerate_line,
    length_out_of_range,
    point_inside_or_on,
    nonpositive_length,
    collinear_points,
    points_not_on_circle,
    danger_circle,
    no_solution,
    parallel_lines,
    coincident_lines,
    line_misses_circle,
    observer_on_glass,
    unsupported,
    unbound_input,
    step_error,
    assertion_failed,
    syntax_error,
    duplicate_name,
    forward_reference,
    empty_trace,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// A geometric failure inside a program, annotated with the step that raised it.
class step_error : public error {
public:
    step_error(std::size_t step_index, errc underlying, const std::string& message)
        : error(errc::step_error,
                "step " + std::to_string(step_index) + ": " + message),
          step_index_(step_index), underlying_(underlying) {}

    std::size_t step_index() const { return step_index_; }
    errc underlying() const { return underlying_; }

private:
    std::size_t step_index_;
    errc underlying_;
};

class assertion_failed : public error {
public:
    assertion_failed(std::string predicate, double measured)
        : error(errc::assertion_failed,
                "assertion failed: " + predicate + " (error " + std::to_string(measured) + ")"),
          predicate_(std::move(predicate)), measured_(measured) {}

    const std::string& predicate() const { return predicate_; }
    double measured() const { return measured_; }

private:
    std::string predicate_;
    double measured_;
};

// Parser diagnostic with source position. Lines and columns are 1-based.
class parse_error : public error {
public:
    parse_error(int line, int column, errc code, const std::string& message)
        : error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace edc
