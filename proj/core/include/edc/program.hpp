#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "edc/geometry.hpp"

namespace edc {

// Refs are names; every name is assigned exactly once, and steps may only
// mention earlier names. A line value is an ordered point pair that is
// never drawn, only intersected.
using ref = std::string;

enum class program_kind { compass, ruler };

struct given_step {
    ref out;
    point value; // default binding; `run --bind` may override
};

struct draw_circle_step {
    ref out;
    ref center;
    ref radius_from_a;
    ref radius_from_b;
};

struct intersect_step {
    ref out;
    ref c1;
    ref c2;
    branch br = branch::left;
};

// Ruler-only steps.
struct draw_line_step {
    ref out;
    ref p;
    ref q;
};

struct intersect_ll_step {
    ref out;
    ref l1;
    ref l2;
};

struct intersect_lc_step {
    ref out;
    ref l;
    ref c;
    branch br = branch::left;
};

struct circle_diameter_step { // ruler-input sugar: circle from diameter endpoints
    ref out;
    ref a;
    ref b;
};

struct circle_three_points_step { // ruler-input sugar: circle through three points
    ref out;
    ref a;
    ref b;
    ref c;
};

using step = std::variant<given_step, draw_circle_step, intersect_step, draw_line_step,
                          intersect_ll_step, intersect_lc_step, circle_diameter_step,
                          circle_three_points_step>;

enum class assert_kind { collinear, dist_equal, on_circle };

struct assertion {
    assert_kind kind;
    // collinear: a b c points; dist_equal: dist(a,b) == dist(c,d); on_circle: point a on circle b.
    ref a, b, c, d;
};

struct step_metrics {
    std::size_t circles = 0;
    std::size_t intersections = 0;
    std::size_t ruler_steps = 0;

    friend step_metrics operator+(step_metrics x, step_metrics y) {
        return {x.circles + y.circles, x.intersections + y.intersections,
                x.ruler_steps + y.ruler_steps};
    }
    friend bool operator==(const step_metrics&, const step_metrics&) = default;
};

struct program {
    program_kind kind = program_kind::compass;
    std::vector<step> steps;            // includes the givens, in order
    std::vector<ref> outputs;           // named refs of interest
    std::vector<assertion> assertions;  // checked after execution

    bool has_ruler_steps() const;
    // Validates single assignment, topological ordering and (for compass
    // programs) the purity invariant. Throws edc::error on violation.
    void validate() const;
};

step_metrics metrics(const program& p);

struct line_value {
    point p;
    point q;
};

using value = std::variant<point, circle, line_value>;

// The evaluated result of running a program: every ref's value, in
// definition order, plus the per-step evaluations.
struct trace {
    std::vector<std::pair<ref, value>> entries; // definition order
    std::map<ref, std::size_t> index;
    tolerance tol;

    bool has(const ref& r) const { return index.count(r) != 0; }
    const value& at(const ref& r) const;
    point point_at(const ref& r) const;
    circle circle_at(const ref& r) const;
    line_value line_at(const ref& r) const;
};

} // namespace edc
