#pragma once

#include <map>
#include <optional>

#include "edc/program.hpp"

namespace edc {

// Deterministic evaluation of a construction program. Bindings override
// the coordinates of `given` steps by name; unknown names are rejected.
// When no tolerance is supplied, the scale is taken from the bound inputs.
trace execute(const program& p, const std::map<ref, point>& bindings = {},
              std::optional<tolerance> tol = std::nullopt);

// Analytic helpers shared by the ruler-aware executor and the transpiler
// dispatcher. These are the straightedge semantics; compass programs never
// reach them.
point line_line_intersection(point p1, point p2, point q1, point q2, tolerance tol);
point line_circle_intersection(point p, point q, const circle& c, branch br, tolerance tol);
point foot_on_line(point a, point p, point q);
point circumcenter_of(point a, point b, point c, tolerance tol);

// Assertion check used by the executor; returns the measured error.
double assertion_error(const assertion& a, const trace& t);

} // namespace edc
