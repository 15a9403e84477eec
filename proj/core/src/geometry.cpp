#include "edc/geometry.hpp"

#include <algorithm>

namespace edc {

const char* errc_name(errc code) {
    switch (code) {
        case errc::disjoint: return "Disjoint";
        case errc::concentric: return "Concentric";
        case errc::coincident: return "Coincident";
        case errc::degenerate_axis: return "DegenerateAxis";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::degenerate_line: return "DegenerateLine";
        case errc::length_out_of_range: return "LengthOutOfRange";
        case errc::point_inside_or_on: return "PointInsideOrOn";
        case errc::nonpositive_length: return "NonpositiveLength";
        case errc::collinear_points: return "CollinearPoints";
        case errc::points_not_on_circle: return "PointsNotOnCircle";
        case errc::danger_circle: return "DangerCircle";
        case errc::no_solution: return "NoSolution";
        case errc::parallel_lines: return "ParallelLines";
        case errc::coincident_lines: return "CoincidentLines";
        case errc::line_misses_circle: return "LineMissesCircle";
        case errc::observer_on_glass: return "ObserverOnGlass";
        case errc::unsupported: return "Unsupported";
        case errc::unbound_input: return "UnboundInput";
        case errc::step_error: return "StepError";
        case errc::assertion_failed: return "AssertionFailed";
        case errc::syntax_error: return "SyntaxError";
        case errc::duplicate_name: return "DuplicateName";
        case errc::forward_reference: return "ForwardReference";
        case errc::empty_trace: return "EmptyTrace";
    }
    return "Unknown";
}

double distance(point p, point q) { return std::hypot(p.x - q.x, p.y - q.y); }

bool finite(point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

point circle_circle_intersect(const circle& a, const circle& b, branch br, tolerance tol) {
    const double eps = tol.eps();
    const double d = distance(a.center, b.center);

    if (d <= eps) {
        if (std::fabs(a.radius - b.radius) <= eps)
            throw error(errc::coincident, "circles coincide; infinitely many intersections");
        throw error(errc::concentric, "circle centers coincide");
    }

    const double sum = a.radius + b.radius;
    const double diff = std::fabs(a.radius - b.radius);
    const bool tangent_outer = std::fabs(d - sum) <= eps;
    const bool tangent_inner = std::fabs(d - diff) <= eps;

    if (d > sum + eps)
        throw error(errc::disjoint, "circles separated beyond tangency band");
    if (d < diff - eps)
        throw error(errc::disjoint, "one circle nested inside the other beyond tangency band");

    // Midpoint-along-axis plus half-chord decomposition. Near tangency the
    // radicand is clamped to zero so both branches return the axis point.
    const point u = (1.0 / d) * (b.center - a.center);
    const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    double h = 0.0;
    if (!tangent_outer && !tangent_inner) {
        const double h2 = a.radius * a.radius - along * along;
        h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    }

    const point base = a.center + along * u;
    const point n = perp(u);
    point result = br == branch::left ? base + h * n : base + (-h) * n;
    if (!finite(result))
        throw error(errc::degenerate_input, "intersection produced non-finite coordinates");
    return result;
}

side side_of(point p, point from, point to, tolerance tol) {
    const double eps = tol.eps();
    const double len = distance(from, to);
    if (len <= eps)
        throw error(errc::degenerate_axis, "side_of axis endpoints coincide");
    const double c = cross(to - from, p - from);
    if (std::fabs(c) / len <= eps) return side::on;
    return c > 0.0 ? side::left : side::right;
}

} // namespace edc
