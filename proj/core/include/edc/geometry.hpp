#pragma once

#include <cmath>
#include <compare>

#include "edc/error.hpp"

namespace edc {

struct point {
    double x = 0.0;
    double y = 0.0;

    friend point operator+(point a, point b) { return {a.x + b.x, a.y + b.y}; }
    friend point operator-(point a, point b) { return {a.x - b.x, a.y - b.y}; }
    friend point operator*(double s, point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(point a, point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(point a, point b) { return a.x * b.x + a.y * b.y; }
inline double cross(point a, point b) { return a.x * b.y - a.y * b.x; }
inline double norm(point p) { return std::hypot(p.x, p.y); }
// Left normal: p rotated by +90 degrees.
inline point perp(point p) { return {-p.y, p.x}; }

double distance(point p, point q);

bool finite(point p);

struct circle {
    point center;
    double radius = 0.0;
};

enum class branch { left, right };

inline branch opposite(branch b) { return b == branch::left ? branch::right : branch::left; }

enum class side { left, right, on };

// Tolerance policy: one relative epsilon scaled by the magnitude of the
// inputs in play, floored at 1 so that programs near the origin are not
// held to an impossible standard.
struct tolerance {
    double eps_rel = 1e-9;
    double scale = 1.0;

    static tolerance with_scale(double s, double eps_rel = 1e-9) {
        tolerance t;
        t.eps_rel = eps_rel;
        t.scale = s < 1.0 ? 1.0 : s;
        return t;
    }

    double eps() const { return eps_rel * (scale < 1.0 ? 1.0 : scale); }

    // Grow the scale to cover a coordinate magnitude.
    void absorb(point p) {
        double m = std::fabs(p.x) > std::fabs(p.y) ? std::fabs(p.x) : std::fabs(p.y);
        if (m > scale) scale = m;
    }
};

// The universal primitive: one of the two intersection points of two
// circles. branch::left is the point in the positive half-plane of the
// directed line from a.center to b.center. Tangent configurations inside
// the tolerance band collapse to the single tangency point on the axis.
point circle_circle_intersect(const circle& a, const circle& b, branch br, tolerance tol);

// Which side of the directed line from->to the point p lies on, snapped
// to side::on within the effective epsilon (measured as distance to the line).
side side_of(point p, point from, point to, tolerance tol);

} // namespace edc
