#pragma once

#include <cmath>
#include <numbers>
#include <sstream>

#include "edc/catalog.hpp"
#include "edc/toolkit.hpp"

namespace edc {

std::map<std::string, span> lay_instance_scalars(expansion& e, const instance& in);

namespace detail {

inline point rand_pt(rng& g, double lo = -10.0, double hi = 10.0) {
    return point{g.uniform(lo, hi), g.uniform(lo, hi)};
}

// Resample until the candidate keeps a healthy distance from the anchors.
inline point rand_pt_sep(rng& g, const std::vector<point>& anchors, double min_sep,
                         double lo = -10.0, double hi = 10.0) {
    for (int tries = 0; tries < 1000; ++tries) {
        point p = rand_pt(g, lo, hi);
        bool ok = true;
        for (const point& a : anchors)
            if (distance(p, a) < min_sep) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    throw error(errc::degenerate_input, "sampler failed to separate points");
}

inline point rotate_about(point p, point about, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const point d = p - about;
    return about + point{c * d.x - s * d.y, s * d.x + c * d.y};
}

inline point on_ray(point from, point toward, double dist) {
    const double len = distance(from, toward);
    return from + (dist / len) * (toward - from);
}

inline double angle_at(point vertex, point a, point b) {
    const point u = a - vertex, v = b - vertex;
    return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

inline double triangle_area(point a, point b, point c) {
    return 0.5 * std::fabs(cross(b - a, c - a));
}

inline std::string fmt_pt(point p) {
    std::ostringstream os;
    os << "(" << p.x << "," << p.y << ")";
    return os.str();
}

// Accumulates the spec's relative-error metric over output components.
struct checker {
    double scale;
    double worst = 0.0;
    std::string detail;

    explicit checker(const instance& in) : scale(in.scale()) {}

    void add(const std::string& what, double abs_err, double magnitude) {
        const double rel = abs_err / std::max({1.0, scale, std::fabs(magnitude)});
        if (rel > worst) {
            worst = rel;
            detail = what;
        }
    }
    void point_eq(const std::string& name, point got, point expected) {
        add(name + " expected " + fmt_pt(expected) + " got " + fmt_pt(got),
            distance(got, expected), norm(expected));
    }
    void scalar_eq(const std::string& name, double got, double expected) {
        std::ostringstream os;
        os << name << " expected " << expected << " got " << got;
        add(os.str(), std::fabs(got - expected), expected);
    }
    // Predicate-style: a defining relation that should vanish.
    void relation(const std::string& what, double abs_err, double magnitude = 0.0) {
        add(what, abs_err, magnitude);
    }

    check_result result() const { return {worst, detail}; }
};

// Shorthand used by every entry body.
inline ref arg(const std::map<std::string, ref>& args, const std::string& name) {
    auto it = args.find(name);
    if (it == args.end())
        throw error(errc::unbound_input, "missing point argument '" + name + "'");
    return it->second;
}

// Sector input synthesized from a numeric angle: vertex V plus ray points
// toward R0 (reference) and R0 rotated by the angle. Used by entries whose
// signatures accept radians.
struct sector_refs {
    ref vertex;
    ref ray_a; // reference arm
    ref ray_b; // arm at the given angle from ray_a
};

inline sector_refs synth_sector(expansion& e, const std::string& tag, point vertex, double base_dir,
                                double opening, double arm = 1.0) {
    point a = vertex + point{arm * std::cos(base_dir), arm * std::sin(base_dir)};
    point b = vertex + point{arm * std::cos(base_dir + opening), arm * std::sin(base_dir + opening)};
    ref v = e.given("__g" + tag + "v", vertex);
    ref ra = e.given("__g" + tag + "a", a);
    ref rb = e.given("__g" + tag + "b", b);
    return {v, ra, rb};
}

} // namespace detail
} // namespace edc
