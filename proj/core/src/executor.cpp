#include "edc/executor.hpp"

#include <algorithm>
#include <cmath>

namespace edc {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

point foot_on_line(point a, point p, point q) {
    const point d = q - p;
    const double t = dot(a - p, d) / dot(d, d);
    return p + t * d;
}

point line_line_intersection(point p1, point p2, point q1, point q2, tolerance tol) {
    const double eps = tol.eps();
    const point d1 = p2 - p1;
    const point d2 = q2 - q1;
    const double n1 = norm(d1);
    const double n2 = norm(d2);
    if (n1 <= eps || n2 <= eps)
        throw error(errc::degenerate_line, "line endpoints coincide");
    const double denom = cross(d1, d2);
    if (std::fabs(denom) <= eps * std::max(n1, n2)) {
        const double off = std::fabs(cross(d1, q1 - p1)) / n1;
        if (off <= eps)
            throw error(errc::coincident_lines, "lines coincide");
        throw error(errc::parallel_lines, "lines are parallel");
    }
    const double t = cross(q1 - p1, d2) / denom;
    return p1 + t * d1;
}

point line_circle_intersection(point p, point q, const circle& c, branch br, tolerance tol) {
    const double eps = tol.eps();
    const point d = q - p;
    const double len = norm(d);
    if (len <= eps)
        throw error(errc::degenerate_line, "line endpoints coincide");
    const point u = (1.0 / len) * d;
    const point f = foot_on_line(c.center, p, q);
    const double dist_to_line = distance(c.center, f);
    if (dist_to_line > c.radius + eps)
        throw error(errc::line_misses_circle, "line misses the circle");
    double half = 0.0;
    if (std::fabs(dist_to_line - c.radius) > eps) {
        const double h2 = c.radius * c.radius - dist_to_line * dist_to_line;
        half = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    }
    // branch::left is the hit with the smaller parameter along p->q.
    return br == branch::left ? f + (-half) * u : f + half * u;
}

point circumcenter_of(point a, point b, point c, tolerance tol) {
    const double eps = tol.eps();
    const double area2 = cross(b - a, c - a);
    const double longest = std::max({distance(a, b), distance(b, c), distance(a, c)});
    if (longest <= eps || std::fabs(area2) / longest <= eps)
        throw error(errc::collinear_points, "three points are collinear");
    const double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    point o;
    o.x = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    o.y = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    return o;
}

double assertion_error(const assertion& a, const trace& t) {
    switch (a.kind) {
        case assert_kind::collinear: {
            const point p = t.point_at(a.a), q = t.point_at(a.b), r = t.point_at(a.c);
            const double len = std::max(distance(p, q), 1e-300);
            return std::fabs(cross(q - p, r - p)) / len;
        }
        case assert_kind::dist_equal: {
            const double d1 = distance(t.point_at(a.a), t.point_at(a.b));
            const double d2 = distance(t.point_at(a.c), t.point_at(a.d));
            return std::fabs(d1 - d2);
        }
        case assert_kind::on_circle: {
            const point p = t.point_at(a.a);
            const circle c = t.circle_at(a.b);
            return std::fabs(distance(p, c.center) - c.radius);
        }
    }
    return 0.0;
}

namespace {

std::string assertion_text(const assertion& a) {
    switch (a.kind) {
        case assert_kind::collinear: return "collinear " + a.a + " " + a.b + " " + a.c;
        case assert_kind::dist_equal:
            return "dist " + a.a + " " + a.b + " == dist " + a.c + " " + a.d;
        case assert_kind::on_circle: return "on " + a.a + " " + a.b;
    }
    return "";
}

} // namespace

trace execute(const program& p, const std::map<ref, point>& bindings,
              std::optional<tolerance> tol_opt) {
    p.validate();

    for (const auto& [name, pt] : bindings) {
        bool found = false;
        for (const auto& s : p.steps)
            if (const auto* g = std::get_if<given_step>(&s); g && g->out == name) {
                found = true;
                break;
            }
        if (!found)
            throw error(errc::unbound_input, "binding for unknown input '" + name + "'");
        if (!finite(pt))
            throw error(errc::unbound_input, "binding for '" + name + "' is not finite");
    }

    tolerance tol;
    if (tol_opt) {
        tol = *tol_opt;
    } else {
        for (const auto& s : p.steps)
            if (const auto* g = std::get_if<given_step>(&s)) {
                auto it = bindings.find(g->out);
                tol.absorb(it != bindings.end() ? it->second : g->value);
            }
    }

    trace t;
    t.tol = tol;
    auto define = [&t](const ref& r, value v) {
        t.index.emplace(r, t.entries.size());
        t.entries.emplace_back(r, std::move(v));
    };

    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        try {
            std::visit(
                overloaded{
                    [&](const given_step& s) {
                        auto it = bindings.find(s.out);
                        point v = it != bindings.end() ? it->second : s.value;
                        if (!finite(v))
                            throw error(errc::unbound_input,
                                        "input '" + s.out + "' has no finite value");
                        define(s.out, v);
                    },
                    [&](const draw_circle_step& s) {
                        const point c = t.point_at(s.center);
                        const double r =
                            distance(t.point_at(s.radius_from_a), t.point_at(s.radius_from_b));
                        if (r <= tol.eps())
                            throw error(errc::degenerate_input,
                                        "circle radius below tolerance floor");
                        define(s.out, circle{c, r});
                    },
                    [&](const intersect_step& s) {
                        define(s.out, circle_circle_intersect(t.circle_at(s.c1),
                                                              t.circle_at(s.c2), s.br, tol));
                    },
                    [&](const draw_line_step& s) {
                        const point a = t.point_at(s.p), b = t.point_at(s.q);
                        if (distance(a, b) <= tol.eps())
                            throw error(errc::degenerate_line, "line endpoints coincide");
                        define(s.out, line_value{a, b});
                    },
                    [&](const intersect_ll_step& s) {
                        const line_value l1 = t.line_at(s.l1), l2 = t.line_at(s.l2);
                        define(s.out, line_line_intersection(l1.p, l1.q, l2.p, l2.q, tol));
                    },
                    [&](const intersect_lc_step& s) {
                        const line_value l = t.line_at(s.l);
                        define(s.out,
                               line_circle_intersection(l.p, l.q, t.circle_at(s.c), s.br, tol));
                    },
                    [&](const circle_diameter_step& s) {
                        const point a = t.point_at(s.a), b = t.point_at(s.b);
                        const double d = distance(a, b);
                        if (d <= tol.eps())
                            throw error(errc::degenerate_input, "diameter endpoints coincide");
                        define(s.out, circle{0.5 * (a + b), 0.5 * d});
                    },
                    [&](const circle_three_points_step& s) {
                        const point a = t.point_at(s.a), b = t.point_at(s.b),
                                    c = t.point_at(s.c);
                        const point o = circumcenter_of(a, b, c, tol);
                        define(s.out, circle{o, distance(o, a)});
                    },
                },
                p.steps[i]);
        } catch (const error& e) {
            if (e.code() == errc::step_error) throw;
            throw step_error(i, e.code(), e.what());
        }
    }

    for (const auto& a : p.assertions) {
        const double err = assertion_error(a, t);
        if (err > tol.eps())
            throw assertion_failed(assertion_text(a), err);
    }

    return t;
}

} // namespace edc
