#include "edc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace edc {

namespace {

std::string num(double x) {
    // Fixed decimal output keeps documents diff-friendly and deterministic.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct bounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;

    void add(point p) {
        if (!any) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            any = true;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    void add(const circle& c) {
        add(point{c.center.x - c.radius, c.center.y - c.radius});
        add(point{c.center.x + c.radius, c.center.y + c.radius});
    }
};

} // namespace

std::string render_svg(const trace& t, const svg_style& style) {
    if (t.entries.empty())
        throw error(errc::empty_trace, "cannot render an empty trace");

    bounds b;
    for (const auto& [name, v] : t.entries) {
        if (const point* p = std::get_if<point>(&v)) b.add(*p);
        else if (const circle* c = std::get_if<circle>(&v)) b.add(*c);
        else if (const line_value* l = std::get_if<line_value>(&v)) {
            b.add(l->p);
            b.add(l->q);
        }
    }

    double span_x = std::max(b.max_x - b.min_x, 1e-9);
    double span_y = std::max(b.max_y - b.min_y, 1e-9);
    const double margin = style.margin_fraction * std::max(span_x, span_y);
    const double x0 = b.min_x - margin, y0 = b.min_y - margin;
    const double w = span_x + 2 * margin, h = span_y + 2 * margin;
    const double scale = style.width / w;
    const double height = h * scale;

    // y flips so the mathematical plane renders with +y upward.
    auto X = [&](double x) { return (x - x0) * scale; };
    auto Y = [&](double y) { return height - (y - y0) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << num(style.width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
        << num(style.width) << " " << num(height) << "\">\n";

    if (style.show_circles) {
        for (const auto& [name, v] : t.entries) {
            const circle* c = std::get_if<circle>(&v);
            if (!c) continue;
            out << "  <circle cx=\"" << num(X(c->center.x)) << "\" cy=\"" << num(Y(c->center.y))
                << "\" r=\"" << num(c->radius * scale) << "\" fill=\"none\" stroke=\""
                << style.circle_color << "\" stroke-width=\"1\"/>\n";
        }
    }

    for (const auto& [name, v] : t.entries) {
        const line_value* l = std::get_if<line_value>(&v);
        if (!l) continue;
        out << "  <polyline points=\"" << num(X(l->p.x)) << "," << num(Y(l->p.y)) << " "
            << num(X(l->q.x)) << "," << num(Y(l->q.y)) << "\" fill=\"none\" stroke=\""
            << style.line_color << "\" stroke-width=\"1\""
            << (style.dotted_lines ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    }

    for (const auto& [name, v] : t.entries) {
        const point* p = std::get_if<point>(&v);
        if (!p) continue;
        out << "  <circle cx=\"" << num(X(p->x)) << "\" cy=\"" << num(Y(p->y))
            << "\" r=\"2.5\" fill=\"" << style.point_color << "\"/>\n";
        if (style.label_points)
            out << "  <text x=\"" << num(X(p->x) + 4) << "\" y=\"" << num(Y(p->y) - 4)
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << name << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace edc
