#pragma once

#include <string>

#include "edc/program.hpp"

namespace edc {

struct svg_style {
    double width = 640.0;        // pixel width; height follows the aspect ratio
    double margin_fraction = 0.05;
    bool label_points = true;
    bool show_circles = true;
    bool dotted_lines = true;    // line values render as dotted segments
    std::string circle_color = "#1f4e8c";
    std::string line_color = "#777777";
    std::string point_color = "#b02020";
};

// Deterministic SVG 1.1 document for a trace: circles as strokes, line
// values as dotted segments, points as labeled dots. Identical trace and
// style produce byte-identical output. Throws EmptyTrace on empty input.
std::string render_svg(const trace& t, const svg_style& style = {});

} // namespace edc
