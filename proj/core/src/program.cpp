#include "edc/program.hpp"

#include <set>

namespace edc {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

const ref& out_ref(const step& s) {
    return std::visit([](const auto& st) -> const ref& { return st.out; }, s);
}

void collect_uses(const step& s, std::vector<ref>& uses) {
    std::visit(overloaded{
                   [&](const given_step&) {},
                   [&](const draw_circle_step& st) {
                       uses = {st.center, st.radius_from_a, st.radius_from_b};
                   },
                   [&](const intersect_step& st) { uses = {st.c1, st.c2}; },
                   [&](const draw_line_step& st) { uses = {st.p, st.q}; },
                   [&](const intersect_ll_step& st) { uses = {st.l1, st.l2}; },
                   [&](const intersect_lc_step& st) { uses = {st.l, st.c}; },
                   [&](const circle_diameter_step& st) { uses = {st.a, st.b}; },
                   [&](const circle_three_points_step& st) { uses = {st.a, st.b, st.c}; },
               },
               s);
}

bool is_ruler(const step& s) {
    return std::holds_alternative<draw_line_step>(s) ||
           std::holds_alternative<intersect_ll_step>(s) ||
           std::holds_alternative<intersect_lc_step>(s) ||
           std::holds_alternative<circle_diameter_step>(s) ||
           std::holds_alternative<circle_three_points_step>(s);
}

} // namespace

bool program::has_ruler_steps() const {
    for (const auto& s : steps)
        if (is_ruler(s)) return true;
    return false;
}

void program::validate() const {
    std::set<ref> defined;
    for (const auto& s : steps) {
        std::vector<ref> uses;
        collect_uses(s, uses);
        for (const auto& u : uses)
            if (!defined.count(u))
                throw error(errc::forward_reference, "reference to undefined name '" + u + "'");
        const ref& out = out_ref(s);
        if (defined.count(out))
            throw error(errc::duplicate_name, "name '" + out + "' assigned twice");
        defined.insert(out);
        if (kind == program_kind::compass && is_ruler(s))
            throw error(errc::step_error, "ruler step in compass program");
    }
    for (const auto& o : outputs)
        if (!defined.count(o))
            throw error(errc::forward_reference, "output names undefined ref '" + o + "'");
    for (const auto& a : assertions) {
        std::vector<ref> uses = {a.a, a.b};
        if (a.kind != assert_kind::on_circle) uses.push_back(a.c);
        if (a.kind == assert_kind::dist_equal) uses.push_back(a.d);
        for (const auto& u : uses)
            if (!defined.count(u))
                throw error(errc::forward_reference, "assertion names undefined ref '" + u + "'");
    }
}

step_metrics metrics(const program& p) {
    step_metrics m;
    for (const auto& s : p.steps) {
        if (std::holds_alternative<draw_circle_step>(s)) ++m.circles;
        else if (std::holds_alternative<intersect_step>(s)) ++m.intersections;
        else if (is_ruler(s)) ++m.ruler_steps;
    }
    return m;
}

const value& trace::at(const ref& r) const {
    auto it = index.find(r);
    if (it == index.end())
        throw error(errc::forward_reference, "trace has no entry '" + r + "'");
    return entries[it->second].second;
}

point trace::point_at(const ref& r) const {
    const value& v = at(r);
    if (const point* p = std::get_if<point>(&v)) return *p;
    throw error(errc::step_error, "ref '" + r + "' is not a point");
}

circle trace::circle_at(const ref& r) const {
    const value& v = at(r);
    if (const circle* c = std::get_if<circle>(&v)) return *c;
    throw error(errc::step_error, "ref '" + r + "' is not a circle");
}

line_value trace::line_at(const ref& r) const {
    const value& v = at(r);
    if (const line_value* l = std::get_if<line_value>(&v)) return *l;
    throw error(errc::step_error, "ref '" + r + "' is not a line");
}

} // namespace edc
