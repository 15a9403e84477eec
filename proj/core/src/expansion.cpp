#include "edc/expansion.hpp"

#include <cstdlib>

#include "edc/executor.hpp"

namespace edc {

expansion::expansion(program base, tolerance tol) : prog_(std::move(base)), tol_(tol) {
    trace t = execute(prog_, {}, tol_);
    for (const auto& [name, v] : t.entries) {
        vals_.emplace(name, v);
        if (name.rfind("__", 0) == 0) {
            int n = std::atoi(name.c_str() + 3);
            if (n >= counter_) counter_ = n + 1;
        }
    }
}

std::string expansion::fresh(const char* tag) {
    return "__" + std::string(tag) + std::to_string(counter_++);
}

ref expansion::given(const std::string& name, point value) {
    if (vals_.count(name))
        throw error(errc::duplicate_name, "given '" + name + "' already defined");
    if (!finite(value))
        throw error(errc::unbound_input, "given '" + name + "' is not finite");
    prog_.steps.push_back(given_step{name, value});
    vals_.emplace(name, value);
    tol_.absorb(value);
    return name;
}

ref expansion::draw(const ref& center, const span& radius) {
    const double r = length(radius);
    if (r <= tol_.eps())
        throw error(errc::degenerate_input, "circle radius below tolerance floor");
    ref out = fresh("k");
    prog_.steps.push_back(draw_circle_step{out, center, radius.a, radius.b});
    vals_.emplace(out, circle{at(center), r});
    return out;
}

ref expansion::meet(const ref& c1, const ref& c2, branch br) {
    point p = circle_circle_intersect(circle_value(c1), circle_value(c2), br, tol_);
    ref out = fresh("p");
    prog_.steps.push_back(intersect_step{out, c1, c2, br});
    vals_.emplace(out, p);
    return out;
}

ref expansion::meet_toward(const ref& c1, const ref& c2, point target) {
    const circle a = circle_value(c1), b = circle_value(c2);
    const point l = circle_circle_intersect(a, b, branch::left, tol_);
    const point r = circle_circle_intersect(a, b, branch::right, tol_);
    return meet(c1, c2, distance(l, target) <= distance(r, target) ? branch::left : branch::right);
}

ref expansion::meet_away(const ref& c1, const ref& c2, point avoid) {
    const circle a = circle_value(c1), b = circle_value(c2);
    const point l = circle_circle_intersect(a, b, branch::left, tol_);
    const point r = circle_circle_intersect(a, b, branch::right, tol_);
    return meet(c1, c2, distance(l, avoid) >= distance(r, avoid) ? branch::left : branch::right);
}

point expansion::at(const ref& r) const {
    auto it = vals_.find(r);
    if (it == vals_.end())
        throw error(errc::forward_reference, "expansion has no ref '" + r + "'");
    if (const point* p = std::get_if<point>(&it->second)) return *p;
    throw error(errc::step_error, "ref '" + r + "' is not a point");
}

circle expansion::circle_value(const ref& r) const {
    auto it = vals_.find(r);
    if (it == vals_.end())
        throw error(errc::forward_reference, "expansion has no ref '" + r + "'");
    if (const circle* c = std::get_if<circle>(&it->second)) return *c;
    throw error(errc::step_error, "ref '" + r + "' is not a circle");
}

double expansion::length(const span& s) const { return distance(at(s.a), at(s.b)); }

void expansion::rename(const ref& internal, const std::string& name) {
    if (internal == name) return;
    if (vals_.count(name))
        throw error(errc::duplicate_name, "cannot rename to existing name '" + name + "'");
    auto it = vals_.find(internal);
    if (it == vals_.end())
        throw error(errc::forward_reference, "expansion has no ref '" + internal + "'");
    rename_ref(prog_, internal, name);
    vals_.emplace(name, it->second);
    vals_.erase(it);
}

namespace {

void subst(ref& r, const ref& from, const ref& to) {
    if (r == from) r = to;
}

} // namespace

void rename_ref(program& p, const ref& from, const ref& to) {
    for (auto& s : p.steps) {
        std::visit(
            [&](auto& st) {
                using T = std::decay_t<decltype(st)>;
                subst(st.out, from, to);
                if constexpr (std::is_same_v<T, draw_circle_step>) {
                    subst(st.center, from, to);
                    subst(st.radius_from_a, from, to);
                    subst(st.radius_from_b, from, to);
                } else if constexpr (std::is_same_v<T, intersect_step>) {
                    subst(st.c1, from, to);
                    subst(st.c2, from, to);
                } else if constexpr (std::is_same_v<T, draw_line_step>) {
                    subst(st.p, from, to);
                    subst(st.q, from, to);
                } else if constexpr (std::is_same_v<T, intersect_ll_step>) {
                    subst(st.l1, from, to);
                    subst(st.l2, from, to);
                } else if constexpr (std::is_same_v<T, intersect_lc_step>) {
                    subst(st.l, from, to);
                    subst(st.c, from, to);
                } else if constexpr (std::is_same_v<T, circle_diameter_step>) {
                    subst(st.a, from, to);
                    subst(st.b, from, to);
                } else if constexpr (std::is_same_v<T, circle_three_points_step>) {
                    subst(st.a, from, to);
                    subst(st.b, from, to);
                    subst(st.c, from, to);
                }
            },
            s);
    }
    for (auto& o : p.outputs) subst(o, from, to);
    for (auto& a : p.assertions) {
        subst(a.a, from, to);
        subst(a.b, from, to);
        subst(a.c, from, to);
        subst(a.d, from, to);
    }
}

} // namespace edc
