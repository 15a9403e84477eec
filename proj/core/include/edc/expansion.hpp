#pragma once

#include <map>
#include <string>
#include <vector>

#include "edc/program.hpp"

namespace edc {

// A named distance: the compass opening between two constructed points.
struct span {
    ref a;
    ref b;
};

// Grows a compass program step by step while tracking the concrete value
// of every ref against the program's given coordinates. Macros use the
// concrete values to resolve branch choices and rescaling counts; the
// chosen branches are emitted as static left/right tags, so the finished
// program replays deterministically through the executor.
class expansion {
public:
    explicit expansion(tolerance tol) : tol_(tol) {}

    // Continue an existing program (used by `use` statements): re-derives
    // the concrete values of base and appends to it.
    expansion(program base, tolerance tol);

    ref given(const std::string& name, point value);

    ref draw(const ref& center, const span& radius);
    ref meet(const ref& c1, const ref& c2, branch br);
    // Emits the branch whose intersection lies nearest / farthest.
    ref meet_toward(const ref& c1, const ref& c2, point target);
    ref meet_away(const ref& c1, const ref& c2, point avoid);

    point at(const ref& r) const;
    circle circle_value(const ref& r) const;
    double length(const span& s) const;
    tolerance tol() const { return tol_; }

    span sp(const ref& a, const ref& b) const { return span{a, b}; }

    // Gives the ref a public name by rewriting every occurrence.
    void rename(const ref& internal, const std::string& name);

    program& prog() { return prog_; }
    const program& prog() const { return prog_; }

    std::string fresh(const char* tag);

private:
    program prog_;
    std::map<ref, value> vals_;
    tolerance tol_;
    int counter_ = 0;
};

void rename_ref(program& p, const ref& from, const ref& to);

} // namespace edc
