#include "edc/dsl.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace edc {

// Defined in catalog.cpp: expands `use PROPID (...) -> ...` into prog.
void expand_use(program& prog, const std::string& prop_text,
                const std::vector<std::string>& args, const std::vector<ref>& outs,
                int line, int col);

namespace {

struct token {
    std::string text;
    int col = 0;
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "given", "circle", "point",  "line", "output", "assert", "use",   "meet",
        "meetll", "meetlc", "rad",   "diam", "thru",   "left",   "right", "collinear",
        "dist",   "on",     "==",    "->",   "(",      ")",      ",",     "="};
    return kw;
}

bool is_number_token(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::vector<token> tokenize_line(const std::string& line, int line_no) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (c == '(' || c == ')' || c == ',') {
            out.push_back({std::string(1, c), col});
            ++i;
            continue;
        }
        if (c == '=' && i + 1 < line.size() && line[i + 1] == '=') {
            out.push_back({"==", col});
            i += 2;
            continue;
        }
        if (c == '=') {
            out.push_back({"=", col});
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", col});
            i += 2;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '(' && line[j] != ')' && line[j] != ',' && line[j] != '#' &&
               !(line[j] == '=' ) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
            ++j;
        // Numbers may start with '-'; '-' not followed by '>' is part of the atom.
        if (j == i) {
            out.push_back({std::string(1, line[i]), col});
            ++j;
        } else {
            out.push_back({line.substr(i, j - i), col});
        }
        i = j;
        (void)line_no;
    }
    return out;
}

enum class sym_kind { pt, circ, ln };

class parser {
public:
    parser(const std::string& text, program_kind kind) : kind_(kind) {
        prog_.kind = kind;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto toks = tokenize_line(line, line_no);
            if (toks.empty()) continue;
            parse_statement(toks, line_no);
        }
        prog_.validate();
    }

    program take() { return std::move(prog_); }

private:
    [[noreturn]] void fail(int line, int col, const std::string& expected) {
        throw parse_error(line, col, errc::syntax_error, "expected " + expected);
    }

    const token& need(const std::vector<token>& t, std::size_t i, int line,
                      const std::string& expected) {
        if (i >= t.size()) {
            int col = t.empty() ? 1 : t.back().col + static_cast<int>(t.back().text.size());
            fail(line, col, expected);
        }
        return t[i];
    }

    void expect(const std::vector<token>& t, std::size_t i, int line, const std::string& lit) {
        const token& tok = need(t, i, line, "'" + lit + "'");
        if (tok.text != lit) fail(line, tok.col, "'" + lit + "'");
    }

    void end_of_line(const std::vector<token>& t, std::size_t i, int line) {
        if (i < t.size()) fail(line, t[i].col, "end of line");
    }

    std::string ident(const std::vector<token>& t, std::size_t i, int line,
                      const char* what = "identifier") {
        const token& tok = need(t, i, line, what);
        if (is_number_token(tok.text) || keywords().count(tok.text))
            fail(line, tok.col, what);
        char c0 = tok.text[0];
        if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_'))
            fail(line, tok.col, what);
        return tok.text;
    }

    double number(const std::vector<token>& t, std::size_t i, int line) {
        const token& tok = need(t, i, line, "number");
        if (!is_number_token(tok.text)) fail(line, tok.col, "number");
        return std::strtod(tok.text.c_str(), nullptr);
    }

    void define(const std::string& name, sym_kind k, int line, int col) {
        if (name.rfind("__", 0) == 0)
            throw parse_error(line, col, errc::syntax_error,
                              "names beginning with '__' are reserved");
        if (symbols_.count(name))
            throw parse_error(line, col, errc::duplicate_name,
                              "name '" + name + "' already defined");
        symbols_.emplace(name, k);
    }

    void resolve(const std::string& name, sym_kind k, int line, int col) {
        auto it = symbols_.find(name);
        if (it == symbols_.end())
            throw parse_error(line, col, errc::forward_reference,
                              "name '" + name + "' not defined yet");
        if (it->second != k) {
            const char* want = k == sym_kind::pt ? "a point" : k == sym_kind::circ ? "a circle"
                                                                                   : "a line";
            throw parse_error(line, col, errc::syntax_error,
                              "'" + name + "' is not " + want);
        }
    }

    void require_ruler(int line, int col, const std::string& what) {
        if (kind_ != program_kind::ruler)
            throw parse_error(line, col, errc::syntax_error,
                              what + " is only legal in ruler programs (.edc-rc)");
    }

    branch parse_branch(const std::vector<token>& t, std::size_t i, int line) {
        const token& tok = need(t, i, line, "'left' or 'right'");
        if (tok.text == "left") return branch::left;
        if (tok.text == "right") return branch::right;
        fail(line, tok.col, "'left' or 'right'");
    }

    void parse_statement(const std::vector<token>& t, int line) {
        const std::string& head = t[0].text;
        if (head == "given") {
            std::string name = ident(t, 1, line);
            expect(t, 2, line, "(");
            double x = number(t, 3, line);
            expect(t, 4, line, ",");
            double y = number(t, 5, line);
            expect(t, 6, line, ")");
            end_of_line(t, 7, line);
            define(name, sym_kind::pt, line, t[1].col);
            prog_.steps.push_back(given_step{name, point{x, y}});
        } else if (head == "circle") {
            std::string name = ident(t, 1, line);
            expect(t, 2, line, "=");
            const token& mode = need(t, 3, line, "'rad', 'diam' or 'thru'");
            if (mode.text == "diam") {
                require_ruler(line, mode.col, "'circle ... = diam'");
                std::string a = ident(t, 4, line), b = ident(t, 5, line);
                end_of_line(t, 6, line);
                resolve(a, sym_kind::pt, line, t[4].col);
                resolve(b, sym_kind::pt, line, t[5].col);
                define(name, sym_kind::circ, line, t[1].col);
                prog_.steps.push_back(circle_diameter_step{name, a, b});
            } else if (mode.text == "thru") {
                require_ruler(line, mode.col, "'circle ... = thru'");
                std::string a = ident(t, 4, line), b = ident(t, 5, line), c = ident(t, 6, line);
                end_of_line(t, 7, line);
                resolve(a, sym_kind::pt, line, t[4].col);
                resolve(b, sym_kind::pt, line, t[5].col);
                resolve(c, sym_kind::pt, line, t[6].col);
                define(name, sym_kind::circ, line, t[1].col);
                prog_.steps.push_back(circle_three_points_step{name, a, b, c});
            } else {
                std::string center = ident(t, 3, line);
                expect(t, 4, line, "rad");
                std::string ra = ident(t, 5, line), rb = ident(t, 6, line);
                end_of_line(t, 7, line);
                resolve(center, sym_kind::pt, line, t[3].col);
                resolve(ra, sym_kind::pt, line, t[5].col);
                resolve(rb, sym_kind::pt, line, t[6].col);
                define(name, sym_kind::circ, line, t[1].col);
                prog_.steps.push_back(draw_circle_step{name, center, ra, rb});
            }
        } else if (head == "point") {
            std::string name = ident(t, 1, line);
            expect(t, 2, line, "=");
            const token& mode = need(t, 3, line, "'meet', 'meetll' or 'meetlc'");
            if (mode.text == "meet") {
                std::string c1 = ident(t, 4, line), c2 = ident(t, 5, line);
                branch br = parse_branch(t, 6, line);
                end_of_line(t, 7, line);
                resolve(c1, sym_kind::circ, line, t[4].col);
                resolve(c2, sym_kind::circ, line, t[5].col);
                define(name, sym_kind::pt, line, t[1].col);
                prog_.steps.push_back(intersect_step{name, c1, c2, br});
            } else if (mode.text == "meetll") {
                require_ruler(line, mode.col, "'meetll'");
                std::string l1 = ident(t, 4, line), l2 = ident(t, 5, line);
                end_of_line(t, 6, line);
                resolve(l1, sym_kind::ln, line, t[4].col);
                resolve(l2, sym_kind::ln, line, t[5].col);
                define(name, sym_kind::pt, line, t[1].col);
                prog_.steps.push_back(intersect_ll_step{name, l1, l2});
            } else if (mode.text == "meetlc") {
                require_ruler(line, mode.col, "'meetlc'");
                std::string l = ident(t, 4, line), c = ident(t, 5, line);
                branch br = parse_branch(t, 6, line);
                end_of_line(t, 7, line);
                resolve(l, sym_kind::ln, line, t[4].col);
                resolve(c, sym_kind::circ, line, t[5].col);
                define(name, sym_kind::pt, line, t[1].col);
                prog_.steps.push_back(intersect_lc_step{name, l, c, br});
            } else {
                fail(line, mode.col, "'meet', 'meetll' or 'meetlc'");
            }
        } else if (head == "line") {
            require_ruler(line, t[0].col, "'line'");
            std::string name = ident(t, 1, line);
            expect(t, 2, line, "=");
            std::string a = ident(t, 3, line), b = ident(t, 4, line);
            end_of_line(t, 5, line);
            resolve(a, sym_kind::pt, line, t[3].col);
            resolve(b, sym_kind::pt, line, t[4].col);
            define(name, sym_kind::ln, line, t[1].col);
            prog_.steps.push_back(draw_line_step{name, a, b});
        } else if (head == "output") {
            for (std::size_t i = 1; i < t.size(); ++i) {
                std::string name = ident(t, i, line, "output name");
                if (!symbols_.count(name))
                    throw parse_error(line, t[i].col, errc::forward_reference,
                                      "name '" + name + "' not defined yet");
                prog_.outputs.push_back(name);
            }
            if (t.size() == 1) fail(line, t[0].col + 6, "output name");
        } else if (head == "assert") {
            const token& mode = need(t, 1, line, "'collinear', 'dist' or 'on'");
            if (mode.text == "collinear") {
                std::string a = ident(t, 2, line), b = ident(t, 3, line), c = ident(t, 4, line);
                end_of_line(t, 5, line);
                resolve(a, sym_kind::pt, line, t[2].col);
                resolve(b, sym_kind::pt, line, t[3].col);
                resolve(c, sym_kind::pt, line, t[4].col);
                prog_.assertions.push_back(assertion{assert_kind::collinear, a, b, c, ""});
            } else if (mode.text == "dist") {
                std::string a = ident(t, 2, line), b = ident(t, 3, line);
                expect(t, 4, line, "==");
                expect(t, 5, line, "dist");
                std::string c = ident(t, 6, line), d = ident(t, 7, line);
                end_of_line(t, 8, line);
                resolve(a, sym_kind::pt, line, t[2].col);
                resolve(b, sym_kind::pt, line, t[3].col);
                resolve(c, sym_kind::pt, line, t[6].col);
                resolve(d, sym_kind::pt, line, t[7].col);
                prog_.assertions.push_back(assertion{assert_kind::dist_equal, a, b, c, d});
            } else if (mode.text == "on") {
                std::string a = ident(t, 2, line), b = ident(t, 3, line);
                end_of_line(t, 4, line);
                resolve(a, sym_kind::pt, line, t[2].col);
                resolve(b, sym_kind::circ, line, t[3].col);
                prog_.assertions.push_back(assertion{assert_kind::on_circle, a, b, ""});
            } else {
                fail(line, mode.col, "'collinear', 'dist' or 'on'");
            }
        } else if (head == "use") {
            parse_use(t, line);
        } else {
            fail(line, t[0].col,
                 "'given', 'circle', 'point', 'line', 'output', 'assert' or 'use'");
        }
    }

    void parse_use(const std::vector<token>& t, int line) {
        const token& id = need(t, 1, line, "proposition id (e.g. P1.15)");
        std::size_t i = 2;
        expect(t, i, line, "(");
        ++i;
        std::vector<std::string> args;
        if (need(t, i, line, "argument or ')'").text != ")") {
            for (;;) {
                const token& a = need(t, i, line, "argument");
                if (a.text == ")" || a.text == ",") fail(line, a.col, "argument");
                if (!is_number_token(a.text) && a.text != "left" && a.text != "right")
                    resolve(a.text, sym_kind::pt, line, a.col);
                args.push_back(a.text);
                ++i;
                const token& sep = need(t, i, line, "',' or ')'");
                if (sep.text == ")") break;
                if (sep.text != ",") fail(line, sep.col, "',' or ')'");
                ++i;
            }
        }
        ++i; // past ')'
        expect(t, i, line, "->");
        ++i;
        std::vector<ref> outs;
        while (i < t.size()) {
            std::string name = ident(t, i, line, "output name");
            define(name, sym_kind::pt, line, t[i].col);
            outs.push_back(name);
            ++i;
            if (i < t.size() && t[i].text == ",") ++i;
        }
        if (outs.empty()) fail(line, t.back().col + 1, "output name");
        expand_use(prog_, id.text, args, outs, line, id.col);
        // Macro expansions may mint circles and interior points; register them.
        for (const auto& s : prog_.steps) {
            const ref& r = std::visit([](const auto& st) -> const ref& { return st.out; }, s);
            if (!symbols_.count(r))
                symbols_.emplace(r, std::holds_alternative<draw_circle_step>(s)
                                        ? sym_kind::circ
                                        : sym_kind::pt);
        }
    }

    program_kind kind_;
    program prog_;
    std::map<std::string, sym_kind> symbols_;
};

} // namespace

program parse(const std::string& text, program_kind kind) {
    parser p(text, kind);
    return p.take();
}

std::string format_number(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

struct formatter_visitor {
    std::ostringstream& out;

    void operator()(const given_step& s) const {
        out << "given " << s.out << " (" << format_number(s.value.x) << ","
            << format_number(s.value.y) << ")\n";
    }
    void operator()(const draw_circle_step& s) const {
        out << "circle " << s.out << " = " << s.center << " rad " << s.radius_from_a << " "
            << s.radius_from_b << "\n";
    }
    void operator()(const intersect_step& s) const {
        out << "point " << s.out << " = meet " << s.c1 << " " << s.c2 << " "
            << (s.br == branch::left ? "left" : "right") << "\n";
    }
    void operator()(const draw_line_step& s) const {
        out << "line " << s.out << " = " << s.p << " " << s.q << "\n";
    }
    void operator()(const intersect_ll_step& s) const {
        out << "point " << s.out << " = meetll " << s.l1 << " " << s.l2 << "\n";
    }
    void operator()(const intersect_lc_step& s) const {
        out << "point " << s.out << " = meetlc " << s.l << " " << s.c << " "
            << (s.br == branch::left ? "left" : "right") << "\n";
    }
    void operator()(const circle_diameter_step& s) const {
        out << "circle " << s.out << " = diam " << s.a << " " << s.b << "\n";
    }
    void operator()(const circle_three_points_step& s) const {
        out << "circle " << s.out << " = thru " << s.a << " " << s.b << " " << s.c << "\n";
    }
};

} // namespace

std::string format(const program& p) {
    std::ostringstream out;
    for (const auto& s : p.steps) std::visit(formatter_visitor{out}, s);
    if (!p.outputs.empty()) {
        out << "output";
        for (const auto& o : p.outputs) out << " " << o;
        out << "\n";
    }
    for (const auto& a : p.assertions) {
        switch (a.kind) {
            case assert_kind::collinear:
                out << "assert collinear " << a.a << " " << a.b << " " << a.c << "\n";
                break;
            case assert_kind::dist_equal:
                out << "assert dist " << a.a << " " << a.b << " == dist " << a.c << " " << a.d
                    << "\n";
                break;
            case assert_kind::on_circle:
                out << "assert on " << a.a << " " << a.b << "\n";
                break;
        }
    }
    return out.str();
}

namespace {

bool step_equal(const step& a, const step& b) {
    if (a.index() != b.index()) return false;
    bool eq = false;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, given_step>)
                eq = x.out == y.out && x.value == y.value;
            else if constexpr (std::is_same_v<T, draw_circle_step>)
                eq = x.out == y.out && x.center == y.center && x.radius_from_a == y.radius_from_a &&
                     x.radius_from_b == y.radius_from_b;
            else if constexpr (std::is_same_v<T, intersect_step>)
                eq = x.out == y.out && x.c1 == y.c1 && x.c2 == y.c2 && x.br == y.br;
            else if constexpr (std::is_same_v<T, draw_line_step>)
                eq = x.out == y.out && x.p == y.p && x.q == y.q;
            else if constexpr (std::is_same_v<T, intersect_ll_step>)
                eq = x.out == y.out && x.l1 == y.l1 && x.l2 == y.l2;
            else if constexpr (std::is_same_v<T, intersect_lc_step>)
                eq = x.out == y.out && x.l == y.l && x.c == y.c && x.br == y.br;
            else if constexpr (std::is_same_v<T, circle_diameter_step>)
                eq = x.out == y.out && x.a == y.a && x.b == y.b;
            else if constexpr (std::is_same_v<T, circle_three_points_step>)
                eq = x.out == y.out && x.a == y.a && x.b == y.b && x.c == y.c;
        },
        a);
    return eq;
}

} // namespace

bool structurally_equal(const program& a, const program& b) {
    if (a.kind != b.kind || a.steps.size() != b.steps.size() || a.outputs != b.outputs ||
        a.assertions.size() != b.assertions.size())
        return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i)
        if (!step_equal(a.steps[i], b.steps[i])) return false;
    for (std::size_t i = 0; i < a.assertions.size(); ++i) {
        const assertion &x = a.assertions[i], &y = b.assertions[i];
        if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.c != y.c || x.d != y.d)
            return false;
    }
    return true;
}

} // namespace edc
