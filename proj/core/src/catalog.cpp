#include "edc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "edc/dsl.hpp"
#include "edc/executor.hpp"

namespace edc {

std::string to_string(const prop_id& id) {
    std::string s = "P" + std::to_string(id.part) + "." + std::to_string(id.number);
    if (id.variant != 1) s += "." + std::to_string(id.variant);
    return s;
}

std::optional<prop_id> parse_prop_id(const std::string& text) {
    if (text.size() < 4 || (text[0] != 'P' && text[0] != 'p')) return std::nullopt;
    int part = 0, number = 0, variant = 1;
    char extra = 0;
    int got = std::sscanf(text.c_str() + 1, "%d.%d.%d%c", &part, &number, &variant, &extra);
    if (got == 3) {
        if (variant < 1) return std::nullopt;
    } else {
        variant = 1;
        got = std::sscanf(text.c_str() + 1, "%d.%d%c", &part, &number, &extra);
        if (got != 2) return std::nullopt;
    }
    if (part < 1 || part > 2 || number < 1) return std::nullopt;
    return prop_id{part, number, variant};
}

namespace {

template <class V>
const V& lookup(const std::vector<std::pair<std::string, V>>& items, const std::string& name,
                const char* what) {
    for (const auto& [n, v] : items)
        if (n == name) return v;
    throw error(errc::unbound_input, std::string("instance has no ") + what + " '" + name + "'");
}

} // namespace

point instance::pt(const std::string& name) const { return lookup(points, name, "point"); }
double instance::scalar(const std::string& name) const { return lookup(scalars, name, "scalar"); }
int instance::integer(const std::string& name) const { return lookup(ints, name, "integer"); }

branch instance::br(const std::string& name, branch fallback) const {
    for (const auto& [n, v] : branches)
        if (n == name) return v;
    return fallback;
}

double instance::scale() const {
    double s = 1.0;
    for (const auto& [n, p] : points) s = std::max({s, std::fabs(p.x), std::fabs(p.y)});
    for (const auto& [n, v] : scalars) s = std::max(s, std::fabs(v));
    return s;
}

point outputs::pt(const std::string& name) const { return lookup(points, name, "point output"); }
double outputs::scalar(const std::string& name) const {
    return lookup(scalars, name, "scalar output");
}

tolerance tolerance_for(const instance& in) { return tolerance::with_scale(in.scale()); }

std::string entry::id_text() const {
    return "P" + std::to_string(part) + "." + std::to_string(number);
}

std::string entry::signature() const {
    std::string s;
    for (const auto& [name, kind] : params) {
        if (!s.empty()) s += " ";
        s += name + ":";
        switch (kind) {
            case param_kind::pt: s += "point"; break;
            case param_kind::scalar: s += "len"; break;
            case param_kind::integer: s += "int"; break;
            case param_kind::br: s += "branch"; break;
        }
    }
    return s.empty() ? "-" : s;
}

const std::vector<entry>& catalog() {
    static std::vector<entry> entries = [] {
        std::vector<entry> v;
        detail::register_part1(v);
        detail::register_part2(v);
        std::sort(v.begin(), v.end(), [](const entry& a, const entry& b) {
            return a.part != b.part ? a.part < b.part : a.number < b.number;
        });
        return v;
    }();
    return entries;
}

const entry& find_entry(int part, int number) {
    for (const auto& en : catalog())
        if (en.part == part && en.number == number) return en;
    throw error(errc::unsupported, "no proposition P" + std::to_string(part) + "." +
                                       std::to_string(number) + " in the catalog");
}

namespace {

// Lays scalar inputs on private work rows below the sampling box so the
// program carries every input as geometry.
std::map<std::string, span> lay_scalars(expansion& e, const instance& in) {
    std::map<std::string, span> spans;
    int row = 0;
    for (const auto& [name, v] : in.scalars) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw error(errc::nonpositive_length, "scalar '" + name + "' must be positive");
        const double y = -40.0 - 5.0 * row++;
        ref a = e.given("__s" + name + "a", point{0.0, y});
        ref b = e.given("__s" + name + "b", point{v, y});
        spans.emplace(name, span{a, b});
    }
    return spans;
}

ref publish(expansion& e, const ref& r, const std::string& want) {
    ref final_ref = r;
    if (r.rfind("__", 0) == 0) {
        try {
            e.rename(r, want);
            final_ref = want;
        } catch (const error&) {
            final_ref = r; // requested name taken; keep the internal one
        }
    }
    auto& outs = e.prog().outputs;
    if (std::find(outs.begin(), outs.end(), final_ref) == outs.end())
        outs.push_back(final_ref);
    return final_ref;
}

run_result finish(expansion& e, const expand_outputs& raw) {
    run_result res;
    std::map<ref, ref> renamed;
    auto resolve = [&renamed](const ref& r) {
        auto it = renamed.find(r);
        return it == renamed.end() ? r : it->second;
    };
    for (const auto& [name, r] : raw.points) {
        ref final_ref = publish(e, resolve(r), name);
        renamed.emplace(r, final_ref);
        res.out.points.emplace_back(name, e.at(final_ref));
    }
    for (const auto& [name, s] : raw.lengths) {
        ref a = publish(e, resolve(s.a), name + "_a");
        renamed.emplace(s.a, a);
        ref b = publish(e, resolve(s.b), name + "_b");
        renamed.emplace(s.b, b);
        res.out.scalars.emplace_back(name, distance(e.at(a), e.at(b)));
    }
    res.prog = e.prog();
    res.metrics = metrics(res.prog);
    return res;
}

} // namespace

run_result run_proposition(const prop_id& id, const instance& in) {
    const entry& en = find_entry(id.part, id.number);
    if (!en.supported)
        throw error(errc::unsupported, en.id_text() + " is registered unsupported: " +
                                           en.unsupported_reason);
    for (const auto& [v, reason] : en.unsupported_variants)
        if (v == id.variant)
            throw error(errc::unsupported,
                        to_string(id) + " is registered unsupported: " + reason);
    if (id.variant < 1 || id.variant > en.variants)
        throw error(errc::unsupported, to_string(id) + ": no such variant");

    expansion e(tolerance_for(in));
    std::map<std::string, ref> point_args;
    for (const auto& [name, kind] : en.params) {
        if (kind == param_kind::pt) point_args.emplace(name, e.given(name, in.pt(name)));
    }
    // Scalars ride along inside the aux instance; entries lay them as needed.
    expand_outputs raw = en.expand(e, point_args, in, id.variant);
    return finish(e, raw);
}

instance canonical_instance(const entry& en) {
    rng g(0xEDC0 + static_cast<std::uint64_t>(en.part) * 1000 +
          static_cast<std::uint64_t>(en.number));
    instance in = en.sample(g);
    for (auto& [name, p] : in.points) {
        p.x = std::round(p.x * 10.0) / 10.0;
        p.y = std::round(p.y * 10.0) / 10.0;
    }
    for (auto& [name, v] : in.scalars) v = std::round(v * 10.0) / 10.0;
    for (auto& [name, b] : in.branches) b = branch::left;
    return in;
}

step_metrics canonical_metrics(const entry& en, int variant) {
    instance in = canonical_instance(en);
    run_result r = run_proposition(prop_id{en.part, en.number, variant}, in);
    return r.metrics;
}

// ---------------------------------------------------------------------------
// `use` support for the DSL parser.

void expand_use(program& prog, const std::string& prop_text,
                const std::vector<std::string>& args, const std::vector<ref>& outs, int line,
                int col) {
    auto idp = parse_prop_id(prop_text);
    if (!idp)
        throw parse_error(line, col, errc::syntax_error,
                          "malformed proposition id '" + prop_text + "'");
    const entry* en;
    try {
        en = &find_entry(idp->part, idp->number);
    } catch (const error& err) {
        throw parse_error(line, col, errc::syntax_error, err.what());
    }
    try {
        if (!en->supported)
            throw error(errc::unsupported, en->id_text() + " is registered unsupported");
        if (args.size() != en->params.size())
            throw error(errc::syntax_error,
                        en->id_text() + " takes " + std::to_string(en->params.size()) +
                            " arguments (" + en->signature() + ")");

        tolerance tol;
        for (const auto& s : prog.steps)
            if (const auto* g = std::get_if<given_step>(&s)) tol.absorb(g->value);
        expansion e(prog, tol);

        std::map<std::string, ref> point_args;
        instance aux;
        for (std::size_t i = 0; i < en->params.size(); ++i) {
            const auto& [name, kind] = en->params[i];
            const std::string& a = args[i];
            switch (kind) {
                case param_kind::pt:
                    point_args.emplace(name, a);
                    (void)e.at(a); // must be a known point
                    break;
                case param_kind::scalar:
                    aux.scalars.emplace_back(name, std::strtod(a.c_str(), nullptr));
                    break;
                case param_kind::integer:
                    aux.ints.emplace_back(name, std::atoi(a.c_str()));
                    break;
                case param_kind::br:
                    aux.branches.emplace_back(name, a == "right" ? branch::right : branch::left);
                    break;
            }
        }
        // Lay scalar arguments on work rows (mirrors run_proposition's adapter).
        if (!aux.scalars.empty()) {
            int row = 0;
            for (auto& [name, v] : aux.scalars) {
                const double y = -40.0 - 5.0 * row++;
                e.given("__u" + std::to_string(line) + name + "a", point{0.0, y});
                e.given("__u" + std::to_string(line) + name + "b", point{v, y});
            }
        }

        expand_outputs raw = en->expand(e, point_args, aux, idp->variant);
        if (outs.size() > raw.points.size())
            throw error(errc::syntax_error, en->id_text() + " produces only " +
                                                std::to_string(raw.points.size()) +
                                                " point outputs");
        for (std::size_t i = 0; i < outs.size(); ++i) {
            const ref& produced = raw.points[i].second;
            if (produced.rfind("__", 0) != 0)
                throw error(errc::syntax_error,
                            "macro output aliases existing point '" + produced +
                                "'; use that name directly");
            e.rename(produced, outs[i]);
        }
        prog = e.prog();
    } catch (const parse_error&) {
        throw;
    } catch (const error& err) {
        throw parse_error(line, col, err.code(), err.what());
    }
}

// Entries may also lay scalars themselves through this helper.
std::map<std::string, span> lay_instance_scalars(expansion& e, const instance& in) {
    return lay_scalars(e, in);
}

} // namespace edc
