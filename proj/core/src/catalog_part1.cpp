#include "catalog_detail.hpp"

// First Part, propositions 1-31: the fundamental constructions. Branch
// conventions follow the engraved figures; where a statement relies on a
// picture, the entry takes an explicit branch parameter whose default
// reproduces the plate.

namespace edc::detail {

namespace {

using kit::circle_handle;

entry& add(std::vector<entry>& out, int number, const char* title) {
    entry& en = out.emplace_back();
    en.part = 1;
    en.number = number;
    en.title = title;
    return en;
}

instance two_points(rng& g, double min_sep = 1.0) {
    instance in;
    point a = rand_pt(g);
    point b = rand_pt_sep(g, {a}, min_sep);
    in.points = {{"A", a}, {"B", b}};
    return in;
}

branch rand_branch(rng& g) { return g.coin() ? branch::left : branch::right; }

// Signed rotation taking the direction from->to1 onto from->to2.
double signed_angle(point from, point to1, point to2) {
    point u = to1 - from, v = to2 - from;
    return std::atan2(cross(u, v), dot(u, v));
}

void register_p1_01_15(std::vector<entry>& out) {
    { // P1.1 equilateral triangle on a segment
        entry& en = add(out, 1, "equilateral triangle apex over a segment");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref C = kit::equilateral_apex(e, arg(a, "A"), arg(a, "B"), in.br("side"));
            return {{{"C", C}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ck.point_eq("C", out.pt("C"),
                        rotate_about(in.pt("B"), in.pt("A"), s * std::numbers::pi / 3.0));
            return ck.result();
        };
    }
    { // P1.2 regular hexagon in a circle
        entry& en = add(out, 2, "regular hexagon inscribed in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[0].first = "O";
            in.points[1].first = "P";
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            span r = e.sp(O, P);
            ref base = e.draw(O, r);
            std::vector<ref> v{P};
            for (int k = 1; k <= 5; ++k) {
                ref c = e.draw(v.back(), r);
                ref nxt = k == 1 ? e.meet(base, c, branch::left)
                                 : e.meet_away(base, c, e.at(v[v.size() - 2]));
                v.push_back(nxt);
            }
            expand_outputs res;
            for (int k = 0; k < 6; ++k) res.points.emplace_back("V" + std::to_string(k), v[k]);
            return res;
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            for (int k = 0; k < 6; ++k)
                ck.point_eq("V" + std::to_string(k), out.pt("V" + std::to_string(k)),
                            rotate_about(in.pt("P"), in.pt("O"), k * std::numbers::pi / 3.0));
            return ck.result();
        };
    }
    { // P1.3 equilateral triangle in a circle
        entry& en = add(out, 3, "equilateral triangle inscribed in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[0].first = "O";
            in.points[1].first = "P";
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            span r = e.sp(O, P);
            ref base = e.draw(O, r);
            ref c1 = e.draw(P, r);
            ref m1 = e.meet(base, c1, branch::left);
            ref m2 = e.meet_away(base, e.draw(m1, r), e.at(P));
            ref m3 = e.meet_away(base, e.draw(m2, r), e.at(m1));
            ref m4 = e.meet_away(base, e.draw(m3, r), e.at(m2));
            return {{{"V0", P}, {"V1", m2}, {"V2", m4}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            for (int k = 0; k < 3; ++k)
                ck.point_eq("V" + std::to_string(k), out.pt("V" + std::to_string(k)),
                            rotate_about(in.pt("P"), in.pt("O"),
                                         k * 2.0 * std::numbers::pi / 3.0));
            return ck.result();
        };
    }
    { // P1.4 double a segment
        entry& en = add(out, 4, "segment doubled through its far endpoint");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}};
        en.sample = [](rng& g) { return two_points(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            return {{{"E", kit::antipode(e, arg(a, "A"), arg(a, "B"))}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("E", out.pt("E"), in.pt("A") + (in.pt("A") - in.pt("B")));
            return ck.result();
        };
    }
    { // P1.5 n-fold extension
        entry& en = add(out, 5, "segment extended to an integer multiple");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"n", param_kind::integer}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.ints = {{"n", g.uniform_int(2, 5)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            return {{{"X", kit::extend_chain(e, arg(a, "A"), arg(a, "B"), in.integer("n"))}},
                    {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double n = in.integer("n");
            ck.point_eq("X", out.pt("X"), in.pt("A") + n * (in.pt("B") - in.pt("A")));
            return ck.result();
        };
    }
    { // P1.6 copy an angle
        entry& en = add(out, 6, "angle copied onto a new ray");
        en.params = {{"B", param_kind::pt}, {"A", param_kind::pt}, {"C", param_kind::pt},
                     {"E", param_kind::pt}, {"D", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g);
                point b = rand_pt_sep(g, {a}, 1.0);
                point c = rand_pt_sep(g, {a, b}, 1.0);
                const double th = angle_at(a, b, c);
                if (th < 0.15 || th > std::numbers::pi - 0.15) continue;
                point ept = rand_pt(g);
                point d = rand_pt_sep(g, {ept}, 1.0);
                in.points = {{"B", b}, {"A", a}, {"C", c}, {"E", ept}, {"D", d}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref F = kit::copy_angle(e, arg(a, "B"), arg(a, "A"), arg(a, "C"), arg(a, "E"),
                                    arg(a, "D"), in.br("side"));
            return {{{"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double th = angle_at(in.pt("A"), in.pt("B"), in.pt("C"));
            const double r = distance(in.pt("A"), in.pt("B"));
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point base = on_ray(in.pt("E"), in.pt("D"), r);
            ck.point_eq("F", out.pt("F"), rotate_about(base, in.pt("E"), s * th));
            return ck.result();
        };
    }
    { // P1.7 triangle from three sides
        entry& en = add(out, 7, "triangle from three given side lengths");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"ac", param_kind::scalar},
                     {"bc", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in = two_points(g, 1.5);
                const double c = distance(in.pt("A"), in.pt("B"));
                const double ac = g.uniform(0.3, 9.0);
                const double bc = g.uniform(0.3, 9.0);
                if (ac + bc < c + 0.3 || c + ac < bc + 0.3 || c + bc < ac + 0.3) continue;
                in.scalars = {{"ac", ac}, {"bc", bc}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), B = arg(a, "B");
            ref ca = e.draw(A, spans.at("ac"));
            ref cb = e.draw(B, spans.at("bc"));
            return {{{"C", e.meet(ca, cb, in.br("side"))}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            const double c = distance(a, b);
            const double ac = in.scalar("ac"), bc = in.scalar("bc");
            const double x = (c * c + ac * ac - bc * bc) / (2.0 * c);
            const double h2 = ac * ac - x * x;
            const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
            point u = (1.0 / c) * (b - a);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ck.point_eq("C", out.pt("C"), a + x * u + (s * h) * perp(u));
            return ck.result();
        };
    }
    { // P1.8 congruent triangle
        entry& en = add(out, 8, "triangle congruent to a given triangle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"Edir", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 1.2),
                      c = rand_pt_sep(g, {a, b}, 1.2);
                if (triangle_area(a, b, c) < 0.5) continue;
                point d = rand_pt(g), ed = rand_pt_sep(g, {d}, 1.0);
                in.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"Edir", ed}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref D = arg(a, "D");
            ref E = kit::lay_along(e, D, arg(a, "Edir"), e.sp(A, C));
            ref cf1 = e.draw(D, e.sp(A, B));
            ref cf2 = e.draw(E, e.sp(C, B));
            ref F = e.meet(cf1, cf2, in.br("side"));
            return {{{"E", E}, {"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D");
            point ept = out.pt("E"), f = out.pt("F");
            ck.point_eq("E", ept, on_ray(d, in.pt("Edir"), distance(a, c)));
            ck.scalar_eq("|DF|", distance(d, f), distance(a, b));
            ck.scalar_eq("|EF|", distance(ept, f), distance(c, b));
            return ck.result();
        };
    }
    { // P1.9 circle over a segment with half its length as radius (reconstructed)
        entry& en = add(out, 9, "circle over a segment with a given half-length radius");
        en.reconstructed = true;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            point c = rand_pt(g);
            const double half = 0.5 * distance(in.pt("A"), in.pt("B"));
            const double dir = g.uniform(0.0, 2.0 * std::numbers::pi);
            point d = c + point{half * std::cos(dir), half * std::sin(dir)};
            in.points.emplace_back("C", c);
            in.points.emplace_back("D", d);
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref M = kit::midpoint(e, arg(a, "A"), arg(a, "B"), 1);
            e.draw(M, e.sp(arg(a, "C"), arg(a, "D")));
            return {{{"M", M}}, {{"radius", e.sp(arg(a, "C"), arg(a, "D"))}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("M", out.pt("M"), 0.5 * (in.pt("A") + in.pt("B")));
            ck.scalar_eq("radius", out.scalar("radius"), 0.5 * distance(in.pt("A"), in.pt("B")));
            return ck.result();
        };
    }
    { // P1.10 perpendicular at an endpoint
        entry& en = add(out, 10, "perpendicular ray at a segment endpoint");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            return {{{"E", kit::erect_direction(e, arg(a, "A"), arg(a, "B"), in.br("side"))}},
                    {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            point u = (1.0 / distance(a, b)) * (b - a);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ck.point_eq("E", out.pt("E"), b + (std::sqrt(3.0) * distance(a, b) * s) * perp(u));
            return ck.result();
        };
    }
    { // P1.11 square in a circle
        entry& en = add(out, 11, "square inscribed in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[0].first = "O";
            in.points[1].first = "P";
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            auto h = kit::antipode_full(e, O, P);
            span chord = e.sp(P, h.mark120);
            ref t1 = e.draw(P, chord);
            ref t2 = e.draw(h.opposite, chord);
            ref T = e.meet(t1, t2, branch::left);
            ref vc = e.draw(P, e.sp(O, T));
            branch br = in.br("side");
            ref V1 = e.meet(h.base_circle, vc, br);
            ref V3 = e.meet(h.base_circle, vc, opposite(br));
            expand_outputs res;
            res.points = {{"V0", P}, {"V1", V1}, {"V2", h.opposite}, {"V3", V3}};
            res.lengths = {{"side_len", e.sp(P, V1)}};
            return res;
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            for (int k = 0; k < 4; ++k)
                ck.point_eq("V" + std::to_string(k), out.pt("V" + std::to_string(k)),
                            rotate_about(in.pt("P"), in.pt("O"), s * k * std::numbers::pi / 2.0));
            ck.scalar_eq("side_len", out.scalar("side_len"),
                         distance(in.pt("O"), in.pt("P")) * std::numbers::sqrt2);
            return ck.result();
        };
    }
    { // P1.12 dodecagon side
        entry& en = add(out, 12, "regular dodecagon side in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[0].first = "O";
            in.points[1].first = "P";
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            auto h = kit::antipode_full(e, O, P);
            span chord = e.sp(P, h.mark120);
            ref t1 = e.draw(P, chord);
            ref t2 = e.draw(h.opposite, chord);
            ref T = e.meet(t1, t2, branch::left);
            ref vc = e.draw(P, e.sp(O, T));
            // The square vertex on the hexagon-mark side of the axis.
            const double sgn = signed_angle(e.at(O), e.at(P), e.at(h.mark60)) > 0 ? 1.0 : -1.0;
            ref I = e.meet_toward(h.base_circle, vc,
                                  rotate_about(e.at(P), e.at(O), sgn * std::numbers::pi / 2.0));
            return {{{"I", I}, {"E", h.mark60}}, {{"side_len", e.sp(I, h.mark60)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double r = distance(in.pt("O"), in.pt("P"));
            ck.scalar_eq("side_len", out.scalar("side_len"),
                         2.0 * r * std::sin(std::numbers::pi / 12.0));
            return ck.result();
        };
    }
    { // P1.13 square over a segment
        entry& en = add(out, 13, "square erected over a segment");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref I = kit::quarter_point(e, B, A, in.br("side"));
            ref ci = e.draw(I, e.sp(B, I));
            ref ca = e.draw(A, e.sp(A, B));
            ref K = e.meet_toward(ci, ca, e.at(I) + e.at(A) - e.at(B));
            return {{{"I", I}, {"K", K}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point i = rotate_about(in.pt("A"), in.pt("B"), s * std::numbers::pi / 2.0);
            ck.point_eq("I", out.pt("I"), i);
            ck.point_eq("K", out.pt("K"), i + in.pt("A") - in.pt("B"));
            return ck.result();
        };
    }
    { // P1.14 square circumscribed about a circle
        entry& en = add(out, 14, "square circumscribed about a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[0].first = "O";
            in.points[1].first = "P";
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            auto h = kit::antipode_full(e, O, P);
            span chord = e.sp(P, h.mark120);
            ref t1 = e.draw(P, chord);
            ref t2 = e.draw(h.opposite, chord);
            ref T = e.meet(t1, t2, branch::left);
            ref vc = e.draw(P, e.sp(O, T));
            branch br = in.br("side");
            ref V1 = e.meet(h.base_circle, vc, br);
            ref V3 = e.meet(h.base_circle, vc, opposite(br));
            span r = e.sp(O, P);
            auto corner = [&](const ref& va, const ref& vb) {
                ref c1 = e.draw(va, r);
                ref c2 = e.draw(vb, r);
                return e.meet_toward(c1, c2, e.at(va) + e.at(vb) - e.at(O));
            };
            ref K1 = corner(P, V1);
            ref K2 = corner(V1, h.opposite);
            ref K3 = corner(h.opposite, V3);
            ref K4 = corner(V3, P);
            return {{{"K1", K1}, {"K2", K2}, {"K3", K3}, {"K4", K4}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point o = in.pt("O"), p = in.pt("P");
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            auto at = [&](int k) { return rotate_about(p, o, s * k * std::numbers::pi / 2.0); };
            ck.point_eq("K1", out.pt("K1"), at(0) + at(1) - o);
            ck.point_eq("K2", out.pt("K2"), at(1) + at(2) - o);
            ck.point_eq("K3", out.pt("K3"), at(2) + at(3) - o);
            ck.point_eq("K4", out.pt("K4"), at(3) + at(0) - o);
            return ck.result();
        };
    }
    { // P1.15 midpoint, three constructions
        entry& en = add(out, 15, "midpoint of a segment");
        en.variants = 3;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}};
        en.sample = [](rng& g) { return two_points(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int variant) -> expand_outputs {
            return {{{"M", kit::midpoint(e, arg(a, "A"), arg(a, "B"), variant)}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("M", out.pt("M"), 0.5 * (in.pt("A") + in.pt("B")));
            return ck.result();
        };
    }
}

void register_p1_16_26(std::vector<entry>& out) {
    { // P1.16 circle on a diameter
        entry& en = add(out, 16, "circle described on a diameter");
        en.params = {{"A", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.points[1].first = "C";
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            auto k = kit::circle_on_diameter(e, arg(a, "A"), arg(a, "C"));
            return {{{"G", k.center}}, {{"radius", k.radius}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("G", out.pt("G"), 0.5 * (in.pt("A") + in.pt("C")));
            ck.scalar_eq("radius", out.scalar("radius"), 0.5 * distance(in.pt("A"), in.pt("C")));
            return ck.result();
        };
    }
    { // P1.17 circle in a square
        entry& en = add(out, 17, "circle inscribed in a square");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g, -8, 8);
            const double s = g.uniform(1.0, 6.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point u{s * std::cos(th), s * std::sin(th)};
            point b = a + u, c = b + perp(u), d = a + perp(u);
            in.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref E = kit::midpoint(e, A, B, 1);
            ref G = kit::quarter_point_toward(e, E, A, 0.5 * (e.at(A) + e.at(C)));
            return {{{"G", G}}, {{"radius", e.sp(G, E)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("G", out.pt("G"), 0.5 * (in.pt("A") + in.pt("C")));
            ck.scalar_eq("radius", out.scalar("radius"), 0.5 * distance(in.pt("A"), in.pt("B")));
            return ck.result();
        };
    }
    { // P1.18 circle about a square
        entry& en = add(out, 18, "circle circumscribed about a square");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g, -8, 8);
            const double s = g.uniform(1.0, 6.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point u{s * std::cos(th), s * std::sin(th)};
            in.points = {{"A", a}, {"B", a + u}, {"C", a + u + perp(u)}, {"D", a + perp(u)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref G = kit::midpoint(e, arg(a, "A"), arg(a, "C"), 1);
            return {{{"G", G}}, {{"radius", e.sp(G, arg(a, "A"))}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("G", out.pt("G"), 0.5 * (in.pt("A") + in.pt("C")));
            ck.scalar_eq("radius", out.scalar("radius"), 0.5 * distance(in.pt("A"), in.pt("C")));
            return ck.result();
        };
    }
    { // P1.19 perpendicular foot
        entry& en = add(out, 19, "perpendicular dropped from a point onto a line");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point b = rand_pt(g), c = rand_pt_sep(g, {b}, 1.2);
                point a = rand_pt(g);
                const double off = std::fabs(cross(c - b, a - b)) / distance(b, c);
                if (off < 0.2) continue;
                in.points = {{"A", a}, {"B", b}, {"C", c}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            return {{{"F", kit::foot_of_perpendicular(e, arg(a, "A"), arg(a, "B"),
                                                      arg(a, "C"))}},
                    {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point b = in.pt("B"), c = in.pt("C"), a = in.pt("A");
            point d = c - b;
            point f = b + (dot(a - b, d) / dot(d, d)) * d;
            ck.point_eq("F", out.pt("F"), f);
            return ck.result();
        };
    }
    { // P1.20 tangent from an external point
        entry& en = add(out, 20, "tangent point from an external point to a circle");
        en.params = {{"A", param_kind::pt}, {"O", param_kind::pt}, {"r", param_kind::scalar},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point o = rand_pt(g);
                const double r = g.uniform(0.5, 5.0);
                point a = rand_pt(g);
                if (distance(a, o) < r + 0.5) continue;
                in.points = {{"A", a}, {"O", o}};
                in.scalars = {{"r", r}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref O = arg(a, "O");
            circle_handle k{e.draw(O, spans.at("r")), O, spans.at("r")};
            ref B = kit::tangent_point(e, arg(a, "A"), k, in.br("side"));
            return {{{"B", B}}, {{"tangent_len", e.sp(arg(a, "A"), B)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), o = in.pt("O");
            const double r = in.scalar("r");
            const double d = distance(a, o);
            const double th = std::acos(r / d);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point u = (r / d) * (a - o);
            ck.point_eq("B", out.pt("B"), rotate_about(o + u, o, s * th));
            ck.scalar_eq("tangent_len", out.scalar("tangent_len"), std::sqrt(d * d - r * r));
            return ck.result();
        };
    }
    { // P1.21 perpendicular of a given length at an endpoint
        entry& en = add(out, 21, "perpendicular of given length at a segment endpoint");
        en.variants = 2;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"len", param_kind::scalar},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            const double a = distance(in.pt("A"), in.pt("B"));
            in.scalars = {{"len", g.uniform(0.1, 0.95) * a}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int variant) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref K = kit::perpendicular_at(e, arg(a, "A"), arg(a, "B"), spans.at("len"),
                                          in.br("side"), variant);
            return {{{"K", K}}, {{"hyp", e.sp(arg(a, "B"), K)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            const double len = in.scalar("len");
            point u = (1.0 / distance(a, b)) * (b - a);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ck.point_eq("K", out.pt("K"), a + (s * len) * perp(u));
            const double ab = distance(a, b);
            ck.scalar_eq("hyp", out.scalar("hyp"), std::sqrt(ab * ab + len * len));
            return ck.result();
        };
    }
    { // P1.22 extend by a given length
        entry& en = add(out, 22, "segment extended beyond an endpoint by a given length");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"d", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in = two_points(g);
            in.scalars = {{"d", g.uniform(0.2, 8.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref N = kit::extend_beyond(e, arg(a, "A"), arg(a, "B"), spans.at("d"));
            return {{{"N", N}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            const double d = in.scalar("d");
            point u = (1.0 / distance(a, b)) * (a - b);
            ck.point_eq("N", out.pt("N"), a + d * u);
            ck.scalar_eq("|NB|", distance(out.pt("N"), b), distance(a, b) + d);
            return ck.result();
        };
    }
    { // P1.23 cut off a given length
        entry& en = add(out, 23, "length cut from a segment at an endpoint");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"d", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            const double ab = distance(in.pt("A"), in.pt("B"));
            in.scalars = {{"d", g.uniform(0.1, 0.9) * ab}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref M = kit::cut_toward(e, arg(a, "A"), arg(a, "B"), spans.at("d"));
            return {{{"M", M}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("M", out.pt("M"), on_ray(in.pt("A"), in.pt("B"), in.scalar("d")));
            return ck.result();
        };
    }
    { // P1.24 divide a segment into n equal parts
        entry& en = add(out, 24, "segment divided into equal parts");
        en.variants = 3;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"n", param_kind::integer}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            in.ints = {{"n", g.uniform_int(2, 5)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int variant) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            const int n = in.integer("n");
            expand_outputs res;
            auto name = [](int k) { return "M" + std::to_string(k); };
            if (variant == 1) {
                // Inversion of the n-fold extension: |BM| = |AB|/n toward A.
                ref E = kit::extend_chain(e, B, A, n);
                ref c0 = e.draw(B, e.sp(B, A));
                ref ce = e.draw(E, e.sp(E, B));
                ref F1 = e.meet(c0, ce, branch::left);
                ref F2 = e.meet(c0, ce, branch::right);
                ref f1 = e.draw(F1, e.sp(F1, B));
                ref f2 = e.draw(F2, e.sp(F2, B));
                ref M1 = e.meet_away(f1, f2, e.at(B));
                std::vector<ref> pts(n - 1);
                pts[n - 2] = M1;
                for (int j = 2; j <= n - 1; ++j) pts[n - 1 - j] = kit::extend_chain(e, B, M1, j);
                for (int k = 1; k <= n - 1; ++k) res.points.emplace_back(name(k), pts[k - 1]);
            } else if (variant == 2) {
                // Chord of the n-fold semicircle; feet pulled back onto AB.
                ref C = kit::extend_chain(e, A, B, n);
                auto dia = kit::circle_on_diameter(e, A, C);
                ref ch = e.draw(A, e.sp(A, B));
                ref H = e.meet(dia.circ, ch, branch::left);
                ref D = B;
                for (int k = 1; k <= n - 1; ++k) {
                    ref F = kit::foot_of_perpendicular(e, D, A, H);
                    ref M = kit::cut_toward(e, A, B, e.sp(A, F));
                    res.points.emplace_back(name(k), M);
                    if (k < n - 1) D = kit::extend_chain(e, A, B, k + 1);
                }
            } else {
                // Isosceles triangle with base and one side n|AB|, other 2|AB|.
                ref Q = kit::extend_chain(e, A, B, n);
                ref A2 = kit::antipode(e, B, A);
                ref cr1 = e.draw(A, e.sp(A, Q));
                ref cr2 = e.draw(Q, e.sp(A, A2));
                ref R = e.meet(cr1, cr2, branch::left);
                ref S = kit::foot_of_perpendicular(e, R, A, Q);
                ref U = kit::midpoint(e, S, Q, 1); // |UQ| = |AB|/n
                ref M1 = kit::cut_toward(e, A, B, e.sp(U, Q));
                res.points.emplace_back(name(1), M1);
                for (int k = 2; k <= n - 1; ++k)
                    res.points.emplace_back(name(k), kit::extend_chain(e, A, M1, k));
            }
            return res;
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const int n = in.integer("n");
            point a = in.pt("A"), b = in.pt("B");
            for (int k = 1; k <= n - 1; ++k)
                ck.point_eq("M" + std::to_string(k), out.pt("M" + std::to_string(k)),
                            a + (static_cast<double>(k) / n) * (b - a));
            return ck.result();
        };
    }
    { // P1.25 cut off a required part
        entry& en = add(out, 25, "required part of a segment cut off");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"n", param_kind::integer}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            in.ints = {{"n", g.uniform_int(2, 6)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            const int n = in.integer("n");
            ref C = kit::extend_chain(e, A, B, n);
            auto dia = kit::circle_on_diameter(e, A, C);
            ref ch = e.draw(A, e.sp(A, B));
            ref H = e.meet(dia.circ, ch, branch::left);
            ref F = kit::foot_of_perpendicular(e, B, A, H);
            ref G = kit::cut_toward(e, A, B, e.sp(A, F));
            return {{{"G", G}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            ck.point_eq("G", out.pt("G"), a + (1.0 / in.integer("n")) * (b - a));
            return ck.result();
        };
    }
    { // P1.26 divide in a given ratio
        entry& en = add(out, 26, "segment divided in a given ratio");
        en.params = {{"A", param_kind::pt}, {"D", param_kind::pt}, {"p", param_kind::scalar},
                     {"q", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in = two_points(g, 1.5);
            in.points[1].first = "D";
            const double q = g.uniform(1.0, 6.0);
            const double p = g.uniform(0.15, 0.85) * q;
            in.scalars = {{"p", p}, {"q", q}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), D = arg(a, "D");
            span pk = spans.at("p"), qk = spans.at("q");
            const double ad = e.length(e.sp(A, D));
            double sq = e.length(qk);
            while (ad >= sq * 0.98) { // keep both ratio legs in step
                pk = span{pk.a, kit::antipode(e, pk.b, pk.a)};
                qk = span{qk.a, kit::antipode(e, qk.b, qk.a)};
                sq *= 2.0;
            }
            ref C = kit::lay_along(e, A, D, qk);
            auto dia = kit::circle_on_diameter(e, A, C);
            ref ch = e.draw(A, e.sp(A, D));
            ref Dch = e.meet(dia.circ, ch, branch::left);
            ref Bq = kit::lay_along(e, A, C, pk);
            ref Ech = kit::foot_of_perpendicular(e, Bq, A, Dch);
            ref E = kit::cut_toward(e, A, D, e.sp(A, Ech));
            return {{{"E", E}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), d = in.pt("D");
            const double t = in.scalar("p") / in.scalar("q");
            ck.point_eq("E", out.pt("E"), a + t * (d - a));
            return ck.result();
        };
    }
}

void register_p1_27_31(std::vector<entry>& out) {
    auto sample_two_lengths = [](rng& g) {
        instance in;
        in.scalars = {{"p", g.uniform(0.3, 8.0)}, {"q", g.uniform(0.3, 8.0)}};
        return in;
    };
    { // P1.27 square equal to a rectangle
        entry& en = add(out, 27, "square equal in area to a rectangle");
        en.params = {{"p", param_kind::scalar}, {"q", param_kind::scalar}};
        en.sample = sample_two_lengths;
        en.expand = [](expansion& e, const std::map<std::string, ref>&, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span s = kit::geometric_mean(e, spans.at("p"), spans.at("q"));
            return {{}, {{"side", s}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.scalar_eq("side", out.scalar("side"), std::sqrt(in.scalar("p") * in.scalar("q")));
            return ck.result();
        };
    }
    { // P1.28 geometric mean (the same altitude construction)
        entry& en = add(out, 28, "geometric mean of two lengths");
        en.params = {{"p", param_kind::scalar}, {"q", param_kind::scalar}};
        en.sample = sample_two_lengths;
        en.expand = [](expansion& e, const std::map<std::string, ref>&, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span s = kit::geometric_mean(e, spans.at("p"), spans.at("q"));
            return {{}, {{"mean", s}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.scalar_eq("mean", out.scalar("mean"), std::sqrt(in.scalar("p") * in.scalar("q")));
            return ck.result();
        };
    }
    { // P1.29 rectangle side from a square, three workable constructions
        entry& en = add(out, 29, "side of a rectangle equal to a given square");
        en.variants = 3;
        en.unsupported_variants = {
            {4, "the fourth construction cannot be reconstructed from the translated text"}};
        en.params = {{"a", param_kind::scalar}, {"b", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in;
            in.scalars = {{"a", g.uniform(0.4, 6.0)}, {"b", g.uniform(0.4, 6.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>&, const instance& in,
                       int variant) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span a = spans.at("a"), b = spans.at("b");
            // Chord machinery shared by the three constructions:
            // |result| = mark * chord / diameter.
            auto chord_foot = [&e](span diam, span chord, span mark) {
                const double vc = e.length(chord);
                span dk = diam, mk = mark;
                double vd = e.length(diam);
                while (vc >= vd * 0.98) { // diameter and mark scale together
                    dk = span{dk.a, kit::antipode(e, dk.b, dk.a)};
                    mk = span{mk.a, kit::antipode(e, mk.b, mk.a)};
                    vd *= 2.0;
                }
                ref Q = dk.a;
                ref N = dk.b;
                auto dia = kit::circle_on_diameter(e, Q, N);
                ref cc = e.draw(Q, chord);
                ref O = e.meet(dia.circ, cc, branch::left);
                ref P = kit::lay_dir(e, Q, N, mk, +1);
                ref M = kit::foot_of_perpendicular(e, P, Q, O);
                return e.sp(Q, M);
            };
            span result;
            if (variant == 1) {
                span a2 = kit::len_scale(e, a, 2);
                span half = chord_foot(a2, b, b); // b^2 / (2a)
                result = kit::len_scale(e, half, 2);
            } else if (variant == 2) {
                result = chord_foot(a, b, b); // b^2 / a
            } else {
                span a2 = kit::len_scale(e, a, 2);
                span b2 = kit::len_scale(e, b, 2);
                result = chord_foot(a2, b, b2); // 2b * b / (2a)
            }
            return {{}, {{"bc", result}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double a = in.scalar("a"), b = in.scalar("b");
            ck.scalar_eq("bc", out.scalar("bc"), b * b / a);
            return ck.result();
        };
    }
    { // P1.30 third proportional
        entry& en = add(out, 30, "third proportional to two lengths");
        en.params = {{"a", param_kind::scalar}, {"b", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in;
            in.scalars = {{"a", g.uniform(0.4, 6.0)}, {"b", g.uniform(0.4, 6.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>&, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            return {{}, {{"t", kit::third_proportional(e, spans.at("a"), spans.at("b"))}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double a = in.scalar("a"), b = in.scalar("b");
            ck.scalar_eq("t", out.scalar("t"), b * b / a);
            return ck.result();
        };
    }
    { // P1.31 fourth proportional, two routes
        entry& en = add(out, 31, "fourth proportional to three lengths");
        en.variants = 2;
        en.params = {{"a", param_kind::scalar}, {"b", param_kind::scalar},
                     {"c", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in;
            in.scalars = {{"a", g.uniform(0.4, 6.0)},
                          {"b", g.uniform(0.4, 6.0)},
                          {"c", g.uniform(0.4, 9.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>&, const instance& in,
                       int variant) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span a = spans.at("a"), b = spans.at("b"), c = spans.at("c");
            span result;
            if (variant == 1) {
                // Square equal to the rectangle (b,c), then the rectangle side
                // of that square against a.
                span m = kit::geometric_mean(e, b, c);
                result = kit::third_proportional(e, a, m);
            } else {
                result = kit::fourth_proportional(e, a, b, c);
            }
            return {{}, {{"d", result}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.scalar_eq("d", out.scalar("d"), in.scalar("b") * in.scalar("c") / in.scalar("a"));
            return ck.result();
        };
    }
}

} // namespace

void register_p1_32_54(std::vector<entry>& out);

void register_part1(std::vector<entry>& out) {
    register_p1_01_15(out);
    register_p1_16_26(out);
    register_p1_27_31(out);
    register_p1_32_54(out);
}

} // namespace edc::detail
