#include "catalog_detail.hpp"

#include "edc/executor.hpp"

// Second Part: secant segments, tangent circles, partitions, the centre of
// gravity of an annulus, the three-point resection, and perspective images.
// Propositions 23 and 24 (the sundials) are registered unsupported: their
// geometry depends on astronomical conventions the text leaves to figures.

namespace edc::detail {

namespace {

using kit::circle_handle;

entry& add(std::vector<entry>& out, int number, const char* title) {
    entry& en = out.emplace_back();
    en.part = 2;
    en.number = number;
    en.title = title;
    return en;
}

branch rand_branch(rng& g) { return g.coin() ? branch::left : branch::right; }

point dir_of(double th) { return point{std::cos(th), std::sin(th)}; }

// Chord frame for P2.1/P2.2: a circle with a marked diameter A--B and an
// external point C on the extension beyond A.
struct secant_frame {
    point o, a, b, c, u; // u = unit(B - A)
    double r, t;
};

secant_frame secant_from(const instance& in) {
    secant_frame f;
    f.a = in.pt("A");
    f.b = in.pt("B");
    f.c = in.pt("C");
    f.o = 0.5 * (f.a + f.b);
    f.r = 0.5 * distance(f.a, f.b);
    f.t = distance(f.c, f.a);
    f.u = (1.0 / (2.0 * f.r)) * (f.b - f.a);
    return f;
}

// E at |CE| = x from C on the chosen side of the diameter line.
point secant_point(const secant_frame& f, double x, double s) {
    const double d = f.t + f.r; // |C O|
    const double along = (d * d + x * x - f.r * f.r) / (2.0 * d);
    const double h2 = x * x - along * along;
    const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
    return f.c + along * f.u + (s * h) * perp(f.u);
}

void register_p2_01_06(std::vector<entry>& out) {
    { // P2.1 secant from an outside point cutting a chord of given length
        entry& en = add(out, 1, "secant through an outside point cutting off a doubled chord");
        en.variants = 2;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point o = rand_pt(g, -5, 5);
            const double r = g.uniform(1.5, 5.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point a = o - r * dir_of(th), b = o + r * dir_of(th);
            const double t = g.uniform(0.15, 0.9) * r;
            point c = a - t * dir_of(th);
            in.points = {{"A", a}, {"B", b}, {"C", c}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int variant) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref O = kit::midpoint(e, A, B, 1);
            circle_handle k{e.draw(O, e.sp(O, A)), O, e.sp(O, A)};
            secant_frame f = secant_from(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            const double x = std::sqrt(f.t * (2.0 * f.t + 2.0 * f.r)) - f.t;
            point e_target = secant_point(f, x, s);
            ref E, F;
            if (variant == 1) {
                // Geometric mean of the stretched secant, then the chord's
                // far end by reflecting the centre across the line.
                ref X = kit::extend_beyond(e, B, A, e.sp(C, A));
                span gm = kit::geometric_mean(e, e.sp(C, X), e.sp(C, A));
                span x_sp = kit::len_sub(e, gm, e.sp(C, A));
                E = e.meet_toward(k.circ, e.draw(C, x_sp), e_target);
                ref H = kit::reflect_across(e, O, C, E);
                F = e.meet_away(k.circ, e.draw(H, k.radius), e.at(E));
            } else {
                // A chord of twice |CA| anywhere, its apothem, then the
                // tangent from C to the inner circle.
                span two_t = kit::len_scale(e, e.sp(C, A), 2);
                ref D1 = e.meet(k.circ, e.draw(B, two_t), branch::left);
                ref Fd = kit::foot_of_perpendicular(e, O, B, D1);
                circle_handle inner{e.draw(O, e.sp(O, Fd)), O, e.sp(O, Fd)};
                ref Mco = kit::midpoint(e, C, O, 1);
                ref th = e.draw(Mco, e.sp(Mco, C));
                // Tangent point = foot of the centre on the wanted secant.
                ref T = e.meet_toward(inner.circ, th,
                                      foot_on_line(e.at(O), e.at(C), e_target));
                E = kit::line_circle(e, C, T, k, branch::left);
                F = kit::line_circle(e, C, T, k, branch::right);
            }
            return {{{"E", E}, {"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            secant_frame f = secant_from(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            const double x = std::sqrt(f.t * (2.0 * f.t + 2.0 * f.r)) - f.t;
            ck.point_eq("E", out.pt("E"), secant_point(f, x, s));
            ck.point_eq("F", out.pt("F"), secant_point(f, x + 2.0 * f.t, s));
            ck.scalar_eq("|EF|", distance(out.pt("E"), out.pt("F")), 2.0 * f.t);
            ck.relation("collinear C E F",
                        std::fabs(cross(out.pt("E") - f.c, out.pt("F") - f.c)));
            return ck.result();
        };
    }
    { // P2.2 secant whose rectangle equals |CA| times the radius
        entry& en = add(out, 2, "secant whose chord rectangle equals a given rectangle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point o = rand_pt(g, -5, 5);
            const double r = g.uniform(1.5, 5.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point a = o - r * dir_of(th), b = o + r * dir_of(th);
            const double t = g.uniform(0.2, 1.5) * r;
            point c = a - t * dir_of(th);
            in.points = {{"A", a}, {"B", b}, {"C", c}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref O = kit::midpoint(e, A, B, 1);
            circle_handle k{e.draw(O, e.sp(O, A)), O, e.sp(O, A)};
            secant_frame f = secant_from(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            const double x = std::sqrt(f.t * (f.t + f.r));
            span gm = kit::geometric_mean(e, e.sp(C, O), e.sp(C, A));
            ref E = e.meet_toward(k.circ, e.draw(C, gm), secant_point(f, x, s));
            ref H = kit::reflect_across(e, O, C, E);
            ref F = e.meet_away(k.circ, e.draw(H, k.radius), e.at(E));
            return {{{"E", E}, {"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            secant_frame f = secant_from(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            const double x = std::sqrt(f.t * (f.t + f.r));
            ck.point_eq("E", out.pt("E"), secant_point(f, x, s));
            const double ce = distance(out.pt("E"), f.c);
            const double ef = distance(out.pt("E"), out.pt("F"));
            ck.relation("CE*EF = CA*r", std::fabs(ce * ef - f.t * f.r), f.t * f.r);
            return ck.result();
        };
    }
    { // P2.3 segment of given length between a side and the parallel
        entry& en = add(out, 3, "segment of given length cut between a triangle side and a parallel");
        en.params = {{"B", param_kind::pt}, {"C", param_kind::pt}, {"apex", param_kind::br},
                     {"s", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point b = rand_pt(g), c = rand_pt_sep(g, {b}, 2.0);
                const double aa = distance(b, c);
                const double s = g.uniform(0.15, 0.8) * aa;
                // Feasibility of the recipe on this instance.
                const double m = std::sqrt(aa * aa / 4.0 + s * s) - aa / 2.0;
                const double gm2 = std::sqrt((m / 4.0 + aa) * m);
                const double af = gm2 - m / 2.0;
                if (af < 0.05 * aa || af > 0.95 * aa) continue;
                in.points = {{"B", b}, {"C", c}};
                in.scalars = {{"s", s}};
                in.branches = {{"apex", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span s_len = spans.at("s");
            ref B = arg(a, "B"), C = arg(a, "C");
            ref A = kit::equilateral_apex(e, C, B, in.br("apex"));
            ref G = kit::midpoint(e, B, C, 1);
            ref L = kit::perpendicular_at(e, G, B, s_len, branch::left, 0);
            ref M = kit::lay_along(e, B, L, e.sp(B, G));
            span ml = e.sp(M, L);
            span ml4 = kit::len_half(e, kit::len_half(e, ml));
            span sum = kit::len_sum(e, e.sp(B, C), ml4);
            span gm2 = kit::geometric_mean(e, sum, ml);
            span res1 = kit::len_sub(e, gm2, kit::len_half(e, ml));
            ref F = kit::lay_along(e, A, C, res1);
            ref E = kit::extend_beyond(e, F, B, s_len);
            return {{{"A", A}, {"F", F}, {"E", E}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point b = in.pt("B"), c = in.pt("C");
            point apx = out.pt("A"), f = out.pt("F"), ept = out.pt("E");
            const double s = in.scalar("s");
            ck.relation("F on AC", std::fabs(cross(c - apx, f - apx)) / distance(apx, c));
            ck.relation("E on parallel through A",
                        std::fabs(cross(ept - apx, c - b)) / distance(b, c));
            ck.relation("B F E collinear", std::fabs(cross(f - b, ept - b)) / distance(b, f));
            ck.scalar_eq("|EF|", distance(ept, f), s);
            return ck.result();
        };
    }
    { // P2.4 segment of given length across a square's side and extension
        entry& en = add(out, 4, "segment of given length across a square side and its extension");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"r", param_kind::scalar}};
        en.sample = [](rng& g) {
            instance in;
            point d = rand_pt(g, -6, 6);
            const double s = g.uniform(1.5, 5.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            const double sg = g.coin() ? 1.0 : -1.0;
            point c = d + s * dir_of(th);
            point a = d + s * sg * perp(dir_of(th));
            point b = a + (c - d);
            in.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
            in.scalars = {{"r", g.uniform(0.3, 1.6) * s}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            span r_len = spans.at("r");
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            const bool bleft = side_of(e.at(B), e.at(A), e.at(D), e.tol()) == side::left;
            ref E = kit::perpendicular_at(e, A, D, r_len, bleft ? branch::right : branch::left,
                                          0);
            span ed = e.sp(E, D);
            span ef = kit::len_sub(e, ed, e.sp(A, D));
            span ef4 = kit::len_half(e, kit::len_half(e, ef));
            span sum = kit::len_sum(e, e.sp(A, D), ef4);
            span gm2 = kit::geometric_mean(e, sum, ef);
            span kk = kit::len_sub(e, gm2, kit::len_half(e, ef));
            ref K = kit::lay_along(e, D, C, kk);
            ref I = kit::extend_beyond(e, K, B, r_len);
            return {{{"K", K}, {"I", I}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D");
            point k = out.pt("K"), i = out.pt("I");
            const double r = in.scalar("r");
            ck.relation("K on DC", std::fabs(cross(c - d, k - d)) / distance(c, d));
            ck.relation("I on line AD", std::fabs(cross(d - aP, i - aP)) / distance(aP, d));
            ck.relation("B K I collinear", std::fabs(cross(k - b, i - b)) / distance(b, k));
            ck.scalar_eq("|KI|", distance(k, i), r);
            return ck.result();
        };
    }
    { // P2.5 point with a square-to-rectangle ratio along a line
        entry& en = add(out, 5, "point whose square over one part equals a rectangle over the rest");
        en.variants = 2;
        en.params = {{"E", param_kind::pt}, {"A", param_kind::pt}, {"V", param_kind::pt},
                     {"I", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g, -4, 4);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point u = dir_of(th);
            const double ev = g.uniform(1.5, 6.0);
            const double vv = g.uniform(1.5, 6.0);
            const double iv = g.uniform(0.4, vv - 0.2);
            in.points = {{"E", a + ev * u}, {"A", a}, {"V", a - vv * u}, {"I", a - iv * u}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int variant) -> expand_outputs {
            ref E = arg(a, "E"), A = arg(a, "A"), V = arg(a, "V"), I = arg(a, "I");
            ref O;
            if (variant == 1) {
                ref Y = kit::perpendicular_at(e, A, E, e.sp(A, E), branch::left, 0);
                ref R = kit::perpendicular_at(e, I, V, e.sp(I, A), branch::left, 0);
                ref S = kit::midpoint(e, Y, R, 1);
                ref T = kit::foot_of_perpendicular(e, S, A, E);
                span rho = e.sp(S, Y);
                span dd = e.sp(S, T);
                span w = kit::len_sub(e, rho, dd);
                span x2 = kit::len_sum(e, rho, dd);
                span to = kit::geometric_mean(e, w, x2);
                O = kit::lay_dir(e, T, E, to, +1);
            } else {
                span k2 = kit::geometric_mean(e, e.sp(E, A), e.sp(A, I));
                ref M = kit::midpoint(e, I, A, 1);
                ref K = kit::perpendicular_at(e, A, E, k2, branch::left, 0);
                O = kit::lay_dir(e, M, E, e.sp(M, K), +1);
            }
            return {{{"O", O}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), ept = in.pt("E");
            const double ev = distance(a, ept);
            const double iv = distance(a, in.pt("I"));
            const double o = (-iv + std::sqrt(iv * iv + 4.0 * ev * iv)) / 2.0;
            ck.point_eq("O", out.pt("O"), on_ray(a, ept, o));
            // Defining ratio: AO^2 = OE * AI.
            const double ao = distance(out.pt("O"), a);
            const double oe = distance(out.pt("O"), ept);
            ck.relation("AO^2 = OE*AI", std::fabs(ao * ao - oe * iv), ao * ao);
            return ck.result();
        };
    }
    { // P2.6 chord through a diameter point in a given ratio
        entry& en = add(out, 6, "chord through a diameter point balancing the endpoint ratios");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"E", param_kind::pt},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point o = rand_pt(g, -5, 5);
            const double r = g.uniform(1.5, 5.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point a = o - r * dir_of(th), b = o + r * dir_of(th);
            double t;
            do {
                t = g.uniform(0.15, 0.85);
            } while (std::fabs(t - 0.5) < 0.06);
            in.points = {{"A", a}, {"B", b}, {"E", a + t * (b - a)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), E = arg(a, "E");
            ref O = kit::midpoint(e, A, B, 1);
            circle_handle k{e.draw(O, e.sp(O, A)), O, e.sp(O, A)};
            ref C = kit::quarter_point(e, O, A, in.br("side"));
            span ed = kit::fourth_proportional(e, e.sp(C, E), e.sp(A, E), e.sp(E, B));
            ref D = kit::lay_dir(e, E, C, ed, -1);
            return {{{"C", C}, {"D", D}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B"), ept = in.pt("E");
            point o = 0.5 * (a + b);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point c_exp = rotate_about(a, o, s * std::numbers::pi / 2.0);
            ck.point_eq("C", out.pt("C"), c_exp);
            tolerance tol = tolerance_for(in);
            // The far intersection of ray C->E with the circle (C is the near one).
            point d_exp = line_circle_intersection(c_exp, ept, circle{o, 0.5 * distance(a, b)},
                                                   branch::right, tol);
            ck.point_eq("D", out.pt("D"), d_exp);
            const double ad = distance(a, out.pt("D")), db = distance(out.pt("D"), b);
            const double ae = distance(a, ept), eb = distance(ept, b);
            ck.relation("AD:DB = AE:EB", std::fabs(ad * eb - db * ae), ad * eb);
            return ck.result();
        };
    }
}

void register_p2_07_14(std::vector<entry>& out) {
    { // P2.7 similitude points and the common tangent
        entry& en = add(out, 7, "line tangent to two circles through their similitude point");
        en.params = {{"B", param_kind::pt}, {"C", param_kind::pt}, {"r1", param_kind::scalar},
                     {"r2", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point b = rand_pt(g, -6, 6);
                const double r1 = g.uniform(1.5, 4.0);
                const double r2 = g.uniform(0.5, r1 - 0.6);
                point c = rand_pt_sep(g, {b}, r1 + r2 + 0.8);
                if (distance(b, c) > 14.0) continue;
                in.points = {{"B", b}, {"C", c}};
                in.scalars = {{"r1", r1}, {"r2", r2}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref B = arg(a, "B"), C = arg(a, "C");
            span r1 = spans.at("r1"), r2 = spans.at("r2");
            circle_handle k1{e.draw(B, r1), B, r1};
            circle_handle k2{e.draw(C, r2), C, r2};
            span t1 = kit::fourth_proportional(e, kit::len_sub(e, r1, r2), e.sp(B, C), r2);
            ref Fe = kit::lay_dir(e, C, B, t1, -1); // beyond the smaller circle
            span t2 = kit::fourth_proportional(e, kit::len_sum(e, r1, r2), e.sp(B, C), r2);
            ref Fi = kit::lay_along(e, C, B, t2);
            ref G = kit::tangent_point(e, Fe, k1, in.br("side"));
            ref Mf = kit::midpoint(e, Fe, C, 1);
            ref th2 = e.draw(Mf, e.sp(Mf, C));
            ref H = e.meet_toward(k2.circ, th2, foot_on_line(e.at(C), e.at(Fe), e.at(G)));
            return {{{"Fe", Fe}, {"Fi", Fi}, {"G", G}, {"H", H}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point b = in.pt("B"), c = in.pt("C");
            const double r1 = in.scalar("r1"), r2 = in.scalar("r2");
            const double d = distance(b, c);
            ck.point_eq("Fe", out.pt("Fe"), on_ray(b, c, d * r1 / (r1 - r2)));
            ck.point_eq("Fi", out.pt("Fi"), on_ray(b, c, d * r1 / (r1 + r2)));
            point gpt = out.pt("G"), h = out.pt("H");
            ck.scalar_eq("|BG|", distance(b, gpt), r1);
            ck.scalar_eq("|CH|", distance(c, h), r2);
            ck.relation("tangent at G", std::fabs(dot(gpt - b, gpt - out.pt("Fe"))),
                        r1 * distance(gpt, out.pt("Fe")));
            ck.relation("F G H collinear",
                        std::fabs(cross(gpt - out.pt("Fe"), h - out.pt("Fe"))) /
                            std::max(1.0, distance(gpt, out.pt("Fe"))));
            return ck.result();
        };
    }
    { // P2.8 circles in the square corner and against the quarter arc
        entry& en = add(out, 8, "largest circles fitted to a quarter arc inside a square");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point b = rand_pt(g, -6, 6);
            const double s = g.uniform(2.0, 6.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            const double sg = g.coin() ? 1.0 : -1.0;
            point aP = b + s * dir_of(th);
            point d = b + s * sg * perp(dir_of(th));
            point c = aP + d - b;
            in.points = {{"A", aP}, {"B", b}, {"C", c}, {"D", d}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            span rho1 = kit::len_sub(e, e.sp(B, C), e.sp(B, D));
            ref M = kit::lay_along(e, B, D, rho1);
            ref N = kit::lay_along(e, B, A, rho1);
            ref Q = kit::parallel_transfer(e, M, N, B);
            ref E = kit::lay_along(e, B, C, e.sp(B, D));
            ref F = kit::foot_of_perpendicular(e, E, C, D);
            span sum = kit::len_sum(e, e.sp(E, C), e.sp(E, F));
            span rho2 = kit::fourth_proportional(e, sum, e.sp(E, C), e.sp(E, F));
            ref G = kit::lay_along(e, C, D, rho2);
            ref N2 = kit::lay_along(e, C, A, rho2);
            ref H = kit::parallel_transfer(e, G, N2, C);
            return {{{"Q", Q}, {"H", H}}, {{"rho1", rho1}, {"rho2", rho2}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D");
            const double s = distance(aP, b);
            const double rho1 = s * (std::numbers::sqrt2 - 1.0);
            const double rho2 = s * (3.0 - 2.0 * std::numbers::sqrt2);
            point u1 = (1.0 / s) * (aP - b), u2 = (1.0 / s) * (d - b);
            ck.scalar_eq("rho1", out.scalar("rho1"), rho1);
            ck.scalar_eq("rho2", out.scalar("rho2"), rho2);
            ck.point_eq("Q", out.pt("Q"), b + rho1 * u1 + rho1 * u2);
            ck.point_eq("H", out.pt("H"), c - rho2 * u1 - rho2 * u2);
            // Tangency against the arc, both ways.
            ck.relation("Q touches arc", std::fabs(distance(out.pt("Q"), b) - (s - rho1)), s);
            ck.relation("H touches arc", std::fabs(distance(out.pt("H"), b) - (s + rho2)), s);
            return ck.result();
        };
    }
    { // P2.9 the twin circles beside the altitude of a halved semicircle
        entry& en = add(out, 9, "equal circles against the altitude inside a semicircle");
        en.params = {{"A", param_kind::pt}, {"C", param_kind::pt}, {"D", param_kind::pt},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point aP = rand_pt(g, -6, 6);
            point c = rand_pt_sep(g, {aP}, 4.0);
            const double t = g.uniform(0.3, 0.7);
            in.points = {{"A", aP}, {"C", c}, {"D", aP + t * (c - aP)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), C = arg(a, "C"), D = arg(a, "D");
            ref B = kit::midpoint(e, A, C, 1);
            ref F = kit::midpoint(e, A, D, 1);
            ref Gc = kit::midpoint(e, D, C, 1);
            span rw = kit::third_proportional(e, e.sp(A, B), e.sp(A, F));
            span rho = kit::len_sub(e, e.sp(A, F), rw); // r1 r2 / (r1 + r2)
            span fe = kit::len_sum(e, e.sp(F, D), rho);
            span be = kit::len_sub(e, e.sp(A, B), rho);
            span alt = kit::geometric_mean(e, e.sp(A, D), e.sp(D, C));
            branch sd = in.br("side");
            ref K = kit::perpendicular_at(e, D, C, alt, sd, 0);
            const double s = sd == branch::left ? 1.0 : -1.0;
            point u = (1.0 / distance(e.at(A), e.at(C))) * (e.at(C) - e.at(A));
            const double rhov = e.length(rho);
            const double r1 = 0.5 * distance(e.at(A), e.at(D));
            point e_target = e.at(F) + (r1 - rhov) * u + (s * 2.0 * std::sqrt(r1 * rhov)) *
                                                             perp(u); // toward the altitude
            ref E = e.meet_toward(e.draw(F, fe), e.draw(B, be), e_target);
            span gh = kit::len_sum(e, e.sp(Gc, D), rho);
            const double r2 = 0.5 * distance(e.at(D), e.at(C));
            point h_target = e.at(Gc) - (r2 - rhov) * u +
                             (s * 2.0 * std::sqrt(r2 * rhov)) * perp(u);
            ref H = e.meet_toward(e.draw(Gc, gh), e.draw(B, be), h_target);
            ref P = kit::foot_of_perpendicular(e, E, D, K);
            ref O = kit::foot_of_perpendicular(e, H, D, K);
            return {{{"E", E}, {"H", H}, {"P", P}, {"O", O}}, {{"rho", rho}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), c = in.pt("C"), d = in.pt("D");
            const double r = 0.5 * distance(aP, c);
            const double r1 = 0.5 * distance(aP, d);
            const double r2 = 0.5 * distance(d, c);
            const double rho = r1 * r2 / r;
            ck.scalar_eq("rho", out.scalar("rho"), rho);
            point b = 0.5 * (aP + c), f = 0.5 * (aP + d), gc = 0.5 * (d + c);
            // Twin tangency relations.
            ck.relation("E inner tangent", std::fabs(distance(out.pt("E"), b) - (r - rho)), r);
            ck.relation("E outer tangent",
                        std::fabs(distance(out.pt("E"), f) - (r1 + rho)), r);
            ck.relation("H inner tangent", std::fabs(distance(out.pt("H"), b) - (r - rho)), r);
            ck.relation("H outer tangent",
                        std::fabs(distance(out.pt("H"), gc) - (r2 + rho)), r);
            // Both circles touch the altitude line through D.
            point u = (1.0 / (2.0 * r)) * (c - aP);
            ck.relation("E touches altitude",
                        std::fabs(std::fabs(dot(out.pt("E") - d, u)) - rho), rho);
            ck.relation("H touches altitude",
                        std::fabs(std::fabs(dot(out.pt("H") - d, u)) - rho), rho);
            return ck.result();
        };
    }
    { // P2.10 circle through two points touching a line
        entry& en = add(out, 10, "circle through two points tangent to a line");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point c = rand_pt(g), d = rand_pt_sep(g, {c}, 2.0);
                point u = (1.0 / distance(c, d)) * (d - c);
                point n = perp(u);
                point aP = c + g.uniform(-4.0, 8.0) * u + g.uniform(0.8, 6.0) * n;
                point b = c + g.uniform(-4.0, 8.0) * u + g.uniform(0.8, 6.0) * n;
                if (distance(aP, b) < 1.5) continue;
                // The meet of line AB with CD must exist and stay clear.
                point dab = b - aP;
                if (std::fabs(cross(dab, u)) / norm(dab) < 0.12) continue;
                tolerance tol = tolerance::with_scale(20.0);
                point gpt = line_line_intersection(aP, b, c, d, tol);
                if (norm(gpt) > 40.0) continue;
                if (distance(gpt, aP) < 0.8 || distance(gpt, b) < 0.8) continue;
                in.points = {{"A", aP}, {"B", b}, {"C", c}, {"D", d}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            ref G = kit::line_line(e, A, B, C, D);
            span gm2 = kit::geometric_mean(e, e.sp(G, A), e.sp(G, B));
            ref K = kit::lay_dir(e, G, D, gm2, +1);
            auto res = kit::circumcenter(e, A, B, K);
            e.draw(res.center, res.radius);
            return {{{"K", K}, {"E", res.center}}, {{"radius", res.radius}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D");
            tolerance tol = tolerance_for(in);
            point gpt = line_line_intersection(aP, b, c, d, tol);
            const double gk = std::sqrt(distance(gpt, aP) * distance(gpt, b));
            ck.point_eq("K", out.pt("K"), on_ray(gpt, d, gk));
            point cen = out.pt("E");
            const double rr = out.scalar("radius");
            ck.relation("through A", std::fabs(distance(cen, aP) - rr), rr);
            ck.relation("through B", std::fabs(distance(cen, b) - rr), rr);
            const double dist_line = std::fabs(cross(d - c, cen - c)) / distance(c, d);
            ck.relation("tangent to CD", std::fabs(dist_line - rr), rr);
            return ck.result();
        };
    }
    { // P2.11 cut so the equilateral triangle on one part equals the square on the other
        entry& en = add(out, 11, "cut making an equilateral triangle equal to a square");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g);
            in.points = {{"A", a}, {"B", rand_pt_sep(g, {a}, 1.5)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref F = kit::equilateral_apex(e, A, B, branch::left);
            ref H = kit::midpoint(e, A, B, 1);
            span gmq = kit::geometric_mean(e, e.sp(A, H), e.sp(F, H));
            span ext = kit::len_sum(e, e.sp(A, B), gmq);
            span ac = kit::fourth_proportional(e, ext, e.sp(A, B), gmq);
            ref C = kit::lay_along(e, A, B, ac);
            return {{{"C", C}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            const double q = std::pow(3.0, 0.25) / 2.0;
            ck.point_eq("C", out.pt("C"), a + (q / (1.0 + q)) * (b - a));
            const double ac = distance(a, out.pt("C"));
            const double cb = distance(out.pt("C"), b);
            ck.relation("triangle equals square",
                        std::fabs(std::sqrt(3.0) / 4.0 * cb * cb - ac * ac), ac * ac);
            return ck.result();
        };
    }
    { // P2.12 line halving a triangle's area and perimeter
        entry& en = add(out, 12, "cut through a triangle halving area and perimeter");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 2.0),
                      c = rand_pt_sep(g, {a, b}, 2.0);
                if (triangle_area(a, b, c) < 1.5) continue;
                const double la = distance(c, b), lb = distance(c, a),
                             lc = distance(a, b);
                const double p4 = (la + lb + lc) / 4.0;
                const double disc = p4 * p4 - la * lb / 2.0;
                if (disc < 0.05) continue;
                const double dd = std::sqrt(disc);
                const double ce = p4 + dd, ckk = p4 - dd;
                if (ce > la - 0.1 || ckk < 0.1 || ckk > lb - 0.1) continue;
                in.points = {{"A", a}, {"B", b}, {"C", c}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            span g1 = kit::geometric_mean(e, e.sp(C, B), kit::len_half(e, e.sp(C, A)));
            span per = kit::len_sum(e, kit::len_sum(e, e.sp(B, C), e.sp(C, A)), e.sp(A, B));
            span quarter = kit::len_half(e, kit::len_half(e, per));
            auto dia = kit::circle_on_diameter(e, quarter.a, quarter.b);
            ref Ch = e.meet(dia.circ, e.draw(quarter.a, g1), branch::left);
            span leg = e.sp(Ch, quarter.b);
            span ce = kit::len_sum(e, quarter, leg);
            span ckk = kit::len_sub(e, quarter, leg);
            ref E = kit::lay_along(e, C, B, ce);
            ref K = kit::lay_along(e, C, A, ckk);
            return {{{"E", E}, {"K", K}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B"), c = in.pt("C");
            const double la = distance(c, b), lb = distance(c, a), lc = distance(a, b);
            const double p4 = (la + lb + lc) / 4.0;
            const double dd = std::sqrt(p4 * p4 - la * lb / 2.0);
            ck.point_eq("E", out.pt("E"), on_ray(c, b, p4 + dd));
            ck.point_eq("K", out.pt("K"), on_ray(c, a, p4 - dd));
            const double cut_area = triangle_area(c, out.pt("E"), out.pt("K"));
            ck.relation("half area", std::fabs(cut_area - 0.5 * triangle_area(a, b, c)),
                        triangle_area(a, b, c));
            const double ce = distance(c, out.pt("E")), ckv = distance(c, out.pt("K"));
            ck.relation("half perimeter", std::fabs(ce + ckv - (la + lb + lc) / 2.0),
                        la + lb + lc);
            return ck.result();
        };
    }
    { // P2.13 shortest segment between two semicircles seen from a corner
        entry& en = add(out, 13, "shortest segment between two circles along a ray from a corner");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point aP = rand_pt(g, -6, 6);
                const double L = g.uniform(6.0, 10.0);
                const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
                point u = dir_of(th);
                point b = aP + L * u;
                const double c1 = g.uniform(0.06, 0.3) * L;
                const double c2 = g.uniform(c1 + 0.2 * L, 0.85 * L);
                const double dn = 0.5 * (c1 + c2);
                const double rho = 0.5 * (c2 - c1);
                // The interior optimum needs the small centre in the near
                // half and a wide enough circle to turn the extremal ray.
                if (L - 2.0 * dn < 0.08 * L) continue;
                if (rho * (L - dn) < 1.08 * dn * dn) continue;
                const double u2 = (dn * dn - rho * rho) * (L - dn) * (L - dn) /
                                  (dn * dn * ((L - dn) * (L - dn) - dn * dn));
                if (u2 < 0.05 || u2 > 0.92) continue;
                in.points = {{"A", aP}, {"B", b}, {"C", aP + c1 * u}, {"D", aP + c2 * u}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            ref N = kit::midpoint(e, C, D, 1);
            circle_handle small{e.draw(N, e.sp(N, C)), N, e.sp(N, C)};
            ref Rpt = kit::antipode(e, N, B); // |A Rpt| = 2|AN| - |AB|
            span am = kit::geometric_mean(e, e.sp(A, Rpt), e.sp(A, B));
            ref Pt = kit::tangent_point(e, A, small, in.br("side"));
            span ai = kit::fourth_proportional(e, e.sp(A, Rpt), am, e.sp(A, Pt));
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point u = (1.0 / distance(e.at(A), e.at(B))) * (e.at(B) - e.at(A));
            const double aiv = e.length(ai);
            const double dn = distance(e.at(A), e.at(N));
            const double cosph = std::min(1.0, (aiv * aiv + dn * dn -
                                                std::pow(0.5 * distance(e.at(C), e.at(D)), 2)) /
                                                   (2.0 * aiv * dn));
            point e_target = e.at(A) + aiv * (std::cos(std::acos(cosph)) * u +
                                              s * std::sin(std::acos(cosph)) * perp(u));
            ref E = e.meet_toward(small.circ, e.draw(A, ai), e_target);
            ref K = kit::midpoint(e, A, B, 1);
            ref S = kit::foot_of_perpendicular(e, K, A, E);
            ref F = kit::antipode(e, S, A);
            return {{{"E", E}, {"F", F}}, {{"cut_len", e.sp(E, F)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D");
            const double L = distance(aP, b);
            point n = 0.5 * (c + d);
            const double dn = distance(aP, n);
            const double rho = 0.5 * distance(c, d);
            const double u2 = (dn * dn - rho * rho) * (L - dn) * (L - dn) /
                              (dn * dn * ((L - dn) * (L - dn) - dn * dn));
            const double ae = std::sqrt((dn * dn - rho * rho) * L / (L - 2.0 * dn));
            const double af = L * std::sqrt(u2);
            point ept = out.pt("E"), f = out.pt("F");
            ck.scalar_eq("|AE|", distance(aP, ept), ae);
            ck.scalar_eq("|AF|", distance(aP, f), af);
            ck.relation("A E F collinear", std::fabs(cross(ept - aP, f - aP)) / L, L);
            ck.relation("E on small circle", std::fabs(distance(ept, n) - rho), rho);
            ck.relation("F on big circle",
                        std::fabs(distance(f, 0.5 * (aP + b)) - 0.5 * L), L);
            ck.scalar_eq("cut_len", out.scalar("cut_len"), af - ae);
            return ck.result();
        };
    }
    { // P2.14 largest square in a semicircle
        entry& en = add(out, 14, "largest square inscribed in a semicircle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g);
            in.points = {{"A", a}, {"B", rand_pt_sep(g, {a}, 2.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            // Fifth part of the diameter, then the geometric mean.
            ref C5 = kit::extend_chain(e, A, B, 5);
            auto dia = kit::circle_on_diameter(e, A, C5);
            ref ch = e.meet(dia.circ, e.draw(A, e.sp(A, B)), branch::left);
            ref Ft = kit::foot_of_perpendicular(e, B, A, ch);
            ref G5 = kit::cut_toward(e, A, B, e.sp(A, Ft));
            span side = kit::geometric_mean(e, e.sp(A, B), e.sp(A, G5));
            return {{}, {{"side_len", side}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double d = distance(in.pt("A"), in.pt("B"));
            ck.scalar_eq("side_len", out.scalar("side_len"), d / std::sqrt(5.0));
            return ck.result();
        };
    }
}

void register_p2_15_22(std::vector<entry>& out) {
    { // P2.15 locus of points with a fixed squares-to-area ratio
        entry& en = add(out, 15, "circle of points with fixed ratio of squared sides to area");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"R", param_kind::scalar},
                     {"S", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g);
            point b = rand_pt_sep(g, {a}, 2.0);
            const double s = g.uniform(0.5, 2.0);
            in.points = {{"A", a}, {"B", b}};
            in.scalars = {{"R", s * g.uniform(4.1, 12.0)}, {"S", s}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), B = arg(a, "B");
            ref E = kit::midpoint(e, A, B, 1);
            span q_ab = kit::len_half(e, kit::len_half(e, e.sp(A, B)));
            span ef = kit::fourth_proportional(e, spans.at("S"), spans.at("R"), q_ab);
            ref F = kit::perpendicular_at(e, E, B, ef, in.br("side"), 0);
            ref F2 = kit::midpoint(e, E, F, 1); // the locus centre
            auto th = kit::circle_on_diameter(e, E, F2);
            ref Cp = e.meet(th.circ, e.draw(E, e.sp(E, B)), branch::left);
            span rho = e.sp(F2, Cp); // sqrt(beta^2 - c^2/4)
            ref locus = e.draw(F2, rho);
            ref G = e.meet(locus, e.draw(E, e.sp(E, F2)), branch::left);
            return {{{"F", F2}, {"G", G}}, {{"radius", rho}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B");
            const double c = distance(a, b);
            const double ratio = in.scalar("R") / in.scalar("S");
            const double beta = ratio * c / 8.0;
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            point u = (1.0 / c) * (b - a);
            point center = 0.5 * (a + b) + (s * beta) * perp(u);
            ck.point_eq("F", out.pt("F"), center);
            ck.scalar_eq("radius", out.scalar("radius"),
                         std::sqrt(beta * beta - c * c / 4.0));
            // Any point of the locus realises the ratio.
            point gp = out.pt("G");
            const double numer = distance(gp, a) * distance(gp, a) +
                                 distance(gp, b) * distance(gp, b);
            const double denom = triangle_area(a, b, gp);
            ck.relation("ratio at G", std::fabs(numer / denom - ratio), ratio);
            return ck.result();
        };
    }
    { // P2.16 point between two parallels enclosing a given rectangle
        entry& en = add(out, 16, "point whose two slanted reaches enclose a given rectangle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"angF", param_kind::scalar},
                     {"angG", param_kind::scalar}, {"ae", param_kind::scalar},
                     {"bk", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g, -6, 6);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            point u = dir_of(th);
            point b = a + g.uniform(3.0, 7.0) * u;
            const double w = g.uniform(1.0, 4.0);
            point c = a + w * perp(u) - 1.5 * u;
            point d = b + w * perp(u) + 1.5 * u;
            in.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
            in.scalars = {{"angF", g.uniform(0.5, std::numbers::pi - 0.5)},
                          {"angG", g.uniform(0.5, std::numbers::pi - 0.5)},
                          {"ae", g.uniform(1.0, 4.0)},
                          {"bk", g.uniform(1.0, 4.0)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            auto secF = synth_sector(e, "f", point{0.0, -60.0}, 0.0, in.scalar("angF"));
            auto secG = synth_sector(e, "g", point{0.0, -65.0}, 0.0, in.scalar("angG"));
            ref FtF = kit::foot_of_perpendicular(e, secF.ray_b, secF.vertex, secF.ray_a);
            ref FtG = kit::foot_of_perpendicular(e, secG.ray_b, secG.vertex, secG.ray_a);
            span sinF = e.sp(FtF, secF.ray_b);
            span sinG = e.sp(FtG, secG.ray_b);
            span unitF = e.sp(secF.vertex, secF.ray_a);
            span u1 = kit::fourth_proportional(e, unitF, spans.at("ae"), sinF);
            span u2 = kit::fourth_proportional(e, e.sp(secG.vertex, secG.ray_a),
                                               spans.at("bk"), sinG);
            span gmk = kit::geometric_mean(e, u1, u2);
            ref W1 = kit::foot_of_perpendicular(e, C, A, B);
            span w_sp = e.sp(C, W1);
            span half_w = kit::len_half(e, w_sp);
            span hyp = kit::len_hyp(e, half_w, gmk);
            span h1 = kit::len_sub(e, hyp, half_w);
            const bool c_left = side_of(e.at(C), e.at(A), e.at(B), e.tol()) == side::left;
            ref H = kit::perpendicular_at(e, W1, B, h1, c_left ? branch::right : branch::left,
                                          0);
            span rho_i = kit::fourth_proportional(e, sinF, h1, unitF);
            circle_handle ci{e.draw(H, rho_i), H, rho_i};
            ref I = kit::line_circle(e, A, B, ci, in.br("side"));
            span h2 = kit::len_sum(e, h1, w_sp);
            span rho_d = kit::fourth_proportional(e, sinG, h2, e.sp(secG.vertex, secG.ray_a));
            circle_handle cd{e.draw(H, rho_d), H, rho_d};
            ref Dp = kit::line_circle(e, C, D, cd, in.br("side"));
            return {{{"H", H}, {"I", I}, {"Dp", Dp}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B"), c = in.pt("C");
            point u = (1.0 / distance(a, b)) * (b - a);
            const double w = std::fabs(cross(u, c - a));
            const double kk = in.scalar("ae") * in.scalar("bk") *
                              std::sin(in.scalar("angF")) * std::sin(in.scalar("angG"));
            const double h1 = -w / 2.0 + std::sqrt(w * w / 4.0 + kk);
            point h = out.pt("H"), i = out.pt("I"), dp = out.pt("Dp");
            ck.relation("H depth", std::fabs(std::fabs(cross(u, h - a)) - h1), w);
            ck.relation("I on AB", std::fabs(cross(u, i - a)), 1.0);
            ck.relation("Dp on CD", std::fabs(std::fabs(cross(u, dp - a)) - w), w);
            const double prod = distance(h, i) * distance(h, dp);
            ck.relation("rectangle area",
                        std::fabs(prod - in.scalar("ae") * in.scalar("bk")),
                        in.scalar("ae") * in.scalar("bk"));
            ck.relation("angle at I",
                        std::fabs(std::fabs(cross(u, (1.0 / distance(h, i)) * (i - h))) -
                                  std::sin(in.scalar("angF"))));
            return ck.result();
        };
    }
    { // P2.17 centre of gravity of an annulus
        entry& en = add(out, 17, "centre of gravity of a circular ring piece");
        en.params = {{"E", param_kind::pt}, {"K", param_kind::pt}, {"R", param_kind::scalar},
                     {"rho", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point ec = rand_pt(g, -5, 5);
                const double R = g.uniform(2.5, 6.0);
                const double rho = g.uniform(0.4, R - 1.2);
                point kc = rand_pt_sep(g, {ec}, 0.5);
                if (distance(ec, kc) + rho > R - 0.3) continue;
                in.points = {{"E", ec}, {"K", kc}};
                in.scalars = {{"R", R}, {"rho", rho}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref E = arg(a, "E"), K = arg(a, "K");
            circle_handle big{e.draw(E, spans.at("R")), E, spans.at("R")};
            circle_handle small{e.draw(K, spans.at("rho")), K, spans.at("rho")};
            // Diameter of the big circle along the line of centres.
            ref Apt = kit::line_circle(e, K, E, big, branch::left);
            ref Cpt = kit::line_circle(e, K, E, big, branch::right);
            if (distance(e.at(Apt), e.at(K)) < distance(e.at(Cpt), e.at(K)))
                std::swap(Apt, Cpt); // A is the far end, C points toward K
            ref S1 = kit::line_circle(e, E, K, small, branch::left);
            ref S2 = kit::line_circle(e, E, K, small, branch::right);
            ref D = e.meet(big.circ, e.draw(Cpt, e.sp(S1, S2)), branch::left);
            span ad = e.sp(Apt, D); // 2 sqrt(R^2 - rho^2) by Thales
            span dl = kit::third_proportional(e, ad, e.sp(S1, S2));
            span em = kit::fourth_proportional(e, ad, e.sp(K, E), dl);
            ref M = kit::lay_dir(e, E, K, em, -1);
            return {{{"M", M}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point ec = in.pt("E"), kc = in.pt("K");
            const double R = in.scalar("R"), rho = in.scalar("rho");
            const double k = distance(ec, kc);
            point expect = ec + (k * rho * rho / (R * R - rho * rho)) *
                                    ((1.0 / k) * (ec - kc));
            ck.point_eq("M", out.pt("M"), expect);
            return ck.result();
        };
    }
    { // P2.18 three-point resection
        entry& en = add(out, 18, "observer position from two angles at three landmarks");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"alpha", param_kind::scalar}, {"beta", param_kind::scalar},
                     {"sideAB", param_kind::br}, {"sideBC", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 2.5),
                      c = rand_pt_sep(g, {a, b}, 2.5);
                point ept = rand_pt_sep(g, {a, b, c}, 2.0);
                const double alpha = angle_at(ept, a, b);
                const double beta = angle_at(ept, b, c);
                if (alpha < 0.25 || alpha > std::numbers::pi - 0.25) continue;
                if (beta < 0.25 || beta > std::numbers::pi - 0.25) continue;
                tolerance tol = tolerance::with_scale(10.0);
                if (std::fabs(cross(b - a, c - a)) > 1e-9) {
                    try {
                        point cc = circumcenter_of(a, b, c, tol);
                        const double rr = distance(cc, a);
                        if (std::fabs(distance(ept, cc) - rr) < 0.25 * rr) continue;
                    } catch (const error&) {
                        // collinear landmarks never sit on a danger circle
                    }
                }
                if (side_of(ept, a, b, tol) == side::on) continue;
                if (side_of(ept, b, c, tol) == side::on) continue;
                in.points = {{"A", a}, {"B", b}, {"C", c}};
                in.scalars = {{"alpha", alpha}, {"beta", beta}};
                in.branches = {
                    {"sideAB", side_of(ept, a, b, tol) == side::left ? branch::left
                                                                     : branch::right},
                    {"sideBC", side_of(ept, b, c, tol) == side::left ? branch::left
                                                                     : branch::right}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            // Capacity circle over a chord for a given inscribed angle; the
            // centre sits away from the observer side at cot(angle) times the
            // half chord.
            auto capacity = [&](const ref& P, const ref& Q, double ang, branch obs_side) {
                ref mid = kit::midpoint(e, P, Q, 1);
                auto sec = synth_sector(e, std::string("c") + P + Q, point{0.0, -70.0}, 0.0,
                                        ang);
                ref Kc = kit::copy_angle(e, sec.ray_a, sec.vertex, sec.ray_b, P, Q,
                                         branch::left);
                ref L = kit::quarter_point(e, P, Kc, branch::left);
                ref M2 = kit::foot_of_perpendicular(e, L, P, Q);
                span R1 = kit::fourth_proportional(e, e.sp(P, M2), e.sp(P, L), e.sp(P, mid));
                point pu = e.at(P), qu = e.at(Q);
                point n = perp((1.0 / distance(pu, qu)) * (qu - pu));
                const double s_obs = obs_side == branch::left ? 1.0 : -1.0;
                // An acute angle is seen from the major arc, which lies on
                // the centre's side of the chord; cot flips it when obtuse.
                point w_target = 0.5 * (pu + qu) +
                                 (s_obs * (0.5 * distance(pu, qu)) / std::tan(ang)) * n;
                ref W = e.meet_toward(e.draw(P, R1), e.draw(Q, R1), w_target);
                return W;
            };
            ref W = capacity(A, B, in.scalar("alpha"), in.br("sideAB"));
            ref S = capacity(B, C, in.scalar("beta"), in.br("sideBC"));
            // Danger circle: the two capacity circles coincide.
            const double rw = distance(e.at(W), e.at(B));
            const double rs = distance(e.at(S), e.at(B));
            if (distance(e.at(W), e.at(S)) <= 1e3 * e.tol().eps() &&
                std::fabs(rw - rs) <= 1e3 * e.tol().eps())
                throw error(errc::danger_circle,
                            "landmarks and observer are concyclic; position indeterminate");
            ref cw = e.draw(W, e.sp(W, B));
            ref cs = e.draw(S, e.sp(S, B));
            ref E = e.meet_away(cw, cs, e.at(B));
            if (distance(e.at(E), e.at(B)) <= 1e3 * e.tol().eps())
                throw error(errc::no_solution, "capacity circles touch at the middle landmark");
            return {{{"E", E}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point ept = out.pt("E");
            const double got_alpha = angle_at(ept, in.pt("A"), in.pt("B"));
            const double got_beta = angle_at(ept, in.pt("B"), in.pt("C"));
            ck.relation("angle AEB", std::fabs(got_alpha - in.scalar("alpha")));
            ck.relation("angle BEC", std::fabs(got_beta - in.scalar("beta")));
            return ck.result();
        };
    }
    { // P2.19 perspective image of a floor point
        entry& en = add(out, 19, "perspective image of a point on the floor");
        en.params = {{"A", param_kind::pt}, {"V", param_kind::pt}, {"T", param_kind::pt},
                     {"S", param_kind::pt}, {"h", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point v = rand_pt(g), t = rand_pt_sep(g, {v}, 3.0);
                point u = (1.0 / distance(v, t)) * (t - v);
                point n = perp(u);
                point aP = v + g.uniform(-2.0, 5.0) * u + g.uniform(0.8, 5.0) * n;
                point s = v + g.uniform(-2.0, 5.0) * u - g.uniform(0.8, 5.0) * n;
                if (std::fabs(dot(aP - s, u)) < 0.4) continue; // keep A off the sight line
                in.points = {{"A", aP}, {"V", v}, {"T", t}, {"S", s}};
                in.scalars = {{"h", g.uniform(1.0, 4.0)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), V = arg(a, "V"), T = arg(a, "T"), S = arg(a, "S");
            ref G = kit::foot_of_perpendicular(e, A, V, T);
            ref W = kit::foot_of_perpendicular(e, S, V, T);
            if (distance(e.at(S), e.at(W)) <= e.tol().eps())
                throw error(errc::observer_on_glass, "observer stands on the glass base");
            span den = kit::len_sum(e, e.sp(S, W), e.sp(A, G));
            ref H;
            if (distance(e.at(G), e.at(W)) <= 10.0 * e.tol().eps()) {
                H = G; // the point faces the observer square-on
            } else {
                span gh = kit::fourth_proportional(e, den, e.sp(A, G), e.sp(G, W));
                H = kit::lay_along(e, G, W, gh);
            }
            span hi = kit::fourth_proportional(e, den, e.sp(A, G), spans.at("h"));
            const bool s_left = side_of(e.at(S), e.at(V), e.at(T), e.tol()) == side::left;
            point u = e.at(T) - e.at(V);
            point n_up = perp((1.0 / norm(u)) * u);
            if (!s_left) n_up = -1.0 * n_up;
            ref I = kit::perpendicular_at_toward(e, H, T, hi,
                                                 e.at(H) + e.length(hi) * n_up);
            return {{{"H", H}, {"I", I}}, {{"offset", e.sp(G, H)}, {"height", hi}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), v = in.pt("V"), t = in.pt("T"), s = in.pt("S");
            point u = (1.0 / distance(v, t)) * (t - v);
            point g = v + dot(aP - v, u) * u;
            point w = v + dot(s - v, u) * u;
            const double ag = distance(aP, g), sw = distance(s, w);
            const double gh = distance(g, w) * ag / (sw + ag);
            const double hi = in.scalar("h") * ag / (sw + ag);
            ck.scalar_eq("offset", out.scalar("offset"), gh);
            ck.scalar_eq("height", out.scalar("height"), hi);
            point h_exp = distance(g, w) < 1e-12 ? g : on_ray(g, w, gh);
            ck.point_eq("H", out.pt("H"), h_exp);
            point n_up = side_of(s, v, t, tolerance_for(in)) == side::left ? perp(u)
                                                                           : -1.0 * perp(u);
            ck.point_eq("I", out.pt("I"), h_exp + hi * n_up);
            return ck.result();
        };
    }
    { // P2.20 perspective image of a floor triangle
        entry& en = add(out, 20, "perspective images of three floor points");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"V", param_kind::pt}, {"T", param_kind::pt}, {"S", param_kind::pt},
                     {"h", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point v = rand_pt(g), t = rand_pt_sep(g, {v}, 3.0);
                point u = (1.0 / distance(v, t)) * (t - v);
                point n = perp(u);
                auto floor_pt = [&] {
                    return v + g.uniform(-2.0, 5.0) * u + g.uniform(0.8, 5.0) * n;
                };
                point aP = floor_pt(), b = floor_pt(), c = floor_pt();
                point s = v + g.uniform(-2.0, 5.0) * u - g.uniform(0.8, 5.0) * n;
                bool ok = true;
                for (point p : {aP, b, c})
                    if (std::fabs(dot(p - s, u)) < 0.4) ok = false;
                if (!ok) continue;
                in.points = {{"A", aP}, {"B", b}, {"C", c}, {"V", v}, {"T", t}, {"S", s}};
                in.scalars = {{"h", g.uniform(1.0, 4.0)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref V = arg(a, "V"), T = arg(a, "T"), S = arg(a, "S");
            ref W = kit::foot_of_perpendicular(e, S, V, T);
            const bool s_left = side_of(e.at(S), e.at(V), e.at(T), e.tol()) == side::left;
            point u_gl = e.at(T) - e.at(V);
            point n_up = perp((1.0 / norm(u_gl)) * u_gl);
            if (!s_left) n_up = -1.0 * n_up;
            auto image = [&](const ref& P) {
                ref G = kit::foot_of_perpendicular(e, P, V, T);
                span den = kit::len_sum(e, e.sp(S, W), e.sp(P, G));
                ref H;
                if (distance(e.at(G), e.at(W)) <= 10.0 * e.tol().eps()) {
                    H = G;
                } else {
                    span gh = kit::fourth_proportional(e, den, e.sp(P, G), e.sp(G, W));
                    H = kit::lay_along(e, G, W, gh);
                }
                span hi = kit::fourth_proportional(e, den, e.sp(P, G), spans.at("h"));
                return kit::perpendicular_at_toward(e, H, T, hi,
                                                    e.at(H) + e.length(hi) * n_up);
            };
            ref I = image(arg(a, "A"));
            ref M = image(arg(a, "B"));
            ref F = image(arg(a, "C"));
            return {{{"I", I}, {"M", M}, {"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point v = in.pt("V"), t = in.pt("T"), s = in.pt("S");
            point u = (1.0 / distance(v, t)) * (t - v);
            point w = v + dot(s - v, u) * u;
            const double sw = distance(s, w);
            point n_up = side_of(s, v, t, tolerance_for(in)) == side::left ? perp(u)
                                                                           : -1.0 * perp(u);
            auto image = [&](point p) {
                point g = v + dot(p - v, u) * u;
                const double ag = distance(p, g);
                point h = distance(g, w) < 1e-12 ? g : on_ray(g, w, distance(g, w) * ag /
                                                                       (sw + ag));
                return h + (in.scalar("h") * ag / (sw + ag)) * n_up;
            };
            ck.point_eq("I", out.pt("I"), image(in.pt("A")));
            ck.point_eq("M", out.pt("M"), image(in.pt("B")));
            ck.point_eq("F", out.pt("F"), image(in.pt("C")));
            return ck.result();
        };
    }
    { // P2.21 perspective image of an elevated point
        entry& en = add(out, 21, "perspective image of a point raised above the floor");
        en.params = {{"A", param_kind::pt}, {"V", param_kind::pt}, {"T", param_kind::pt},
                     {"S", param_kind::pt}, {"h", param_kind::scalar},
                     {"elev", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point v = rand_pt(g), t = rand_pt_sep(g, {v}, 3.0);
                point u = (1.0 / distance(v, t)) * (t - v);
                point n = perp(u);
                point aP = v + g.uniform(-2.0, 5.0) * u + g.uniform(0.8, 5.0) * n;
                point s = v + g.uniform(-2.0, 5.0) * u - g.uniform(0.8, 5.0) * n;
                if (std::fabs(dot(aP - s, u)) < 0.4) continue;
                in.points = {{"A", aP}, {"V", v}, {"T", t}, {"S", s}};
                in.scalars = {{"h", g.uniform(1.0, 4.0)}, {"elev", g.uniform(0.5, 3.0)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), V = arg(a, "V"), T = arg(a, "T"), S = arg(a, "S");
            ref G = kit::foot_of_perpendicular(e, A, V, T);
            ref W = kit::foot_of_perpendicular(e, S, V, T);
            span den = kit::len_sum(e, e.sp(S, W), e.sp(A, G));
            ref H;
            if (distance(e.at(G), e.at(W)) <= 10.0 * e.tol().eps()) {
                H = G;
            } else {
                span gh = kit::fourth_proportional(e, den, e.sp(A, G), e.sp(G, W));
                H = kit::lay_along(e, G, W, gh);
            }
            span hi = kit::fourth_proportional(e, den, e.sp(A, G), spans.at("h"));
            const bool s_left = side_of(e.at(S), e.at(V), e.at(T), e.tol()) == side::left;
            point u = e.at(T) - e.at(V);
            point n_up = perp((1.0 / norm(u)) * u);
            if (!s_left) n_up = -1.0 * n_up;
            ref I = kit::perpendicular_at_toward(e, H, T, hi, e.at(H) + e.length(hi) * n_up);
            span ip = kit::fourth_proportional(e, den, spans.at("elev"), e.sp(S, W));
            ref X = kit::parallel_transfer(e, I, T, V); // parallel to the base through I
            ref P = kit::perpendicular_at_toward(e, I, X, ip, e.at(I) + e.length(ip) * n_up);
            return {{{"I", I}, {"P", P}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), v = in.pt("V"), t = in.pt("T"), s = in.pt("S");
            point u = (1.0 / distance(v, t)) * (t - v);
            point g = v + dot(aP - v, u) * u;
            point w = v + dot(s - v, u) * u;
            const double ag = distance(aP, g), sw = distance(s, w);
            point n_up = side_of(s, v, t, tolerance_for(in)) == side::left ? perp(u)
                                                                           : -1.0 * perp(u);
            point h = distance(g, w) < 1e-12
                          ? g
                          : on_ray(g, w, distance(g, w) * ag / (sw + ag));
            point i_exp = h + (in.scalar("h") * ag / (sw + ag)) * n_up;
            ck.point_eq("I", out.pt("I"), i_exp);
            ck.point_eq("P", out.pt("P"),
                        i_exp + (in.scalar("elev") * sw / (sw + ag)) * n_up);
            return ck.result();
        };
    }
    { // P2.22 perspective image of a cube standing on the glass base
        entry& en = add(out, 22, "perspective image of a cube against the glass");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"S", param_kind::pt}, {"h", param_kind::scalar}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                // Base square ABCD with side CD on the glass line.
                point d = rand_pt(g, -5, 5);
                const double s = g.uniform(1.5, 4.0);
                const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
                point u = dir_of(th);
                point c = d + s * u;
                point aP = d + s * perp(u);
                point b = c + s * perp(u);
                point so = d + g.uniform(-1.0, s + 1.0) * u - g.uniform(1.0, 5.0) * perp(u);
                if (std::fabs(dot(aP - so, u)) < 0.4 || std::fabs(dot(b - so, u)) < 0.4)
                    continue;
                in.points = {{"A", aP}, {"B", b}, {"C", c}, {"D", d}, {"S", so}};
                in.scalars = {{"h", g.uniform(1.5, 4.0)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            auto spans = lay_instance_scalars(e, in);
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            ref S = arg(a, "S");
            span side_len = e.sp(C, D);
            ref W = kit::foot_of_perpendicular(e, S, D, C);
            const bool s_left = side_of(e.at(S), e.at(D), e.at(C), e.tol()) == side::left;
            point u_gl = e.at(C) - e.at(D);
            point n_up = perp((1.0 / norm(u_gl)) * u_gl);
            if (!s_left) n_up = -1.0 * n_up;
            auto image = [&](const ref& P) { // image of a floor point over D->C
                ref G = kit::foot_of_perpendicular(e, P, D, C);
                span den = kit::len_sum(e, e.sp(S, W), e.sp(P, G));
                ref H;
                if (distance(e.at(G), e.at(W)) <= 10.0 * e.tol().eps()) {
                    H = G;
                } else {
                    span gh = kit::fourth_proportional(e, den, e.sp(P, G), e.sp(G, W));
                    H = kit::lay_along(e, G, W, gh);
                }
                span hi = kit::fourth_proportional(e, den, e.sp(P, G), spans.at("h"));
                ref I = kit::perpendicular_at_toward(e, H, C, hi,
                                                     e.at(H) + e.length(hi) * n_up);
                span ip = kit::fourth_proportional(e, den, side_len, e.sp(S, W));
                ref X = kit::parallel_transfer(e, I, C, D);
                ref P2 = kit::perpendicular_at_toward(e, I, X, ip,
                                                      e.at(I) + e.length(ip) * n_up);
                return std::pair<ref, ref>{I, P2};
            };
            auto [I, P] = image(A);
            auto [M, N] = image(B);
            const double sdv = e.length(side_len);
            ref Ct = kit::perpendicular_at_toward(e, C, D, side_len, e.at(C) + sdv * n_up);
            ref Dt = kit::perpendicular_at_toward(e, D, C, side_len, e.at(D) + sdv * n_up);
            return {{{"I", I}, {"P", P}, {"M", M}, {"N", N}, {"Ct", Ct}, {"Dt", Dt}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C"), d = in.pt("D"),
                  s = in.pt("S");
            const double sd = distance(c, d);
            point u = (1.0 / sd) * (c - d);
            point w = d + dot(s - d, u) * u;
            const double sw = distance(s, w);
            point n_up = side_of(s, d, c, tolerance_for(in)) == side::left ? perp(u)
                                                                           : -1.0 * perp(u);
            auto base_image = [&](point p) {
                point g = d + dot(p - d, u) * u;
                const double ag = distance(p, g);
                point h = distance(g, w) < 1e-12
                              ? g
                              : on_ray(g, w, distance(g, w) * ag / (sw + ag));
                return std::pair<point, double>{
                    h + (in.scalar("h") * ag / (sw + ag)) * n_up, ag};
            };
            auto [i_exp, ag_a] = base_image(aP);
            auto [m_exp, ag_b] = base_image(b);
            ck.point_eq("I", out.pt("I"), i_exp);
            ck.point_eq("M", out.pt("M"), m_exp);
            ck.point_eq("P", out.pt("P"), i_exp + (sd * sw / (sw + ag_a)) * n_up);
            ck.point_eq("N", out.pt("N"), m_exp + (sd * sw / (sw + ag_b)) * n_up);
            ck.point_eq("Ct", out.pt("Ct"), c + sd * n_up);
            ck.point_eq("Dt", out.pt("Dt"), d + sd * n_up);
            return ck.result();
        };
    }
    { // P2.23 and P2.24: the sundial constructions
        entry& en = add(out, 23, "horizontal sundial hour lines");
        en.supported = false;
        en.unsupported_reason =
            "the sundial layout depends on astronomical conventions carried by the plates, "
            "not by the construction text";
        en.check = [](const instance&, const outputs&) { return check_result{}; };
    }
    {
        entry& en = add(out, 24, "declining vertical sundial hour lines");
        en.supported = false;
        en.unsupported_reason =
            "the sundial layout depends on astronomical conventions carried by the plates, "
            "not by the construction text";
        en.check = [](const instance&, const outputs&) { return check_result{}; };
    }
}

} // namespace

void register_part2(std::vector<entry>& out) {
    register_p2_01_06(out);
    register_p2_07_14(out);
    register_p2_15_22(out);
}

} // namespace edc::detail
