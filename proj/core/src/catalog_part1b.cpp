#include "catalog_detail.hpp"

#include "edc/executor.hpp"

// First Part, propositions 32-54: sector bisection, circles through points,
// similar figures, the golden section and pentagon family, and the closing
// application-of-areas constructions.

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

branch rand_branch(rng& g) { return g.coin() ? branch::left : branch::right; }

double signed_angle(point from, point to1, point to2) {
    point u = to1 - from, v = to2 - from;
    return std::atan2(cross(u, v), dot(u, v));
}

// Triangle with healthy separations, area and corner angles.
instance triangle_instance(rng& g, double min_angle = 0.3) {
    for (;;) {
        instance in;
        point a = rand_pt(g), b = rand_pt_sep(g, {a}, 2.0), c = rand_pt_sep(g, {a, b}, 2.0);
        if (triangle_area(a, b, c) < 1.5) continue;
        if (angle_at(a, b, c) < min_angle || angle_at(b, a, c) < min_angle ||
            angle_at(c, a, b) < min_angle)
            continue;
        in.points = {{"A", a}, {"B", b}, {"C", c}};
        return in;
    }
}

instance circle_instance(rng& g) {
    instance in;
    point o = rand_pt(g, -6, 6);
    const double r = g.uniform(1.0, 5.0);
    const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
    in.points = {{"O", o}, {"P", o + point{r * std::cos(th), r * std::sin(th)}}};
    return in;
}

// Regular pentagon vertices about a sampled center.
instance pentagon_instance(rng& g) {
    instance in;
    point o = rand_pt(g, -5, 5);
    const double r = g.uniform(1.5, 5.0);
    const double th0 = g.uniform(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < 5; ++k) {
        const double th = th0 + k * 2.0 * std::numbers::pi / 5.0;
        in.points.emplace_back("C" + std::to_string(k + 1),
                               o + point{r * std::cos(th), r * std::sin(th)});
    }
    return in;
}

double polygon_area(const std::vector<point>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const point& p = poly[i];
        const point& q = poly[(i + 1) % poly.size()];
        s += cross(p, q);
    }
    return 0.5 * std::fabs(s);
}

// Square-root-of-area span of triangle (P,Q,R) via altitude + mean.
span sqrt_area_span(expansion& e, const ref& P, const ref& Q, const ref& R) {
    ref F = kit::foot_of_perpendicular(e, R, P, Q);
    span h = e.sp(R, F);
    span half_h = kit::len_half(e, h);
    return kit::geometric_mean(e, e.sp(P, Q), half_h);
}

void register_p1_32_39(std::vector<entry>& out) {
    { // P1.32 bisect an angle or sector
        entry& en = add(out, 32, "angle or sector halved");
        en.variants = 2;
        en.params = {{"B", param_kind::pt}, {"A", param_kind::pt}, {"D", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g);
                point b = rand_pt_sep(g, {a}, 1.0);
                point d = rand_pt_sep(g, {a, b}, 1.0);
                const double th = angle_at(a, b, d);
                if (th < 0.2 || th > std::numbers::pi - 0.2) continue;
                in.points = {{"B", b}, {"A", a}, {"D", d}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int variant) -> expand_outputs {
            return {{{"C", kit::bisect_sector(e, arg(a, "B"), arg(a, "A"), arg(a, "D"),
                                              variant)}},
                    {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double half = 0.5 * signed_angle(in.pt("A"), in.pt("B"), in.pt("D"));
            ck.point_eq("C", out.pt("C"), rotate_about(in.pt("B"), in.pt("A"), half));
            return ck.result();
        };
    }
    { // P1.33 circle through three points
        entry& en = add(out, 33, "circle through three given points");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 1.0),
                      c = rand_pt_sep(g, {a, b}, 1.0);
                if (triangle_area(a, b, c) < 1e-3) continue;
                in.points = {{"A", a}, {"B", b}, {"C", c}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            auto res = kit::circumcenter(e, arg(a, "A"), arg(a, "B"), arg(a, "C"));
            return {{{"E", res.center}}, {{"radius", res.radius}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            tolerance tol = tolerance_for(in);
            point o = circumcenter_of(in.pt("A"), in.pt("B"), in.pt("C"), tol);
            ck.point_eq("E", out.pt("E"), o);
            ck.scalar_eq("radius", out.scalar("radius"), distance(o, in.pt("A")));
            return ck.result();
        };
    }
    { // P1.34 whole circle from an arc
        entry& en = add(out, 34, "circle completed from an arc");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point o = rand_pt(g, -6, 6);
            const double r = g.uniform(1.0, 5.0);
            const double t0 = g.uniform(0.0, 2.0 * std::numbers::pi);
            const double t1 = t0 + g.uniform(0.4, 1.8);
            const double t2 = t1 + g.uniform(0.4, 1.8);
            auto on = [&](double t) { return o + point{r * std::cos(t), r * std::sin(t)}; };
            in.points = {{"A", on(t0)}, {"C", on(t1)}, {"B", on(t2)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            auto res = kit::circumcenter(e, arg(a, "A"), arg(a, "B"), arg(a, "C"));
            e.draw(res.center, res.radius);
            return {{{"E", res.center}}, {{"radius", res.radius}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            tolerance tol = tolerance_for(in);
            point o = circumcenter_of(in.pt("A"), in.pt("B"), in.pt("C"), tol);
            ck.point_eq("E", out.pt("E"), o);
            ck.scalar_eq("radius", out.scalar("radius"), distance(o, in.pt("A")));
            return ck.result();
        };
    }
    { // P1.35 bisect an arc
        entry& en = add(out, 35, "arc of a circle halved");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"O", param_kind::pt},
                     {"r", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point o = rand_pt(g, -6, 6);
                const double r = g.uniform(1.0, 5.0);
                const double t0 = g.uniform(0.0, 2.0 * std::numbers::pi);
                const double dt = g.uniform(0.3, std::numbers::pi - 0.3);
                auto on = [&](double t) { return o + point{r * std::cos(t), r * std::sin(t)}; };
                in.points = {{"A", on(t0)}, {"B", on(t0 + dt)}, {"O", o}};
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
            ref C = kit::bisect_arc(e, arg(a, "A"), arg(a, "B"), k, in.br("side"));
            return {{{"C", C}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double half = 0.5 * signed_angle(in.pt("O"), in.pt("A"), in.pt("B"));
            point mid = rotate_about(in.pt("A"), in.pt("O"), half);
            point expect = in.br("side") == branch::left ? mid
                                                         : in.pt("O") + (in.pt("O") - mid);
            ck.point_eq("C", out.pt("C"), expect);
            return ck.result();
        };
    }
    { // P1.36 similar triangle inscribed in a circle
        entry& en = add(out, 36, "triangle similar to a given one inscribed in a circle");
        en.variants = 2;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in = triangle_instance(g);
            point o = rand_pt(g, -6, 6);
            const double r = g.uniform(1.0, 5.0);
            const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            in.points.emplace_back("O", o);
            in.points.emplace_back("P", o + point{r * std::cos(th), r * std::sin(th)});
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int variant) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref O = arg(a, "O"), P = arg(a, "P");
            span r = e.sp(O, P);
            ref k = e.draw(O, r);
            const double beta = angle_at(e.at(B), e.at(A), e.at(C));
            const double gamma = angle_at(e.at(C), e.at(A), e.at(B));
            const double s = cross(e.at(B) - e.at(A), e.at(C) - e.at(A)) > 0 ? 1.0 : -1.0;
            point tb = rotate_about(e.at(P), e.at(O), s * 2.0 * gamma);
            point tc = rotate_about(e.at(P), e.at(O), -s * 2.0 * beta);
            ref VB, VC;
            if (variant == 1) {
                auto cc = kit::circumcenter(e, A, B, C);
                span chord_ab = kit::fourth_proportional(e, cc.radius, e.sp(A, B), r);
                span chord_ac = kit::fourth_proportional(e, cc.radius, e.sp(A, C), r);
                VB = e.meet_toward(k, e.draw(P, chord_ab), tb);
                VC = e.meet_toward(k, e.draw(P, chord_ac), tc);
            } else {
                // Chords from the doubled altitude feet of copied sectors.
                ref N = kit::erect_direction(e, O, P, branch::left);
                auto chord_for = [&](const ref& v1, const ref& vx, const ref& v2) {
                    ref K = kit::copy_angle(e, v1, vx, v2, P, N, branch::left);
                    ref F = kit::foot_of_perpendicular(e, K, P, O);
                    span q = kit::fourth_proportional(e, e.sp(P, K), e.sp(P, F), e.sp(P, O));
                    return kit::len_scale(e, q, 2);
                };
                span chord_b = chord_for(A, C, B); // 2r sin(gamma)
                span chord_c = chord_for(A, B, C); // 2r sin(beta)
                VB = e.meet_toward(k, e.draw(P, chord_b), tb);
                VC = e.meet_toward(k, e.draw(P, chord_c), tc);
            }
            return {{{"VA", P}, {"VB", VB}, {"VC", VC}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double beta = angle_at(in.pt("B"), in.pt("A"), in.pt("C"));
            const double gamma = angle_at(in.pt("C"), in.pt("A"), in.pt("B"));
            const double s =
                cross(in.pt("B") - in.pt("A"), in.pt("C") - in.pt("A")) > 0 ? 1.0 : -1.0;
            ck.point_eq("VA", out.pt("VA"), in.pt("P"));
            ck.point_eq("VB", out.pt("VB"),
                        rotate_about(in.pt("P"), in.pt("O"), s * 2.0 * gamma));
            ck.point_eq("VC", out.pt("VC"),
                        rotate_about(in.pt("P"), in.pt("O"), -s * 2.0 * beta));
            // Similarity: the inscribed triangle carries the same angles.
            ck.relation("angle at VA",
                        std::fabs(angle_at(out.pt("VA"), out.pt("VB"), out.pt("VC")) -
                                  angle_at(in.pt("A"), in.pt("B"), in.pt("C"))));
            return ck.result();
        };
    }
    { // P1.37 similar triangle circumscribed about a circle
        entry& en = add(out, 37, "triangle similar to a given one circumscribed about a circle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"O", param_kind::pt}, {"W", param_kind::pt}, {"r", param_kind::scalar},
                     {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = triangle_instance(g, 0.45);
            point o = rand_pt(g, -6, 6);
            in.points.emplace_back("O", o);
            in.points.emplace_back("W", rand_pt_sep(g, {o}, 1.0));
            in.scalars = {{"r", g.uniform(1.0, 4.0)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref O = arg(a, "O"), W = arg(a, "W");
            auto spans = lay_instance_scalars(e, in);
            span r = spans.at("r");
            const double rv = e.length(r);
            const double alpha = angle_at(e.at(A), e.at(B), e.at(C));
            const double beta = angle_at(e.at(B), e.at(A), e.at(C));
            const double gamma = angle_at(e.at(C), e.at(A), e.at(B));
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            const double th0 = std::atan2(e.at(W).y - e.at(O).y, e.at(W).x - e.at(O).x);
            auto dir = [&](double t) { return point{std::cos(t), std::sin(t)}; };

            // Straight-angle complements of the triangle's corners, copied at
            // the centre on either side of the reference ray O->W.
            ref Or = kit::lay_along(e, O, W, r);
            ref Aext = kit::antipode(e, A, B); // ray A->Aext makes pi - alpha with A->C
            ref Fa = kit::copy_angle(e, Aext, A, C, O, W,
                                     s > 0 ? branch::left : branch::right);
            ref Ma = kit::lay_along(e, O, Fa, r);
            ref Bext = kit::antipode(e, B, A);
            ref Fb = kit::copy_angle(e, Bext, B, C, O, W,
                                     s > 0 ? branch::right : branch::left);
            ref Mb = kit::lay_along(e, O, Fb, r);

            // Tangent length at a corner: bisect the copied sector, drop a
            // foot, take the fourth proportional.
            auto tangent_len = [&](const ref& armpt) {
                ref Pb = kit::bisect_sector(e, armpt, O, Or);
                ref Wf = kit::foot_of_perpendicular(e, Pb, O, Or);
                return kit::fourth_proportional(e, e.sp(O, Wf), e.sp(Wf, Pb), e.sp(O, Or));
            };
            span tA = tangent_len(Ma); // r cot(alpha/2)
            span tB = tangent_len(Mb); // r cot(beta/2)

            point va_target = e.at(O) + (rv / std::sin(alpha / 2.0)) *
                                            dir(th0 + s * (std::numbers::pi - alpha) / 2.0);
            point vb_target = e.at(O) + (rv / std::sin(beta / 2.0)) *
                                            dir(th0 - s * (std::numbers::pi - beta) / 2.0);
            ref VA = e.meet_toward(e.draw(Or, tA), e.draw(Ma, tA), va_target);
            ref VB = e.meet_toward(e.draw(Or, tB), e.draw(Mb, tB), vb_target);

            // Third tangent length: r^2 (tA + tB) / (tA tB - r^2).
            span sum = kit::len_sum(e, tA, tB);
            span prod_over_r = kit::fourth_proportional(e, r, tA, tB);
            span denom = kit::len_sub(e, prod_over_r, r);
            span tC = kit::fourth_proportional(e, denom, sum, r);
            span sAC = kit::len_sum(e, tA, tC);
            span sBC = kit::len_sum(e, tB, tC);
            const double tCv = rv / std::tan(gamma / 2.0);
            point vc_target = e.at(O) + std::sqrt(rv * rv + tCv * tCv) *
                                            dir(th0 + s * (std::numbers::pi +
                                                           (beta - alpha) / 2.0));
            ref VC = e.meet_toward(e.draw(VA, sAC), e.draw(VB, sBC), vc_target);
            return {{{"VA", VA}, {"VB", VB}, {"VC", VC}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point o = in.pt("O");
            const double r = in.scalar("r");
            point va = out.pt("VA"), vb = out.pt("VB"), vc = out.pt("VC");
            auto side_dist = [&](point p, point q) {
                return std::fabs(cross(q - p, o - p)) / distance(p, q);
            };
            ck.relation("side VA-VB tangent", std::fabs(side_dist(va, vb) - r), r);
            ck.relation("side VA-VC tangent", std::fabs(side_dist(va, vc) - r), r);
            ck.relation("side VB-VC tangent", std::fabs(side_dist(vb, vc) - r), r);
            ck.relation("angle at VA",
                        std::fabs(angle_at(va, vb, vc) -
                                  angle_at(in.pt("A"), in.pt("B"), in.pt("C"))));
            ck.relation("angle at VB",
                        std::fabs(angle_at(vb, va, vc) -
                                  angle_at(in.pt("B"), in.pt("A"), in.pt("C"))));
            ck.scalar_eq("|O VA|", distance(o, va),
                         r / std::sin(angle_at(in.pt("A"), in.pt("B"), in.pt("C")) / 2.0));
            return ck.result();
        };
    }
    { // P1.38 circle inscribed in a triangle
        entry& en = add(out, 38, "circle inscribed in a triangle");
        en.variants = 2;
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) { return triangle_instance(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int variant) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            if (variant == 1) {
                ref D = kit::foot_of_perpendicular(e, C, A, B);
                span ab = e.sp(A, B), bc = e.sp(B, C), ca = e.sp(C, A);
                span per = kit::len_sum(e, kit::len_sum(e, ab, bc), ca);
                span semi = kit::len_half(e, per);
                span half_ab = kit::len_half(e, ab);
                span rr = kit::fourth_proportional(e, semi, half_ab, e.sp(C, D));
                span t1 = kit::len_sum(e, ab, ca);
                span t2 = kit::len_sub(e, t1, bc);
                span tA = kit::len_half(e, t2); // tangent length from A
                ref E = kit::lay_along(e, A, B, tA);
                const bool cleft = side_of(e.at(C), e.at(A), e.at(B), e.tol()) == side::left;
                ref G = kit::perpendicular_at(e, E, B, rr, cleft ? branch::left : branch::right,
                                              0);
                return {{{"G", G}}, {{"radius", e.sp(G, E)}}};
            }
            // Second construction: two bisectors crossed.
            ref I = kit::lay_along(e, B, A, e.sp(B, C));
            ref L = kit::bisect_sector(e, I, B, C, 1);
            ref H = kit::lay_along(e, C, A, e.sp(C, B));
            ref K = kit::bisect_sector(e, H, C, B, 1);
            ref G = kit::line_line(e, B, L, C, K);
            ref P = kit::foot_of_perpendicular(e, G, B, C);
            return {{{"G", G}}, {{"radius", e.sp(G, P)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point a = in.pt("A"), b = in.pt("B"), c = in.pt("C");
            const double la = distance(b, c), lb = distance(a, c), lc = distance(a, b);
            const double per = la + lb + lc;
            point incenter = (1.0 / per) * (la * a + lb * b + lc * c);
            ck.point_eq("G", out.pt("G"), incenter);
            ck.scalar_eq("radius", out.scalar("radius"),
                         2.0 * triangle_area(a, b, c) / per);
            return ck.result();
        };
    }
    { // P1.39 golden section
        entry& en = add(out, 39, "segment divided in the golden section");
        en.params = {{"A", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g);
            in.points = {{"A", a}, {"C", rand_pt_sep(g, {a}, 1.0)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref G = kit::golden_point(e, arg(a, "A"), arg(a, "C"));
            return {{{"G", G}}, {{"gc", e.sp(G, arg(a, "C"))}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
            point a = in.pt("A"), c = in.pt("C");
            ck.point_eq("G", out.pt("G"), on_ray(c, a, phi * distance(a, c)));
            ck.scalar_eq("gc", out.scalar("gc"), phi * distance(a, c));
            // Defining relation: |CA| * |GA| = |GC|^2.
            const double ga = distance(out.pt("G"), a);
            const double gc = out.scalar("gc");
            ck.relation("|CA||GA| = |GC|^2", std::fabs(distance(c, a) * ga - gc * gc),
                        gc * gc);
            return ck.result();
        };
    }
}

void register_p1_40_46(std::vector<entry>& out) {
    { // P1.40 isosceles triangle with doubled base angles
        entry& en = add(out, 40, "isosceles triangle with base angles twice the apex");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g);
            in.points = {{"A", a}, {"B", rand_pt_sep(g, {a}, 1.0)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref C = kit::golden_point(e, B, A); // |CA| = phi |AB|
            ref base = e.draw(A, e.sp(A, B));
            ref cb = e.draw(B, e.sp(C, A));
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ref D = e.meet_toward(base, cb,
                                  rotate_about(e.at(B), e.at(A), s * std::numbers::pi / 5.0));
            return {{{"D", D}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double s = in.br("side") == branch::left ? 1.0 : -1.0;
            ck.point_eq("D", out.pt("D"),
                        rotate_about(in.pt("B"), in.pt("A"), s * std::numbers::pi / 5.0));
            const double apex = angle_at(in.pt("A"), in.pt("B"), out.pt("D"));
            const double base_angle = angle_at(in.pt("B"), in.pt("A"), out.pt("D"));
            ck.relation("base angle doubles apex", std::fabs(base_angle - 2.0 * apex));
            return ck.result();
        };
    }
    { // P1.41 regular pentagon in a circle
        entry& en = add(out, 41, "regular pentagon inscribed in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) { return circle_instance(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            span r = e.sp(O, P);
            ref k = e.draw(O, r);
            ref G = kit::golden_point(e, O, P); // |GP| = phi r = decagon side
            ref K = kit::perpendicular_at(e, O, P, e.sp(G, P), branch::left, 0);
            span s5 = e.sp(P, K); // sqrt(r^2 + decagon^2) = pentagon side
            std::vector<ref> v{P};
            for (int i = 1; i < 5; ++i) {
                point target = rotate_about(e.at(P), e.at(O),
                                            i * 2.0 * std::numbers::pi / 5.0);
                v.push_back(e.meet_toward(k, e.draw(v.back(), s5), target));
            }
            expand_outputs res;
            for (int i = 0; i < 5; ++i) res.points.emplace_back("V" + std::to_string(i), v[i]);
            res.lengths.emplace_back("side_len", s5);
            return res;
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double r = distance(in.pt("O"), in.pt("P"));
            for (int i = 0; i < 5; ++i)
                ck.point_eq("V" + std::to_string(i), out.pt("V" + std::to_string(i)),
                            rotate_about(in.pt("P"), in.pt("O"),
                                         i * 2.0 * std::numbers::pi / 5.0));
            ck.scalar_eq("side_len", out.scalar("side_len"),
                         2.0 * r * std::sin(std::numbers::pi / 5.0));
            return ck.result();
        };
    }
    { // P1.42 regular pentagon about a circle
        entry& en = add(out, 42, "regular pentagon circumscribed about a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) { return circle_instance(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            span r = e.sp(O, P);
            circle_handle k{e.draw(O, r), O, r};
            ref G = kit::golden_point(e, O, P);
            ref K = kit::perpendicular_at(e, O, P, e.sp(G, P), branch::left, 0);
            span s5 = e.sp(P, K);
            ref V1 = e.meet_toward(k.circ, e.draw(P, s5),
                                   rotate_about(e.at(P), e.at(O),
                                                2.0 * std::numbers::pi / 5.0));
            ref D = kit::bisect_arc(e, P, V1, k, branch::left); // tangency point
            ref F = kit::midpoint(e, P, V1, 1);
            span ed = kit::fourth_proportional(e, e.sp(O, F), e.sp(P, F), e.sp(O, D));
            ref E1 = kit::perpendicular_at(e, D, O, ed, branch::left, 0);
            ref E2 = kit::perpendicular_at(e, D, O, ed, branch::right, 0);
            span side = kit::len_scale(e, ed, 2);
            return {{{"T", D}, {"E1", E1}, {"E2", E2}}, {{"side_len", side}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double r = distance(in.pt("O"), in.pt("P"));
            ck.scalar_eq("side_len", out.scalar("side_len"),
                         2.0 * r * std::tan(std::numbers::pi / 5.0));
            ck.scalar_eq("|T O|", distance(out.pt("T"), in.pt("O")), r);
            ck.scalar_eq("|E1 O|", distance(out.pt("E1"), in.pt("O")),
                         r / std::cos(std::numbers::pi / 5.0));
            return ck.result();
        };
    }
    { // P1.43 circle in a regular pentagon
        entry& en = add(out, 43, "circle inscribed in a regular pentagon");
        en.params = {{"C1", param_kind::pt}, {"C2", param_kind::pt}, {"C3", param_kind::pt},
                     {"C4", param_kind::pt}, {"C5", param_kind::pt}};
        en.sample = pentagon_instance;
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref C1 = arg(a, "C1"), C2 = arg(a, "C2"), C3 = arg(a, "C3"), C5 = arg(a, "C5");
            ref L1 = kit::bisect_sector(e, C5, C1, C2, 1);
            ref L2 = kit::bisect_sector(e, C1, C2, C3, 1);
            ref I = kit::line_line(e, C1, L1, C2, L2);
            ref M = kit::midpoint(e, C1, C2, 1);
            return {{{"I", I}}, {{"radius", e.sp(I, M)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point c{0, 0};
            for (int k = 1; k <= 5; ++k) c = c + in.pt("C" + std::to_string(k));
            c = 0.2 * c;
            const double rr = distance(c, 0.5 * (in.pt("C1") + in.pt("C2")));
            ck.point_eq("I", out.pt("I"), c);
            ck.scalar_eq("radius", out.scalar("radius"), rr);
            return ck.result();
        };
    }
    { // P1.44 circle about a regular pentagon
        entry& en = add(out, 44, "circle circumscribed about a regular pentagon");
        en.params = {{"C1", param_kind::pt}, {"C2", param_kind::pt}, {"C3", param_kind::pt},
                     {"C4", param_kind::pt}, {"C5", param_kind::pt}};
        en.sample = pentagon_instance;
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref C1 = arg(a, "C1"), C2 = arg(a, "C2"), C3 = arg(a, "C3"), C5 = arg(a, "C5");
            ref L1 = kit::bisect_sector(e, C5, C1, C2, 1);
            ref L2 = kit::bisect_sector(e, C1, C2, C3, 1);
            ref I = kit::line_line(e, C1, L1, C2, L2);
            e.draw(I, e.sp(I, C1));
            return {{{"I", I}}, {{"radius", e.sp(I, C1)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point c{0, 0};
            for (int k = 1; k <= 5; ++k) c = c + in.pt("C" + std::to_string(k));
            c = 0.2 * c;
            ck.point_eq("I", out.pt("I"), c);
            ck.scalar_eq("radius", out.scalar("radius"), distance(c, in.pt("C1")));
            return ck.result();
        };
    }
    { // P1.45 regular pentadecagon side
        entry& en = add(out, 45, "regular pentadecagon side in a circle");
        en.params = {{"O", param_kind::pt}, {"P", param_kind::pt}};
        en.sample = [](rng& g) { return circle_instance(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref O = arg(a, "O"), P = arg(a, "P");
            auto h = kit::antipode_full(e, O, P); // mark120 = triangle vertex from P
            ref G = kit::golden_point(e, O, P);
            ref K = kit::perpendicular_at(e, O, P, e.sp(G, P), branch::left, 0);
            span s5 = e.sp(P, K);
            ref V1 = e.meet_toward(h.base_circle, e.draw(P, s5),
                                   rotate_about(e.at(P), e.at(O),
                                                2.0 * std::numbers::pi / 5.0));
            ref V2 = e.meet_toward(h.base_circle, e.draw(V1, s5),
                                   rotate_about(e.at(P), e.at(O),
                                                4.0 * std::numbers::pi / 5.0));
            return {{{"T", h.mark120}, {"V2", V2}}, {{"side_len", e.sp(h.mark120, V2)}}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double r = distance(in.pt("O"), in.pt("P"));
            ck.scalar_eq("side_len", out.scalar("side_len"),
                         2.0 * r * std::sin(std::numbers::pi / 15.0));
            return ck.result();
        };
    }
    { // P1.46 parallel through a point
        entry& en = add(out, 46, "parallel to a line through a given point");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point b = rand_pt(g), c = rand_pt_sep(g, {b}, 1.0);
                point a = rand_pt(g);
                if (std::fabs(cross(c - b, a - b)) / distance(b, c) < 0.3) continue;
                in.points = {{"A", a}, {"B", b}, {"C", c}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref D = kit::parallel_transfer(e, arg(a, "A"), arg(a, "B"), arg(a, "C"));
            return {{{"D", D}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            ck.point_eq("D", out.pt("D"), in.pt("A") + in.pt("B") - in.pt("C"));
            ck.relation("AD parallel BC",
                        std::fabs(cross(out.pt("D") - in.pt("A"), in.pt("C") - in.pt("B"))));
            return ck.result();
        };
    }
}

void register_p1_47_54(std::vector<entry>& out) {
    { // P1.47 parallelogram equal to a triangle, with a given angle
        entry& en = add(out, 47, "parallelogram equal to a triangle with a given angle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"delta", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in = triangle_instance(g);
            double delta;
            do {
                delta = g.uniform(0.35, std::numbers::pi - 0.35);
            } while (std::fabs(delta - std::numbers::pi / 2.0) < 0.02);
            in.scalars = {{"delta", delta}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            const double delta = in.scalar("delta");
            ref G = kit::midpoint(e, A, B, 1);
            ref H = kit::parallel_transfer(e, C, B, A); // line through C parallel to AB
            ref K = kit::foot_of_perpendicular(e, B, C, H);
            auto sec = synth_sector(e, "d", point{0.0, -30.0}, 0.0, delta);
            const bool cleft = side_of(e.at(C), e.at(A), e.at(B), e.tol()) == side::left;
            ref I = kit::copy_angle(e, sec.ray_a, sec.vertex, sec.ray_b, B, A,
                                    cleft ? branch::left : branch::right);
            ref L;
            if (std::fabs(std::cos(delta)) < 1e-9) {
                L = K; // a right angle leaves the rectangle itself
            } else {
                ref N = kit::foot_of_perpendicular(e, I, K, B);
                span kl = kit::fourth_proportional(e, e.sp(B, N), e.sp(N, I), e.sp(B, K));
                // The slant leans with the sign of cos(delta).
                ref K2 = delta < std::numbers::pi / 2.0 ? kit::parallel_transfer(e, K, A, B)
                                                        : kit::parallel_transfer(e, K, B, A);
                L = kit::lay_along(e, K, K2, kl);
            }
            ref M = kit::parallel_transfer(e, G, L, B);
            return {{{"G", G}, {"L", L}, {"M", M}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C");
            const double delta = in.scalar("delta");
            point g = out.pt("G"), l = out.pt("L"), m = out.pt("M");
            ck.point_eq("G", g, 0.5 * (aP + b));
            // |GB| x |BL| spans the parallelogram; its area equals the triangle's.
            ck.relation("area",
                        std::fabs(std::fabs(cross(b - g, l - b)) - triangle_area(aP, b, c)),
                        triangle_area(aP, b, c));
            ck.relation("angle at B", std::fabs(angle_at(b, aP, l) - delta));
            ck.point_eq("M", m, g + l - b);
            return ck.result();
        };
    }
    { // P1.48 rectangle equal to a triangle
        entry& en = add(out, 48, "rectangle equal to a triangle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt}};
        en.sample = [](rng& g) { return triangle_instance(g); };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C");
            ref D = kit::foot_of_perpendicular(e, C, A, B);
            ref F = kit::midpoint(e, C, D, 1);
            ref E = kit::parallel_transfer(e, A, F, D);
            ref G = kit::parallel_transfer(e, B, F, D);
            return {{{"E", E}, {"G", G}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B"), c = in.pt("C");
            point d = aP + (dot(c - aP, b - aP) / dot(b - aP, b - aP)) * (b - aP);
            point f = 0.5 * (c + d);
            ck.point_eq("E", out.pt("E"), aP + f - d);
            ck.point_eq("G", out.pt("G"), b + f - d);
            return ck.result();
        };
    }
    { // P1.49 parallelogram on a given base equal to a triangle, given angle
        entry& en = add(out, 49, "parallelogram on a base equal to a triangle with given angle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"E", param_kind::pt},
                     {"F", param_kind::pt}, {"G", param_kind::pt},
                     {"delta", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            point a = rand_pt(g), b = rand_pt_sep(g, {a}, 2.0);
            in.points = {{"A", a}, {"B", b}};
            for (;;) {
                point ept = rand_pt(g), f = rand_pt_sep(g, {ept}, 2.0),
                      gpt = rand_pt_sep(g, {ept, f}, 2.0);
                if (triangle_area(ept, f, gpt) < 1.5) continue;
                in.points.emplace_back("E", ept);
                in.points.emplace_back("F", f);
                in.points.emplace_back("G", gpt);
                break;
            }
            double delta;
            do {
                delta = g.uniform(0.35, std::numbers::pi - 0.35);
            } while (std::fabs(delta - std::numbers::pi / 2.0) < 0.02);
            in.scalars = {{"delta", delta}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref E = arg(a, "E"), F = arg(a, "F"), Gt = arg(a, "G");
            const double delta = in.scalar("delta");
            ref Ft = kit::foot_of_perpendicular(e, Gt, E, F);
            span h = e.sp(Gt, Ft);
            span ab2 = kit::len_scale(e, e.sp(A, B), 2);
            span bd = kit::fourth_proportional(e, ab2, e.sp(E, F), h); // area / |AB|
            branch sde = in.br("side");
            ref D = kit::perpendicular_at(e, B, A, bd, sde, 0);
            auto sec = synth_sector(e, "d", point{0.0, -30.0}, 0.0, delta);
            ref I = kit::copy_angle(e, sec.ray_a, sec.vertex, sec.ray_b, B, A, sde);
            ref P;
            if (std::fabs(std::cos(delta)) < 1e-9) {
                P = D;
            } else {
                ref N = kit::foot_of_perpendicular(e, I, B, D);
                span dp = kit::fourth_proportional(e, e.sp(B, N), e.sp(N, I), e.sp(B, D));
                ref Dc = delta < std::numbers::pi / 2.0 ? kit::parallel_transfer(e, D, A, B)
                                                        : kit::parallel_transfer(e, D, B, A);
                P = kit::lay_along(e, D, Dc, dp);
            }
            ref Q = kit::parallel_transfer(e, P, A, B);
            return {{{"P", P}, {"Q", Q}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B");
            const double area = triangle_area(in.pt("E"), in.pt("F"), in.pt("G"));
            point p = out.pt("P"), q = out.pt("Q");
            ck.relation("area", std::fabs(std::fabs(cross(aP - b, p - b)) - area), area);
            ck.relation("angle at B", std::fabs(angle_at(b, aP, p) - in.scalar("delta")));
            ck.point_eq("Q", q, p + aP - b);
            return ck.result();
        };
    }
    { // P1.50 parallelogram equal to a quadrilateral, given angle and base
        entry& en = add(out, 50, "parallelogram equal to a rectilinear figure with given angle");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C", param_kind::pt},
                     {"D", param_kind::pt}, {"U1", param_kind::pt}, {"U2", param_kind::pt},
                     {"delta", param_kind::scalar}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            instance in;
            // Convex quadrilateral: cyclic vertices in angular order.
            point o = rand_pt(g, -5, 5);
            double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            const double rr = g.uniform(2.0, 5.0);
            const char* names[4] = {"A", "B", "C", "D"};
            for (int k = 0; k < 4; ++k) {
                in.points.emplace_back(names[k], o + point{rr * std::cos(th), rr * std::sin(th)});
                th += g.uniform(0.7, 1.9);
            }
            point u1 = rand_pt(g), u2 = rand_pt_sep(g, {u1}, 2.0);
            in.points.emplace_back("U1", u1);
            in.points.emplace_back("U2", u2);
            in.scalars = {{"delta", g.uniform(0.4, std::numbers::pi - 0.4)}};
            in.branches = {{"side", rand_branch(g)}};
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B"), C = arg(a, "C"), D = arg(a, "D");
            ref U1 = arg(a, "U1"), U2 = arg(a, "U2");
            span s1 = sqrt_area_span(e, A, B, C);
            span s2 = sqrt_area_span(e, A, C, D);
            span s = kit::len_hyp(e, s1, s2); // square equal to the whole figure
            span hp = kit::third_proportional(e, e.sp(U1, U2), s); // s^2 / |U1U2|
            auto sec = synth_sector(e, "d", point{0.0, -30.0}, 0.0, in.scalar("delta"));
            ref Ft = kit::foot_of_perpendicular(e, sec.ray_b, sec.vertex, sec.ray_a);
            span sin_d = e.sp(Ft, sec.ray_b);
            span ell = kit::fourth_proportional(e, sin_d, hp, e.sp(sec.vertex, sec.ray_a));
            ref Vdir = kit::copy_angle(e, sec.ray_a, sec.vertex, sec.ray_b, U2, U1,
                                       in.br("side"));
            ref V = kit::lay_along(e, U2, Vdir, ell);
            ref W = kit::parallel_transfer(e, V, U1, U2);
            return {{{"V", V}, {"W", W}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double area =
                polygon_area({in.pt("A"), in.pt("B"), in.pt("C"), in.pt("D")});
            point u1 = in.pt("U1"), u2 = in.pt("U2");
            point v = out.pt("V");
            ck.relation("area", std::fabs(std::fabs(cross(u1 - u2, v - u2)) - area), area);
            ck.relation("angle at U2", std::fabs(angle_at(u2, u1, v) - in.scalar("delta")));
            ck.point_eq("W", out.pt("W"), v + u1 - u2);
            return ck.result();
        };
    }
    { // P1.51 similar rectilinear figure over a new base
        entry& en = add(out, 51, "similar rectilinear figure over a given base");
        en.params = {{"A", param_kind::pt}, {"C", param_kind::pt}, {"D", param_kind::pt},
                     {"E", param_kind::pt}, {"B", param_kind::pt}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g, -6, 6);
                const double th0 = g.uniform(0.0, 2.0 * std::numbers::pi);
                point c = a + point{g.uniform(2.0, 5.0) * std::cos(th0),
                                    g.uniform(2.0, 5.0) * std::sin(th0)};
                const double th1 = th0 + g.uniform(0.4, 1.2);
                point d = a + point{g.uniform(2.0, 5.0) * std::cos(th1),
                                    g.uniform(2.0, 5.0) * std::sin(th1)};
                const double th2 = th1 + g.uniform(0.4, 1.2);
                point ept = a + point{g.uniform(2.0, 5.0) * std::cos(th2),
                                      g.uniform(2.0, 5.0) * std::sin(th2)};
                point b = on_ray(a, c, g.uniform(0.5, 1.8) * distance(a, c));
                if (distance(b, c) < 0.4) continue;
                in.points = {{"A", a}, {"C", c}, {"D", d}, {"E", ept}, {"B", b}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), C = arg(a, "C"), D = arg(a, "D"), E = arg(a, "E"),
                B = arg(a, "B");
            span ag = kit::fourth_proportional(e, e.sp(A, C), e.sp(A, D), e.sp(A, B));
            ref G = kit::lay_along(e, A, D, ag);
            span af = kit::fourth_proportional(e, e.sp(A, D), e.sp(A, E), e.sp(A, G));
            ref F = kit::lay_along(e, A, E, af);
            return {{{"G", G}, {"F", F}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double k = distance(in.pt("A"), in.pt("B")) /
                             distance(in.pt("A"), in.pt("C"));
            ck.point_eq("G", out.pt("G"), in.pt("A") + k * (in.pt("D") - in.pt("A")));
            ck.point_eq("F", out.pt("F"), in.pt("A") + k * (in.pt("E") - in.pt("A")));
            return ck.result();
        };
    }
    { // P1.52 figure equal to one and similar to another
        entry& en = add(out, 52, "figure equal to one figure and similar to another");
        en.params = {{"B", param_kind::pt}, {"E", param_kind::pt}, {"D", param_kind::pt},
                     {"C", param_kind::pt}, {"A", param_kind::pt}, {"Q1", param_kind::pt},
                     {"Q2", param_kind::pt}, {"Q3", param_kind::pt}};
        en.sample = [](rng& g) {
            instance in;
            // Convex pentagon: cyclic vertices in angular order.
            point o = rand_pt(g, -5, 5);
            double th = g.uniform(0.0, 2.0 * std::numbers::pi);
            const double rr = g.uniform(2.0, 5.0);
            const char* names[5] = {"B", "E", "D", "C", "A"};
            for (int k = 0; k < 5; ++k) {
                in.points.emplace_back(names[k], o + point{rr * std::cos(th), rr * std::sin(th)});
                th += g.uniform(0.6, 1.5);
            }
            for (;;) {
                point q1 = rand_pt(g), q2 = rand_pt_sep(g, {q1}, 2.0),
                      q3 = rand_pt_sep(g, {q1, q2}, 2.0);
                if (triangle_area(q1, q2, q3) < 1.5) continue;
                in.points.emplace_back("Q1", q1);
                in.points.emplace_back("Q2", q2);
                in.points.emplace_back("Q3", q3);
                break;
            }
            return in;
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance&,
                       int) -> expand_outputs {
            ref B = arg(a, "B"), E = arg(a, "E"), D = arg(a, "D"), C = arg(a, "C"),
                A = arg(a, "A");
            span s1 = sqrt_area_span(e, B, E, D);
            span s2 = sqrt_area_span(e, B, D, C);
            span s3 = sqrt_area_span(e, B, C, A);
            span sp_all = kit::len_hyp(e, kit::len_hyp(e, s1, s2), s3);
            span sq = sqrt_area_span(e, arg(a, "Q1"), arg(a, "Q2"), arg(a, "Q3"));
            auto scale_to = [&](const ref& V) {
                span t = kit::fourth_proportional(e, sp_all, e.sp(B, V), sq);
                return kit::lay_along(e, B, V, t);
            };
            ref M = scale_to(E);
            ref N = scale_to(D);
            ref O2 = scale_to(C);
            ref P2 = scale_to(A);
            return {{{"M", M}, {"N", N}, {"O", O2}, {"P", P2}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            const double areaP = polygon_area(
                {in.pt("B"), in.pt("E"), in.pt("D"), in.pt("C"), in.pt("A")});
            const double areaQ = triangle_area(in.pt("Q1"), in.pt("Q2"), in.pt("Q3"));
            const double k = std::sqrt(areaQ / areaP);
            point b = in.pt("B");
            ck.point_eq("M", out.pt("M"), b + k * (in.pt("E") - b));
            ck.point_eq("N", out.pt("N"), b + k * (in.pt("D") - b));
            ck.point_eq("O", out.pt("O"), b + k * (in.pt("C") - b));
            ck.point_eq("P", out.pt("P"), b + k * (in.pt("A") - b));
            return ck.result();
        };
    }
    { // P1.53 application of areas, falling short by a similar parallelogram
        entry& en = add(out, 53, "parallelogram applied to a segment falling short");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C0", param_kind::pt},
                     {"C1", param_kind::pt}, {"C2", param_kind::pt}, {"T0", param_kind::pt},
                     {"T1", param_kind::pt}, {"T2", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 4.0);
                point c0 = rand_pt(g, -5, 5);
                const double base = g.uniform(1.5, 4.0);
                const double side_len = g.uniform(1.5, 4.0);
                const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
                const double gamma = g.uniform(0.5, std::numbers::pi - 0.5);
                point c1 = c0 + point{base * std::cos(th), base * std::sin(th)};
                point c2 = c0 + point{side_len * std::cos(th + gamma),
                                      side_len * std::sin(th + gamma)};
                const double mu = side_len * std::sin(gamma) / base;
                const double m = 0.5 * distance(a, b);
                const double cap = 0.7 * mu * m * m;
                point t0 = rand_pt(g), t1 = rand_pt_sep(g, {t0}, 1.5),
                      t2 = rand_pt_sep(g, {t0, t1}, 1.5);
                const double areaD = triangle_area(t0, t1, t2);
                if (areaD < 0.5 || areaD > cap) continue;
                in.points = {{"A", a},  {"B", b},  {"C0", c0}, {"C1", c1},
                             {"C2", c2}, {"T0", t0}, {"T1", t1}, {"T2", t2}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref C0 = arg(a, "C0"), C1 = arg(a, "C1"), C2 = arg(a, "C2");
            ref M = kit::midpoint(e, A, B, 1);
            span m = e.sp(M, B);
            ref Kdir = kit::copy_angle(e, C1, C0, C2, B, M, in.br("side"));
            span lside = kit::fourth_proportional(e, e.sp(C0, C1), e.sp(C0, C2), m);
            ref Kc = kit::lay_along(e, B, Kdir, lside);
            ref F1 = kit::foot_of_perpendicular(e, Kc, B, M);
            span hm = e.sp(Kc, F1);
            span s1 = kit::geometric_mean(e, m, hm); // sqrt(mu) * m
            span sD = sqrt_area_span(e, arg(a, "T0"), arg(a, "T1"), arg(a, "T2"));
            span sdiff = kit::len_leg(e, s1, sD);
            span x = kit::fourth_proportional(e, s1, sdiff, m);
            span bf = kit::len_sum(e, m, x);
            ref F = kit::lay_along(e, B, A, bf);
            span l2 = kit::fourth_proportional(e, e.sp(C0, C1), e.sp(C0, C2), e.sp(B, F));
            ref Ec = kit::lay_along(e, B, Kdir, l2);
            ref Gc = kit::parallel_transfer(e, Ec, F, B);
            ref Hc = kit::parallel_transfer(e, Gc, A, F);
            return {{{"F", F}, {"E", Ec}, {"G", Gc}, {"H", Hc}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B");
            point c0 = in.pt("C0"), c1 = in.pt("C1"), c2 = in.pt("C2");
            const double gamma = angle_at(c0, c1, c2);
            const double mu =
                distance(c0, c2) * std::sin(gamma) / distance(c0, c1);
            const double m = 0.5 * distance(aP, b);
            const double areaD = triangle_area(in.pt("T0"), in.pt("T1"), in.pt("T2"));
            const double x = std::sqrt(m * m - areaD / mu);
            ck.point_eq("F", out.pt("F"), on_ray(b, aP, m + x));
            point f = out.pt("F"), g2 = out.pt("G"), h = out.pt("H");
            const double area_afgh = std::fabs(cross(f - aP, h - aP));
            ck.relation("complement area", std::fabs(area_afgh - areaD), areaD);
            ck.relation("shape angle", std::fabs(angle_at(b, f, out.pt("E")) - gamma));
            ck.point_eq("H", h, g2 + aP - f);
            return ck.result();
        };
    }
    { // P1.54 application of areas, exceeding by a similar parallelogram
        entry& en = add(out, 54, "parallelogram applied to a segment in excess");
        en.params = {{"A", param_kind::pt}, {"B", param_kind::pt}, {"C0", param_kind::pt},
                     {"C1", param_kind::pt}, {"C2", param_kind::pt}, {"T0", param_kind::pt},
                     {"T1", param_kind::pt}, {"T2", param_kind::pt}, {"side", param_kind::br}};
        en.sample = [](rng& g) {
            for (;;) {
                instance in;
                point a = rand_pt(g), b = rand_pt_sep(g, {a}, 3.0);
                point c0 = rand_pt(g, -5, 5);
                const double base = g.uniform(1.5, 4.0);
                const double side_len = g.uniform(1.5, 4.0);
                const double th = g.uniform(0.0, 2.0 * std::numbers::pi);
                const double gamma = g.uniform(0.5, std::numbers::pi - 0.5);
                point c1 = c0 + point{base * std::cos(th), base * std::sin(th)};
                point c2 = c0 + point{side_len * std::cos(th + gamma),
                                      side_len * std::sin(th + gamma)};
                point t0 = rand_pt(g), t1 = rand_pt_sep(g, {t0}, 1.5),
                      t2 = rand_pt_sep(g, {t0, t1}, 1.5);
                if (triangle_area(t0, t1, t2) < 0.5) continue;
                in.points = {{"A", a},  {"B", b},  {"C0", c0}, {"C1", c1},
                             {"C2", c2}, {"T0", t0}, {"T1", t1}, {"T2", t2}};
                in.branches = {{"side", rand_branch(g)}};
                return in;
            }
        };
        en.expand = [](expansion& e, const std::map<std::string, ref>& a, const instance& in,
                       int) -> expand_outputs {
            ref A = arg(a, "A"), B = arg(a, "B");
            ref C0 = arg(a, "C0"), C1 = arg(a, "C1"), C2 = arg(a, "C2");
            ref M = kit::midpoint(e, A, B, 1);
            span m = e.sp(M, B);
            ref Kdir = kit::copy_angle(e, C1, C0, C2, B, M, in.br("side"));
            span lside = kit::fourth_proportional(e, e.sp(C0, C1), e.sp(C0, C2), m);
            ref Kc = kit::lay_along(e, B, Kdir, lside);
            ref F1 = kit::foot_of_perpendicular(e, Kc, B, M);
            span hm = e.sp(Kc, F1);
            span s1 = kit::geometric_mean(e, m, hm); // sqrt(mu) * m
            span sS = sqrt_area_span(e, arg(a, "T0"), arg(a, "T1"), arg(a, "T2"));
            span shyp = kit::len_hyp(e, s1, sS);
            span ell = kit::fourth_proportional(e, s1, shyp, m); // sqrt(m^2 + S/mu)
            span y = kit::len_sub(e, ell, m);
            ref O = kit::lay_dir(e, B, A, y, -1);
            span ly = kit::fourth_proportional(e, e.sp(C0, C1), e.sp(C0, C2), y);
            ref Gdir = kit::copy_angle(e, C1, C0, C2, O, B, in.br("side"));
            ref G = kit::lay_along(e, O, Gdir, ly);
            ref H = kit::parallel_transfer(e, G, A, O);
            return {{{"O", O}, {"G", G}, {"H", H}}, {}};
        };
        en.check = [](const instance& in, const outputs& out) {
            checker ck(in);
            point aP = in.pt("A"), b = in.pt("B");
            point c0 = in.pt("C0"), c1 = in.pt("C1"), c2 = in.pt("C2");
            const double gamma = angle_at(c0, c1, c2);
            const double mu = distance(c0, c2) * std::sin(gamma) / distance(c0, c1);
            const double m = 0.5 * distance(aP, b);
            const double areaS = triangle_area(in.pt("T0"), in.pt("T1"), in.pt("T2"));
            const double y = std::sqrt(m * m + areaS / mu) - m;
            point o = out.pt("O");
            ck.point_eq("O", o, b + (y / distance(aP, b)) * (b - aP));
            const double area_aogh = std::fabs(cross(o - aP, out.pt("H") - aP));
            ck.relation("applied area", std::fabs(area_aogh - areaS), areaS);
            ck.point_eq("H", out.pt("H"), out.pt("G") + aP - o);
            return ck.result();
        };
    }
}

} // namespace

void register_p1_32_54(std::vector<entry>& out) {
    register_p1_32_39(out);
    register_p1_40_46(out);
    register_p1_47_54(out);
}

} // namespace edc::detail
