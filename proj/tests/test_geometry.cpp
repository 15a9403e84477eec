#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edc/executor.hpp"
#include "edc/geometry.hpp"
#include "edc/rng.hpp"
#include "edc/toolkit.hpp"

using namespace edc;

namespace {

constexpr double kApexY = 0.86602540378443865; // sqrt(3)/2

circle c(double x, double y, double r) { return circle{{x, y}, r}; }

} // namespace

TEST_CASE("unit lens left branch is the equilateral apex") {
    tolerance tol;
    point p = circle_circle_intersect(c(0, 0, 1), c(1, 0, 1), branch::left, tol);
    CHECK(p.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(kApexY).epsilon(1e-12));
    point q = circle_circle_intersect(c(0, 0, 1), c(1, 0, 1), branch::right, tol);
    CHECK(q.y == doctest::Approx(-kApexY).epsilon(1e-12));
}

TEST_CASE("external tangency collapses both branches") {
    tolerance tol;
    for (branch br : {branch::left, branch::right}) {
        point p = circle_circle_intersect(c(0, 0, 1), c(2, 0, 1), br, tol);
        CHECK(p.x == doctest::Approx(1.0));
        CHECK(p.y == doctest::Approx(0.0));
    }
}

TEST_CASE("disjoint, concentric and coincident circles are rejected") {
    tolerance tol;
    CHECK_THROWS_WITH_AS((void)circle_circle_intersect(c(0, 0, 2), c(4, 0, 1), branch::left, tol),
                         doctest::Contains("separated"), error);
    try {
        (void)circle_circle_intersect(c(0, 0, 2), c(4, 0, 1), branch::left, tol);
    } catch (const error& e) {
        CHECK(e.code() == errc::disjoint);
    }
    try {
        (void)circle_circle_intersect(c(0, 0, 2), c(0, 0, 1), branch::left, tol);
    } catch (const error& e) {
        CHECK(e.code() == errc::concentric);
    }
    try {
        (void)circle_circle_intersect(c(1, 1, 2), c(1, 1, 2), branch::left, tol);
    } catch (const error& e) {
        CHECK(e.code() == errc::coincident);
    }
    // Nested beyond the band is also disjoint.
    try {
        (void)circle_circle_intersect(c(0, 0, 5), c(1, 0, 1), branch::left, tol);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::disjoint);
    }
}

TEST_CASE("intersections lie on both circles and swap with argument order") {
    rng g(17);
    tolerance tol = tolerance::with_scale(10.0);
    int produced = 0;
    for (int i = 0; i < 500; ++i) {
        circle a{{g.uniform(-10, 10), g.uniform(-10, 10)}, g.uniform(0.1, 6)};
        circle b{{g.uniform(-10, 10), g.uniform(-10, 10)}, g.uniform(0.1, 6)};
        const double d = distance(a.center, b.center);
        if (d >= a.radius + b.radius - 1e-3 || d <= std::fabs(a.radius - b.radius) + 1e-3)
            continue;
        ++produced;
        for (branch br : {branch::left, branch::right}) {
            point p = circle_circle_intersect(a, b, br, tol);
            CHECK(std::fabs(distance(p, a.center) - a.radius) <= tol.eps());
            CHECK(std::fabs(distance(p, b.center) - b.radius) <= tol.eps());
            point swapped = circle_circle_intersect(b, a, opposite(br), tol);
            CHECK(distance(p, swapped) <= tol.eps());
        }
        // Branch symmetry: left/right mirror across the center axis.
        point l = circle_circle_intersect(a, b, branch::left, tol);
        point r = circle_circle_intersect(a, b, branch::right, tol);
        point mid = 0.5 * (l + r);
        CHECK(std::fabs(cross(b.center - a.center, mid - a.center)) /
                  distance(a.center, b.center) <=
              10 * tol.eps());
    }
    CHECK(produced > 100);
}

TEST_CASE("side_of matches the sign convention and snaps to on") {
    tolerance tol;
    CHECK(side_of({0, 1}, {0, 0}, {1, 0}, tol) == side::left);
    CHECK(side_of({0, -1}, {0, 0}, {1, 0}, tol) == side::right);
    CHECK(side_of({0.5, 0}, {0, 0}, {1, 0}, tol) == side::on);
    CHECK_THROWS_AS((void)side_of({0, 1}, {1, 1}, {1, 1}, tol), error);
    // Antisymmetry under axis reversal.
    rng g(5);
    for (int i = 0; i < 200; ++i) {
        point p{g.uniform(-5, 5), g.uniform(-5, 5)};
        point u{g.uniform(-5, 5), g.uniform(-5, 5)};
        point v{g.uniform(-5, 5), g.uniform(-5, 5)};
        if (distance(u, v) < 0.1) continue;
        side s = side_of(p, u, v, tol);
        side t = side_of(p, v, u, tol);
        if (s == side::on)
            CHECK(t == side::on);
        else
            CHECK(t == (s == side::left ? side::right : side::left));
    }
}

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
    CHECK(distance({0, 0}, {1, 0}) == 1.0);
}

// --- toolkit ---------------------------------------------------------------

namespace {

expansion make_exp(double scale = 10.0) { return expansion(tolerance::with_scale(scale)); }

} // namespace

TEST_CASE("toolkit: equilateral apex emits 2 circles, 1 intersection") {
    expansion e = make_exp();
    ref A = e.given("A", {0, 0});
    ref B = e.given("B", {1, 0});
    ref C = kit::equilateral_apex(e, A, B, branch::left);
    CHECK(e.at(C).x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(e.at(C).y == doctest::Approx(kApexY).epsilon(1e-12));
    step_metrics m = metrics(e.prog());
    CHECK(m.circles == 2);
    CHECK(m.intersections == 1);
    CHECK(m.ruler_steps == 0);
}

TEST_CASE("toolkit: antipode uses exactly 4 circles and lands opposite") {
    rng g(99);
    for (int i = 0; i < 50; ++i) {
        expansion e = make_exp();
        point o{g.uniform(-8, 8), g.uniform(-8, 8)};
        point p{g.uniform(-8, 8), g.uniform(-8, 8)};
        if (distance(o, p) < 0.5) continue;
        ref O = e.given("O", o);
        ref P = e.given("P", p);
        ref E = kit::antipode(e, O, P);
        point expect = o + (o - p);
        CHECK(distance(e.at(E), expect) <= 1e-9);
        step_metrics m = metrics(e.prog());
        CHECK(m.circles == 4);
        CHECK(m.intersections == 3);
    }
}

TEST_CASE("toolkit: midpoint variants agree and differ in ledger") {
    rng g(123);
    for (int i = 0; i < 30; ++i) {
        point a{g.uniform(-8, 8), g.uniform(-8, 8)};
        point b{g.uniform(-8, 8), g.uniform(-8, 8)};
        if (distance(a, b) < 0.5) continue;
        point expect = 0.5 * (a + b);
        step_metrics ms[3];
        for (int v = 1; v <= 3; ++v) {
            expansion e = make_exp();
            ref A = e.given("A", a);
            ref B = e.given("B", b);
            ref M = kit::midpoint(e, A, B, v);
            CHECK(distance(e.at(M), expect) <= 1e-8);
            ms[v - 1] = metrics(e.prog());
        }
        CHECK(ms[0] != ms[1]);
        CHECK(ms[0] != ms[2]);
    }
}

TEST_CASE("toolkit: quarter point rotates by 90 degrees") {
    expansion e = make_exp();
    ref O = e.given("O", {1, 1});
    ref P = e.given("P", {3, 1});
    ref L = kit::quarter_point(e, O, P, branch::left);
    ref R = kit::quarter_point(e, O, P, branch::right);
    CHECK(distance(e.at(L), {1, 3}) <= 1e-9);
    CHECK(distance(e.at(R), {1, -1}) <= 1e-9);
}

TEST_CASE("toolkit: lay_dir reaches any distance on the ray") {
    rng g(321);
    for (int i = 0; i < 40; ++i) {
        expansion e = make_exp(60.0);
        point a{g.uniform(-5, 5), g.uniform(-5, 5)};
        point b{g.uniform(-5, 5), g.uniform(-5, 5)};
        if (distance(a, b) < 0.8) continue;
        double d = g.uniform(0.05, 40.0);
        ref A = e.given("A", a);
        ref B = e.given("B", b);
        ref D0 = e.given("D0", {0, -20});
        ref D1 = e.given("D1", {d, -20});
        ref X = kit::lay_dir(e, A, B, e.sp(D0, D1), +1);
        point u = (1.0 / distance(a, b)) * (b - a);
        CHECK(distance(e.at(X), a + d * u) <= 2e-8);
        ref Y = kit::lay_dir(e, A, B, e.sp(D0, D1), -1);
        CHECK(distance(e.at(Y), a + (-d) * u) <= 2e-8);
    }
}

TEST_CASE("toolkit: perpendicular foot and reflection") {
    expansion e = make_exp();
    ref A = e.given("A", {0, 1});
    ref B = e.given("B", {-1, 0});
    ref C = e.given("C", {1, 0});
    ref F = kit::foot_of_perpendicular(e, A, B, C);
    CHECK(distance(e.at(F), {0, 0}) <= 1e-9);

    expansion e2 = make_exp();
    ref A2 = e2.given("A", {2, 3});
    ref B2 = e2.given("B", {0, 0});
    ref C2 = e2.given("C", {1, 0});
    ref F2 = kit::foot_of_perpendicular(e2, A2, B2, C2);
    CHECK(distance(e2.at(F2), {2, 0}) <= 1e-9);

    // A on the line comes back unchanged.
    expansion e3 = make_exp();
    ref A3 = e3.given("A", {0.5, 0});
    ref B3 = e3.given("B", {0, 0});
    ref C3 = e3.given("C", {1, 0});
    CHECK(kit::foot_of_perpendicular(e3, A3, B3, C3) == A3);
}

TEST_CASE("toolkit: proportionals against arithmetic") {
    rng g(77);
    for (int i = 0; i < 40; ++i) {
        double a = g.uniform(0.2, 8), b = g.uniform(0.2, 8), c = g.uniform(0.2, 8);
        expansion e = make_exp(80.0);
        ref A0 = e.given("a0", {0, 0});
        ref A1 = e.given("a1", {a, 0});
        ref B0 = e.given("b0", {0, -5});
        ref B1 = e.given("b1", {b, -5});
        ref C0 = e.given("c0", {0, -10});
        ref C1 = e.given("c1", {c, -10});
        span r = kit::fourth_proportional(e, e.sp(A0, A1), e.sp(B0, B1), e.sp(C0, C1));
        CHECK(e.length(r) == doctest::Approx(b * c / a).epsilon(1e-9));
        span t = kit::third_proportional(e, e.sp(A0, A1), e.sp(B0, B1));
        CHECK(e.length(t) == doctest::Approx(b * b / a).epsilon(1e-9));
        span gm = kit::geometric_mean(e, e.sp(A0, A1), e.sp(B0, B1));
        CHECK(e.length(gm) == doctest::Approx(std::sqrt(a * b)).epsilon(1e-9));
    }
}

TEST_CASE("toolkit: perpendicular_at honours length and side") {
    expansion e = make_exp();
    ref A = e.given("A", {0, 0});
    ref B = e.given("B", {1, 0});
    ref L0 = e.given("L0", {0, -5});
    ref L1 = e.given("L1", {1, -5});
    ref K = kit::perpendicular_at(e, A, B, e.sp(L0, L1), branch::left, 1);
    CHECK(distance(e.at(K), {0, 1}) <= 1e-9);

    rng g(818);
    for (int i = 0; i < 30; ++i) {
        double a = g.uniform(0.5, 8), d = g.uniform(0.05, 7.9);
        if (d >= a) continue;
        for (int variant : {1, 2}) {
            expansion ee = make_exp(20.0);
            ref AA = ee.given("A", {1, 2});
            ref BB = ee.given("B", {1 + a, 2});
            ref D0 = ee.given("D0", {0, -5});
            ref D1 = ee.given("D1", {d, -5});
            ref KK = kit::perpendicular_at(ee, AA, BB, ee.sp(D0, D1), branch::left, variant);
            CHECK(distance(ee.at(KK), {1, 2 + d}) <= 2e-8);
        }
    }
}

TEST_CASE("toolkit: line_line and line_circle against analytic forms") {
    tolerance tol = tolerance::with_scale(10.0);
    rng g(4242);
    for (int i = 0; i < 60; ++i) {
        point p1 = {g.uniform(-8, 8), g.uniform(-8, 8)};
        point p2 = {g.uniform(-8, 8), g.uniform(-8, 8)};
        point q1 = {g.uniform(-8, 8), g.uniform(-8, 8)};
        point q2 = {g.uniform(-8, 8), g.uniform(-8, 8)};
        if (distance(p1, p2) < 1 || distance(q1, q2) < 1) continue;
        point d1 = p2 - p1, d2 = q2 - q1;
        if (std::fabs(cross(d1, d2)) / (norm(d1) * norm(d2)) < 0.15) continue;
        point expect = line_line_intersection(p1, p2, q1, q2, tol);
        if (std::fabs(expect.x) > 30 || std::fabs(expect.y) > 30) continue;
        // keep the meet off the defining points so guards stay quiet
        if (distance(expect, q1) < 0.3 || distance(expect, q2) < 0.3) continue;
        expansion e(tolerance::with_scale(40.0));
        ref P1 = e.given("P1", p1), P2 = e.given("P2", p2);
        ref Q1 = e.given("Q1", q1), Q2 = e.given("Q2", q2);
        ref X = kit::line_line(e, P1, P2, Q1, Q2);
        CHECK(distance(e.at(X), expect) <= 5e-8);
    }

    // Diagonals of the unit square.
    {
        expansion e = make_exp();
        ref P1 = e.given("P1", {0, 0}), P2 = e.given("P2", {1, 1});
        ref Q1 = e.given("Q1", {0, 1}), Q2 = e.given("Q2", {1, 0});
        ref X = kit::line_line(e, P1, P2, Q1, Q2);
        CHECK(distance(e.at(X), {0.5, 0.5}) <= 1e-9);
    }

    for (int i = 0; i < 60; ++i) {
        point p1 = {g.uniform(-6, 6), g.uniform(-6, 6)};
        point p2 = {g.uniform(-6, 6), g.uniform(-6, 6)};
        point o = {g.uniform(-6, 6), g.uniform(-6, 6)};
        double r = g.uniform(0.8, 5);
        if (distance(p1, p2) < 1) continue;
        point f = foot_on_line(o, p1, p2);
        if (distance(o, f) > r - 0.2) continue; // want a solid crossing
        expansion e(tolerance::with_scale(20.0));
        ref P1 = e.given("P1", p1), P2 = e.given("P2", p2);
        ref O = e.given("O", o);
        ref R = e.given("R", o + point{r, 0});
        kit::circle_handle k{e.draw(O, e.sp(O, R)), O, e.sp(O, R)};
        for (branch br : {branch::left, branch::right}) {
            point expect = line_circle_intersection(p1, p2, circle{o, r}, br, e.tol());
            ref X = kit::line_circle(e, P1, P2, k, br);
            CHECK(distance(e.at(X), expect) <= 5e-8);
        }
    }

    // Central case: the line passes through the center.
    {
        expansion e = make_exp();
        ref P1 = e.given("P1", {-3, 0}), P2 = e.given("P2", {2, 0});
        ref O = e.given("O", {0, 0});
        ref R = e.given("R", {1, 0});
        kit::circle_handle k{e.draw(O, e.sp(O, R)), O, e.sp(O, R)};
        ref X = kit::line_circle(e, P1, P2, k, branch::left);
        ref Y = kit::line_circle(e, P1, P2, k, branch::right);
        CHECK(distance(e.at(X), {-1, 0}) <= 1e-9);
        CHECK(distance(e.at(Y), {1, 0}) <= 1e-9);
    }
}

TEST_CASE("toolkit: bisect_sector, circumcenter, arc, golden, parallel") {
    {
        expansion e = make_exp();
        ref A = e.given("A", {0, 0});
        ref B = e.given("B", {1, 0});
        ref D = e.given("D", {0, 1});
        for (int v : {1, 2}) {
            ref C = kit::bisect_sector(e, B, A, D, v);
            point expect{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)};
            CHECK(distance(e.at(C), expect) <= 1e-9);
        }
    }
    {
        expansion e = make_exp();
        ref A = e.given("A", {0, 0});
        ref B = e.given("B", {2, 0});
        ref C = e.given("C", {1, 1});
        auto res = kit::circumcenter(e, A, B, C);
        CHECK(distance(e.at(res.center), {1, 0}) <= 1e-9);
        CHECK(e.length(res.radius) == doctest::Approx(1.0).epsilon(1e-10));
    }
    {
        expansion e = make_exp();
        ref O = e.given("O", {0, 0});
        ref P = e.given("P", {1, 0});
        kit::circle_handle k{e.draw(O, e.sp(O, P)), O, e.sp(O, P)};
        ref A = e.meet(k.circ, e.draw(e.given("Q", {0, 1}), e.sp(O, P)), branch::left);
        // A lands at 150 degrees; the minor arc from P bisects at 75.
        ref C = kit::bisect_arc(e, P, A, k, branch::left);
        const double t = 75.0 * std::numbers::pi / 180.0;
        CHECK(distance(e.at(C), {std::cos(t), std::sin(t)}) <= 1e-8);
        CHECK(distance(e.at(C), e.at(P)) ==
              doctest::Approx(distance(e.at(C), e.at(A))).epsilon(1e-9));
        // Far-arc branch is the antipode.
        ref Cf = kit::bisect_arc(e, P, A, k, branch::right);
        CHECK(distance(e.at(Cf), {-std::cos(t), -std::sin(t)}) <= 1e-8);
    }
    {
        expansion e = make_exp();
        ref A = e.given("A", {0, 0});
        ref C = e.given("C", {1, 0});
        ref G = kit::golden_point(e, A, C);
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        CHECK(distance(e.at(G), {1.0 - phi, 0}) <= 1e-9);
    }
    {
        expansion e = make_exp();
        ref A = e.given("A", {0, 2});
        ref B = e.given("B", {0, 0});
        ref C = e.given("C", {1, 0});
        ref D = kit::parallel_transfer(e, A, B, C);
        CHECK(distance(e.at(D), {-1, 2}) <= 1e-9);
    }
}

TEST_CASE("toolkit: tangent point via Thales") {
    expansion e = make_exp();
    ref A = e.given("A", {2, 0});
    ref O = e.given("O", {0, 0});
    ref P = e.given("P", {1, 0});
    kit::circle_handle k{e.draw(O, e.sp(O, P)), O, e.sp(O, P)};
    ref B = kit::tangent_point(e, A, k, branch::left);
    CHECK(distance(e.at(B), {0.5, kApexY}) <= 1e-9);
    CHECK(distance(e.at(B), e.at(A)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK_THROWS_AS((void)kit::tangent_point(e, P, k, branch::left), error);
}
