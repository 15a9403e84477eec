#include "edc/toolkit.hpp"

#include <cmath>

#include "edc/executor.hpp"

namespace edc::kit {

namespace {

side side_of_pts(expansion& e, point p, point from, point to) {
    return side_of(p, from, to, e.tol());
}

} // namespace

ref equilateral_apex(expansion& e, const ref& A, const ref& B, branch br) {
    span ab = e.sp(A, B);
    ref ca = e.draw(A, ab);
    ref cb = e.draw(B, ab);
    return e.meet(ca, cb, br);
}

antipode_result antipode_full(expansion& e, const ref& center, const ref& P) {
    span r = e.sp(center, P);
    ref base = e.draw(center, r);
    ref c1 = e.draw(P, r);
    ref m1 = e.meet(base, c1, branch::left);
    ref c2 = e.draw(m1, r);
    ref m2 = e.meet_away(base, c2, e.at(P));
    ref c3 = e.draw(m2, r);
    ref opp = e.meet_away(base, c3, e.at(m1));
    return {opp, m1, m2, base};
}

ref antipode(expansion& e, const ref& center, const ref& P) {
    return antipode_full(e, center, P).opposite;
}

ref extend_chain(expansion& e, const ref& A, const ref& B, int n) {
    if (n < 1) throw error(errc::degenerate_input, "extension count must be >= 1");
    ref prev = A;
    ref cur = B;
    for (int k = 2; k <= n; ++k) {
        ref nxt = antipode(e, cur, prev);
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// Doubles the segment A->B until it is at least `target` long; logarithmic
// in the ratio, unlike the unit-step chain.
span grow_past(expansion& e, const span& s, double target) {
    ref a = s.a;
    ref cur = s.b;
    double len = e.length(s);
    int guard = 0;
    while (len < target && guard++ < 64) {
        cur = antipode(e, cur, a);
        len *= 2.0;
    }
    return span{a, cur};
}

ref quarter_point(expansion& e, const ref& O, const ref& P, branch br) {
    antipode_result h = antipode_full(e, O, P);
    span chord = e.sp(P, h.mark120);
    ref t1 = e.draw(P, chord);
    ref t2 = e.draw(h.opposite, chord);
    ref T = e.meet(t1, t2, branch::left);
    ref vc = e.draw(P, e.sp(O, T));
    return e.meet(h.base_circle, vc, br);
}

ref quarter_point_toward(expansion& e, const ref& O, const ref& P, point target) {
    antipode_result h = antipode_full(e, O, P);
    span chord = e.sp(P, h.mark120);
    ref t1 = e.draw(P, chord);
    ref t2 = e.draw(h.opposite, chord);
    ref T = e.meet(t1, t2, branch::left);
    ref vc = e.draw(P, e.sp(O, T));
    return e.meet_toward(h.base_circle, vc, target);
}

ref erect_direction(expansion& e, const ref& A, const ref& B, branch br) {
    span r = e.sp(B, A);
    ref base = e.draw(B, r);
    ref c1 = e.draw(A, r);
    // First mark on the requested side of A->B.
    point pa = e.at(A), pb = e.at(B);
    point lcand = circle_circle_intersect(e.circle_value(base), e.circle_value(c1), branch::left,
                                          e.tol());
    bool left_matches = side_of_pts(e, lcand, pa, pb) == (br == branch::left ? side::left
                                                                             : side::right);
    ref m1 = e.meet(base, c1, left_matches ? branch::left : branch::right);
    ref c2 = e.draw(m1, r);
    ref m2 = e.meet_away(base, c2, pa);
    ref t1 = e.draw(m1, r);
    ref t2 = e.draw(m2, r);
    return e.meet_away(t1, t2, pb);
}

ref midpoint(expansion& e, const ref& A, const ref& B, int variant) {
    span ab = e.sp(A, B);
    switch (variant) {
        case 1: {
            ref C = antipode(e, A, B);
            ref D = antipode(e, B, A);
            ref cc = e.draw(C, e.sp(C, B));
            ref cd = e.draw(D, e.sp(D, A));
            ref E = e.meet(cc, cd, branch::left);
            ref c1 = e.draw(C, ab);
            ref c2 = e.draw(E, ab);
            ref P1 = e.meet(c1, c2, branch::left); // tangency: midpoint of CE
            ref c3 = e.draw(D, ab);
            ref P2 = e.meet(c2, c3, branch::left); // tangency: midpoint of ED
            ref m1 = e.draw(P1, ab);
            ref m2 = e.draw(P2, ab);
            return e.meet_away(m1, m2, e.at(E));
        }
        case 2: {
            ref Eext = antipode(e, B, A); // 2B - A, so |A Eext| = 2|AB|
            ref c0 = e.draw(A, ab);
            ref ce = e.draw(Eext, e.sp(Eext, A));
            ref F1 = e.meet(c0, ce, branch::left);
            ref F2 = e.meet(c0, ce, branch::right);
            ref f1 = e.draw(F1, e.sp(F1, A));
            ref f2 = e.draw(F2, e.sp(F2, A));
            return e.meet_away(f1, f2, e.at(A)); // inversion of Eext in circle(A,|AB|)
        }
        case 3: {
            ref ca = e.draw(A, ab);
            ref cb = e.draw(B, ab);
            ref C1 = e.meet(ca, cb, branch::left);
            ref C2 = e.meet(ca, cb, branch::right);
            ref O1 = midpoint(e, C1, B, 1);
            ref O2 = midpoint(e, C2, B, 1);
            ref k1 = e.draw(O1, e.sp(O1, B));
            ref k2 = e.draw(O2, e.sp(O2, B));
            // Thales circles on diameters C1B, C2B meet at B and at the foot
            // of the perpendicular from B onto C1C2, which is the midpoint.
            return e.meet_away(k1, k2, e.at(B));
        }
        default:
            throw error(errc::unsupported, "midpoint has variants 1..3");
    }
}

circle_handle circle_on_diameter(expansion& e, const ref& A, const ref& B) {
    ref M = midpoint(e, A, B, 1);
    span r = e.sp(M, A);
    ref c = e.draw(M, r);
    return {c, M, r};
}

ref reflect_across(expansion& e, const ref& P, const ref& U, const ref& V) {
    if (side_of_pts(e, e.at(P), e.at(U), e.at(V)) == side::on) return P;
    ref cu = e.draw(U, e.sp(U, P));
    ref cv = e.draw(V, e.sp(V, P));
    return e.meet_away(cu, cv, e.at(P));
}

ref foot_of_perpendicular(expansion& e, const ref& A, const ref& B, const ref& C) {
    if (distance(e.at(B), e.at(C)) <= e.tol().eps())
        throw error(errc::degenerate_line, "foot line endpoints coincide");
    if (side_of_pts(e, e.at(A), e.at(B), e.at(C)) == side::on) return A;
    ref D = reflect_across(e, A, B, C);
    return midpoint(e, A, D, 1);
}

ref tangent_point(expansion& e, const ref& A, const circle_handle& k, branch br) {
    const circle kc = e.circle_value(k.circ);
    if (distance(e.at(A), kc.center) <= kc.radius + e.tol().eps())
        throw error(errc::point_inside_or_on, "tangent point requires an external point");
    ref D = midpoint(e, A, k.center, 1);
    ref th = e.draw(D, e.sp(D, A));
    return e.meet(k.circ, th, br); // axis center->midpoint, so left is its left side
}

namespace {

// Variant 1 body: requires len <= |AB| (both within the tangency band).
ref perpendicular_at_v1(expansion& e, const ref& A, const ref& B, const span& len, branch br) {
    const double d = e.length(len);
    const double a = e.length(e.sp(A, B));
    const double band = 4.0 * e.tol().eps();
    if (std::fabs(d - a) <= band) return quarter_point(e, A, B, br);
    ref M = midpoint(e, A, B, 1);
    ref th = e.draw(M, e.sp(M, A));
    ref arcb = e.draw(A, len);
    ref C = e.meet(th, arcb, branch::left);
    ref L = quarter_point(e, M, B, branch::left); // crown of the semicircle
    ref D = antipode(e, L, B);
    ref cl = e.draw(L, e.sp(L, B));
    ref cd = e.draw(D, e.sp(B, C));
    ref F = e.meet(cl, cd, branch::left);
    ref cb = e.draw(B, e.sp(B, F));
    return e.meet(arcb, cb, br); // axis A->B, so br lands on the requested side
}

ref perpendicular_at_v2(expansion& e, const ref& A, const ref& B, const span& len, branch br) {
    const double d = e.length(len);
    const double a = e.length(e.sp(A, B));
    if (d > std::sqrt(3.0) * a * (1.0 - 1e-12))
        throw error(errc::length_out_of_range,
                    "second construction needs length <= sqrt(3)|AB|");
    antipode_result h = antipode_full(e, B, A); // semicircle about B through A
    ref E = h.opposite;                          // 2B - A
    ref P = h.mark60;                            // chord |EP| = sqrt(3)|AB|
    circle_handle th = circle_on_diameter(e, E, P);
    ref cq = e.draw(P, len);
    ref Q = e.meet(th.circ, cq, branch::left);
    ref ce = e.draw(E, e.sp(E, Q));
    ref F = e.meet(h.base_circle, ce, branch::left);
    ref arcb = e.draw(A, len);
    ref cb = e.draw(B, e.sp(A, F));
    return e.meet(arcb, cb, br);
}

} // namespace

ref perpendicular_at(expansion& e, const ref& A, const ref& B, const span& len, branch br,
                     int variant) {
    const double d = e.length(len);
    const double a = e.length(e.sp(A, B));
    if (d <= e.tol().eps())
        throw error(errc::degenerate_input, "perpendicular length below tolerance floor");
    if (variant == 1) {
        if (d > a * (1.0 + 1e-12))
            throw error(errc::length_out_of_range, "first construction needs length <= |AB|");
        return perpendicular_at_v1(e, A, B, len, br);
    }
    if (variant == 2) return perpendicular_at_v2(e, A, B, len, br);
    // Auto: double the base segment until the length fits variant 1.
    if (d <= a * (1.0 + 1e-12)) return perpendicular_at_v1(e, A, B, len, br);
    span grown = grow_past(e, e.sp(A, B), 1.02 * d);
    return perpendicular_at_v1(e, A, grown.b, len, br);
}

ref perpendicular_at_toward(expansion& e, const ref& A, const ref& B, const span& len,
                            point target) {
    point pa = e.at(A), pb = e.at(B);
    const double a = distance(pa, pb);
    point n = perp((1.0 / a) * (pb - pa));
    const double d = e.length(len);
    branch br = distance(pa + d * n, target) <= distance(pa + (-d) * n, target)
                    ? branch::left
                    : branch::right;
    return perpendicular_at(e, A, B, len, br, 0);
}

ref lay_dir(expansion& e, const ref& A, const ref& B, const span& d, int dir) {
    const double dd = e.length(d);
    const double a = e.length(e.sp(A, B));
    const double band = 4.0 * e.tol().eps();
    if (dd <= e.tol().eps())
        throw error(errc::degenerate_input, "lay-off distance below tolerance floor");
    if (dir > 0 && std::fabs(dd - a) <= band) return B;
    point pa = e.at(A), pb = e.at(B);
    point u = (1.0 / a) * (pb - pa);
    point target = dir > 0 ? pa + dd * u : pa + (-dd) * u;
    ref K = perpendicular_at(e, A, B, d, branch::left, 0);
    return quarter_point_toward(e, A, K, target);
}

ref lay_along(expansion& e, const ref& A, const ref& B, const span& d) {
    return lay_dir(e, A, B, d, +1);
}

ref extend_beyond(expansion& e, const ref& A, const ref& B, const span& d) {
    return lay_dir(e, A, B, d, -1);
}

ref cut_toward(expansion& e, const ref& A, const ref& B, const span& d) {
    const double dd = e.length(d);
    const double a = e.length(e.sp(A, B));
    if (dd >= a * (1.0 - 1e-12))
        throw error(errc::length_out_of_range, "cut distance must be strictly inside");
    return lay_dir(e, A, B, d, +1);
}

ref copy_angle(expansion& e, const ref& B, const ref& A, const ref& C, const ref& E,
               const ref& D, branch br) {
    span arm = e.sp(A, B);
    const double r = e.length(arm);
    if (r <= e.tol().eps() || e.length(e.sp(A, C)) <= e.tol().eps())
        throw error(errc::degenerate_input, "angle arms collapse");
    ref Cn = lay_along(e, A, C, arm);
    const double chord = e.length(e.sp(B, Cn));
    if (chord <= e.tol().eps())
        throw error(errc::degenerate_input, "angle opening below tolerance floor");
    ref Dn = lay_along(e, E, D, arm);
    ref ce = e.draw(E, arm);
    ref cd = e.draw(Dn, e.sp(B, Cn));
    return e.meet(ce, cd, br); // axis E->D', so br is the side of the target ray
}

span len_sum(expansion& e, const span& x, const span& y) {
    ref R = lay_dir(e, x.b, x.a, y, -1);
    return e.sp(x.a, R);
}

span len_sub(expansion& e, const span& x, const span& y) {
    if (e.length(y) >= e.length(x) * (1.0 - 1e-12))
        throw error(errc::length_out_of_range, "length difference is not positive");
    ref M = lay_dir(e, x.a, x.b, y, +1);
    return e.sp(M, x.b);
}

span len_half(expansion& e, const span& x) {
    ref M = midpoint(e, x.a, x.b, 1);
    return e.sp(x.a, M);
}

span len_scale(expansion& e, const span& x, int k) {
    if (k == 1) return x;
    ref X = extend_chain(e, x.a, x.b, k);
    return e.sp(x.a, X);
}

span len_hyp(expansion& e, const span& a, const span& b) {
    ref K = perpendicular_at(e, a.a, a.b, b, branch::left, 0);
    return e.sp(a.b, K);
}

span len_leg(expansion& e, const span& hyp, const span& leg) {
    if (e.length(leg) >= e.length(hyp) * (1.0 - 1e-12))
        throw error(errc::length_out_of_range, "leg must be shorter than the hypotenuse");
    circle_handle th = circle_on_diameter(e, hyp.a, hyp.b);
    ref cl = e.draw(hyp.a, leg);
    ref C = e.meet(th.circ, cl, branch::left);
    return e.sp(C, hyp.b);
}

span geometric_mean(expansion& e, const span& p, const span& q) {
    const double vp = e.length(p), vq = e.length(q);
    if (vp <= e.tol().eps() || vq <= e.tol().eps())
        throw error(errc::nonpositive_length, "geometric mean needs positive lengths");
    if (std::fabs(vp - vq) <= 4.0 * e.tol().eps()) return p; // diagonal: gm(k,k) = k
    // Lay the two lengths in a straight line D--C--B and raise the
    // semicircle altitude over the junction.
    ref D = p.a;
    ref C = p.b;
    ref B = lay_dir(e, C, D, q, -1);
    ref F = midpoint(e, D, B, 1);
    ref Ept = antipode(e, C, F);
    ref cf = e.draw(F, e.sp(F, B));
    ref ce = e.draw(Ept, e.sp(B, F));
    ref H = e.meet(cf, ce, branch::left);
    return e.sp(C, H);
}

span fourth_proportional(expansion& e, const span& a, const span& b, const span& c) {
    const double va = e.length(a), vb = e.length(b), vc = e.length(c);
    if (va <= e.tol().eps() || vb <= e.tol().eps() || vc <= e.tol().eps())
        throw error(errc::nonpositive_length, "proportional needs positive lengths");
    // The chord must fit inside the diameter; doubling a and b together
    // leaves the result unchanged.
    span ak = a, bk = b;
    double scaled = va;
    int guard = 0;
    while (vc >= scaled * 0.98 && guard++ < 64) {
        ak = span{ak.a, antipode(e, ak.b, ak.a)};
        bk = span{bk.a, antipode(e, bk.b, bk.a)};
        scaled *= 2.0;
    }
    ref Q = ak.a;
    ref N = ak.b;
    circle_handle dia = circle_on_diameter(e, Q, N);
    ref cc = e.draw(Q, c);
    ref O = e.meet(dia.circ, cc, branch::left);
    ref P = lay_dir(e, Q, N, bk, +1);
    ref M = foot_of_perpendicular(e, P, Q, O);
    return e.sp(Q, M);
}

span third_proportional(expansion& e, const span& a, const span& b) {
    return fourth_proportional(e, a, b, b);
}

ref bisect_sector(expansion& e, const ref& B, const ref& A, const ref& D, int variant) {
    span arm = e.sp(A, B);
    if (e.length(arm) <= e.tol().eps() || e.length(e.sp(A, D)) <= e.tol().eps())
        throw error(errc::degenerate_input, "sector arms collapse");
    ref Dn = lay_along(e, A, D, arm);
    const double opening = distance(e.at(B), e.at(Dn));
    if (opening <= e.tol().eps())
        throw error(errc::degenerate_input, "sector opening below tolerance floor");
    ref E = midpoint(e, B, Dn, 1);
    if (distance(e.at(E), e.at(A)) <= 10.0 * e.tol().eps())
        throw error(errc::degenerate_input, "straight sector has no interior bisector");
    if (variant == 2) {
        span sum = len_sum(e, e.sp(A, Dn), e.sp(A, E));
        span t = third_proportional(e, sum, e.sp(Dn, E));
        return lay_dir(e, E, A, t, -1);
    }
    return lay_along(e, A, E, arm);
}

circum_result circumcenter(expansion& e, const ref& A, const ref& B, const ref& C) {
    point pa = e.at(A), pb = e.at(B), pc = e.at(C);
    point target = circumcenter_of(pa, pb, pc, e.tol()); // throws CollinearPoints
    ref D = foot_of_perpendicular(e, B, A, C);
    span bd2 = len_scale(e, e.sp(B, D), 2);
    span R = fourth_proportional(e, bd2, e.sp(A, B), e.sp(B, C));
    ref ca = e.draw(A, R);
    ref cb = e.draw(B, R);
    ref O = e.meet_toward(ca, cb, target);
    return {O, e.sp(O, A)};
}

ref bisect_arc(expansion& e, const ref& A, const ref& B, const circle_handle& k, branch br) {
    const circle kc = e.circle_value(k.circ);
    const double eps = e.tol().eps();
    if (std::fabs(distance(e.at(A), kc.center) - kc.radius) > eps ||
        std::fabs(distance(e.at(B), kc.center) - kc.radius) > eps)
        throw error(errc::points_not_on_circle, "arc endpoints must lie on the circle");
    ref E = midpoint(e, A, B, 1);
    ref near;
    if (distance(e.at(E), kc.center) <= 10.0 * eps) {
        near = quarter_point(e, k.center, A, branch::left);
    } else {
        near = lay_dir(e, k.center, E, k.radius, +1);
    }
    if (br == branch::left) return near;
    return antipode(e, k.center, near);
}

ref golden_point(expansion& e, const ref& A, const ref& C) {
    if (distance(e.at(A), e.at(C)) <= e.tol().eps())
        throw error(errc::degenerate_input, "segment endpoints coincide");
    ref D = quarter_point(e, C, A, branch::left); // square side CD over AC
    ref E = midpoint(e, C, D, 1);
    ref F = lay_dir(e, E, D, e.sp(A, E), -1);
    return lay_along(e, C, A, e.sp(C, F));
}

ref parallel_transfer(expansion& e, const ref& A, const ref& B, const ref& C) {
    if (distance(e.at(B), e.at(C)) <= e.tol().eps())
        throw error(errc::degenerate_line, "parallel target line collapses");
    point target = e.at(A) + e.at(B) - e.at(C);
    ref ca = e.draw(A, e.sp(B, C));
    ref cb = e.draw(B, e.sp(A, C));
    return e.meet_toward(ca, cb, target);
}

ref line_line(expansion& e, const ref& P1, const ref& P2, const ref& Q1, const ref& Q2) {
    point p1 = e.at(P1), p2 = e.at(P2), q1 = e.at(Q1), q2 = e.at(Q2);
    (void)line_line_intersection(p1, p2, q1, q2, e.tol()); // error taxonomy
    side s1 = side_of_pts(e, q1, p1, p2);
    side s2 = side_of_pts(e, q2, p1, p2);
    if (s1 == side::on) return Q1;
    if (s2 == side::on) return Q2;
    ref R1 = reflect_across(e, Q1, P1, P2);
    ref R2 = reflect_across(e, Q2, P1, P2);
    span h1 = e.sp(Q1, R1);
    span h2 = e.sp(Q2, R2);
    if (s1 != s2) {
        span total = len_sum(e, h1, h2);
        span t = fourth_proportional(e, total, e.sp(Q1, Q2), h1);
        return lay_dir(e, Q1, Q2, t, +1);
    }
    // Same side: walk from the farther point so the difference is positive.
    ref Fa = Q1, Fb = Q2;
    span ha = h1, hb = h2;
    if (e.length(h1) < e.length(h2)) {
        std::swap(Fa, Fb);
        std::swap(ha, hb);
    }
    span diff = len_sub(e, ha, hb);
    span t = fourth_proportional(e, diff, e.sp(Fa, Fb), ha);
    return lay_dir(e, Fa, Fb, t, +1);
}

ref line_circle(expansion& e, const ref& P1, const ref& P2, const circle_handle& k, branch br) {
    point p1 = e.at(P1), p2 = e.at(P2);
    const circle kc = e.circle_value(k.circ);
    point target = line_circle_intersection(p1, p2, kc, br, e.tol()); // error taxonomy
    point f = foot_on_line(kc.center, p1, p2);
    if (distance(kc.center, f) <= e.tol().eps()) {
        // Line through the center: diametral endpoints by arc bisection.
        ref U = distance(p1, kc.center) > e.tol().eps() ? P1 : P2;
        const double du = distance(e.at(U), kc.center);
        ref aux = du >= 0.5 * kc.radius ? e.draw(U, e.sp(U, k.center)) : e.draw(U, k.radius);
        ref Y1 = e.meet(k.circ, aux, branch::left);
        ref Y2 = e.meet(k.circ, aux, branch::right);
        ref E = midpoint(e, Y1, Y2, 1);
        ref X = lay_dir(e, k.center, E, k.radius, +1);
        if (distance(e.at(X), target) < kc.radius) return X;
        return antipode(e, k.center, X);
    }
    ref O2 = reflect_across(e, k.center, P1, P2);
    ref cref = e.draw(O2, k.radius);
    return e.meet_toward(k.circ, cref, target);
}

} // namespace edc::kit
