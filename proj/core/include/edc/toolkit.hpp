#pragma once

#include "edc/expansion.hpp"

namespace edc::kit {

// A circle together with the refs that define it, so later macros can
// reuse its center and opening.
struct circle_handle {
    ref circ;
    ref center;
    span radius;
};

struct antipode_result {
    ref opposite;    // 2*center - p
    ref mark60;      // first hexagon mark from p
    ref mark120;     // second hexagon mark
    ref base_circle; // circle(center, |center p|)
};

// Apex of the equilateral triangle on AB, on the chosen side of A->B.
ref equilateral_apex(expansion& e, const ref& A, const ref& B, branch br);

// Hexagon marking: three equal steps around circle(center, |center P|)
// reach the diametrically opposite point. Exactly four circles.
antipode_result antipode_full(expansion& e, const ref& center, const ref& P);
ref antipode(expansion& e, const ref& center, const ref& P);

// A + n*(B - A) by chained antipodes, n >= 1.
ref extend_chain(expansion& e, const ref& A, const ref& B, int n);

// Doubles a span in place until it reaches target length (log-many steps).
span grow_past(expansion& e, const span& s, double target);

// P rotated +-90 degrees about O (left = +90). The inscribed-square step.
ref quarter_point(expansion& e, const ref& O, const ref& P, branch br);
ref quarter_point_toward(expansion& e, const ref& O, const ref& P, point target);

// A point E with EB perpendicular to AB at B, |BE| = sqrt(3)|AB|, on the
// chosen side of A->B. Direction only; use perpendicular_at for a length.
ref erect_direction(expansion& e, const ref& A, const ref& B, branch br);

// Midpoint of AB; the three constructions agree but leave different step
// ledgers. variant: 1 diameter-circle tangency, 2 inversion, 3 chord feet.
ref midpoint(expansion& e, const ref& A, const ref& B, int variant = 1);

circle_handle circle_on_diameter(expansion& e, const ref& A, const ref& B);

// Mirror image of P across line UV; returns P itself if it lies on the line.
ref reflect_across(expansion& e, const ref& P, const ref& U, const ref& V);

// Foot of the perpendicular from A onto line BC (A itself if already on it).
ref foot_of_perpendicular(expansion& e, const ref& A, const ref& B, const ref& C);

// Point of tangency from external point A to circle k.
ref tangent_point(expansion& e, const ref& A, const circle_handle& k, branch br);

// K with AK perpendicular to AB and |AK| = len, on the chosen side.
// variant 1 needs len <= |AB|; variant 2 needs len <= sqrt(3)|AB|;
// variant 0 rescales AB internally and accepts any positive len.
ref perpendicular_at(expansion& e, const ref& A, const ref& B, const span& len, branch br,
                     int variant = 0);
// Same, but picks the side whose result lands nearer the target.
ref perpendicular_at_toward(expansion& e, const ref& A, const ref& B, const span& len,
                            point target);

// Point on the line AB at distance d from A; dir=+1 on the B side,
// dir=-1 on the opposite ray. Extends or cuts as needed.
ref lay_dir(expansion& e, const ref& A, const ref& B, const span& d, int dir);
ref lay_along(expansion& e, const ref& A, const ref& B, const span& d); // dir=+1
ref extend_beyond(expansion& e, const ref& A, const ref& B, const span& d); // dir=-1
ref cut_toward(expansion& e, const ref& A, const ref& B, const span& d); // requires d < |AB|

// F with angle(D' E F) equal to angle(B A C) and |EF| = |AB|, where D' is
// the point of ray E->D at distance |AB|. br picks the side of ray E->D.
ref copy_angle(expansion& e, const ref& B, const ref& A, const ref& C, const ref& E,
               const ref& D, branch br);

// Length arithmetic on spans (results live on the first span's axis).
span len_sum(expansion& e, const span& x, const span& y);
span len_sub(expansion& e, const span& x, const span& y); // |x| > |y|
span len_half(expansion& e, const span& x);
span len_scale(expansion& e, const span& x, int k);
span len_hyp(expansion& e, const span& a, const span& b);     // sqrt(a^2 + b^2)
span len_leg(expansion& e, const span& hyp, const span& leg); // sqrt(hyp^2 - leg^2)

// Semicircle-altitude constructions.
span geometric_mean(expansion& e, const span& p, const span& q);
span third_proportional(expansion& e, const span& a, const span& b);
span fourth_proportional(expansion& e, const span& a, const span& b, const span& c);

// Point C on the arc of radius |AB| about A that halves the sector B-A-D.
ref bisect_sector(expansion& e, const ref& B, const ref& A, const ref& D, int variant = 1);

struct circum_result {
    ref center;
    span radius;
};
circum_result circumcenter(expansion& e, const ref& A, const ref& B, const ref& C);

// Midpoint of the arc AB of k; left = minor arc, right = the far arc.
ref bisect_arc(expansion& e, const ref& A, const ref& B, const circle_handle& k, branch br);

// G on AC with |CA|*|GA| = |GC|^2.
ref golden_point(expansion& e, const ref& A, const ref& C);

// D = A + B - C: the parallelogram transfer that draws a parallel.
ref parallel_transfer(expansion& e, const ref& A, const ref& B, const ref& C);

// Straightedge eliminations.
ref line_line(expansion& e, const ref& P1, const ref& P2, const ref& Q1, const ref& Q2);
ref line_circle(expansion& e, const ref& P1, const ref& P2, const circle_handle& k, branch br);

} // namespace edc::kit
