#pragma once

#include <string>

#include "edc/program.hpp"

namespace edc {

// Text form of a construction program (`.edc` for compass programs,
// `.edc-rc` for ruler programs). One statement per line, `#` comments,
// lowercase keywords, decimal literals. `use` statements are expanded
// into compass steps at parse time against the file's given coordinates.
//
//   given A (0,0)
//   circle k1 = A rad A B
//   point C = meet k1 k2 left
//   line l = A B                    (ruler)
//   point X = meetll l1 l2          (ruler)
//   point Y = meetlc l k1 left      (ruler)
//   circle k = diam A B             (ruler)
//   circle k = thru A B C           (ruler)
//   use P1.15 (A, B) -> M
//   output C
//   assert collinear A B C
//   assert dist A B == dist A C
//   assert on C k1
//
// Names beginning with "__" are reserved for macro-generated points.
program parse(const std::string& text, program_kind kind = program_kind::compass);

// Canonical text; parse(format(p)) is structurally identical to p.
std::string format(const program& p);

// Shortest decimal form of x that parses back to exactly x.
std::string format_number(double x);

bool structurally_equal(const program& a, const program& b);

} // namespace edc
