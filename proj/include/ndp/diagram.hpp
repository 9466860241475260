#ifndef NDP_DIAGRAM_HPP
#define NDP_DIAGRAM_HPP

#include <string>

#include "ndp/ideal.hpp"

namespace ndp {

/// SVG triangle of the degree-d monomials of a 3-variable equigenerated
/// ideal: black dots are generators, red dots the missing monomials N(I).
/// Layout: x^a y^b z^c sits in row a from the top at column c + b/2, unit
/// grid spacing.
std::string render_triangle_svg(const MonomialIdeal& I);

} // namespace ndp

#endif
