#include "ndp/diagram.hpp"

#include <sstream>

namespace ndp {

std::string render_triangle_svg(const MonomialIdeal& I) {
    if (I.nvars() != 3)
        throw PreconditionError("diagram rendering needs exactly 3 variables");
    auto dd = equigenerated_degree(I);
    if (!dd || *dd < 1)
        throw NotEquigeneratedError("diagram rendering needs an equigenerated ideal");
    const int d = *dd;

    const double unit = 28.0;
    const double pad = 24.0;
    const double width = pad * 2 + unit * d;
    const double height = pad * 2 + unit * d;

    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(1);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    for (const Monomial& w : monomials_of_degree(3, d)) {
        const int a = w.exponent(0), b = w.exponent(1), c = w.exponent(2);
        const double x = pad + unit * (c + b / 2.0);
        const double y = pad + unit * a;
        const bool red = !I.contains(w);
        svg << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\""
            << (red ? 6.0 : 3.5) << "\" fill=\"" << (red ? "#cc2222" : "#000000")
            << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace ndp
