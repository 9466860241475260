#ifndef NDP_ALMOST_LINEAR_HPP
#define NDP_ALMOST_LINEAR_HPP

#include <string>
#include <vector>

#include "ndp/ideal.hpp"

namespace ndp {

/// Certificate for a primary equigenerated ideal with almost linear
/// resolution (N_{d,n-1}): the socle monomials of degree >= d.  Each must be
/// (d-1)-saturated and the set pairwise (d-1)-separated; the missing degree-d
/// monomials N(I) are then exactly the union of their d-shadows.
struct ShadowSystem {
    int nvars = 0;
    int d = 0;
    std::vector<Monomial> socle; // descending lex

    friend bool operator==(const ShadowSystem& a, const ShadowSystem& b) {
        return a.nvars == b.nvars && a.d == b.d && a.socle == b.socle;
    }
};

/// All degree-s divisors of any of the given monomials, descending lex.
std::vector<Monomial> s_shadow(const std::vector<Monomial>& mons, int s);

/// Every exponent of m is at least deg m - s.
bool is_s_saturated(const Monomial& m, int s);
/// deg gcd(a, b) < s; equivalently the s-shadows are disjoint.
bool are_s_separated(const Monomial& a, const Monomial& b, int s);

/// Throws CertificateError if the system violates its invariants.
void validate(const ShadowSystem& sys);

struct AlmostLinearAnalysis {
    enum class Violation { None, NotSaturated, NotSeparated, ShadowMismatch };

    bool valid = false;
    ShadowSystem system; // meaningful when valid
    Violation violation = Violation::None;
    /// The offending socle candidates, or the symmetric difference between
    /// N(I) and the shadow union.
    std::vector<Monomial> witnesses;
    std::string describe() const;
};

/// Decide N_{d,n-1} structurally for a primary equigenerated ideal: the
/// analysis is valid exactly when the ideal has almost linear resolution.
AlmostLinearAnalysis analyze_almost_linear(const MonomialIdeal& I);

/// The ideal generated by the degree-d monomials outside the shadow union.
/// Validates the certificate first.
MonomialIdeal build_from_shadows(const ShadowSystem& sys);

/// reg I = 1 + max socle degree; d for the empty system (I = m^d).
int regularity_almost_linear(const ShadowSystem& sys);

/// The sharp-regularity family: q = floor((d-1)/p), m = (x_1...x_n)^q * x_1^r
/// with r = d-1-qp, J the complete intersection of the (a_i + 1)-st powers,
/// and I = J truncated to degree d.  Satisfies N_{d,p} with
/// reg I = d + (n-p) q.  Requires 1 <= p <= min(n, d).
MonomialIdeal sharp_example(int n, int d, int p);

} // namespace ndp

#endif
