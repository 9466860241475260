#ifndef NDP_FRACTAL_HPP
#define NDP_FRACTAL_HPP

#include "ndp/ideal.hpp"

namespace ndp {

/// Sierpinski-type family in three variables, equigenerated in degree d:
///   I_1 = m, I_2 = m^2,
///   I_{2r-1} = m^[r] I_{r-1},
///   I_{2r}   = x_1^{r+1} I_{r-1} + (x_2^r, x_3^r) I_r.
/// Linearly presented for every d; at d = 2^r - 1 it is
/// m m^[2] ... m^[2^{r-1}] with exactly 3^r generators.
MonomialIdeal sier3(int d);

/// Closed-form sparse family in n variables:
///   (m m^[2] ... m^[2^{r-1}])^{p-1} m^[2^r],
/// equigenerated in degree (2^r - 1)(p - 1) + 2^r and satisfying N_{d,p}.
MonomialIdeal sier_general(int n, int p, int r);

/// Degree of the sier_general member.
int sier_general_degree(int p, int r);

/// Generator count next to the m^d count for the same degree.
struct SparsityReport {
    int count = 0;
    int degree = 0;
    long long dense_count = 0; // generators of m^d
    double ratio = 0.0;
};

int generator_count(const MonomialIdeal& I);
/// Requires an equigenerated ideal (it is compared against m^d).
SparsityReport sparsity_report(const MonomialIdeal& I);

} // namespace ndp

#endif
