#include "ndp/fractal.hpp"

#include <map>

namespace ndp {

namespace {

const MonomialIdeal& sier3_memo(int d, std::map<int, MonomialIdeal>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    MonomialIdeal I;
    if (d == 1) {
        I = maximal_ideal(3);
    } else if (d == 2) {
        I = power_of_maximal(3, 2);
    } else if (d % 2 == 1) {
        const int r = (d + 1) / 2;
        I = product(bracket_power(3, r), sier3_memo(r - 1, memo));
    } else {
        const int r = d / 2;
        MonomialIdeal left =
            product(principal_ideal(Monomial::variable(3, 0, r + 1)), sier3_memo(r - 1, memo));
        MonomialIdeal right = product(
            MonomialIdeal::from_generators(
                3, {Monomial::variable(3, 1, r), Monomial::variable(3, 2, r)}),
            sier3_memo(r, memo));
        I = sum(left, right);
    }
    return memo.emplace(d, std::move(I)).first->second;
}

} // namespace

MonomialIdeal sier3(int d) {
    if (d < 1) throw PreconditionError("sier3 requires d >= 1");
    std::map<int, MonomialIdeal> memo;
    return sier3_memo(d, memo);
}

int sier_general_degree(int p, int r) {
    return ((1 << r) - 1) * (p - 1) + (1 << r);
}

MonomialIdeal sier_general(int n, int p, int r) {
    if (n < 2 || p < 1 || r < 1)
        throw PreconditionError("sier_general requires n >= 2, p >= 1, r >= 1");
    if (r > 20) throw PreconditionError("sier_general: r too large");
    MonomialIdeal base = MonomialIdeal::unit(n);
    for (int j = 0; j < r; ++j) base = product(base, bracket_power(n, 1 << j));
    return product(power(base, p - 1), bracket_power(n, 1 << r));
}

int generator_count(const MonomialIdeal& I) { return I.num_generators(); }

SparsityReport sparsity_report(const MonomialIdeal& I) {
    auto d = equigenerated_degree(I);
    if (!d || *d < 0)
        throw NotEquigeneratedError("sparsity_report requires an equigenerated ideal");
    SparsityReport r;
    r.count = I.num_generators();
    r.degree = *d;
    // C(nvars - 1 + d, d)
    long long c = 1;
    for (int i = 1; i <= I.nvars() - 1; ++i)
        c = c * (*d + i) / i;
    r.dense_count = c;
    r.ratio = c > 0 ? static_cast<double>(r.count) / static_cast<double>(c) : 0.0;
    return r;
}

} // namespace ndp
