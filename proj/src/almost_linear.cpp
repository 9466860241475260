#include "ndp/almost_linear.hpp"

#include <algorithm>
#include <set>

namespace ndp {

std::vector<Monomial> s_shadow(const std::vector<Monomial>& mons, int s) {
    if (s < 0) throw PreconditionError("s_shadow requires s >= 0");
    std::set<std::vector<int>> seen;
    std::vector<Monomial> out;
    for (const Monomial& m : mons) {
        if (m.degree() < s) continue;
        // enumerate degree-s divisors of m directly
        const int n = m.nvars();
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == n) {
                if (remaining == 0 && seen.insert(e).second) out.emplace_back(e);
                return;
            }
            int hi = std::min(m.exponent(pos), remaining);
            for (int v = hi; v >= 0; --v) {
                e[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, remaining - v);
            }
            e[static_cast<std::size_t>(pos)] = 0;
        };
        rec(rec, 0, s);
    }
    std::sort(out.begin(), out.end(), LexDescending{});
    return out;
}

bool is_s_saturated(const Monomial& m, int s) {
    for (int i = 0; i < m.nvars(); ++i)
        if (m.exponent(i) < m.degree() - s) return false;
    return true;
}

bool are_s_separated(const Monomial& a, const Monomial& b, int s) {
    return gcd(a, b).degree() < s;
}

void validate(const ShadowSystem& sys) {
    if (sys.d < 1) throw CertificateError("shadow system needs d >= 1");
    for (const Monomial& m : sys.socle) {
        if (m.nvars() != sys.nvars)
            throw CertificateError("socle monomial in the wrong ambient ring");
        if (m.degree() < sys.d)
            throw CertificateError("socle monomial " + to_string(m) +
                                   " has degree below d");
        if (!is_s_saturated(m, sys.d - 1))
            throw CertificateError("socle monomial " + to_string(m) + " is not " +
                                   std::to_string(sys.d - 1) + "-saturated");
    }
    for (std::size_t i = 0; i < sys.socle.size(); ++i)
        for (std::size_t j = i + 1; j < sys.socle.size(); ++j)
            if (!are_s_separated(sys.socle[i], sys.socle[j], sys.d - 1))
                throw CertificateError("socle monomials " + to_string(sys.socle[i]) +
                                       " and " + to_string(sys.socle[j]) +
                                       " are not " + std::to_string(sys.d - 1) +
                                       "-separated");
}

std::string AlmostLinearAnalysis::describe() const {
    if (valid) return "valid shadow system";
    std::string s;
    switch (violation) {
    case Violation::NotSaturated: s = "socle monomial not (d-1)-saturated"; break;
    case Violation::NotSeparated: s = "socle monomials not (d-1)-separated"; break;
    case Violation::ShadowMismatch: s = "shadow union differs from N(I)"; break;
    case Violation::None: s = "invalid"; break;
    }
    for (const Monomial& w : witnesses) s += " " + to_string(w);
    return s;
}

AlmostLinearAnalysis analyze_almost_linear(const MonomialIdeal& I) {
    if (!is_primary(I))
        throw NotPrimaryError("analyze_almost_linear requires an m-primary ideal");
    auto dd = equigenerated_degree(I);
    if (!dd || *dd < 1)
        throw NotEquigeneratedError("analyze_almost_linear requires equigenerated input");
    const int d = *dd;

    AlmostLinearAnalysis a;
    std::vector<Monomial> cands;
    for (const Monomial& w : socle_monomials(I))
        if (w.degree() >= d) cands.push_back(w);

    for (const Monomial& w : cands)
        if (!is_s_saturated(w, d - 1)) {
            a.violation = AlmostLinearAnalysis::Violation::NotSaturated;
            a.witnesses.push_back(w);
        }
    if (!a.witnesses.empty()) return a;

    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (!are_s_separated(cands[i], cands[j], d - 1)) {
                a.violation = AlmostLinearAnalysis::Violation::NotSeparated;
                a.witnesses.push_back(cands[i]);
                a.witnesses.push_back(cands[j]);
                return a;
            }

    std::vector<Monomial> shadow = s_shadow(cands, d);
    std::vector<Monomial> missing = missing_monomials(I, d);
    if (shadow != missing) { // both descending lex
        a.violation = AlmostLinearAnalysis::Violation::ShadowMismatch;
        std::set_symmetric_difference(shadow.begin(), shadow.end(), missing.begin(),
                                      missing.end(), std::back_inserter(a.witnesses),
                                      LexDescending{});
        return a;
    }

    a.valid = true;
    a.system = ShadowSystem{I.nvars(), d, std::move(cands)};
    return a;
}

MonomialIdeal build_from_shadows(const ShadowSystem& sys) {
    validate(sys);
    std::vector<Monomial> shadow = s_shadow(sys.socle, sys.d);
    std::vector<Monomial> gens;
    for (const Monomial& w : monomials_of_degree(sys.nvars, sys.d))
        if (!std::binary_search(shadow.begin(), shadow.end(), w, LexDescending{}))
            gens.push_back(w);
    return MonomialIdeal::from_generators(sys.nvars, std::move(gens));
}

int regularity_almost_linear(const ShadowSystem& sys) {
    if (sys.socle.empty()) return sys.d;
    int maxdeg = 0;
    for (const Monomial& m : sys.socle) maxdeg = std::max(maxdeg, m.degree());
    return 1 + maxdeg;
}

MonomialIdeal sharp_example(int n, int d, int p) {
    if (n < 1 || d < 1 || p < 1 || p > std::min(n, d))
        throw PreconditionError("sharp_example requires 1 <= p <= min(n, d)");
    const int q = (d - 1) / p;
    const int r = (d - 1) - q * p;
    std::vector<int> a(static_cast<std::size_t>(n), q);
    a[0] += r; // u = x_1^r, the lex-first degree-r monomial
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Monomial::variable(n, i, a[static_cast<std::size_t>(i)] + 1));
    MonomialIdeal J = MonomialIdeal::from_generators(n, std::move(gens));
    return truncate(J, d);
}

} // namespace ndp
