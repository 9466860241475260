#ifndef NDP_TESTS_SUPPORT_HPP
#define NDP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ndp/almost_linear.hpp"
#include "ndp/betti.hpp"
#include "ndp/ideal.hpp"
#include "ndp/io.hpp"

namespace ndptest {

using namespace ndp;

inline Monomial mono(int nvars, const std::string& text) {
    IdealDocument doc = parse_document("nvars " + std::to_string(nvars) + "\n" + text + "\n");
    return Monomial(doc.gens.at(0));
}

inline MonomialIdeal mk(int nvars, const std::vector<std::string>& mons) {
    std::string text = "nvars " + std::to_string(nvars) + "\n";
    for (const auto& m : mons) text += m + "\n";
    return to_ideal(parse_document(text));
}

inline bool tables_equal(const BettiTable& a, const BettiTable& b) {
    if (a.entries().size() != b.entries().size()) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        const auto& x = a.entries()[i];
        const auto& y = b.entries()[i];
        if (x.row != y.row || x.rank != y.rank || !(x.multidegree == y.multidegree))
            return false;
    }
    return true;
}

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int degree) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(pick(rng))];
    return Monomial(e);
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, int nvars, int max_gens,
                                  int max_degree) {
    std::uniform_int_distribution<int> ngens(1, max_gens);
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::vector<Monomial> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, nvars, deg(rng)));
    return MonomialIdeal::from_generators(nvars, gens);
}

/// Primary and equigenerated in degree d: the pure powers plus a random
/// subset of the other degree-d monomials.
inline MonomialIdeal random_primary_equigen(std::mt19937_64& rng, int nvars, int d,
                                            double keep_prob) {
    std::bernoulli_distribution keep(keep_prob);
    std::vector<Monomial> gens;
    for (const Monomial& w : monomials_of_degree(nvars, d)) {
        bool pure = false;
        for (int i = 0; i < nvars; ++i) pure = pure || w.exponent(i) == d;
        if (pure || keep(rng)) gens.push_back(w);
    }
    return MonomialIdeal::from_generators(nvars, gens);
}

/// All valid shadow systems in nvars variables at degree d: subsets of the
/// (d-1)-saturated monomials of degree >= d that are pairwise separated.
inline std::vector<ShadowSystem> enumerate_shadow_systems(int nvars, int d) {
    std::vector<Monomial> pool;
    for (int D = d;; ++D) {
        // saturation forces every exponent >= D - (d-1)
        if (nvars * (D - d + 1) > D) break;
        for (const Monomial& w : monomials_of_degree(nvars, D))
            if (is_s_saturated(w, d - 1)) pool.push_back(w);
    }
    std::vector<ShadowSystem> out;
    std::vector<Monomial> current;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.push_back(ShadowSystem{nvars, d, current});
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (const Monomial& c : current)
                if (!are_s_separated(c, pool[i], d - 1)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& sys : out)
        std::sort(sys.socle.begin(), sys.socle.end(), LexDescending{});
    return out;
}

/// Brute-force lcm lattice by full subset enumeration (exponential; only for
/// cross-checking the closure construction on small inputs).
inline std::vector<Monomial> brute_force_lattice(const MonomialIdeal& I) {
    const auto& gens = I.generators();
    const std::size_t g = gens.size();
    std::vector<Monomial> out;
    std::vector<std::vector<int>> seen;
    for (std::size_t mask = 0; mask < (1ull << g); ++mask) {
        Monomial m = Monomial::one(I.nvars());
        for (std::size_t i = 0; i < g; ++i)
            if (mask & (1ull << i)) m = lcm(m, gens[i]);
        seen.push_back(m.exponents());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto& e : seen) out.emplace_back(e);
    return out;
}

} // namespace ndptest

#endif
