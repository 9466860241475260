#include "ndp/shelling.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ndp {

bool is_shelling_move(const MonomialIdeal& I, const Monomial& f) {
    auto d = equigenerated_degree(I);
    if (!d) throw NotEquigeneratedError("is_shelling_move requires equigenerated I");
    if (!I.is_zero() && f.degree() != *d)
        throw PreconditionError("is_shelling_move: deg f does not match the ideal");
    if (I.contains(f)) throw PreconditionError("is_shelling_move: f already lies in I");
    for (const Monomial& g : colon(I, f).generators())
        if (g.degree() != 1) return false;
    return true;
}

ShellingResult shelled_over(const MonomialIdeal& I, const MonomialIdeal& J,
                            std::size_t max_states) {
    if (I.nvars() != J.nvars())
        throw AmbientMismatchError("shelled_over across ambient rings");
    if (!J.contains(I))
        throw PreconditionError("shelled_over requires I contained in J");
    auto dI = equigenerated_degree(I);
    auto dJ = equigenerated_degree(J);
    if (!dI || !dJ || (!I.is_zero() && !J.is_zero() && *dI != *dJ))
        throw NotEquigeneratedError("shelled_over requires one common degree");

    // I and J are equigenerated, so containment is generator containment and
    // every intermediate ideal is gens(I) plus a subset of the missing ones.
    std::vector<Monomial> missing;
    for (const Monomial& g : J.generators())
        if (!I.contains(g)) missing.push_back(g);

    ShellingResult res;
    if (missing.empty()) {
        res.status = ShellStatus::Shelled;
        res.path = ShellingPath{I, {}};
        res.states_explored = 1;
        return res;
    }
    if (missing.size() > 64)
        throw BudgetExceededError("shelled_over supports at most 64 missing generators");

    const std::uint64_t goal = (missing.size() == 64)
                                   ? ~0ull
                                   : ((1ull << missing.size()) - 1);
    std::unordered_set<std::uint64_t> seen{0};
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
    std::deque<std::uint64_t> queue{0};

    auto ideal_of = [&](std::uint64_t mask) {
        std::vector<Monomial> gens = I.generators();
        for (std::size_t k = 0; k < missing.size(); ++k)
            if (mask & (1ull << k)) gens.push_back(missing[k]);
        return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
    };

    while (!queue.empty()) {
        std::uint64_t mask = queue.front();
        queue.pop_front();
        if (mask == goal) {
            std::vector<Monomial> moves;
            std::uint64_t cur = mask;
            while (cur != 0) {
                auto [prev, idx] = parent.at(cur);
                moves.push_back(missing[static_cast<std::size_t>(idx)]);
                cur = prev;
            }
            std::reverse(moves.begin(), moves.end());
            res.status = ShellStatus::Shelled;
            res.path = ShellingPath{I, std::move(moves)};
            res.states_explored = seen.size();
            return res;
        }
        MonomialIdeal cur = ideal_of(mask);
        for (std::size_t k = 0; k < missing.size(); ++k) {
            if (mask & (1ull << k)) continue;
            std::uint64_t next = mask | (1ull << k);
            if (seen.count(next)) continue;
            if (!is_shelling_move(cur, missing[k])) continue;
            if (seen.size() >= max_states) {
                res.status = ShellStatus::Exhausted;
                res.states_explored = seen.size();
                return res;
            }
            seen.insert(next);
            parent[next] = {mask, static_cast<int>(k)};
            queue.push_back(next);
        }
    }
    res.status = ShellStatus::Impossible;
    res.states_explored = seen.size();
    return res;
}

NoShellDecision noshell_decision(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw AmbientMismatchError("noshell_decision across ambient rings");
    if (!J.contains(I))
        throw PreconditionError("noshell_decision requires I contained in J");
    AlmostLinearAnalysis aI = analyze_almost_linear(I);
    if (!aI.valid)
        throw CertificateError("noshell_decision: I is not almost linear (" +
                               aI.describe() + ")");
    AlmostLinearAnalysis aJ = analyze_almost_linear(J);
    if (!aJ.valid)
        throw CertificateError("noshell_decision: J is not almost linear (" +
                               aJ.describe() + ")");
    if (aI.system.d != aJ.system.d)
        throw NotEquigeneratedError("noshell_decision requires one common degree");

    const int d = aI.system.d;
    std::vector<Monomial> nJ = missing_monomials(J, d);
    auto in_nJ = [&](const Monomial& w) {
        return std::binary_search(nJ.begin(), nJ.end(), w, LexDescending{});
    };

    NoShellDecision dec;
    dec.shellable = true;
    for (const Monomial& s : aI.system.socle) {
        std::vector<Monomial> shadow = s_shadow({s}, d);
        bool some_filled = false, all_filled = true;
        for (const Monomial& w : shadow) {
            if (in_nJ(w))
                all_filled = false;
            else
                some_filled = true;
        }
        if (!some_filled) continue; // shadow survives into N(J)
        if (!all_filled || shadow.size() != 1) {
            dec.shellable = false;
            dec.obstruction_socle = s;
            dec.obstruction_shadow = shadow;
            dec.singleton_moves.clear();
            return dec;
        }
        dec.singleton_moves.push_back(shadow.front());
    }
    return dec;
}

RigidityReport rigidity_check(const MonomialIdeal& I, const OracleOptions& opts) {
    AlmostLinearAnalysis a = analyze_almost_linear(I);
    if (!a.valid)
        throw CertificateError("rigidity_check: ideal is not almost linear (" +
                               a.describe() + ")");
    const int d = a.system.d;
    RigidityReport rep;
    rep.reg = regularity_almost_linear(a.system);
    if (rep.reg < d + 2)
        throw PreconditionError("rigidity_check requires reg I >= d + 2");
    for (const Monomial& f : missing_monomials(I, d)) {
        if (!is_shelling_move(I, f)) continue;
        int r = regularity(adjoin(I, f), opts);
        rep.moves.emplace_back(f, r);
        if (r != rep.reg) rep.violations.push_back(f);
    }
    return rep;
}

Polarization polarize(const MonomialIdeal& I) {
    Polarization pol;
    pol.base_vars = I.nvars();
    pol.width = std::max(1, max_exponent(I));
    const int n = I.nvars(), w = pol.width;
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) {
        std::vector<int> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(w), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < g.exponent(i); ++j)
                e[static_cast<std::size_t>(i) * static_cast<std::size_t>(w) +
                  static_cast<std::size_t>(j)] = 1;
        gens.emplace_back(std::move(e));
    }
    pol.ideal = MonomialIdeal::from_generators(n * w, std::move(gens));
    return pol;
}

MonomialIdeal depolarize(const MonomialIdeal& J, int base_vars, int width) {
    if (base_vars < 1 || width < 1 || J.nvars() != base_vars * width)
        throw PreconditionError("depolarize: grid shape does not match the ambient ring");
    std::vector<Monomial> gens;
    for (const Monomial& g : J.generators()) {
        std::vector<int> e(static_cast<std::size_t>(base_vars), 0);
        for (int i = 0; i < base_vars; ++i)
            for (int j = 0; j < width; ++j)
                e[static_cast<std::size_t>(i)] += g.exponent(i * width + j);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(base_vars, std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!is_squarefree(I))
        throw NotSquarefreeError("alexander_dual requires a square-free ideal");
    if (I.nvars() > 64)
        throw BudgetExceededError("alexander_dual supports at most 64 variables");
    // degenerate cases fall out of the generic loop: dual(0) = (1), dual((1)) = 0

    auto mask_of = [&](const Monomial& g) {
        std::uint64_t m = 0;
        for (int i : g.support()) m |= 1ull << i;
        return m;
    };
    auto minimalize_masks = [](std::vector<std::uint64_t>& v) {
        std::sort(v.begin(), v.end(), [](std::uint64_t a, std::uint64_t b) {
            return __builtin_popcountll(a) < __builtin_popcountll(b);
        });
        std::vector<std::uint64_t> keep;
        for (std::uint64_t m : v) {
            bool redundant = false;
            for (std::uint64_t k : keep)
                if ((k & m) == k) {
                    redundant = true;
                    break;
                }
            if (!redundant) keep.push_back(m);
        }
        v = std::move(keep);
    };

    // intersection of the variable primes P_{supp(g)}
    std::vector<std::uint64_t> current{0};
    for (const Monomial& g : I.generators()) {
        std::uint64_t sup = mask_of(g);
        std::vector<std::uint64_t> next;
        for (std::uint64_t a : current)
            for (int i = 0; i < I.nvars(); ++i)
                if (sup & (1ull << i)) next.push_back(a | (1ull << i));
        minimalize_masks(next);
        current = std::move(next);
    }

    std::vector<Monomial> gens;
    for (std::uint64_t m : current) {
        std::vector<int> e(static_cast<std::size_t>(I.nvars()), 0);
        for (int i = 0; i < I.nvars(); ++i)
            if (m & (1ull << i)) e[static_cast<std::size_t>(i)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

std::vector<std::vector<int>> dual_complex_facets(const MonomialIdeal& I) {
    if (!is_squarefree(I))
        throw NotSquarefreeError("dual_complex_facets requires a square-free ideal");
    std::vector<std::vector<int>> facets;
    for (const Monomial& g : I.generators()) {
        std::vector<int> f;
        for (int i = 0; i < I.nvars(); ++i)
            if (g.exponent(i) == 0) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return facets;
}

} // namespace ndp
