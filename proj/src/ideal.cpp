#include "ndp/ideal.hpp"

#include <algorithm>
#include <map>

namespace ndp {

namespace {

// Antichain of divisibility-minimal elements, descending lex, duplicates removed.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> keep;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : keep) {
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(g);
    }
    std::sort(keep.begin(), keep.end(), LexDescending{});
    return keep;
}

} // namespace

MonomialIdeal MonomialIdeal::zero(int nvars) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    return I;
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    I.gens_ = {Monomial::one(nvars)};
    return I;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.nvars() != nvars)
            throw AmbientMismatchError("generator has wrong number of variables");
    MonomialIdeal I;
    I.nvars_ = nvars;
    I.gens_ = minimalize(std::move(gens));
    return I;
}

bool MonomialIdeal::contains(const Monomial& w) const {
    if (w.nvars() != nvars_)
        throw AmbientMismatchError("membership test across ambient rings");
    for (const Monomial& g : gens_)
        if (divides(g, w)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.nvars() != nvars_)
        throw AmbientMismatchError("containment test across ambient rings");
    for (const Monomial& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

MonomialIdeal maximal_ideal(int nvars) {
    std::vector<Monomial> gens;
    for (int i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i));
    return MonomialIdeal::from_generators(nvars, std::move(gens));
}

MonomialIdeal power_of_maximal(int nvars, int d) {
    return MonomialIdeal::from_generators(nvars, monomials_of_degree(nvars, d));
}

MonomialIdeal bracket_power(int nvars, int t) {
    if (t < 1) throw PreconditionError("bracket_power requires t >= 1");
    std::vector<Monomial> gens;
    for (int i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i, t));
    return MonomialIdeal::from_generators(nvars, std::move(gens));
}

MonomialIdeal principal_ideal(const Monomial& f) {
    return MonomialIdeal::from_generators(f.nvars(), {f});
}

MonomialIdeal restrict_vars(const MonomialIdeal& I, const std::vector<int>& K) {
    std::vector<bool> in_K(static_cast<std::size_t>(I.nvars()), false);
    for (int k : K) {
        if (k < 0 || k >= I.nvars())
            throw PreconditionError("restrict_vars: variable index out of range");
        in_K[static_cast<std::size_t>(k)] = true;
    }
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) {
        bool inside = true;
        for (int i = 0; i < I.nvars(); ++i)
            if (g.exponent(i) > 0 && !in_K[static_cast<std::size_t>(i)]) {
                inside = false;
                break;
            }
        if (inside) gens.push_back(g);
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal below(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators())
        if (divides(g, m)) gens.push_back(g);
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw AmbientMismatchError("product across ambient rings");
    std::vector<Monomial> gens;
    for (const Monomial& a : I.generators())
        for (const Monomial& b : J.generators()) gens.push_back(a * b);
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
    if (k < 0) throw PreconditionError("power requires k >= 0");
    MonomialIdeal result = MonomialIdeal::unit(I.nvars());
    for (int i = 0; i < k; ++i) result = product(result, I);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw AmbientMismatchError("intersect across ambient rings");
    std::vector<Monomial> gens;
    for (const Monomial& a : I.generators())
        for (const Monomial& b : J.generators()) gens.push_back(lcm(a, b));
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw AmbientMismatchError("sum across ambient rings");
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal adjoin(const MonomialIdeal& I, const Monomial& f) {
    std::vector<Monomial> gens = I.generators();
    gens.push_back(f);
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal truncate(const MonomialIdeal& I, int d) {
    if (d < 0) throw PreconditionError("truncate requires d >= 0");
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) {
        if (g.degree() >= d) {
            gens.push_back(g);
        } else {
            for (const Monomial& u : monomials_of_degree(I.nvars(), d - g.degree()))
                gens.push_back(g * u);
        }
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) gens.push_back(colon_quotient(g, f));
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal colon_maximal(const MonomialIdeal& I) {
    if (I.nvars() == 0 || I.is_zero()) return I;
    MonomialIdeal result = colon(I, Monomial::variable(I.nvars(), 0));
    for (int i = 1; i < I.nvars(); ++i)
        result = intersect(result, colon(I, Monomial::variable(I.nvars(), i)));
    return result;
}

bool is_primary(const MonomialIdeal& I) {
    for (int i = 0; i < I.nvars(); ++i) {
        bool found = false;
        for (const Monomial& g : I.generators())
            if (g.exponent(i) == g.degree()) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return !I.is_zero() || I.nvars() == 0;
}

std::optional<int> equigenerated_degree(const MonomialIdeal& I) {
    if (I.is_zero()) return -1;
    int d = I.generators().front().degree();
    for (const Monomial& g : I.generators())
        if (g.degree() != d) return std::nullopt;
    return d;
}

bool is_squarefree(const MonomialIdeal& I) {
    for (const Monomial& g : I.generators())
        if (!g.is_squarefree()) return false;
    return true;
}

int max_exponent(const MonomialIdeal& I) {
    int m = 0;
    for (const Monomial& g : I.generators())
        for (int i = 0; i < I.nvars(); ++i) m = std::max(m, g.exponent(i));
    return m;
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& I, std::size_t max_box) {
    if (!is_primary(I))
        throw NotPrimaryError("socle_monomials requires an m-primary ideal");
    int n = I.nvars();
    // x_i^{a_i} in I; socle candidates have i-th exponent < a_i.
    std::vector<int> bound(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (const Monomial& g : I.generators())
            if (g.exponent(i) == g.degree())
                best = (best < 0) ? g.degree() : std::min(best, g.degree());
        bound[static_cast<std::size_t>(i)] = best;
    }
    std::size_t box = 1;
    for (int i = 0; i < n; ++i) {
        box *= static_cast<std::size_t>(bound[static_cast<std::size_t>(i)]);
        if (box > max_box)
            throw BudgetExceededError("socle search box exceeds " + std::to_string(max_box));
    }
    std::vector<Monomial> socle;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
        Monomial cand{w};
        if (!I.contains(cand)) {
            bool all_in = true;
            for (int i = 0; i < n && all_in; ++i)
                all_in = I.contains(cand * Monomial::variable(n, i));
            if (all_in) socle.push_back(cand);
        }
        int i = 0;
        while (i < n && w[static_cast<std::size_t>(i)] + 1 >= bound[static_cast<std::size_t>(i)]) {
            w[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++w[static_cast<std::size_t>(i)];
    }
    std::sort(socle.begin(), socle.end(), LexDescending{});
    return socle;
}

std::vector<Monomial> missing_monomials(const MonomialIdeal& I, int d) {
    std::vector<Monomial> out;
    for (const Monomial& w : monomials_of_degree(I.nvars(), d))
        if (!I.contains(w)) out.push_back(w);
    return out;
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "(0)";
    std::string s = "(";
    bool first = true;
    for (const Monomial& g : I.generators()) {
        if (!first) s += ", ";
        first = false;
        s += to_string(g);
    }
    return s + ")";
}

} // namespace ndp
