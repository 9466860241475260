#include "ndp/linearity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace ndp {

DualGraph dual_graph(const MonomialIdeal& I) {
    auto d = equigenerated_degree(I);
    if (!d)
        throw NotEquigeneratedError("dual_graph requires a single generator degree");
    DualGraph g;
    g.degree = std::max(*d, 0);
    g.vertices = I.generators();
    const int n = static_cast<int>(g.vertices.size());
    g.adjacency.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (lcm(g.vertices[static_cast<std::size_t>(i)],
                    g.vertices[static_cast<std::size_t>(j)])
                    .degree() == g.degree + 1) {
                g.edges.emplace_back(i, j);
                g.adjacency[static_cast<std::size_t>(i)].push_back(j);
                g.adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    return g;
}

LinearityVerdict is_linearly_presented(const MonomialIdeal& I) {
    LinearityVerdict v;
    v.method = "dual-graph-path";
    DualGraph g = dual_graph(I);
    const int n = static_cast<int>(g.vertices.size());
    std::vector<char> allowed(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::deque<int> queue;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Monomial L = lcm(g.vertices[static_cast<std::size_t>(i)],
                             g.vertices[static_cast<std::size_t>(j)]);
            for (int k = 0; k < n; ++k)
                allowed[static_cast<std::size_t>(k)] =
                    divides(g.vertices[static_cast<std::size_t>(k)], L);
            std::fill(seen.begin(), seen.end(), 0);
            queue.clear();
            queue.push_back(i);
            seen[static_cast<std::size_t>(i)] = 1;
            bool reached = false;
            while (!queue.empty() && !reached) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
                    if (!allowed[static_cast<std::size_t>(w)] ||
                        seen[static_cast<std::size_t>(w)])
                        continue;
                    if (w == j) {
                        reached = true;
                        break;
                    }
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
            if (!reached) {
                v.linearly_presented = false;
                v.witness_pair = {g.vertices[static_cast<std::size_t>(i)],
                                  g.vertices[static_cast<std::size_t>(j)]};
                return v;
            }
        }
    }
    v.linearly_presented = true;
    return v;
}

namespace {

// all k-subsets of {0..n-1}; fn returns false to stop
void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

LinearityVerdict locality_check(const MonomialIdeal& I, int d, int p, LocalityMode mode,
                                const OracleOptions& opts, std::size_t max_subproblems) {
    auto dg = equigenerated_degree(I);
    if (!dg || (!I.is_zero() && *dg != d))
        throw NotEquigeneratedError("locality_check requires generators of degree d");
    LinearityVerdict v;
    v.linearly_presented = true;
    std::size_t budget = max_subproblems;

    if (mode == LocalityMode::Vars) {
        v.method = "locality-vars";
        const int r = static_cast<int>(
            std::min<long long>(static_cast<long long>(d) * p, I.nvars()));
        std::optional<std::vector<int>> bad;
        for_each_subset(I.nvars(), r, [&](const std::vector<int>& K) {
            if (budget-- == 0)
                throw BudgetExceededError("locality_check: too many variable subsets");
            if (!satisfies_ndp(restrict_vars(I, K), d, p, opts).holds) {
                bad = K;
                return false;
            }
            return true;
        });
        if (bad) {
            v.linearly_presented = false;
            v.witness_vars = *bad;
        }
        return v;
    }

    v.method = "locality-lcms";
    const auto& gens = I.generators();
    const int g = static_cast<int>(gens.size());
    std::set<std::vector<int>> seen;
    for (int k = 1; k <= std::min(p, g); ++k) {
        std::optional<Monomial> bad;
        for_each_subset(g, k, [&](const std::vector<int>& sigma) {
            Monomial m = gens[static_cast<std::size_t>(sigma[0])];
            for (std::size_t t = 1; t < sigma.size(); ++t)
                m = lcm(m, gens[static_cast<std::size_t>(sigma[t])]);
            if (!seen.insert(m.exponents()).second) return true;
            if (budget-- == 0)
                throw BudgetExceededError("locality_check: too many generator subsets");
            if (!satisfies_ndp(below(I, m), d, p, opts).holds) {
                bad = m;
                return false;
            }
            return true;
        });
        if (bad) {
            v.linearly_presented = false;
            v.witness_lcm = *bad;
            return v;
        }
    }
    return v;
}

namespace {

using Triple = std::array<int, 3>;
using Config = std::vector<Triple>;

// Smallest relabeling of a set of triples over its own support.
Config canonical_config(const Config& c) {
    std::vector<int> vars;
    for (const Triple& t : c)
        for (int x : t) vars.push_back(x);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const int s = static_cast<int>(vars.size());

    std::vector<int> perm(static_cast<std::size_t>(s));
    std::iota(perm.begin(), perm.end(), 0);
    Config best;
    do {
        Config relabeled;
        for (const Triple& t : c) {
            Triple u;
            for (int i = 0; i < 3; ++i) {
                int local = static_cast<int>(
                    std::lower_bound(vars.begin(), vars.end(), t[static_cast<std::size_t>(i)]) -
                    vars.begin());
                u[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(local)];
            }
            std::sort(u.begin(), u.end());
            relabeled.push_back(u);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Canonical forms of every subset of the two forbidden configurations.
const std::vector<std::pair<Config, int>>& forbidden_subset_forms() {
    static const std::vector<std::pair<Config, int>> forms = [] {
        const Config pattern1 = {{0, 1, 2}, {3, 4, 5}};
        const Config pattern2 = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}};
        std::vector<std::pair<Config, int>> out;
        auto add_subsets = [&out](const Config& pat, int id) {
            const std::size_t n = pat.size();
            for (std::size_t mask = 1; mask < (1u << n); ++mask) {
                Config sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) sub.push_back(pat[i]);
                out.emplace_back(canonical_config(sub), id);
            }
        };
        add_subsets(pattern1, 1);
        add_subsets(pattern2, 2);
        return out;
    }();
    return forms;
}

std::optional<int> match_forbidden(const Config& c) {
    if (c.size() > 4) return std::nullopt;
    Config canon = canonical_config(c);
    for (const auto& [form, id] : forbidden_subset_forms())
        if (form == canon) return id;
    return std::nullopt;
}

} // namespace

LinearityVerdict cubic_squarefree_lp(const MonomialIdeal& I) {
    if (!is_squarefree(I))
        throw NotSquarefreeError("cubic_squarefree_lp requires a square-free ideal");
    auto d = equigenerated_degree(I);
    if (!d || (!I.is_zero() && *d != 3))
        throw NotEquigeneratedError("cubic_squarefree_lp requires generators of degree 3");

    LinearityVerdict v;
    v.method = "cubic-squarefree";
    v.linearly_presented = true;
    if (I.num_generators() < 2) return v;

    std::vector<int> support;
    {
        std::vector<char> used(static_cast<std::size_t>(I.nvars()), 0);
        for (const Monomial& g : I.generators())
            for (int x : g.support()) used[static_cast<std::size_t>(x)] = 1;
        for (int i = 0; i < I.nvars(); ++i)
            if (used[static_cast<std::size_t>(i)]) support.push_back(i);
    }
    const int s = static_cast<int>(support.size());

    for (int k = 3; k <= std::min(s, 6); ++k) {
        std::optional<LinearityVerdict> found;
        for_each_subset(s, k, [&](const std::vector<int>& pick) {
            std::vector<int> K;
            for (int i : pick) K.push_back(support[static_cast<std::size_t>(i)]);
            MonomialIdeal J = restrict_vars(I, K);
            if (J.num_generators() < 2 || J.num_generators() > 4) return true;
            Config cfg;
            for (const Monomial& g : J.generators()) {
                auto sup = g.support();
                cfg.push_back({sup[0], sup[1], sup[2]});
            }
            auto pattern = match_forbidden(cfg);
            if (!pattern) return true;
            LinearityVerdict path = is_linearly_presented(J);
            if (path.linearly_presented) return true;
            LinearityVerdict bad;
            bad.linearly_presented = false;
            bad.method = "cubic-squarefree";
            bad.witness_vars = K;
            bad.pattern = pattern;
            bad.witness_pair = path.witness_pair;
            found = bad;
            return false;
        });
        if (found) return *found;
    }
    return v;
}

LinearityVerdict cubic_primary_lp(const MonomialIdeal& I) {
    if (!is_primary(I))
        throw NotPrimaryError("cubic_primary_lp requires an m-primary ideal");
    auto d = equigenerated_degree(I);
    if (!d || *d != 3)
        throw NotEquigeneratedError("cubic_primary_lp requires generators of degree 3");

    LinearityVerdict v;
    v.method = "cubic-primary";

    // (1) every non-square-free cubic lies in I
    for (const Monomial& w : monomials_of_degree(I.nvars(), 3)) {
        if (w.is_squarefree()) continue;
        if (!I.contains(w)) {
            v.linearly_presented = false;
            v.witness_lcm = w;
            return v;
        }
    }

    // (2) no four variables see exactly one square-free cubic
    std::optional<std::vector<int>> bad;
    if (I.nvars() >= 4) {
        for_each_subset(I.nvars(), 4, [&](const std::vector<int>& K) {
            int count = 0;
            for (const Monomial& g : I.generators()) {
                if (!g.is_squarefree()) continue;
                bool inside = true;
                for (int x : g.support())
                    if (std::find(K.begin(), K.end(), x) == K.end()) {
                        inside = false;
                        break;
                    }
                if (inside) ++count;
            }
            if (count == 1) {
                bad = K;
                return false;
            }
            return true;
        });
    }
    if (bad) {
        v.linearly_presented = false;
        v.witness_vars = *bad;
        return v;
    }
    v.linearly_presented = true;
    return v;
}

Ndd1Report ndd1_necessary(const MonomialIdeal& I, int d, int p) {
    if (d < 1 || p < 1) throw PreconditionError("ndd1_necessary requires d, p >= 1");
    Ndd1Report r;
    const int n = I.nvars();

    // (1) every degree-d monomial in at most p variables
    r.subset_powers.applicable = true;
    r.subset_powers.passed = true;
    for (const Monomial& w : monomials_of_degree(n, d)) {
        if (w.support_size() > p) continue;
        if (!I.contains(w)) {
            r.subset_powers.passed = false;
            r.subset_powers.witness = w;
            break;
        }
    }

    // (2) I = m^d when p >= min(n, d)
    if (p >= std::min(n, d)) {
        r.equals_power.applicable = true;
        MonomialIdeal md = power_of_maximal(n, d);
        r.equals_power.passed = (I == md);
        if (!r.equals_power.passed) {
            for (const Monomial& w : md.generators())
                if (!I.contains(w)) {
                    r.equals_power.witness = w;
                    break;
                }
        }
    }

    // (3) m^[d-p+1] m^{p-1} <= I when d >= p
    if (d >= p) {
        r.bracket_product.applicable = true;
        r.bracket_product.passed = true;
        MonomialIdeal need = product(bracket_power(n, d - p + 1), power(maximal_ideal(n), p - 1));
        for (const Monomial& w : need.generators())
            if (!I.contains(w)) {
                r.bracket_product.passed = false;
                r.bracket_product.witness = w;
                break;
            }
    }
    return r;
}

} // namespace ndp
