#ifndef NDP_LINEARITY_HPP
#define NDP_LINEARITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndp/betti.hpp"
#include "ndp/ideal.hpp"

namespace ndp {

/// Dual graph of an equigenerated ideal: vertices are the minimal generators,
/// with an edge exactly when deg lcm(f,g) = d + 1 (equivalently
/// deg gcd(f,g) = d - 1).
struct DualGraph {
    int degree = 0;
    std::vector<Monomial> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
};

DualGraph dual_graph(const MonomialIdeal& I);

/// Outcome of a combinatorial linearity certifier.  Witnesses are checkable
/// by re-running the stated condition on the witness alone.
struct LinearityVerdict {
    bool linearly_presented = false;
    std::string method;
    /// A generator pair with no admissible path.
    std::optional<std::pair<Monomial, Monomial>> witness_pair;
    /// The offending variable subset for restriction-based certifiers.
    std::optional<std::vector<int>> witness_vars;
    /// The offending lcm multidegree for lcm-locality.
    std::optional<Monomial> witness_lcm;
    /// Forbidden configuration id (1 or 2) for the cubic square-free test.
    std::optional<int> pattern;
};

/// Linear presentation via the path criterion: for every generator pair
/// (f,g) there is a dual-graph path from f to g through generators dividing
/// lcm(f,g).  Zero and single-generator ideals pass vacuously.
LinearityVerdict is_linearly_presented(const MonomialIdeal& I);

enum class LocalityMode { Vars, Lcms };

/// Locality reduction of N_{d,p}: check restrictions to every min(dp, nvars)
/// variables (Vars) or below(I, m) for every lcm m of at most p generators
/// (Lcms), each subproblem decided by the Betti oracle.
LinearityVerdict locality_check(const MonomialIdeal& I, int d, int p, LocalityMode mode,
                                const OracleOptions& opts = {},
                                std::size_t max_subproblems = 200000);

/// Square-free cubic certifier: linear presentation fails exactly when some
/// restriction to at most 6 variables is, up to relabeling, a subset of one
/// of the two forbidden configurations with a disconnected generator pair.
LinearityVerdict cubic_squarefree_lp(const MonomialIdeal& I);

/// Primary cubic certifier: I is linearly presented iff it contains every
/// non-square-free cubic and no restriction to four variables contains
/// exactly one square-free cubic.
LinearityVerdict cubic_primary_lp(const MonomialIdeal& I);

/// Necessary containments for a primary N_{d,p} ideal.  Failure refutes
/// N_{d,p}; passing is inconclusive.
struct Ndd1Check {
    bool applicable = false;
    bool passed = false;
    std::optional<Monomial> witness; // a required monomial missing from I
};

struct Ndd1Report {
    /// (1) I contains every degree-d monomial in at most p variables.
    Ndd1Check subset_powers;
    /// (2) when p >= min(n,d): I equals m^d.
    Ndd1Check equals_power;
    /// (3) when d >= p: I contains m^[d-p+1] m^{p-1}.
    Ndd1Check bracket_product;
    bool refuted() const {
        return (subset_powers.applicable && !subset_powers.passed) ||
               (equals_power.applicable && !equals_power.passed) ||
               (bracket_product.applicable && !bracket_product.passed);
    }
};

Ndd1Report ndd1_necessary(const MonomialIdeal& I, int d, int p);

} // namespace ndp

#endif
