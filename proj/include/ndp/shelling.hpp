#ifndef NDP_SHELLING_HPP
#define NDP_SHELLING_HPP

#include <optional>
#include <string>
#include <vector>

#include "ndp/almost_linear.hpp"
#include "ndp/betti.hpp"
#include "ndp/ideal.hpp"

namespace ndp {

/// Is I -> (I, f) a shelling move, i.e. is I : f generated by a subset of the
/// variables?  Requires I equigenerated, deg f matching, and f not in I.
bool is_shelling_move(const MonomialIdeal& I, const Monomial& f);

enum class ShellStatus { Shelled, Impossible, Exhausted };

/// A witnessed shelling: each prefix of moves is a legal shelling move on the
/// ideal built so far.
struct ShellingPath {
    MonomialIdeal start;
    std::vector<Monomial> moves;
};

struct ShellingResult {
    ShellStatus status = ShellStatus::Impossible;
    std::optional<ShellingPath> path; // present when status == Shelled
    std::size_t states_explored = 0;
};

/// Breadth-first search for a shelling of J over I (both equigenerated in
/// one degree, I contained in J).  Exhausting the reachable state space
/// proves impossibility; hitting max_states reports Exhausted instead.
ShellingResult shelled_over(const MonomialIdeal& I, const MonomialIdeal& J,
                            std::size_t max_states = 1000000);

/// Structural shellability decision for two primary almost-linear ideals,
/// by comparing shadow systems: J is shelled over I exactly when
/// N(I) \ N(J) consists of complete singleton shadows.  The moves can then
/// be applied in any order.
struct NoShellDecision {
    bool shellable = false;
    std::vector<Monomial> singleton_moves;
    /// On failure: the socle monomial whose shadow obstructs, and the shadow.
    std::optional<Monomial> obstruction_socle;
    std::vector<Monomial> obstruction_shadow;
};

NoShellDecision noshell_decision(const MonomialIdeal& I, const MonomialIdeal& J);

/// Regularity rigidity: for a primary almost-linear ideal with
/// reg I >= d + 2, every legal shelling move keeps the regularity.
/// Enumerates all legal moves and checks each against the Betti oracle.
struct RigidityReport {
    int reg = 0;
    std::vector<std::pair<Monomial, int>> moves; // move, reg(I, f)
    std::vector<Monomial> violations;            // moves that changed reg
};

RigidityReport rigidity_check(const MonomialIdeal& I, const OracleOptions& opts = {});

/// Polarization x_i^e -> x_{i,1} ... x_{i,e} into an n x width grid of
/// variables, laid out row-major: (i, j) -> i * width + j.
struct Polarization {
    MonomialIdeal ideal;
    int base_vars = 0;
    int width = 0;
};

Polarization polarize(const MonomialIdeal& I);

/// Inverse grid map x_{i,j} -> x_i; depolarize(polarize(I)) == I.
MonomialIdeal depolarize(const MonomialIdeal& J, int base_vars, int width);

/// Alexander dual of a square-free ideal: the minimal monomial transversals
/// of the generator supports (the Stanley-Reisner ideal of the dual complex).
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Facets of the dual complex: the complements of the generator supports.
std::vector<std::vector<int>> dual_complex_facets(const MonomialIdeal& I);

} // namespace ndp

#endif
