#ifndef NDP_IDEAL_HPP
#define NDP_IDEAL_HPP

#include <optional>
#include <vector>

#include "ndp/monomial.hpp"

namespace ndp {

/// A monomial ideal, stored as its unique minimal generating set.
///
/// Generators form an antichain under divisibility and are kept in
/// descending lex order, so equal ideals compare equal as values.
/// The zero ideal (no generators) and the unit ideal (generated by 1)
/// are both representable.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(int nvars);
    static MonomialIdeal unit(int nvars);
    /// Minimalizes: keeps only divisibility-minimal generators.
    static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    /// Membership: is w divisible by some generator?
    bool contains(const Monomial& w) const;
    /// Ideal containment J <= this.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

private:
    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

/// The maximal ideal m = (x_1, ..., x_n).
MonomialIdeal maximal_ideal(int nvars);
/// m^d, all monomials of degree d.
MonomialIdeal power_of_maximal(int nvars, int d);
/// The bracket power m^[t] = (x_1^t, ..., x_n^t).  Requires t >= 1.
MonomialIdeal bracket_power(int nvars, int t);
/// The principal ideal (f).
MonomialIdeal principal_ideal(const Monomial& f);

/// Keep the generators whose support lies in K, then minimalize.  The result
/// lives in the same ambient ring.
MonomialIdeal restrict_vars(const MonomialIdeal& I, const std::vector<int>& K);
/// Sub-ideal generated by the generators of I dividing m.
MonomialIdeal below(const MonomialIdeal& I, const Monomial& m);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int k);
/// I intersect J (pairwise lcms, minimalized).
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// Ideal sum (union of generators, minimalized).
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// Adjoin a single monomial: (I, f).
MonomialIdeal adjoin(const MonomialIdeal& I, const Monomial& f);

/// I intersect m^d.  Generators of degree >= d survive; a generator g of
/// lower degree is replaced by g * (all monomials of degree d - deg g).
MonomialIdeal truncate(const MonomialIdeal& I, int d);

/// I : f = ({ g / gcd(g, f) }), minimalized.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);
/// I : m, computed as the intersection of the I : x_i.
MonomialIdeal colon_maximal(const MonomialIdeal& I);

/// Does every variable have a pure power among the generators?  This is the
/// m-primary test for monomial ideals.
bool is_primary(const MonomialIdeal& I);
/// All generators in one degree; returns that degree (zero ideal: nullopt is
/// never returned, the zero ideal reports equigenerated with degree -1).
std::optional<int> equigenerated_degree(const MonomialIdeal& I);
bool is_squarefree(const MonomialIdeal& I);
int max_exponent(const MonomialIdeal& I);

/// All monomials w not in I such that x_i * w lies in I for every i.
/// Requires I primary (the search box is bounded by the pure-power
/// exponents).  Includes socle monomials of every degree.
std::vector<Monomial> socle_monomials(const MonomialIdeal& I, std::size_t max_box = 100000000);

/// N(I): the monomials of degree d that are not in I, descending lex.
std::vector<Monomial> missing_monomials(const MonomialIdeal& I, int d);

std::string to_string(const MonomialIdeal& I);

} // namespace ndp

#endif
