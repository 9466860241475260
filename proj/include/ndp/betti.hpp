#ifndef NDP_BETTI_HPP
#define NDP_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndp/ideal.hpp"
#include "ndp/rank.hpp"

namespace ndp {

/// The lcm lattice of a monomial ideal: every least common multiple of a set
/// of minimal generators, plus the bottom element 1.  Elements are sorted by
/// (total degree, lex), so strict divisibility always points to a larger
/// index.
struct LcmLattice {
    int nvars = 0;
    std::vector<Monomial> elements; // elements[0] is the bottom
    std::vector<int> atom_ids;      // indices of the minimal generators

    int size() const { return static_cast<int>(elements.size()); }
    /// -1 when the multidegree is not a lattice element.
    int index_of(const Monomial& m) const;
    int degree(int id) const { return degrees_[static_cast<std::size_t>(id)]; }
    bool strictly_divides(int a, int b) const;

    // flat exponent storage, filled by lcm_lattice()
    std::vector<int> flat_exps_;
    std::vector<int> degrees_;
};

/// Join closure of the generators under lcm.  Throws BudgetExceededError when
/// the closure grows past max_lattice; PreconditionError for the zero and
/// unit ideals (their Betti tables never need a lattice).
LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t max_lattice = 20000);

struct BettiEntry {
    int row;             // homological index of the ideal: row 0 = generators
    Monomial multidegree;
    long long rank;
};

inline constexpr int kAllRows = 1 << 20;

/// Graded Betti numbers of an ideal I, indexed so that
/// beta_{i,m}(I) = beta_{i+1,m}(S/I).  Only nonzero entries are stored.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(std::vector<BettiEntry> entries, std::string field_id, int rows_computed);

    const std::vector<BettiEntry>& entries() const { return entries_; }
    const std::string& field_id() const { return field_id_; }
    /// Rows 0..rows_computed() are completely known (zero rows included).
    int rows_computed() const { return rows_computed_; }

    /// t_s: the top total degree in row s, or nullopt when the row is empty
    /// (the paper's convention t_s = -infinity).
    std::optional<int> t(int s) const;
    /// Total Betti number of a row.
    long long total(int row) const;
    /// (row, total degree) -> rank, summed over multidegrees.
    std::map<std::pair<int, int>, long long> by_total_degree() const;
    int max_row_present() const;

private:
    std::vector<BettiEntry> entries_;
    std::string field_id_;
    int rows_computed_ = -1;
};

struct OracleOptions {
    Field field = Field::q();
    /// Compute homological rows 0..max_row (kAllRows = the full table).
    int max_row = kAllRows;
    std::size_t max_lattice = 20000;
    /// Per-multidegree cap on enumerated faces of either complex.
    std::size_t max_faces = 5000000;
    /// 0 = use the OpenMP default; 1..n = exact thread count.
    int threads = 0;
};

/// Graded Betti numbers via the lcm lattice: beta_{i,m}(I) is the rank of the
/// reduced homology H~_{i-1} of the order complex of the open interval
/// (bottom, m), with H~_{-1} of the empty complex equal to the field (so the
/// generators get beta_0 = 1).
BettiTable graded_betti(const MonomialIdeal& I, const OracleOptions& opts = {});
/// Plain-loop reference implementation; graded_betti runs the same kernel
/// under OpenMP and must agree with this on every input.
BettiTable graded_betti_serial(const MonomialIdeal& I, const OracleOptions& opts = {});

/// Independent second oracle: for each lattice multidegree m, the homology of
/// the complex of generator sets whose lcm strictly divides m (the Taylor
/// strand below m).  Must agree with graded_betti on every input.
BettiTable strand_betti(const MonomialIdeal& I, const OracleOptions& opts = {});
BettiTable strand_betti_serial(const MonomialIdeal& I, const OracleOptions& opts = {});

/// t_s(I); nullopt encodes Tor_s = 0.
std::optional<int> t_s(const MonomialIdeal& I, int s, const OracleOptions& opts = {});

/// Castelnuovo-Mumford regularity: max over rows of t_s - s.  Requires a
/// fully computed table; undefined (throws) for the zero ideal.
int regularity(const BettiTable& table);
int regularity(const MonomialIdeal& I, const OracleOptions& opts = {});

struct NdpOffense {
    int s;
    int degree;
    Monomial multidegree;
};

struct NdpVerdict {
    bool holds = false;
    int d = 0;
    int p = 0;
    std::string field_id;
    /// Offending positions: s = 0 entries are generators of the wrong degree,
    /// s >= 1 entries are Betti positions above the linear strand.
    std::vector<NdpOffense> offenses;
};

/// Does I satisfy N_{d,p}: generated in degree d with t_s(I) = d + s for all
/// s <= p-1?  Rows with Tor_s = 0 never violate the condition (this keeps
/// N_{d,p} inherited by sub-ideals with short resolutions, e.g. a single
/// generator).  The zero ideal satisfies everything vacuously.
NdpVerdict satisfies_ndp(const MonomialIdeal& I, int d, int p,
                         const OracleOptions& opts = {});

/// The same verdict from an already-computed table (rows 0..p-1 required).
NdpVerdict ndp_from_table(const MonomialIdeal& I, const BettiTable& table, int d, int p);

} // namespace ndp

#endif
