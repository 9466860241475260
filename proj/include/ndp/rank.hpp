#ifndef NDP_RANK_HPP
#define NDP_RANK_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ndp/errors.hpp"

namespace ndp {

/// Coefficient field for homology ranks: the rationals (default) or a prime
/// field F_p.  Rational ranks are computed by integer-preserving elimination,
/// so they are exact.
struct Field {
    bool rational = true;
    std::uint32_t prime = 0;

    static Field q() { return Field{true, 0}; }
    static Field fp(std::uint32_t p);
    /// "q" or "f<p>"; also accepts "fp" as shorthand for f32003.
    static Field parse(const std::string& s);

    std::string id() const { return rational ? "q" : "f" + std::to_string(prime); }
    friend bool operator==(const Field& a, const Field& b) {
        return a.rational == b.rational && a.prime == b.prime;
    }
};

/// Sparse integer matrix, rows of (column, value) pairs sorted by column.
struct SparseIntMatrix {
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> rows;

    void add_row(std::vector<std::pair<std::int32_t, std::int32_t>> r) {
        rows.push_back(std::move(r));
    }
};

/// Rank over the rationals.  Exact: row operations stay in the integers
/// (cross-multiplication followed by content division), with arbitrary
/// precision as fallback when 64-bit entries overflow.
long long rank_over_q(const SparseIntMatrix& m);

/// Rank over F_p.
long long rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

long long rank_over(const SparseIntMatrix& m, const Field& f);

} // namespace ndp

#endif
