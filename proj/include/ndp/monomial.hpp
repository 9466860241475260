#ifndef NDP_MONOMIAL_HPP
#define NDP_MONOMIAL_HPP

#include <string>
#include <vector>

#include "ndp/errors.hpp"

namespace ndp {

// Hard sanity caps.  The supported desk-scale envelope is much smaller
// (degrees up to ~64, up to 16 ambient variables); polarization grids may
// legitimately exceed 16 variables, so the caps are generous.
inline constexpr int kMaxVars = 4096;
inline constexpr int kMaxExponent = 1 << 20;

/// A monomial in a fixed number of variables: an exponent vector with the
/// total degree cached.  Immutable after construction.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index, int exponent = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    /// Indices of variables with positive exponent.
    std::vector<int> support() const;
    int support_size() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Componentwise max.  Throws AmbientMismatchError on nvars mismatch.
Monomial lcm(const Monomial& a, const Monomial& b);
/// Componentwise min.
Monomial gcd(const Monomial& a, const Monomial& b);
/// Does a divide b (componentwise <=)?
bool divides(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator a contributes to the colon ideal (a) : b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);

/// Lexicographic comparison of exponent vectors.
bool lex_less(const Monomial& a, const Monomial& b);
/// Descending lex, the canonical generator ordering for all output.
struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_less(b, a);
    }
};

/// "x1^2 x2"; the unit monomial prints as "1".
std::string to_string(const Monomial& m);

/// All monomials of the given total degree, in descending lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

inline void require_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw AmbientMismatchError("monomials live in different ambient rings (" +
                                   std::to_string(a.nvars()) + " vs " +
                                   std::to_string(b.nvars()) + " variables)");
}

} // namespace ndp

#endif
