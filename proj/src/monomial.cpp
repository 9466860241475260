#include "ndp/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ndp {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (static_cast<int>(exps_.size()) > kMaxVars)
        throw PreconditionError("too many variables: " + std::to_string(exps_.size()));
    long long deg = 0;
    for (int e : exps_) {
        if (e < 0)
            throw PreconditionError("negative exponent in monomial");
        if (e > kMaxExponent)
            throw PreconditionError("exponent exceeds sanity cap");
        deg += e;
    }
    if (deg > kMaxExponent)
        throw PreconditionError("monomial degree exceeds sanity cap");
    degree_ = static_cast<int>(deg);
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index, int exponent) {
    if (index < 0 || index >= nvars)
        throw PreconditionError("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = exponent;
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
}

int Monomial::support_size() const {
    int n = 0;
    for (int e : exps_)
        if (e > 0) ++n;
    return n;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.nvars(); ++i)
        e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], b.exponent(i));
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.nvars(); ++i)
        e[static_cast<std::size_t>(i)] = std::min(e[static_cast<std::size_t>(i)], b.exponent(i));
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.nvars(); ++i)
        e[static_cast<std::size_t>(i)] += b.exponent(i);
    return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
    if (!divides(b, a))
        throw PreconditionError("exact_quotient: divisor does not divide");
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.nvars(); ++i)
        e[static_cast<std::size_t>(i)] -= b.exponent(i);
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.nvars(); ++i) {
        int g = std::min(e[static_cast<std::size_t>(i)], b.exponent(i));
        e[static_cast<std::size_t>(i)] -= g;
    }
    return Monomial(std::move(e));
}

bool lex_less(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    return a.exponents() < b.exponents();
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += ' ';
        s += "x" + std::to_string(i + 1);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

void collect_degree(int nvars, int pos, int remaining, std::vector<int>& current,
                    std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        current[static_cast<std::size_t>(pos)] = remaining;
        out.emplace_back(current);
        return;
    }
    // descending exponent on the current variable gives descending lex output
    for (int e = remaining; e >= 0; --e) {
        current[static_cast<std::size_t>(pos)] = e;
        collect_degree(nvars, pos + 1, remaining - e, current, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars <= 0) {
        if (degree == 0) return {Monomial(std::vector<int>{})};
        return {};
    }
    if (degree < 0) return {};
    std::vector<Monomial> out;
    std::vector<int> current(static_cast<std::size_t>(nvars), 0);
    collect_degree(nvars, 0, degree, current, out);
    return out;
}

} // namespace ndp
