#include "ndp/rank.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace ndp {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Int64Overflow {};

// Arithmetic shims so one elimination routine runs both checked (int64,
// throws Int64Overflow) and exact (BigInt).
inline long long mul_t(const long long& a, const long long& b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline BigInt mul_t(const BigInt& a, const BigInt& b) { return a * b; }

inline long long sub_t(const long long& a, const long long& b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline BigInt sub_t(const BigInt& a, const BigInt& b) { return a - b; }

inline long long gcd_t(const long long& a, const long long& b) { return std::gcd(a, b); }
inline BigInt gcd_t(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

template <class T>
T abs_t(const T& v) {
    return v < 0 ? T(-v) : v;
}

// Divide a row by the gcd of its entries; keeps growth under control.
template <class T>
void normalize_content(std::vector<std::pair<std::int32_t, T>>& row) {
    if (row.empty()) return;
    T g = 0;
    for (const auto& e : row) {
        g = gcd_t(g, abs_t(e.second));
        if (g == 1) return;
    }
    for (auto& e : row) e.second /= g;
}

// r <- mr * r - mp * p, both sorted by column; the leading terms cancel.
template <class T>
std::vector<std::pair<std::int32_t, T>> combine(
    const std::vector<std::pair<std::int32_t, T>>& r, const T& mr,
    const std::vector<std::pair<std::int32_t, T>>& p, const T& mp) {
    std::vector<std::pair<std::int32_t, T>> out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, mul_t(mr, r[i].second));
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, sub_t(T(0), mul_t(mp, p[j].second)));
            ++j;
        } else {
            T v = sub_t(mul_t(mr, r[i].second), mul_t(mp, p[j].second));
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class T>
long long rank_integer(const SparseIntMatrix& m) {
    using Row = std::vector<std::pair<std::int32_t, T>>;
    std::vector<Row> work;
    work.reserve(m.rows.size());
    for (const auto& r : m.rows) {
        Row row;
        row.reserve(r.size());
        for (const auto& e : r)
            if (e.second != 0) row.emplace_back(e.first, T(e.second));
        if (!row.empty()) work.push_back(std::move(row));
    }
    std::sort(work.begin(), work.end(),
              [](const Row& a, const Row& b) { return a.size() < b.size(); });

    std::unordered_map<std::int32_t, Row> pivots;
    pivots.reserve(work.size());
    long long rank = 0;
    for (Row& row : work) {
        while (!row.empty()) {
            normalize_content(row);
            std::int32_t c = row.back().first;
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                ++rank;
                pivots.emplace(c, std::move(row));
                break;
            }
            const Row& piv = it->second;
            T a = row.back().second;
            T b = piv.back().second;
            T g = gcd_t(abs_t(a), abs_t(b));
            row = combine(row, T(b / g), piv, T(a / g));
        }
    }
    return rank;
}

} // namespace

Field Field::fp(std::uint32_t p) {
    if (p < 2) throw FieldError("field characteristic must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw FieldError(std::to_string(p) + " is not prime");
    return Field{false, p};
}

Field Field::parse(const std::string& s) {
    if (s == "q" || s == "Q") return q();
    if (s == "fp" || s == "Fp" || s == "FP") return fp(32003);
    if (s.size() > 1 && (s[0] == 'f' || s[0] == 'F')) {
        try {
            unsigned long p = std::stoul(s.substr(1));
            if (p > 0x7fffffffUL) throw FieldError("prime too large: " + s);
            return fp(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw FieldError("unknown field '" + s + "' (expected q, fp, or f<prime>)");
}

long long rank_over_q(const SparseIntMatrix& m) {
    try {
        return rank_integer<long long>(m);
    } catch (const Int64Overflow&) {
        return rank_integer<BigInt>(m);
    }
}

long long rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
    const std::int64_t P = p;
    auto norm = [&](std::int64_t v) {
        v %= P;
        return v < 0 ? v + P : v;
    };
    auto inv = [&](std::int64_t a) {
        std::int64_t t = 0, new_t = 1, r = P, new_r = norm(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return norm(t);
    };

    using Row = std::vector<std::pair<std::int32_t, std::int64_t>>;
    std::vector<Row> work;
    work.reserve(m.rows.size());
    for (const auto& r : m.rows) {
        Row row;
        for (const auto& e : r) {
            std::int64_t w = norm(e.second);
            if (w != 0) row.emplace_back(e.first, w);
        }
        if (!row.empty()) work.push_back(std::move(row));
    }
    std::sort(work.begin(), work.end(),
              [](const Row& a, const Row& b) { return a.size() < b.size(); });

    std::unordered_map<std::int32_t, Row> pivots;
    pivots.reserve(work.size());
    long long rank = 0;
    for (Row& row : work) {
        while (!row.empty()) {
            std::int32_t c = row.back().first;
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                std::int64_t s = inv(row.back().second); // pivot entry scaled to 1
                for (auto& e : row) e.second = e.second * s % P;
                ++rank;
                pivots.emplace(c, std::move(row));
                break;
            }
            const Row& piv = it->second;
            std::int64_t a = row.back().second;
            Row out;
            out.reserve(row.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    out.emplace_back(piv[j].first, norm(-a * piv[j].second % P));
                    ++j;
                } else {
                    std::int64_t v = norm(row[i].second - a * piv[j].second % P);
                    if (v != 0) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
    }
    return rank;
}

long long rank_over(const SparseIntMatrix& m, const Field& f) {
    return f.rational ? rank_over_q(m) : rank_mod_p(m, f.prime);
}

} // namespace ndp
