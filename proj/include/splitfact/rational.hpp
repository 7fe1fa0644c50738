#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitfact {

using Int = long long;
using Rat = boost::rational<Int>;

// Boost 1.74's heterogeneous rational comparisons are written as mutually
// forwarding free templates; under C++20 reversed-candidate lookup the
// forwarded call resolves back to the same template and recurses forever.
// These exact-match overloads keep comparisons of Rat against integer
// literals (int or long long) away from the boost templates entirely; they
// call the homogeneous members directly.
namespace detail {
inline bool rat_eq(const Rat& a, const Rat& b) { return a.operator==(b); }
inline bool rat_lt(const Rat& a, const Rat& b) { return a.operator<(b); }
}  // namespace detail

#define SPLITFACT_RAT_CMP(T)                                                             \
    inline bool operator==(const Rat& a, T b) { return detail::rat_eq(a, Rat(b)); }      \
    inline bool operator==(T a, const Rat& b) { return detail::rat_eq(b, Rat(a)); }      \
    inline bool operator!=(const Rat& a, T b) { return !detail::rat_eq(a, Rat(b)); }     \
    inline bool operator!=(T a, const Rat& b) { return !detail::rat_eq(b, Rat(a)); }     \
    inline bool operator<(const Rat& a, T b) { return detail::rat_lt(a, Rat(b)); }       \
    inline bool operator<(T a, const Rat& b) { return detail::rat_lt(Rat(a), b); }       \
    inline bool operator>(const Rat& a, T b) { return detail::rat_lt(Rat(b), a); }       \
    inline bool operator>(T a, const Rat& b) { return detail::rat_lt(b, Rat(a)); }       \
    inline bool operator<=(const Rat& a, T b) { return !detail::rat_lt(Rat(b), a); }     \
    inline bool operator<=(T a, const Rat& b) { return !detail::rat_lt(b, Rat(a)); }     \
    inline bool operator>=(const Rat& a, T b) { return !detail::rat_lt(a, Rat(b)); }     \
    inline bool operator>=(T a, const Rat& b) { return !detail::rat_lt(Rat(a), b); }
SPLITFACT_RAT_CMP(int)
SPLITFACT_RAT_CMP(Int)
#undef SPLITFACT_RAT_CMP

// Vectors in the ambient coordinate space. Roots always have integer
// coordinates in the Bourbaki plates; coroots in general do not (G2).
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const IVec& b) { return dot(a, to_qvec(b)); }
inline Rat dot(const IVec& a, const QVec& b) { return dot(to_qvec(a), b); }
inline Rat dot(const IVec& a, const IVec& b) { return dot(to_qvec(a), to_qvec(b)); }

inline QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec scale(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline IVec negate(const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Divide an integer vector by the gcd of its entries.
inline IVec primitive(const IVec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) return v;
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Clear denominators and reduce to a primitive integer vector.
inline IVec clear_denominators(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = std::lcm(l, x.denominator());
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = (v[i] * l).numerator();
    return primitive(r);
}

inline bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.denominator() != 1) return false;
    return true;
}

inline IVec to_ivec(const QVec& v) {
    if (!is_integral(v)) throw std::domain_error("to_ivec: vector is not integral");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].numerator();
    return r;
}

// Solve M x = b over the rationals, M given by columns. Returns the unique
// solution when the columns are independent and the system is consistent;
// throws otherwise.
inline QVec solve_columns(const std::vector<QVec>& columns, const QVec& b) {
    size_t m = b.size(), n = columns.size();
    for (const auto& c : columns)
        if (c.size() != m) throw std::invalid_argument("solve_columns: dimension mismatch");
    // augmented matrix, rows of [M | b]
    QMat a(m, QVec(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
        a[i][n] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j <= n; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (a[i][n] != 0) throw std::domain_error("solve_columns: inconsistent system");
    if (pivot_col.size() != n) throw std::domain_error("solve_columns: columns not independent");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

// Rank of a set of rational vectors.
inline size_t rank_of(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return 0;
    QMat a;
    for (const auto& v : vecs) a.push_back(v);
    size_t m = a.size(), n = a[0].size(), row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        for (size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return row;
}

// Is v in the rational span of the given vectors?
inline bool in_span(const std::vector<QVec>& vecs, const QVec& v) {
    auto r0 = rank_of(vecs);
    auto with = vecs;
    with.push_back(v);
    return rank_of(with) == r0;
}

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

}  // namespace splitfact
