#pragma once

// Classical root systems A, B, C, D and G2 in Bourbaki plate coordinates,
// with exact scalar products, coroots, positivity structures and lattice
// membership tests for Q^vee and its multiples.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitfact/intlattice.hpp"
#include "splitfact/rational.hpp"

namespace splitfact {

using Root = IVec;  // integer coordinates in the ambient space

struct Positivity {
    QVec functional;          // p; alpha > 0  <=>  (alpha, p) > 0
    std::vector<Root> base;   // simple roots, ordered
};

struct RootSystem {
    char type = 0;  // 'A','B','C','D','G'
    int rank = 0;
    int dim = 0;    // ambient dimension
    std::vector<Root> roots;
    std::vector<Root> base;               // standard Bourbaki base
    std::vector<QVec> simple_coroots;     // coroots of the base, = basis of Q^vee
    Positivity std_pos;
    std::set<Root> root_set;

    bool is_root(const Root& v) const { return root_set.count(v) != 0; }

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

inline QVec coroot(const RootSystem& r, const Root& alpha) {
    if (!r.is_root(alpha)) throw std::domain_error("coroot: not a root of " + r.label());
    Rat len2 = dot(alpha, alpha);
    return scale(Rat(2) / len2, to_qvec(alpha));
}

// Cartan pairing <beta^vee, gamma> = 2(beta,gamma)/(beta,beta), given the coroot.
inline Int pairing(const RootSystem& r, const QVec& beta_coroot, const Root& gamma) {
    Rat p = dot(beta_coroot, gamma);
    if (p.denominator() != 1) throw std::domain_error("pairing: non-integral Cartan pairing");
    (void)r;
    return p.numerator();
}

inline bool is_positive(const Positivity& pos, const Root& alpha) {
    Rat p = dot(pos.functional, alpha);
    if (p == 0) throw std::domain_error("positivity functional vanishes on a root");
    return p > 0;
}

inline std::vector<Root> positive_roots(const RootSystem& r, const Positivity& pos) {
    std::vector<Root> out;
    for (const auto& a : r.roots)
        if (is_positive(pos, a)) out.push_back(a);
    return out;
}

// Extract the simple roots of the positivity given by functional p:
// positives not expressible as a sum of two positives.
inline Positivity base_from_positivity(const RootSystem& r, const QVec& p) {
    for (const auto& a : r.roots)
        if (dot(p, a) == 0)
            throw std::domain_error("base_from_positivity: functional orthogonal to a root");
    Positivity pos;
    pos.functional = p;
    std::vector<Root> positives;
    for (const auto& a : r.roots)
        if (dot(p, a) > 0) positives.push_back(a);
    std::set<Root> pos_set(positives.begin(), positives.end());
    for (const auto& a : positives) {
        bool decomposable = false;
        for (const auto& b : positives) {
            Root c(a.size());
            for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
            if (pos_set.count(c)) { decomposable = true; break; }
        }
        if (!decomposable) pos.base.push_back(a);
    }
    std::sort(pos.base.begin(), pos.base.end(), [&](const Root& x, const Root& y) {
        return dot(p, x) < dot(p, y) || (dot(p, x) == dot(p, y) && x < y);
    });
    if (pos.base.size() != static_cast<size_t>(r.rank))
        throw std::logic_error("base_from_positivity: base size != rank");
    return pos;
}

namespace detail {

inline void add_pm(std::vector<Root>& roots, const Root& v) {
    roots.push_back(v);
    roots.push_back(negate(v));
}

inline Root unit(int dim, int i, Int c = 1) {
    Root v(dim, 0);
    v[i] = c;
    return v;
}

}  // namespace detail

inline RootSystem build(char type, int rank) {
    using detail::add_pm;
    using detail::unit;
    RootSystem r;
    r.type = type;
    r.rank = rank;
    QVec p;
    switch (type) {
        case 'A': {
            if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
            r.dim = rank + 1;
            for (int i = 0; i < r.dim; ++i)
                for (int j = i + 1; j < r.dim; ++j) {
                    Root v(r.dim, 0);
                    v[i] = 1;
                    v[j] = -1;
                    add_pm(r.roots, v);
                }
            for (int i = 0; i < rank; ++i) {
                Root v(r.dim, 0);
                v[i] = 1;
                v[i + 1] = -1;
                r.base.push_back(v);
            }
            for (int i = 0; i < r.dim; ++i) p.push_back(Rat(r.dim - i));
            break;
        }
        case 'B': {
            if (rank < 2) throw std::invalid_argument("B_n requires n >= 2");
            r.dim = rank;
            for (int i = 0; i < rank; ++i) add_pm(r.roots, unit(rank, i));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    Root v(rank, 0);
                    v[i] = 1;
                    v[j] = -1;
                    add_pm(r.roots, v);
                    v[j] = 1;
                    add_pm(r.roots, v);
                }
            for (int i = 0; i + 1 < rank; ++i) {
                Root v(rank, 0);
                v[i] = 1;
                v[i + 1] = -1;
                r.base.push_back(v);
            }
            r.base.push_back(unit(rank, rank - 1));
            for (int i = 0; i < rank; ++i) p.push_back(Rat(rank - i));
            break;
        }
        case 'C': {
            if (rank < 2) throw std::invalid_argument("C_n requires n >= 2");
            r.dim = rank;
            for (int i = 0; i < rank; ++i) add_pm(r.roots, unit(rank, i, 2));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    Root v(rank, 0);
                    v[i] = 1;
                    v[j] = -1;
                    add_pm(r.roots, v);
                    v[j] = 1;
                    add_pm(r.roots, v);
                }
            for (int i = 0; i + 1 < rank; ++i) {
                Root v(rank, 0);
                v[i] = 1;
                v[i + 1] = -1;
                r.base.push_back(v);
            }
            r.base.push_back(unit(rank, rank - 1, 2));
            for (int i = 0; i < rank; ++i) p.push_back(Rat(rank - i));
            break;
        }
        case 'D': {
            if (rank < 3) throw std::invalid_argument("D_n requires n >= 3");
            r.dim = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    Root v(rank, 0);
                    v[i] = 1;
                    v[j] = -1;
                    add_pm(r.roots, v);
                    v[j] = 1;
                    add_pm(r.roots, v);
                }
            for (int i = 0; i + 1 < rank; ++i) {
                Root v(rank, 0);
                v[i] = 1;
                v[i + 1] = -1;
                r.base.push_back(v);
            }
            {
                Root v(rank, 0);
                v[rank - 2] = 1;
                v[rank - 1] = 1;
                r.base.push_back(v);
            }
            // p = (n-1, n-2, ..., 1, 0): e_i +- e_j positive for i < j
            for (int i = 0; i < rank; ++i) p.push_back(Rat(rank - 1 - i));
            break;
        }
        case 'G': {
            if (rank != 2) throw std::invalid_argument("G has rank 2 only");
            r.rank = 2;
            r.dim = 3;
            add_pm(r.roots, Root{1, -1, 0});
            add_pm(r.roots, Root{0, 1, -1});
            add_pm(r.roots, Root{1, 0, -1});
            add_pm(r.roots, Root{2, -1, -1});
            add_pm(r.roots, Root{-1, 2, -1});
            add_pm(r.roots, Root{-1, -1, 2});
            r.base = {Root{1, -1, 0}, Root{-2, 1, 1}};
            // all six Bourbaki positives are positive against this functional
            p = {Rat(-1), Rat(-4), Rat(5)};
            break;
        }
        default:
            throw std::invalid_argument(std::string("unsupported type '") + type + "'");
    }
    std::sort(r.roots.begin(), r.roots.end());
    r.root_set.insert(r.roots.begin(), r.roots.end());
    size_t expected = 0;
    switch (type) {
        case 'A': expected = static_cast<size_t>(rank) * (rank + 1); break;
        case 'B':
        case 'C': expected = 2 * static_cast<size_t>(rank) * rank; break;
        case 'D': expected = 2 * static_cast<size_t>(rank) * (rank - 1); break;
        case 'G': expected = 12; break;
    }
    if (r.roots.size() != expected) throw std::logic_error("root count mismatch in build");
    for (const auto& a : r.base) r.simple_coroots.push_back(coroot(r, a));
    r.std_pos = Positivity{p, r.base};
    // sanity: the functional reproduces the plate base
    auto check = base_from_positivity(r, p);
    std::set<Root> b1(check.base.begin(), check.base.end()), b2(r.base.begin(), r.base.end());
    if (b1 != b2) throw std::logic_error("standard positivity does not match plate base");
    return r;
}

// Coordinates of an ambient vector in the simple-coroot basis. Throws if the
// vector is not in the rational span; the caller checks integrality for
// Q^vee membership.
inline QVec coroot_coordinates(const RootSystem& r, const QVec& v) {
    return solve_columns(r.simple_coroots, v);
}

// Membership in m * Q^vee for m = 1, 2, 4.
inline bool in_coroot_lattice(const RootSystem& r, const QVec& v, Int multiple = 1) {
    QVec c;
    try {
        c = coroot_coordinates(r, v);
    } catch (const std::domain_error&) {
        return false;
    }
    for (const auto& x : c) {
        Rat q = x / multiple;
        if (q.denominator() != 1) return false;
    }
    return true;
}

}  // namespace splitfact
