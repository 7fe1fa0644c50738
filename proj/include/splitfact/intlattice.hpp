#pragma once

// Exact integer lattice arithmetic: Hermite and Smith normal forms, integer
// kernels, lattice sums/intersections and finite abelian quotients. All
// matrices are dense, row-major, with long long entries; sizes here never
// exceed the rank of a root system (<= 9).

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "splitfact/rational.hpp"

namespace splitfact {

using Mat = std::vector<IVec>;  // row-major

inline Mat identity_mat(size_t n) {
    Mat m(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
    Mat c(m, IVec(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline IVec mat_apply(const Mat& a, const IVec& x) {
    IVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

// extended gcd: returns (g, u, v) with u*a + v*b = g >= 0
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    if (b == 0) return a < 0 ? std::make_tuple(-a, Int(-1), Int(0)) : std::make_tuple(a, Int(1), Int(0));
    auto [g, u, v] = ext_gcd(b, a % b);
    return {g, v, u - (a / b) * v};
}

// Column-style Hermite reduction: given generators of a sublattice of Z^r
// (as vectors), return an independent basis in column echelon form.
inline std::vector<IVec> hnf_basis(std::vector<IVec> cols, size_t r) {
    for (const auto& c : cols)
        if (c.size() != r) throw std::invalid_argument("hnf_basis: dimension mismatch");
    size_t piv = 0;
    for (size_t row = 0; row < r && piv < cols.size(); ++row) {
        size_t j = piv;
        while (j < cols.size() && cols[j][row] == 0) ++j;
        if (j == cols.size()) continue;
        std::swap(cols[piv], cols[j]);
        for (j = piv + 1; j < cols.size(); ++j) {
            while (cols[j][row] != 0) {
                auto [g, u, v] = ext_gcd(cols[piv][row], cols[j][row]);
                Int pc = cols[piv][row] / g, jc = cols[j][row] / g;
                for (size_t i = 0; i < r; ++i) {
                    Int np = u * cols[piv][i] + v * cols[j][i];
                    Int nj = pc * cols[j][i] - jc * cols[piv][i];
                    cols[piv][i] = np;
                    cols[j][i] = nj;
                }
            }
        }
        if (cols[piv][row] < 0)
            for (size_t i = 0; i < r; ++i) cols[piv][i] = -cols[piv][i];
        // reduce entries of earlier columns above this pivot
        for (size_t k = 0; k < piv; ++k) {
            Int q = cols[k][row] / cols[piv][row];
            if (cols[k][row] % cols[piv][row] < 0) --q;
            if (q != 0)
                for (size_t i = 0; i < r; ++i) cols[k][i] -= q * cols[piv][i];
        }
        ++piv;
    }
    cols.resize(piv);
    return cols;
}

struct SmithForm {
    Mat d;  // diagonal, d[i][i] >= 0, divisibility chain
    Mat u;  // unimodular, u * a * v = d
    Mat v;
};

inline SmithForm smith_form(Mat a) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    SmithForm s{a, identity_mat(m), identity_mat(n)};
    Mat& d = s.d;
    auto row_op = [&](size_t i, size_t j, Int u1, Int v1, Int u2, Int v2) {
        // rows i,j <- (u1*ri + v1*rj, u2*ri + v2*rj)
        for (size_t k = 0; k < n; ++k) {
            Int x = u1 * d[i][k] + v1 * d[j][k];
            Int y = u2 * d[i][k] + v2 * d[j][k];
            d[i][k] = x;
            d[j][k] = y;
        }
        for (size_t k = 0; k < m; ++k) {
            Int x = u1 * s.u[i][k] + v1 * s.u[j][k];
            Int y = u2 * s.u[i][k] + v2 * s.u[j][k];
            s.u[i][k] = x;
            s.u[j][k] = y;
        }
    };
    auto col_op = [&](size_t i, size_t j, Int u1, Int v1, Int u2, Int v2) {
        for (size_t k = 0; k < m; ++k) {
            Int x = u1 * d[k][i] + v1 * d[k][j];
            Int y = u2 * d[k][i] + v2 * d[k][j];
            d[k][i] = x;
            d[k][j] = y;
        }
        for (size_t k = 0; k < n; ++k) {
            Int x = u1 * s.v[k][i] + v1 * s.v[k][j];
            Int y = u2 * s.v[k][i] + v2 * s.v[k][j];
            s.v[k][i] = x;
            s.v[k][j] = y;
        }
    };
    // Minimal-pivot elimination: at step t, move the smallest nonzero entry
    // of the trailing submatrix to (t,t) and reduce its row and column by
    // Euclidean division. Any nonzero remainder strictly shrinks the next
    // pivot, so each step terminates; forcing the pivot to divide the whole
    // trailing submatrix before moving on yields the divisibility chain and
    // pushes zero divisors to the end.
    for (size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            size_t pi = t, pj = t;
            bool found = false;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (d[i][j] != 0 &&
                        (!found || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) break;  // trailing submatrix is zero
            if (pi != t) row_op(t, pi, 0, 1, 1, 0);
            if (pj != t) col_op(t, pj, 0, 1, 1, 0);
            bool again = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                row_op(i, t, 1, -(d[i][t] / d[t][t]), 0, 1);
                if (d[i][t] != 0) again = true;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                col_op(j, t, 1, -(d[t][j] / d[t][t]), 0, 1);
                if (d[t][j] != 0) again = true;
            }
            if (again) continue;
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n && divides; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_op(t, i, 1, 1, 0, 1);  // pull the bad row into row t
                        divides = false;
                    }
            if (divides) break;
        }
    }
    for (size_t i = 0; i < std::min(m, n); ++i) {
        if (d[i][i] < 0) {
            for (size_t k = 0; k < n; ++k) d[i][k] = -d[i][k];
            for (size_t k = 0; k < m; ++k) s.u[i][k] = -s.u[i][k];
        }
    }
    return s;
}

// Basis of { x in Z^n : A x = 0 } for an integer matrix A (rows).
inline std::vector<IVec> integer_kernel(const Mat& a) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    if (n == 0) return {};
    if (m == 0) {
        std::vector<IVec> basis;
        auto id = identity_mat(n);
        for (auto& r : id) basis.push_back(r);
        return basis;
    }
    SmithForm s = smith_form(a);
    std::vector<IVec> basis;
    for (size_t j = 0; j < n; ++j) {
        bool zero = j >= std::min(m, n) || s.d[j][j] == 0;
        if (!zero) continue;
        IVec col(n);
        for (size_t i = 0; i < n; ++i) col[i] = s.v[i][j];
        basis.push_back(col);
    }
    return basis;
}

// Inverse of a unimodular integer matrix.
inline Mat unimodular_inverse(const Mat& u) {
    size_t n = u.size();
    std::vector<QVec> cols(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cols[j][i] = Rat(u[i][j]);
    Mat inv(n, IVec(n));
    for (size_t j = 0; j < n; ++j) {
        QVec e(n, Rat(0));
        e[j] = Rat(1);
        QVec x = solve_columns(cols, e);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].denominator() != 1) throw std::logic_error("unimodular_inverse: matrix not unimodular");
            inv[i][j] = x[i].numerator();
        }
    }
    return inv;
}

// A sublattice of Z^r given by an independent basis (column echelon).
struct IntegerLattice {
    size_t ambient_rank = 0;
    std::vector<IVec> basis;  // independent vectors in Z^ambient_rank

    size_t rank() const { return basis.size(); }

    bool contains(const IVec& v) const {
        if (v.size() != ambient_rank) throw std::invalid_argument("lattice membership: dimension mismatch");
        if (basis.empty()) {
            for (Int x : v)
                if (x != 0) return false;
            return true;
        }
        std::vector<QVec> cols;
        for (const auto& b : basis) cols.push_back(to_qvec(b));
        try {
            QVec x = solve_columns(cols, to_qvec(v));
            return is_integral(x);
        } catch (const std::domain_error&) {
            return false;
        }
    }

    // coordinates of v in this basis; throws if v is not a member
    IVec coords(const IVec& v) const {
        std::vector<QVec> cols;
        for (const auto& b : basis) cols.push_back(to_qvec(b));
        QVec x = solve_columns(cols, to_qvec(v));
        if (!is_integral(x)) throw std::domain_error("vector not in lattice");
        return to_ivec(x);
    }
};

inline IntegerLattice lattice_from_generators(std::vector<IVec> gens, size_t r) {
    return IntegerLattice{r, hnf_basis(std::move(gens), r)};
}

inline IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("lattice_sum: ambient mismatch");
    auto gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return lattice_from_generators(gens, a.ambient_rank);
}

inline IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("lattice_intersection: ambient mismatch");
    size_t r = a.ambient_rank, na = a.rank(), nb = b.rank();
    if (na == 0 || nb == 0) return IntegerLattice{r, {}};
    Mat m(r, IVec(na + nb, 0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < na; ++j) m[i][j] = a.basis[j][i];
        for (size_t j = 0; j < nb; ++j) m[i][na + j] = -b.basis[j][i];
    }
    std::vector<IVec> gens;
    for (const auto& k : integer_kernel(m)) {
        IVec v(r, 0);
        for (size_t j = 0; j < na; ++j)
            for (size_t i = 0; i < r; ++i) v[i] += k[j] * a.basis[j][i];
        gens.push_back(v);
    }
    return lattice_from_generators(gens, r);
}

// Finite quotient N / D of a lattice N by a finite-index sublattice D,
// presented by its nontrivial elementary divisors. Elements are tuples of
// residues against those divisors.
struct FiniteAbelianGroup {
    size_t ambient_rank = 0;
    std::vector<IVec> num_basis;          // basis of N, vectors in Z^ambient_rank
    std::vector<Int> divisors;            // full SNF diagonal (length = rank of N)
    Mat u;                                // class coords of N-coords c are (u*c) mod divisors
    Mat u_inv;
    std::vector<size_t> nontrivial;       // indices with divisor > 1

    size_t ngens() const { return nontrivial.size(); }

    std::vector<Int> nontrivial_divisors() const {
        std::vector<Int> d;
        for (size_t i : nontrivial) d.push_back(divisors[i]);
        return d;
    }

    Int order() const {
        Int o = 1;
        for (size_t i : nontrivial) o *= divisors[i];
        return o;
    }

    // class of a lattice vector v (must lie in N)
    IVec class_of(const IVec& v) const {
        IntegerLattice n{ambient_rank, num_basis};
        IVec c = n.coords(v);
        IVec t = mat_apply(u, c);
        IVec cls;
        for (size_t i : nontrivial) {
            Int d = divisors[i];
            Int x = t[i] % d;
            if (x < 0) x += d;
            cls.push_back(x);
        }
        return cls;
    }

    bool is_identity(const IVec& cls) const {
        for (Int x : cls)
            if (x != 0) return false;
        return true;
    }

    // a lattice representative of a class
    IVec representative(const IVec& cls) const {
        if (cls.size() != nontrivial.size()) throw std::invalid_argument("representative: bad class tuple");
        size_t k = divisors.size();
        IVec t(k, 0);
        for (size_t i = 0; i < nontrivial.size(); ++i) t[nontrivial[i]] = cls[i];
        IVec c = mat_apply(u_inv, t);
        IVec v(ambient_rank, 0);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < ambient_rank; ++i) v[i] += c[j] * num_basis[j][i];
        return v;
    }

    std::vector<IVec> all_elements() const {
        std::vector<IVec> out{IVec(nontrivial.size(), 0)};
        for (size_t i = 0; i < nontrivial.size(); ++i) {
            Int d = divisors[nontrivial[i]];
            std::vector<IVec> next;
            for (const auto& e : out)
                for (Int x = 0; x < d; ++x) {
                    IVec f = e;
                    f[i] = x;
                    next.push_back(f);
                }
            out = std::move(next);
        }
        return out;
    }
};

// Present the quotient N / <den_gens> (the denominator generators must lie
// in N and span a finite-index sublattice of it).
inline FiniteAbelianGroup finite_quotient(const IntegerLattice& num, const std::vector<IVec>& den_gens) {
    FiniteAbelianGroup g;
    g.ambient_rank = num.ambient_rank;
    g.num_basis = num.basis;
    size_t k = num.rank();
    if (k == 0) {
        g.u = {};
        g.u_inv = {};
        return g;
    }
    auto den = hnf_basis(den_gens, num.ambient_rank);
    Mat rel(k, IVec(std::max<size_t>(den.size(), 1), 0));
    for (size_t j = 0; j < den.size(); ++j) {
        IVec c = num.coords(den[j]);
        for (size_t i = 0; i < k; ++i) rel[i][j] = c[i];
    }
    SmithForm s = smith_form(rel);
    g.u = s.u;
    g.u_inv = unimodular_inverse(s.u);
    g.divisors.assign(k, 0);
    for (size_t i = 0; i < k && i < (rel.empty() ? 0 : rel[0].size()); ++i) g.divisors[i] = s.d[i][i];
    for (size_t i = 0; i < k; ++i) {
        if (g.divisors[i] == 0)
            throw std::domain_error("finite_quotient: quotient is infinite");
        if (g.divisors[i] > 1) g.nontrivial.push_back(i);
    }
    return g;
}

}  // namespace splitfact
