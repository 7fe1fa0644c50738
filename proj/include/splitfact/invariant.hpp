#pragma once

// Splitting-invariant cocycles in root-theoretic form. Torus values are
// fourth roots of unity, so an element w(i) is modeled exactly by the vector
// w in the coroot lattice taken mod 4, in simple-coroot coordinates.

#include <map>
#include <stdexcept>
#include <vector>

#include "splitfact/sos.hpp"

namespace splitfact {

struct TorusElem {
    IVec w;  // length = rank, entries reduced to {0,1,2,3}

    bool operator==(const TorusElem& o) const { return w == o.w; }
};

inline IVec mod4(IVec v) {
    for (auto& x : v) {
        x %= 4;
        if (x < 0) x += 4;
    }
    return v;
}

inline TorusElem torus_identity(const RootSystem& r) { return TorusElem{IVec(r.rank, 0)}; }

inline TorusElem torus_mul(const TorusElem& a, const TorusElem& b) {
    IVec w(a.w.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = a.w[i] + b.w[i];
    return TorusElem{mod4(w)};
}

// Reduce an ambient-space vector (which must lie in Q^vee) to a TorusElem.
inline TorusElem torus_from_ambient(const RootSystem& r, const QVec& v) {
    QVec c = coroot_coordinates(r, v);
    if (!is_integral(c)) throw std::domain_error("torus_from_ambient: vector not in the coroot lattice");
    return TorusElem{mod4(to_ivec(c))};
}

// Integer matrix of a Weyl element acting on Q^vee in simple-coroot coordinates.
inline Mat coroot_action_matrix(const RootSystem& r, const WeylElement& w) {
    Mat m(r.rank, IVec(r.rank));
    for (int j = 0; j < r.rank; ++j) {
        QVec img = act(w, r.simple_coroots[j]);
        QVec c = coroot_coordinates(r, img);
        if (!is_integral(c)) throw std::logic_error("Weyl element does not preserve the coroot lattice");
        IVec ci = to_ivec(c);
        for (int i = 0; i < r.rank; ++i) m[i][j] = ci[i];
    }
    return m;
}

struct TwistedCocycle {
    SOSet sos;        // the twist A, acting through S_A
    TorusElem value;  // w mod 4Q^vee
};

// Check the two TwistedCocycle invariants against the twist: S_A w = w and
// (1 - S_A) w = 0, both mod 4.
inline bool cocycle_invariants_hold(const RootSystem& r, const TwistedCocycle& c) {
    Mat m = coroot_action_matrix(r, s_A(r, c.sos));
    IVec sw = mat_apply(m, c.value.w);
    for (int i = 0; i < r.rank; ++i) {
        if ((sw[i] - c.value.w[i]) % 4 != 0) return false;
    }
    return true;
}

// rho(mu, alpha): lattice form w = 2 alpha^vee + sum over beta in R^+_alpha
// with mu^-1 beta < 0 of (beta^vee + s_alpha beta^vee).
inline TwistedCocycle rho(const RootSystem& r, const Positivity& pos, const WeylElement& mu,
                          const Root& alpha) {
    if (!r.is_root(alpha)) throw std::domain_error("rho: alpha is not a root");
    if (!is_positive(pos, alpha)) throw std::domain_error("rho: alpha must be positive");
    Root conj = act(inverse(mu), alpha);
    bool simple = false;
    for (const auto& s : pos.base)
        if (s == conj) { simple = true; break; }
    if (!simple) throw std::domain_error("rho: mu^-1 alpha is not simple");
    WeylElement sa = reflection(r, alpha);
    WeylElement mu_inv = inverse(mu);
    QVec w = scale(Rat(2), coroot(r, alpha));
    for (const auto& beta : positive_roots(r, pos)) {
        if (is_positive(pos, act(sa, beta))) continue;   // beta not in R^+_alpha
        if (is_positive(pos, act(mu_inv, beta))) continue;
        QVec bv = coroot(r, beta);
        w = add(w, add(bv, act(sa, bv)));
    }
    TwistedCocycle c{SOSet{alpha}, torus_from_ambient(r, w)};
    if (!cocycle_invariants_hold(r, c)) throw std::logic_error("rho: cocycle invariants violated");
    return c;
}

// rho for a SOS A: the product over alpha in A of rho(mu_alpha, alpha),
// valid once the base is compatible with A (## holds; in a G2 factor one of
// any strongly orthogonal pair is simple).
inline TwistedCocycle rho_sos(const RootSystem& r, const Positivity& pos,
                              const std::map<Root, WeylElement>& mu, const SOSet& a) {
    require_sos(r, a, "rho_sos");
    auto st = check_statement(r, pos, a, StatementKind::SharpSharp);
    if (!st.holds)
        throw std::domain_error("rho_sos: ##(R,>,A) fails for the supplied positivity");
    if (r.type == 'G' && a.size() >= 2) {
        bool has_simple = false;
        for (const auto& al : a)
            for (const auto& s : pos.base)
                if (al == s) has_simple = true;
        if (!has_simple)
            throw std::domain_error(
                "rho_sos: two elements of A share a G2 factor but neither is simple");
    }
    // R^+_A must decompose as the disjoint union of the R^+_alpha
    {
        auto whole = r_plus(r, pos, a);
        std::set<Root> seen;
        size_t total = 0;
        for (const auto& al : a) {
            for (const auto& beta : r_plus(r, pos, SOSet{al})) {
                if (!seen.insert(beta).second)
                    throw std::logic_error("rho_sos: R^+_alpha sets are not disjoint");
                ++total;
            }
        }
        if (total != whole.size() || std::set<Root>(whole.begin(), whole.end()) != seen)
            throw std::logic_error("rho_sos: R^+_A does not decompose over A");
    }
    TorusElem v{IVec(r.rank, 0)};
    for (const auto& al : a) {
        auto it = mu.find(al);
        WeylElement m = (it != mu.end()) ? it->second : conjugate_to_simple(r, pos, al);
        v = torus_mul(v, rho(r, pos, m, al).value);
    }
    TwistedCocycle c{a, v};
    if (!cocycle_invariants_hold(r, c)) throw std::logic_error("rho_sos: cocycle invariants violated");
    return c;
}

// The Weyl elements used in the closed-form tables: identity for simple
// representative roots, the explicit reflections otherwise.
inline WeylElement table_mu(const RootSystem& r, const Root& alpha) {
    int n = r.rank;
    auto unit2 = [&](int i, int j, Int ci, Int cj) {
        Root v(r.dim, 0);
        v[i - 1] = ci;
        if (i != j) v[j - 1] += cj;
        return v;
    };
    for (const auto& s : r.std_pos.base)
        if (s == alpha) return weyl_identity(r.dim);
    switch (r.type) {
        case 'A':
            return weyl_identity(r.dim);
        case 'B': {
            // alpha = e_{2i-1} + e_{2i}: mu = s_{e_{2i}}
            for (int i = 1; 2 * i <= n; ++i)
                if (alpha == unit2(2 * i - 1, 2 * i, 1, 1))
                    return reflection(r, unit2(2 * i, 2 * i, 1, 0));
            break;
        }
        case 'C': {
            // alpha = 2 e_i, i < n: mu = s_{e_i - e_n}
            for (int i = 1; i < n; ++i)
                if (alpha == unit2(i, i, 2, 0)) return reflection(r, unit2(i, n, 1, -1));
            break;
        }
        case 'D': {
            // alpha = e_{2i-1} + e_{2i}, 2i != n:
            // mu = s_{e_{2i}-e_n} after s_{e_{2i-1}-e_{n-1}}
            for (int i = 1; 2 * i <= n; ++i) {
                if (2 * i == n) continue;
                if (alpha == unit2(2 * i - 1, 2 * i, 1, 1)) {
                    WeylElement s1 = reflection(r, unit2(2 * i - 1, n - 1, 1, -1));
                    WeylElement s2 = reflection(r, unit2(2 * i, n, 1, -1));
                    return compose(s2, s1);
                }
            }
            break;
        }
    }
    throw std::domain_error("table_mu: root is not an element of a listed representative MSOS");
}

// Closed-form evaluation of rho on the representative MSOS elements of the
// classical families; no root-set scan. The C_n entry uses the j-indexed
// product prod_{j=i}^{n} e*_j(-1).
inline std::map<Root, TorusElem> classical_rho_table(const RootSystem& r) {
    if (r.type == 'G') throw std::invalid_argument("classical_rho_table: classical types only");
    int n = r.rank;
    std::map<Root, TorusElem> table;
    auto put = [&](const Root& alpha, const QVec& ambient) {
        table[alpha] = torus_from_ambient(r, ambient);
    };
    auto two_coroot = [&](const Root& alpha) { return scale(Rat(2), coroot(r, alpha)); };
    for (const auto& rep : msos_orbit_representatives(r)) {
        for (const auto& alpha : rep) {
            switch (r.type) {
                case 'A':
                    put(alpha, two_coroot(alpha));
                    break;
                case 'B': {
                    // alpha = e_{2i-1} + e_{2i}: the descent constant is a
                    // multiple of (e_{2i-1} - e_{2i})^vee, so the value is
                    // 2 alpha^vee - 2(n+1-2i)(e_{2i-1} - e_{2i}); mod 4Q^vee
                    // that is 2 alpha^vee for n odd and 4 e_{2i} for n even.
                    int pair_i = 0;
                    for (int i = 1; 2 * i <= n; ++i) {
                        Root v(r.dim, 0);
                        v[2 * i - 2] = 1;
                        v[2 * i - 1] = 1;
                        if (alpha == v) pair_i = i;
                    }
                    if (pair_i && n % 2 == 0) {
                        QVec v(r.dim, Rat(0));
                        v[2 * pair_i - 1] = Rat(4);
                        put(alpha, v);
                    } else {
                        put(alpha, two_coroot(alpha));
                    }
                    break;
                }
                case 'C': {
                    int i = -1;  // alpha = 2 e_i?
                    for (int k = 0; k < n; ++k)
                        if (alpha[k] == 2) i = k;
                    if (i >= 0) {
                        QVec v(r.dim, Rat(0));
                        for (int j = i; j < n; ++j) v[j] = Rat(2);
                        put(alpha, v);
                    } else {
                        put(alpha, two_coroot(alpha));
                    }
                    break;
                }
                case 'D': {
                    bool plus_pair = false;
                    for (int i = 1; 2 * i <= n; ++i) {
                        if (2 * i == n) continue;
                        Root v(r.dim, 0);
                        v[2 * i - 2] = 1;
                        v[2 * i - 1] = 1;
                        if (alpha == v) plus_pair = true;
                    }
                    QVec v = two_coroot(alpha);
                    if (plus_pair && n % 2 == 1) v[n - 1] += Rat(4);  // 2e*_n((-1)^n), n odd
                    put(alpha, v);
                    break;
                }
            }
        }
    }
    return table;
}

}  // namespace splitfact
