#pragma once

// Weyl group elements as exact orthogonal matrices on the ambient space,
// the sign character epsilon, and conjugation of a root into the base.

#include <stdexcept>
#include <vector>

#include "splitfact/rootsys.hpp"

namespace splitfact {

struct WeylElement {
    QMat m;  // rows; orthogonal w.r.t. the standard scalar product

    size_t dim() const { return m.size(); }

    bool operator==(const WeylElement& o) const { return m == o.m; }
};

inline WeylElement weyl_identity(size_t dim) {
    WeylElement w;
    w.m.assign(dim, QVec(dim, Rat(0)));
    for (size_t i = 0; i < dim; ++i) w.m[i][i] = Rat(1);
    return w;
}

inline QVec act(const WeylElement& w, const QVec& v) {
    if (v.size() != w.dim()) throw std::invalid_argument("weyl apply: dimension mismatch");
    QVec out(w.dim());
    for (size_t i = 0; i < w.dim(); ++i) out[i] = dot(w.m[i], v);
    return out;
}

inline Root act(const WeylElement& w, const Root& v) { return to_ivec(act(w, to_qvec(v))); }

inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("weyl compose: dimension mismatch");
    size_t n = a.dim();
    WeylElement c;
    c.m.assign(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a.m[i][k] != 0)
                for (size_t j = 0; j < n; ++j) c.m[i][j] += a.m[i][k] * b.m[k][j];
    return c;
}

// Orthogonal matrices: the inverse is the transpose.
inline WeylElement inverse(const WeylElement& w) {
    size_t n = w.dim();
    WeylElement t;
    t.m.assign(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t.m[i][j] = w.m[j][i];
    return t;
}

// s_alpha(v) = v - <alpha^vee, v> alpha
inline WeylElement reflection(const RootSystem& r, const Root& alpha) {
    if (!r.is_root(alpha)) throw std::domain_error("reflection: not a root");
    QVec av = coroot(r, alpha);
    size_t n = alpha.size();
    WeylElement w = weyl_identity(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) w.m[i][j] -= Rat(alpha[i]) * av[j];
    return w;
}

// Whether w permutes the root set (sanity test, not used on hot paths).
inline bool permutes_roots(const RootSystem& r, const WeylElement& w) {
    for (const auto& a : r.roots) {
        QVec img = act(w, to_qvec(a));
        if (!is_integral(img) || !r.is_root(to_ivec(img))) return false;
    }
    return true;
}

// epsilon(mu', gamma, mu) = prod over { beta>0 : mu'^-1 beta < 0, mu^-1 beta > 0 }
// of (-1)^<beta^vee, gamma>.
inline int epsilon(const RootSystem& r, const Positivity& pos, const WeylElement& mu_prime,
                   const Root& gamma, const WeylElement& mu) {
    if (!r.is_root(gamma)) throw std::domain_error("epsilon: gamma not a root");
    WeylElement mpi = inverse(mu_prime), mi = inverse(mu);
    int sign = 1;
    for (const auto& beta : positive_roots(r, pos)) {
        if (is_positive(pos, act(mpi, beta))) continue;
        if (!is_positive(pos, act(mi, beta))) continue;
        Int e = pairing(r, coroot(r, beta), gamma);
        if (e % 2 != 0) sign = -sign;
    }
    return sign;
}

// Descent: returns mu with mu^-1 alpha simple. While alpha is not simple,
// apply the least-index simple reflection s_i with <alpha_i^vee, alpha> > 0
// and alpha != alpha_i (least-index tie-break keeps the output deterministic).
inline WeylElement conjugate_to_simple(const RootSystem& r, const Positivity& pos, Root alpha) {
    if (!r.is_root(alpha)) throw std::domain_error("conjugate_to_simple: not a root");
    if (!is_positive(pos, alpha)) throw std::domain_error("conjugate_to_simple: alpha must be positive");
    WeylElement mu = weyl_identity(alpha.size());
    for (;;) {
        bool simple = false;
        for (const auto& s : pos.base)
            if (s == alpha) { simple = true; break; }
        if (simple) return mu;
        bool progressed = false;
        for (const auto& s : pos.base) {
            if (s == alpha) continue;
            if (pairing(r, coroot(r, s), alpha) > 0) {
                WeylElement si = reflection(r, s);
                alpha = act(si, alpha);
                mu = compose(mu, si);
                progressed = true;
                break;
            }
        }
        if (!progressed) throw std::logic_error("conjugate_to_simple: descent stuck");
    }
}

}  // namespace splitfact
