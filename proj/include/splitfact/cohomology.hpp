#pragma once

// Tate-Nakayama lattice quotients, the finite cocycle model of H^1(Gamma, T_A),
// the embedding between comparison quotients and endoscopic-character pairing.
// Everything is computed in simple-coroot coordinates, where X_*(T_0) = Q^vee
// is Z^rank and S_A acts by an integer matrix.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "splitfact/invariant.hpp"

namespace splitfact {

// X_*(T_A)_{-1} = ker(S_A + 1) cap Q^vee, in coroot coordinates.
inline IntegerLattice x_minus(const RootSystem& r, const SOSet& a) {
    require_sos(r, a, "x_minus");
    Mat m = coroot_action_matrix(r, s_A(r, a));
    for (int i = 0; i < r.rank; ++i) m[i][i] += 1;
    auto basis = integer_kernel(m);
    return lattice_from_generators(basis, r.rank);
}

// IX_*(T_A) = (1 - S_A) Q^vee.
inline IntegerLattice ix_lattice(const RootSystem& r, const SOSet& a) {
    require_sos(r, a, "ix_lattice");
    Mat m = coroot_action_matrix(r, s_A(r, a));
    std::vector<IVec> gens;
    for (int j = 0; j < r.rank; ++j) {
        IVec col(r.rank);
        for (int i = 0; i < r.rank; ++i) col[i] = (i == j ? 1 : 0) - m[i][j];
        gens.push_back(col);
    }
    return lattice_from_generators(gens, r.rank);
}

// H^{-1}(Gamma, X_*(T_A)) = X_*(T_A)_{-1} / IX_*(T_A). Since S_A is an
// involution every elementary divisor equals 2 (asserted).
inline FiniteAbelianGroup tn_quotient(const RootSystem& r, const SOSet& a) {
    auto num = x_minus(r, a);
    auto den = ix_lattice(r, a);
    FiniteAbelianGroup g = finite_quotient(num, den.basis);
    for (Int d : g.nontrivial_divisors())
        if (d != 2) throw std::logic_error("tn_quotient: elementary divisor != 2");
    return g;
}

// Finite model of the cocycle group: Z = { w : (1-S_A) w in 4Q^vee },
// coboundaries 4Q^vee + (Q^vee cap span(im(1+S_A))).
struct CocycleModel {
    IntegerLattice cocycles;
    IntegerLattice coboundaries;
    FiniteAbelianGroup quotient;
};

inline CocycleModel finite_cocycle_model(const RootSystem& r, const SOSet& a) {
    require_sos(r, a, "finite_cocycle_model");
    size_t n = r.rank;
    Mat s = coroot_action_matrix(r, s_A(r, a));
    Mat one_minus(n, IVec(n)), one_plus(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            one_minus[i][j] = (i == j ? 1 : 0) - s[i][j];
            one_plus[i][j] = (i == j ? 1 : 0) + s[i][j];
        }
    // cocycles: residues mod 4 with (1-S)w = 0 mod 4, lifted, plus 4 Z^n
    std::vector<IVec> gens;
    IVec w(n, 0);
    for (;;) {
        IVec img = mat_apply(one_minus, w);
        bool ok = true;
        for (Int x : img)
            if (x % 4 != 0) { ok = false; break; }
        if (ok) gens.push_back(w);
        size_t k = 0;
        while (k < n && ++w[k] == 4) w[k++] = 0;
        if (k == n) break;
    }
    for (size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 4;
        gens.push_back(e);
    }
    CocycleModel model;
    model.cocycles = lattice_from_generators(gens, n);
    // saturation of the image of (1+S): integer points of its rational span
    std::vector<IVec> left_kernel = integer_kernel([&] {
        // transpose: left kernel of (1+S) = kernel of (1+S)^T
        Mat t(n, IVec(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) t[i][j] = one_plus[j][i];
        return t;
    }());
    std::vector<IVec> cob_gens;
    if (left_kernel.empty()) {
        // span is everything: saturation = Z^n
        for (size_t i = 0; i < n; ++i) {
            IVec e(n, 0);
            e[i] = 1;
            cob_gens.push_back(e);
        }
    } else {
        Mat k_rows;
        for (const auto& kv : left_kernel) k_rows.push_back(kv);
        for (const auto& v : integer_kernel(k_rows)) cob_gens.push_back(v);
    }
    for (size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 4;
        cob_gens.push_back(e);
    }
    model.coboundaries = lattice_from_generators(cob_gens, n);
    model.quotient = finite_quotient(model.cocycles, model.coboundaries.basis);
    return model;
}

inline IVec cocycle_class(const RootSystem& r, const CocycleModel& model, const TwistedCocycle& c) {
    if (!cocycle_invariants_hold(r, c))
        throw std::domain_error("cocycle_class: cocycle invariant violated");
    return model.quotient.class_of(c.value.w);
}

// TN transfer lambda -> lambda(-1) = (2 lambda)(i).
inline TorusElem tn_transfer(const RootSystem& r, const SOSet& a, const IVec& lambda) {
    auto xm = x_minus(r, a);
    if (!xm.contains(lambda)) throw std::domain_error("tn_transfer: lambda not in X_*(T_A)_{-1}");
    IVec w(lambda.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = lambda[i] * 2;
    return TorusElem{mod4(w)};
}

// tn_transfer induces a map tn_quotient(A) -> cocycle model quotient.
// Returns true when it is a bijection (equal orders, trivial kernel).
inline bool tn_model_isomorphic(const RootSystem& r, const SOSet& a) {
    FiniteAbelianGroup lhs = tn_quotient(r, a);
    CocycleModel model = finite_cocycle_model(r, a);
    if (lhs.order() != model.quotient.order()) return false;
    size_t kernel = 0;
    for (const auto& cls : lhs.all_elements()) {
        IVec lam = lhs.representative(cls);
        TorusElem t = tn_transfer(r, a, lam);
        if (model.quotient.is_identity(model.quotient.class_of(t.w))) ++kernel;
    }
    return kernel == 1;
}

// An endoscopic character: rational covector against the simple-coroot
// basis, taken mod 1. Pairing with a coroot-coordinate vector is the dot
// product of the coefficient tuples.
struct EndoChar {
    std::vector<Rat> s;  // length = rank
};

inline Rat mod1(Rat q) {
    Int fl = q.numerator() / q.denominator();
    if (q < Rat(fl)) fl -= 1;
    return q - Rat(fl);
}

inline Rat char_pair_raw(const EndoChar& s, const IVec& v) {
    Rat acc(0);
    for (size_t i = 0; i < s.s.size(); ++i) acc += s.s[i] * v[i];
    return acc;
}

// S_A-invariance of the character mod the weight lattice.
inline bool char_invariant(const RootSystem& r, const EndoChar& s, const SOSet& a) {
    if (s.s.size() != static_cast<size_t>(r.rank))
        throw std::invalid_argument("char_invariant: wrong character length");
    Mat m = coroot_action_matrix(r, s_A(r, a));
    for (int j = 0; j < r.rank; ++j) {
        Rat acc(0);  // (S_A^T s)_j - s_j
        for (int i = 0; i < r.rank; ++i) acc += s.s[i] * m[i][j];
        acc -= s.s[j];
        if (acc.denominator() != 1) return false;
    }
    return true;
}

inline bool char_annihilates(const EndoChar& s, const IntegerLattice& denom) {
    for (const auto& v : denom.basis)
        if (char_pair_raw(s, v).denominator() != 1) return false;
    return true;
}

// Factorization through the single-torus quotient: invariance plus
// integrality against IX_*(T_A).
inline bool char_factors(const RootSystem& r, const EndoChar& s, const SOSet& a) {
    if (!char_invariant(r, s, a))
        throw std::domain_error("char_factors: character is not S_A-invariant mod X^*");
    return char_annihilates(s, ix_lattice(r, a));
}

// <s, class> as an exponent in Q/Z, for a class of the TN quotient.
inline Rat pair_char(const RootSystem& r, const EndoChar& s, const SOSet& a, const IVec& tn_class) {
    if (!char_factors(r, s, a)) throw std::domain_error("pair_char: character does not factor");
    FiniteAbelianGroup g = tn_quotient(r, a);
    IVec lam = g.representative(tn_class);
    return mod1(char_pair_raw(s, lam));
}

// Pull a twisted cocycle back through the TN transfer: the TN-quotient class
// whose transfer equals the cocycle class.
inline IVec tn_preimage_class(const RootSystem& r, const SOSet& a, const TwistedCocycle& c) {
    FiniteAbelianGroup lhs = tn_quotient(r, a);
    CocycleModel model = finite_cocycle_model(r, a);
    IVec target = cocycle_class(r, model, c);
    for (const auto& cls : lhs.all_elements()) {
        IVec lam = lhs.representative(cls);
        if (model.quotient.class_of(tn_transfer(r, a, lam).w) == target) return cls;
    }
    throw std::logic_error("tn_preimage_class: no TN preimage for a valid cocycle");
}

inline Rat pair_char_cocycle(const RootSystem& r, const EndoChar& s, const TwistedCocycle& c) {
    return pair_char(r, s, c.sos, tn_preimage_class(r, c.sos, c));
}

// The two comparison quotients of section "comparison": domain for A', with
// denominator IX(T_{A'}) + i^{-1}(IX(T_A)), codomain for A with denominator
// i(IX(T_{A'})) + IX(T_A); i is the lattice inclusion in T_0-coordinates.
struct ComparisonQuotients {
    FiniteAbelianGroup domain;    // on x_minus(A')
    FiniteAbelianGroup codomain;  // on x_minus(A)
    IntegerLattice domain_denominator;
    IntegerLattice codomain_denominator;

    // i-bar: induced by inclusion of lattice representatives
    IVec embed(const IVec& domain_class) const {
        return codomain.class_of(domain.representative(domain_class));
    }
};

inline ComparisonQuotients comparison_quotients(const RootSystem& r, const SOSet& a_sub,
                                                const SOSet& a) {
    require_sos(r, a_sub, "comparison_quotients");
    require_sos(r, a, "comparison_quotients");
    std::set<Root> big(a.begin(), a.end());
    for (const auto& al : a_sub)
        if (!big.count(al)) throw std::domain_error("comparison_quotients: A' is not a subset of A");
    auto xm_sub = x_minus(r, a_sub);
    auto xm = x_minus(r, a);
    auto denom = lattice_sum(ix_lattice(r, a_sub), ix_lattice(r, a));
    ComparisonQuotients q;
    q.domain_denominator = lattice_intersection(xm_sub, denom);
    q.codomain_denominator = lattice_intersection(xm, denom);
    q.domain = finite_quotient(xm_sub, q.domain_denominator.basis);
    q.codomain = finite_quotient(xm, q.codomain_denominator.basis);
    return q;
}

inline bool embedding_injective(const ComparisonQuotients& q) {
    size_t kernel = 0;
    for (const auto& cls : q.domain.all_elements())
        if (q.codomain.is_identity(q.embed(cls))) ++kernel;
    return kernel == 1;
}

struct ComparisonReport {
    Rat value_sub;  // pairing for A'
    Rat value;      // pairing for A
    bool embedding_consistent = false;
};

// End-to-end comparison of endoscopic-character values across the nested
// tori T_{A'} and T_A, via the reduction of rho and the comparison quotients.
inline ComparisonReport compare_invariants(const RootSystem& r, const EndoChar& s,
                                           const SOSet& a_sub, const SOSet& a,
                                           const std::map<Root, WeylElement>& mu = {}) {
    Positivity pos = adapted_positivity(r, a);
    if (!char_invariant(r, s, a_sub) || !char_invariant(r, s, a))
        throw std::domain_error("compare_invariants: character is not invariant for both tori");
    ComparisonQuotients q = comparison_quotients(r, a_sub, a);
    if (!char_annihilates(s, q.domain_denominator) || !char_annihilates(s, q.codomain_denominator))
        throw std::domain_error(
            "compare_invariants: character does not factor through the comparison quotients");
    TwistedCocycle rho_sub = rho_sos(r, pos, mu, a_sub);
    TwistedCocycle rho_full = rho_sos(r, pos, mu, a);
    IVec lam_sub = tn_quotient(r, a_sub).representative(tn_preimage_class(r, a_sub, rho_sub));
    IVec lam_full = tn_quotient(r, a).representative(tn_preimage_class(r, a, rho_full));
    ComparisonReport rep;
    IVec dom_cls = q.domain.class_of(lam_sub);
    rep.value_sub = mod1(char_pair_raw(s, q.domain.representative(dom_cls)));
    rep.value = mod1(char_pair_raw(s, q.codomain.representative(q.codomain.class_of(lam_full))));
    IVec emb_cls = q.embed(dom_cls);
    Rat emb_val = mod1(char_pair_raw(s, q.codomain.representative(emb_cls)));
    rep.embedding_consistent = (emb_val == rep.value_sub);
    return rep;
}

}  // namespace splitfact
