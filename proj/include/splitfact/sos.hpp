#pragma once

// Strongly orthogonal subsets: detection, MSOS enumeration with Weyl-orbit
// grouping, adaptedness, the # and ## statements, the adapted positivity
// construction and the R^+_A combinatorics.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitfact/weyl.hpp"

namespace splitfact {

using SOSet = std::vector<Root>;  // ordered, no duplicates

inline bool strongly_orthogonal(const RootSystem& r, const Root& a, const Root& b) {
    if (!r.is_root(a) || !r.is_root(b)) throw std::domain_error("strongly_orthogonal: not a root");
    if (a == b || a == negate(b)) return false;
    Root sum(a.size()), diff(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        sum[i] = a[i] + b[i];
        diff[i] = a[i] - b[i];
    }
    return !r.is_root(sum) && !r.is_root(diff);
}

inline bool is_sos(const RootSystem& r, const SOSet& a) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (!r.is_root(a[i])) return false;
        for (size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j]) return false;
            if (!strongly_orthogonal(r, a[i], a[j])) return false;
        }
    }
    return true;
}

inline void require_sos(const RootSystem& r, const SOSet& a, const char* who) {
    if (!is_sos(r, a)) throw std::domain_error(std::string(who) + ": set is not strongly orthogonal");
}

// S_A: product of the commuting reflections over A.
inline WeylElement s_A(const RootSystem& r, const SOSet& a) {
    require_sos(r, a, "s_A");
    WeylElement w = weyl_identity(r.dim);
    for (const auto& alpha : a) w = compose(w, reflection(r, alpha));
    return w;
}

// R^+_A = { beta : beta > 0 and S_A beta < 0 }
inline std::vector<Root> r_plus(const RootSystem& r, const Positivity& pos, const SOSet& a) {
    WeylElement sa = s_A(r, a);
    std::vector<Root> out;
    for (const auto& beta : positive_roots(r, pos))
        if (!is_positive(pos, act(sa, beta))) out.push_back(beta);
    return out;
}

// A2 adapted to A1: span containment plus pairwise disjoint A1-supports.
inline bool is_adapted(const RootSystem& r, const SOSet& a2, const SOSet& a1) {
    require_sos(r, a2, "is_adapted");
    require_sos(r, a1, "is_adapted");
    std::vector<QVec> span1;
    for (const auto& v : a1) span1.push_back(to_qvec(v));
    for (const auto& v : a2)
        if (!in_span(span1, to_qvec(v))) return false;
    for (size_t i = 0; i < a2.size(); ++i)
        for (size_t j = i + 1; j < a2.size(); ++j)
            for (const auto& a : a1)
                if (dot(a, a2[i]) != 0 && dot(a, a2[j]) != 0) return false;
    return true;
}

// The A1-supports of the elements of A2 are separated: listing A1 in its
// stored order (the order adapted_positivity extends to a basis), the index
// intervals spanned by the supports are pairwise disjoint.  This is the
// scope of the positivity guarantee below: an adapted set whose supports
// interleave can break # (in C3 with A = {2e1,2e2,2e3}, the adapted set
// {2e2, e1-e3} fails # at beta = e2-e3, because s_{e1-e3} moves the leading
// basis component of beta from position 2 down into position 1).
inline bool support_separated(const SOSet& a2, const SOSet& a1) {
    std::vector<std::pair<int, int>> hulls;
    for (const auto& al : a2) {
        int lo = -1, hi = -1;
        for (size_t i = 0; i < a1.size(); ++i)
            if (dot(a1[i], al) != 0) {
                if (lo < 0) lo = static_cast<int>(i);
                hi = static_cast<int>(i);
            }
        if (lo < 0) return false;  // element orthogonal to all of A1
        hulls.push_back({lo, hi});
    }
    for (size_t i = 0; i < hulls.size(); ++i)
        for (size_t j = i + 1; j < hulls.size(); ++j)
            if (hulls[i].second >= hulls[j].first && hulls[j].second >= hulls[i].first)
                return false;
    return true;
}

enum class StatementKind { Sharp, SharpSharp };

struct StatementResult {
    bool holds = true;
    // witness on failure: for #, witness_sets are singletons {alpha1},{alpha2}
    SOSet witness_a1, witness_a2;
    Root witness_beta;
};

// Exhaustive check of #(R,>,A) or ##(R,>,A).
inline StatementResult check_statement(const RootSystem& r, const Positivity& pos, const SOSet& a,
                                       StatementKind kind) {
    require_sos(r, a, "check_statement");
    auto positives = positive_roots(r, pos);
    if (kind == StatementKind::Sharp) {
        std::vector<WeylElement> refl;
        for (const auto& al : a) refl.push_back(reflection(r, al));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j) {
                if (i == j) continue;
                for (const auto& beta : positives)
                    if (!is_positive(pos, act(refl[i], beta)) &&
                        !is_positive(pos, act(refl[j], beta)))
                        return {false, {a[i]}, {a[j]}, beta};
            }
        return {};
    }
    // ##: all ordered pairs of disjoint subsets A1, A2 of A
    size_t n = a.size();
    for (size_t mask1 = 0; mask1 < (size_t(1) << n); ++mask1)
        for (size_t mask2 = 0; mask2 < (size_t(1) << n); ++mask2) {
            if (mask1 & mask2) continue;
            SOSet a1, a2;
            for (size_t i = 0; i < n; ++i) {
                if (mask1 & (size_t(1) << i)) a1.push_back(a[i]);
                if (mask2 & (size_t(1) << i)) a2.push_back(a[i]);
            }
            WeylElement s1 = s_A(r, a1), s2 = s_A(r, a2);
            for (const auto& beta : positives) {
                if (is_positive(pos, act(s1, beta))) continue;
                if (!is_positive(pos, act(s2, beta)) ||
                    is_positive(pos, act(s1, act(s2, beta))))
                    return {false, a1, a2, beta};
            }
        }
    return {};
}

// Positive-system construction: extend A to an orthogonal basis (A first),
// then p = sum p_i a_i with p_n = 1 and p_i the smallest integer exceeding
// (M/m) * sum_{k>i} p_k.  The resulting order satisfies # for A itself, for
// every subset of A, and for every A' adapted to A with support_separated
// supports; interleaved adapted sets can fail # (see support_separated).
inline Positivity adapted_positivity(const RootSystem& r, const SOSet& a) {
    require_sos(r, a, "adapted_positivity");
    std::vector<QVec> basis;
    auto try_extend = [&](const QVec& cand) {
        QVec v = cand;
        for (const auto& b : basis) v = sub(v, scale(dot(b, cand) / dot(b, b), b));
        if (!is_zero(v)) basis.push_back(to_qvec(primitive(clear_denominators(v))));
    };
    for (const auto& al : a) try_extend(to_qvec(al));
    for (const auto& s : r.base) {
        if (basis.size() == static_cast<size_t>(r.rank)) break;
        try_extend(to_qvec(s));
    }
    if (basis.size() != static_cast<size_t>(r.rank))
        throw std::logic_error("adapted_positivity: basis extension failed");
    Rat m(0), big(0);
    for (const auto& alpha : r.roots)
        for (const auto& b : basis) {
            Rat v = dot(b, alpha);
            if (v < 0) v = -v;
            if (v == 0) continue;
            if (m == 0 || v < m) m = v;
            if (v > big) big = v;
        }
    size_t n = basis.size();
    std::vector<Rat> p(n);
    p[n - 1] = Rat(1);
    for (size_t i = n - 1; i-- > 0;) {
        Rat s(0);
        for (size_t k = i + 1; k < n; ++k) s += p[k];
        Rat bound = (big / m) * s;
        Int next = bound.numerator() / bound.denominator() + 1;  // smallest integer > bound
        p[i] = Rat(next);
    }
    QVec func(r.dim, Rat(0));
    for (size_t i = 0; i < n; ++i) func = add(func, scale(p[i], basis[i]));
    return base_from_positivity(r, func);
}

namespace detail {

inline std::string set_key(SOSet s) {
    std::sort(s.begin(), s.end());
    std::string key;
    for (const auto& v : s) {
        for (Int x : v) key += std::to_string(x) + ",";
        key += ";";
    }
    return key;
}

}  // namespace detail

inline int max_enumeration_rank() {
    if (const char* env = std::getenv("SPLITFACT_MAX_RANK")) return std::atoi(env);
    return 8;
}

// All SOS consisting of positive roots (including the empty set), by
// backtracking over the positive roots in sorted order.
inline std::vector<SOSet> enumerate_sos(const RootSystem& r, const Positivity& pos) {
    auto positives = positive_roots(r, pos);
    std::sort(positives.begin(), positives.end());
    std::vector<SOSet> out;
    SOSet cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        for (size_t i = from; i < positives.size(); ++i) {
            bool ok = true;
            for (const auto& al : cur)
                if (!strongly_orthogonal(r, al, positives[i])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(positives[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct MsosOrbit {
    SOSet representative;
    std::vector<SOSet> members;  // positive-root MSOS in this Weyl orbit
};

// All MSOS of positive roots, grouped into genuine Weyl orbits of unordered
// sets (breadth-first closure under simple reflections; orbit members with
// negative roots are traversed but not reported).
inline std::vector<MsosOrbit> enumerate_msos(const RootSystem& r, int rank_guard = -1) {
    if (rank_guard < 0) rank_guard = max_enumeration_rank();
    if (r.rank > rank_guard)
        throw std::runtime_error("enumerate_msos: rank exceeds enumeration guard (" +
                                 std::to_string(rank_guard) + "); set SPLITFACT_MAX_RANK to override");
    const Positivity& pos = r.std_pos;
    auto positives = positive_roots(r, pos);
    std::vector<SOSet> msos;
    for (auto& s : enumerate_sos(r, pos)) {
        bool maximal = true;
        for (const auto& beta : positives) {
            bool extends = true;
            for (const auto& al : s)
                if (al == beta || !strongly_orthogonal(r, al, beta)) { extends = false; break; }
            if (extends) { maximal = false; break; }
        }
        if (maximal && !s.empty()) msos.push_back(s);
    }
    std::map<std::string, const SOSet*> unvisited;
    for (const auto& s : msos) unvisited[detail::set_key(s)] = &s;
    std::vector<WeylElement> gens;
    for (const auto& s : r.base) gens.push_back(reflection(r, s));
    std::vector<MsosOrbit> orbits;
    while (!unvisited.empty()) {
        SOSet seed = *unvisited.begin()->second;
        MsosOrbit orbit;
        std::set<std::string> seen;
        std::vector<SOSet> frontier{seed};
        seen.insert(detail::set_key(seed));
        while (!frontier.empty()) {
            std::vector<SOSet> next;
            for (const auto& s : frontier) {
                auto it = unvisited.find(detail::set_key(s));
                if (it != unvisited.end()) {
                    orbit.members.push_back(*it->second);
                    unvisited.erase(it);
                }
                for (const auto& g : gens) {
                    SOSet img;
                    for (const auto& v : s) img.push_back(act(g, v));
                    std::sort(img.begin(), img.end());
                    auto key = detail::set_key(img);
                    if (seen.insert(key).second) next.push_back(img);
                }
            }
            frontier = std::move(next);
        }
        std::sort(orbit.members.begin(), orbit.members.end());
        orbit.representative = orbit.members.front();
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const MsosOrbit& a, const MsosOrbit& b) {
        return a.representative.size() < b.representative.size() ||
               (a.representative.size() == b.representative.size() &&
                a.representative < b.representative);
    });
    return orbits;
}

// The explicit orbit representatives for the classical families and G2.
inline std::vector<SOSet> msos_orbit_representatives(const RootSystem& r) {
    int n = r.rank;
    auto e = [&](int i) {  // 1-based unit vector
        Root v(r.dim, 0);
        v[i - 1] = 1;
        return v;
    };
    auto pair_minus = [&](int i) {
        Root v(r.dim, 0);
        v[2 * i - 2] = 1;
        v[2 * i - 1] = -1;
        return v;
    };
    auto pair_plus = [&](int i) {
        Root v(r.dim, 0);
        v[2 * i - 2] = 1;
        v[2 * i - 1] = 1;
        return v;
    };
    std::vector<SOSet> reps;
    switch (r.type) {
        case 'A': {
            SOSet a;
            for (int i = 1; i <= (n + 1) / 2; ++i) a.push_back(pair_minus(i));
            reps.push_back(a);
            break;
        }
        case 'B': {
            int k = n / 2;
            SOSet a1;
            int pairs = (n % 2 == 1) ? k : k - 1;
            for (int i = 1; i <= pairs; ++i) {
                a1.push_back(pair_minus(i));
                a1.push_back(pair_plus(i));
            }
            a1.push_back(e(n));
            reps.push_back(a1);
            if (n % 2 == 0) {
                SOSet a2;
                for (int i = 1; i <= k; ++i) {
                    a2.push_back(pair_minus(i));
                    a2.push_back(pair_plus(i));
                }
                reps.push_back(a2);
            }
            break;
        }
        case 'C': {
            for (int s = 0; s <= n / 2; ++s) {
                SOSet a;
                for (int i = 1; i <= s; ++i) a.push_back(pair_minus(i));
                for (int i = 2 * s + 1; i <= n; ++i) {
                    Root v(r.dim, 0);
                    v[i - 1] = 2;
                    a.push_back(v);
                }
                reps.push_back(a);
            }
            break;
        }
        case 'D': {
            SOSet a;
            for (int i = 1; i <= n / 2; ++i) {
                a.push_back(pair_minus(i));
                a.push_back(pair_plus(i));
            }
            reps.push_back(a);
            break;
        }
        case 'G': {
            // the unique orbit; this representative contains the simple root e1-e2
            reps.push_back(SOSet{Root{1, -1, 0}, Root{-1, -1, 2}});
            break;
        }
        default:
            throw std::invalid_argument("msos_orbit_representatives: unsupported type");
    }
    for (const auto& a : reps) require_sos(r, a, "msos_orbit_representatives");
    return reps;
}

}  // namespace splitfact
