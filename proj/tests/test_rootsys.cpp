#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitfact/rootsys.hpp"
#include "splitfact/weyl.hpp"

using namespace splitfact;

namespace {

Root rt(std::initializer_list<Int> v) { return Root(v); }

}  // namespace

TEST_CASE("root counts") {
    CHECK(build('A', 2).roots.size() == 6);
    CHECK(build('B', 3).roots.size() == 18);
    CHECK(build('G', 2).roots.size() == 12);
    CHECK(build('C', 4).roots.size() == 32);
    CHECK(build('D', 4).roots.size() == 24);
    CHECK_THROWS_AS(build('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(build('D', 2), std::invalid_argument);
    CHECK_THROWS_AS(build('G', 3), std::invalid_argument);
    CHECK_THROWS_AS(build('E', 6), std::invalid_argument);
}

TEST_CASE("negation closure and coroot normalization") {
    for (auto spec : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        RootSystem r = build(spec.first, spec.second);
        for (const auto& a : r.roots) {
            CHECK(r.is_root(negate(a)));
            QVec av = coroot(r, a);
            CHECK(dot(av, a) == Rat(2));
        }
        // root strings: (a,b) < 0 and a != -b implies a+b is a root
        for (const auto& a : r.roots)
            for (const auto& b : r.roots) {
                if (a == negate(b)) continue;
                if (dot(a, b) >= 0) continue;
                Root sum(a.size());
                for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
                CHECK(r.is_root(sum));
            }
    }
}

TEST_CASE("explicit coroots") {
    RootSystem b3 = build('B', 3);
    CHECK(coroot(b3, rt({1, 0, 0})) == to_qvec(rt({2, 0, 0})));
    RootSystem c3 = build('C', 3);
    CHECK(coroot(c3, rt({2, 0, 0})) == to_qvec(rt({1, 0, 0})));
    RootSystem d4 = build('D', 4);
    CHECK(coroot(d4, rt({1, -1, 0, 0})) == to_qvec(rt({1, -1, 0, 0})));
    CHECK_THROWS_AS(coroot(b3, rt({3, 0, 0})), std::domain_error);
}

TEST_CASE("Cartan pairings") {
    RootSystem a2 = build('A', 2);
    Root a1 = rt({1, -1, 0}), a2r = rt({0, 1, -1});
    CHECK(pairing(a2, coroot(a2, a1), a1) == 2);
    CHECK(pairing(a2, coroot(a2, a1), a2r) == -1);
    RootSystem g2 = build('G', 2);
    Root short_root = rt({1, -1, 0});        // adjacent short
    Root long_root = rt({-1, 2, -1});        // adjacent long: (short, long) < 0
    CHECK(dot(short_root, long_root) < 0);
    CHECK(pairing(g2, coroot(g2, long_root), short_root) == -1);
    CHECK(pairing(g2, coroot(g2, short_root), long_root) == -3);
}

TEST_CASE("positive roots under standard positivity") {
    RootSystem a2 = build('A', 2);
    auto pos = positive_roots(a2, a2.std_pos);
    std::set<Root> got(pos.begin(), pos.end());
    std::set<Root> want{rt({1, -1, 0}), rt({0, 1, -1}), rt({1, 0, -1})};
    CHECK(got == want);

    RootSystem b2 = build('B', 2);
    auto posb = positive_roots(b2, b2.std_pos);
    std::set<Root> gotb(posb.begin(), posb.end());
    std::set<Root> wantb{rt({1, -1}), rt({0, 1}), rt({1, 0}), rt({1, 1})};
    CHECK(gotb == wantb);

    // D3 positives listed for the counterexample configuration
    RootSystem d3 = build('D', 3);
    Positivity p = base_from_positivity(d3, {Rat(3), Rat(2), Rat(-1)});
    auto posd = positive_roots(d3, p);
    std::set<Root> gotd(posd.begin(), posd.end());
    std::set<Root> wantd{rt({1, -1, 0}), rt({1, 0, -1}), rt({0, 1, -1}),
                         rt({1, 1, 0}),  rt({1, 0, 1}),  rt({0, 1, 1})};
    CHECK(gotd == wantd);
}

TEST_CASE("base extraction from a functional") {
    RootSystem a2 = build('A', 2);
    Positivity p = base_from_positivity(a2, {Rat(2), Rat(1), Rat(0)});
    std::set<Root> got(p.base.begin(), p.base.end());
    CHECK(got == std::set<Root>{rt({1, -1, 0}), rt({0, 1, -1})});

    RootSystem b2 = build('B', 2);
    Positivity pb = base_from_positivity(b2, {Rat(2), Rat(1)});
    std::set<Root> gotb(pb.base.begin(), pb.base.end());
    CHECK(gotb == std::set<Root>{rt({1, -1}), rt({0, 1})});

    // vanishing functional is rejected
    CHECK_THROWS_AS(base_from_positivity(b2, {Rat(1), Rat(1)}), std::domain_error);

    // the standard functional reproduces the plate base (checked in build,
    // but exercised explicitly here for every supported family)
    for (auto spec : {std::pair<char, int>{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'G', 2}}) {
        RootSystem r = build(spec.first, spec.second);
        Positivity q = base_from_positivity(r, r.std_pos.functional);
        CHECK(std::set<Root>(q.base.begin(), q.base.end()) ==
              std::set<Root>(r.base.begin(), r.base.end()));
    }
}

TEST_CASE("shortest vector property of the root lattice") {
    // every root-lattice vector no longer than the shortest root is a root
    // (or zero); enumerate simple-root coefficient boxes large enough to
    // cover the ball, since short vectors have small coefficients
    for (auto spec : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        RootSystem r = build(spec.first, spec.second);
        Rat min_len2;
        bool first = true;
        for (const auto& a : r.roots) {
            Rat l = dot(a, a);
            if (first || l < min_len2) { min_len2 = l; first = false; }
        }
        const Int B = 6;
        IVec c(r.rank, -B);
        for (;;) {
            QVec v(r.dim, Rat(0));
            for (int i = 0; i < r.rank; ++i) v = add(v, scale(Rat(c[i]), to_qvec(r.base[i])));
            if (!is_zero(v) && dot(v, v) <= min_len2) {
                CHECK(r.is_root(to_ivec(v)));
            }
            int k = 0;
            while (k < r.rank && ++c[k] > B) c[k++] = -B;
            if (k == r.rank) break;
        }
    }
}

TEST_CASE("simple reflections permute the other positives") {
    for (auto spec : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        RootSystem r = build(spec.first, spec.second);
        for (const auto& s : r.base) {
            WeylElement w = reflection(r, s);
            std::set<Root> others;
            for (const auto& b : positive_roots(r, r.std_pos))
                if (b != s) others.insert(b);
            std::set<Root> images;
            for (const auto& b : others) images.insert(act(w, b));
            CHECK(images == others);
        }
    }
}

TEST_CASE("coroot lattice membership") {
    RootSystem b2 = build('B', 2);
    CHECK(in_coroot_lattice(b2, to_qvec(rt({2, 0}))));       // coroot of e1
    CHECK(in_coroot_lattice(b2, to_qvec(rt({1, 1}))));       // sum of coroots
    CHECK(!in_coroot_lattice(b2, to_qvec(rt({1, 0}))));      // e1 itself is not in Q^vee
    CHECK(in_coroot_lattice(b2, to_qvec(rt({2, 2})), 2));
    CHECK(!in_coroot_lattice(b2, to_qvec(rt({2, 0})), 4));
    CHECK(in_coroot_lattice(b2, to_qvec(rt({4, 4})), 4));

    RootSystem g2 = build('G', 2);
    // long coroot is non-integral in plate coordinates yet lies in Q^vee
    QVec lc = coroot(g2, rt({-1, -1, 2}));
    CHECK(!is_integral(lc));
    CHECK(in_coroot_lattice(g2, lc));
}
