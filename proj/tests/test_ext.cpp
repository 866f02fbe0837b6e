#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trimodel/ext.hpp"

using namespace trimodel;

namespace {

// Triangle in ext form (Y, E, X; c, d, w) for a member class w: X -> Y[1].
Triangle ext_triangle(const Engine& e, const Mor& w) { return e.completion_of_third(w); }

}  // namespace

TEST_CASE("ext groups: split is zero, all is everything") {
    auto eng = ts::n3_engine();
    ProperClass all = ProperClass::all();
    ProperClass sp = ProperClass::split();
    for (const Obj& X : eng->universe())
        for (const Obj& Y : eng->universe()) {
            ExtGroup gs = ext_group(*eng, sp, X, Y);
            CHECK(gs.trivial());
            ExtGroup ga = ext_group(*eng, all, X, Y);
            CHECK(ga.full());
        }
}

TEST_CASE("ext group for a cohomological class on N3") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass coh = ProperClass::cohomological(Obj::indec(C, 0), "cohM1");
    // Ext(M1, M1) sits inside the 1-dimensional Hom(M1, M2); membership of
    // the single nonsplit class is decided by the rank check.
    ExtGroup g = ext_group(*eng, coh, Obj::indec(C, 0), Obj::indec(C, 0));
    CHECK(g.ambient_dim == 1);
    // The nonsplit triangle fails Hom(M1,-)-exactness (crossing composites
    // vanish), so only the zero class remains.
    CHECK(g.trivial());
}

TEST_CASE("ext is additive in each variable") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass coh = ProperClass::cohomological(Obj::indec(C, 0), "cohM1");
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    Obj S = Obj::sum(M1, M2);
    // Membership of a block w = (w1; w2): X1+X2 -> Y[1] iff both blocks are
    // members: compare dimensions.
    ExtGroup g1 = ext_group(*eng, coh, M1, M1);
    ExtGroup g2 = ext_group(*eng, coh, M2, M1);
    ExtGroup gs = ext_group(*eng, coh, S, M1);
    CHECK(static_cast<int>(gs.basis.size()) ==
          static_cast<int>(g1.basis.size()) + static_cast<int>(g2.basis.size()));
    ExtGroup h1 = ext_group(*eng, coh, M1, M1);
    ExtGroup h2 = ext_group(*eng, coh, M1, M2);
    ExtGroup hs = ext_group(*eng, coh, M1, S);
    CHECK(static_cast<int>(hs.basis.size()) ==
          static_cast<int>(h1.basis.size()) + static_cast<int>(h2.basis.size()));
}

TEST_CASE("baer sums") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    Obj M1 = Obj::indec(C, 0);
    ExtGroup g = ext_group(*eng, all, M1, M1);
    REQUIRE(g.members.size() == 2);  // Hom(M1, M2) is one-dimensional over GF(2)

    Mor w0 = g.members[0].is_zero() ? g.members[0] : g.members[1];
    Mor w1 = g.members[0].is_zero() ? g.members[1] : g.members[0];

    // t + split = t.
    Triangle t = ext_triangle(*eng, w1);
    Triangle z = ext_triangle(*eng, w0);
    Triangle s = baer_sum(*eng, all, t, z);
    CHECK(s.w == w1);

    // t + t = split over GF(2).
    Triangle d = baer_sum(*eng, all, t, t);
    CHECK(d.w.is_zero());
}

TEST_CASE("baer sum agrees with ambient addition on every enumerated pair") {
    auto eng = ts::n3_engine();
    ProperClass all = ProperClass::all();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    for (const Obj& X : {M1, M2})
        for (const Obj& Y : {M1, M2}) {
            ExtGroup g = ext_group(*eng, all, X, Y);
            for (const Mor& a : g.members)
                for (const Mor& b : g.members) {
                    Triangle s = baer_sum(*eng, all, ext_triangle(*eng, a), ext_triangle(*eng, b));
                    CHECK(s.w == add(C, a, b));
                }
        }
}

TEST_CASE("lifting problems") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    Obj M1 = Obj::indec(C, 0);

    // alpha = beta = 0 always lifts by 0.
    Triangle r1 = ext_triangle(*eng, zero_mor(C, M1, eng->shift(M1, 1)));
    Triangle r2 = r1;
    auto l0 = lifting_exists(*eng, all, r1, r2, zero_mor(C, r1.X, r2.Y), zero_mor(C, r1.Y, r2.Z));
    REQUIRE(l0.has_value());

    // Second row split: lifting always exists.
    for (const Mor& alpha : eng->morphisms_between(r1.X, r2.Y))
        for (const Mor& beta : eng->morphisms_between(r1.Y, r2.Z)) {
            if (!(compose(C, beta, r1.u) == compose(C, r2.v, alpha))) continue;
            CHECK(lifting_exists(*eng, all, r1, r2, alpha, beta).has_value());
        }
}

TEST_CASE("extension-lifting equivalence (Thm 3.2 at desk scale)") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    ProperClass sp = ProperClass::split();
    Obj M1 = Obj::indec(C, 0);

    // xi = split: both sides hold for all ends.
    CHECK(extension_lifting_equivalence(*eng, sp, M1, M1));
    // xi = all on N3 with X = Y = M1: a nonsplit class exists, and some
    // lifting problem is unsolvable; the equivalence still holds (both false).
    CHECK_FALSE(extension_lifting_equivalence(*eng, all, M1, M1));
    // X = 0: trivially true.
    CHECK(extension_lifting_equivalence(*eng, all, Obj::zero(C), M1));
}

TEST_CASE("six-term exactness on N3") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    ProperClass all = ProperClass::all();
    ProperClass coh = ProperClass::cohomological(M1, "cohM1");

    // Split triangle: degenerate but exact.
    Triangle sp = eng->completion_of_third(zero_mor(C, M1, eng->shift(M2, 1)));
    CHECK(six_term_check(*eng, all, sp, M2, true).all());
    CHECK(six_term_check(*eng, all, sp, M2, false).all());

    // All xi-triangles at bound 2 against every indecomposable, both sides.
    std::vector<ProperClass> classes;
    classes.push_back(all);
    classes.push_back(ProperClass::split());
    classes.push_back(coh);
    for (const ProperClass& xi : classes) {
        int count = 0;
        for (const Triangle& t : eng->all_distinguished()) {
            if (!xi.contains_third(*eng, t.w)) continue;
            if (t.X.total() + t.Y.total() + t.Z.total() > 4) continue;  // keep runtime modest
            for (const Obj& W : {M1, M2}) {
                CHECK(six_term_check(*eng, xi, t, W, true).all());
                CHECK(six_term_check(*eng, xi, t, W, false).all());
            }
            if (++count > 120) break;
        }
    }
}

TEST_CASE("naturality: isomorphic classes share the same w") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    Obj M1 = Obj::indec(C, 0);
    ExtGroup g = ext_group(*eng, all, M1, M1);
    for (const Mor& w : g.members) {
        Triangle t = ext_triangle(*eng, w);
        // Any automorphism of the middle object fixing both ends transports
        // t to a triangle with the same third map.
        for (const Mor& h : eng->aut_group(t.Y)) {
            Mor hv = compose(C, h, t.u);
            if (!(hv == t.u)) continue;
            if (!(compose(C, t.v, *inverse_of(C, h)) == t.v)) continue;
            CHECK(t.w == w);
        }
    }
}
