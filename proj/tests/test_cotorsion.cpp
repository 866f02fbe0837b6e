#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trimodel/cotorsion.hpp"

using namespace trimodel;

namespace {

std::vector<SubcategorySpec> lattice(const CategoryPresentation& C) {
    return {SubcategorySpec::none("empty"), SubcategorySpec::of({0}, "X1"),
            SubcategorySpec::of({1}, "X2"), SubcategorySpec::all(C)};
}

}  // namespace

TEST_CASE("orthogonals") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    ProperClass sp = ProperClass::split();

    // Right orthogonal of the empty class is everything.
    CHECK(orthogonal(*eng, all, SubcategorySpec::none(), true).members == std::vector<int>{0, 1});
    // For xi = split every orthogonal is everything.
    for (const auto& S : lattice(C)) {
        CHECK(orthogonal(*eng, sp, S, true).members == std::vector<int>{0, 1});
        CHECK(orthogonal(*eng, sp, S, false).members == std::vector<int>{0, 1});
    }
    // For xi = all on N3: Ext(M1, M1) and Ext(M2, M2) are nonzero (the
    // nonsplit classes), Ext(M1, M2) and Ext(M2, M1) vanish since the
    // endomorphism-type hom spaces host no nonsplit class.
    ExtGroup g11 = ext_group(*eng, all, Obj::indec(C, 0), Obj::indec(C, 0));
    CHECK_FALSE(g11.trivial());
    SubcategorySpec perpM1 = orthogonal(*eng, all, SubcategorySpec::of({0}), true);
    CHECK_FALSE(perpM1.contains_indec(0));
}

TEST_CASE("cotorsion pairs on the N3 lattice") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass sp = ProperClass::split();
    // (all, all) is a cotorsion pair for xi = split.
    CHECK(is_cotorsion_pair(*eng, sp, SubcategorySpec::all(C), SubcategorySpec::all(C)));
    // For every shipped xi, (P(xi), T) with P(xi) computed as the left
    // orthogonal of everything... here checked in the basic double-orthogonal
    // form: S is contained in perp(S^perp).
    for (const ProperClass& xi :
         {ProperClass::all(), sp, ProperClass::cohomological(Obj::indec(C, 0), "cohM1")}) {
        for (const auto& S : lattice(C)) {
            SubcategorySpec rp = orthogonal(*eng, xi, S, true);
            SubcategorySpec lp = orthogonal(*eng, xi, rp, false);
            for (int m : S.members) CHECK(lp.contains_indec(m));
        }
    }
}

TEST_CASE("completeness searches find witnesses on N3") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass sp = ProperClass::split();
    // (all, all) with xi = split: witnesses are identity-type triangles.
    CompletenessResult r = completeness(*eng, sp, SubcategorySpec::all(C), SubcategorySpec::all(C));
    CHECK(r.complete);
    CHECK(r.witnesses.size() == 2);
    for (const auto& w : r.witnesses) {
        CHECK(sp.contains(*eng, w.approx));
        CHECK(sp.contains(*eng, w.coapprox));
        CHECK(w.approx.Z == w.T);
        CHECK(w.coapprox.X == w.T);
    }

    ProperClass all = ProperClass::all();
    // (all, all) is not complete for xi = all: Ext(M1, M1) is nonzero.
    CompletenessResult r2 = completeness(*eng, all, SubcategorySpec::all(C), SubcategorySpec::all(C));
    CHECK_FALSE(r2.complete);

    // The two hereditary complete pairs for xi = all on N3 are (empty, all)
    // and (all, empty): witnesses force the middle or the end to vanish.
    CompletenessResult ra = completeness(*eng, all, SubcategorySpec::none(), SubcategorySpec::all(C));
    CHECK(ra.complete);
    CompletenessResult rb = completeness(*eng, all, SubcategorySpec::all(C), SubcategorySpec::none());
    CHECK(rb.complete);

    // ({M1}, {M2}) for xi = all is not even a cotorsion pair; the
    // orthogonality fallback already fails.
    CompletenessResult r3 = completeness(*eng, all, SubcategorySpec::of({0}), SubcategorySpec::of({1}));
    CHECK_FALSE(r3.complete);
}

TEST_CASE("heredity: three formulations agree on complete pairs") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    for (const ProperClass& xi : {ProperClass::all(), ProperClass::split()}) {
        SubcategorySpec all_s = SubcategorySpec::all(C);
        bool complete = completeness(*eng, xi, all_s, all_s).complete;
        HeredityResult h = heredity(*eng, xi, all_s, all_s, complete);
        CHECK(h.agree());
        CHECK(h.def_form);  // closure in the full subcategory is vacuous
    }
}

TEST_CASE("core and approximations") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    SubcategorySpec s12 = SubcategorySpec::all(C);
    SubcategorySpec s2 = SubcategorySpec::of({1});
    CHECK(core(s12, s2).members == std::vector<int>{1});
    CHECK(core(s12, s12).members == s12.members);
    CHECK(core(s12, SubcategorySpec::none()).members.empty());

    // T in S: the identity is a right approximation and the search succeeds.
    Obj M1 = Obj::indec(C, 0);
    auto t = right_approximation(*eng, SubcategorySpec::of({0}), M1);
    REQUIRE(t.has_value());
    CHECK(*t == identity_mor(C, M1));

    // S empty: the zero map from 0 approximates.
    auto t0 = right_approximation(*eng, SubcategorySpec::none(), M1);
    REQUIRE(t0.has_value());
    CHECK(t0->src.is_zero());

    // Right {M2}-approximation of M1 exists (scan over Hom(M2^k, M1)).
    auto t2 = right_approximation(*eng, s2, M1);
    REQUIRE(t2.has_value());
    CHECK(s2.contains_obj(t2->src));
}

TEST_CASE("extension closure") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    CHECK(extension_closure_check(*eng, all, SubcategorySpec::all(C)));
    // S = {M1} under xi = all: the nonsplit triangle M2 -> M1+M1? -- decided
    // by the scan; record the verdict for the fixture.
    bool s1 = extension_closure_check(*eng, all, SubcategorySpec::of({0}));
    // The triangle M1 -> M2 -> M1 -> ... has ends M1, M1 and middle M2.
    CHECK_FALSE(s1);
}

TEST_CASE("co-t-structure conditions") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    // On N3 the shift swaps M1 and M2, so neither singleton class is shift
    // closed; (all, all) fails the Hom-vanishing clause.
    CHECK_FALSE(co_t_structure_check(*eng, SubcategorySpec::of({0}), SubcategorySpec::of({1})));
    CHECK_FALSE(co_t_structure_check(*eng, SubcategorySpec::all(C), SubcategorySpec::all(C)));
    // (all, none): decomposition triangles X[-1] -> T -> 0 -> X require the
    // cone of X[-1] -> T to vanish, i.e. every T is a shifted X: true on N3.
    CHECK(co_t_structure_check(*eng, SubcategorySpec::all(C), SubcategorySpec::none()));
    // On VEC with one simple: ({k}, none) works the same way.
    auto ev = ts::vec_engine();
    CHECK(co_t_structure_check(*ev, SubcategorySpec::all(ev->C()), SubcategorySpec::none()));
    // (none, all) fails (3) unless every T admits 0 -> T -> Y with Y = T.
    CHECK(co_t_structure_check(*ev, SubcategorySpec::none(), SubcategorySpec::all(ev->C())));
}

TEST_CASE("double orthogonal closure holds across the lattice") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass cohM2 = ProperClass::cohomological(Obj::indec(C, 1), "cohM2");
    for (const auto& S : lattice(C)) {
        SubcategorySpec rp = orthogonal(*eng, cohM2, S, true);
        SubcategorySpec lp = orthogonal(*eng, cohM2, rp, false);
        for (int m : S.members) CHECK(lp.contains_indec(m));
    }
}
