#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trimodel/proper_class.hpp"

using namespace trimodel;

namespace {

std::vector<ProperClass> n3_classes(const Engine& e) {
    std::vector<ProperClass> xs;
    xs.push_back(ProperClass::all());
    xs.push_back(ProperClass::split());
    xs.push_back(ProperClass::cohomological(Obj::indec(e.C(), 0), "cohM1"));
    xs.push_back(ProperClass::cohomological(Obj::indec(e.C(), 1), "cohM2"));
    return xs;
}

}  // namespace

TEST_CASE("membership basics on N3") {
    auto eng = ts::n3_engine();
    Triangle split_t = eng->cone(identity_mor(eng->C(), Obj::indec(eng->C(), 0)));
    Triangle nonsplit = eng->cone(ts::unit_mor(*eng, 0, 1));
    for (const ProperClass& xi : n3_classes(*eng)) {
        CHECK(xi.contains(*eng, split_t));  // every split triangle in every xi
    }
    CHECK(ProperClass::all().contains(*eng, nonsplit));
    CHECK_FALSE(ProperClass::split().contains(*eng, nonsplit));

    // Non-distinguished input is rejected.
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0);
    Triangle bogus{M1, M1, Obj::zero(C), zero_mor(C, M1, M1), zero_mor(C, M1, Obj::zero(C)),
                   zero_mor(C, Obj::zero(C), eng->shift(M1, 1))};
    CHECK_THROWS_AS(ProperClass::all().contains(*eng, bogus), std::invalid_argument);
}

TEST_CASE("cohomological membership is a three-rank check") {
    auto eng = ts::n3_engine();
    ProperClass coh = ProperClass::cohomological(Obj::indec(eng->C(), 0), "cohM1");
    Triangle nonsplit = eng->cone(ts::unit_mor(*eng, 0, 1));
    // Record the verdict; exactness of Hom(M1,-) on the nonsplit triangle
    // M1->M2->M1->M2 is decided by ranks.  Verify against a hand rank count:
    // all stable homs are 1-dimensional and the crossing composites vanish,
    // so Hom(M1, M1) -> Hom(M1, M2) is the zero map: not injective.
    CHECK_FALSE(coh.contains(*eng, nonsplit));
    ProperClass coh2 = ProperClass::cohomological(Obj::indec(eng->C(), 1), "cohM2");
    CHECK_FALSE(coh2.contains(*eng, nonsplit));
}

TEST_CASE("proper class axioms pass for the four shipped classes on N3") {
    auto eng = ts::n3_engine();
    for (const ProperClass& xi : n3_classes(*eng)) {
        AxiomReport rep = verify_proper_class_axioms(*eng, xi);
        for (const auto& item : rep.items) {
            INFO(xi.name(), ": ", item.axiom, " ", item.detail);
            CHECK(item.verdict == AxiomReport::Verdict::Pass);
        }
    }
}

TEST_CASE("explicit classes: split seeds give the split class") {
    auto eng = ts::n3_engine();
    ProperClass ex = ProperClass::explicit_class({}, true, "explicit-split");
    for (const Triangle& t : eng->all_distinguished())
        CHECK(ex.contains_third(*eng, t.w) == t.w.is_zero());
}

TEST_CASE("is_proper: identities, split monos, and the crossing maps") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    for (const ProperClass& xi : n3_classes(*eng)) {
        CHECK(is_proper(*eng, xi, identity_mor(C, M1), ProperSide::Mono));
        CHECK(is_proper(*eng, xi, identity_mor(C, M1), ProperSide::Epi));
        // A splitting monomorphism is xi-proper mono for every xi.
        std::vector<Obj> parts = {M1, M2};
        CHECK(is_proper(*eng, xi, inclusion(C, parts, 0), ProperSide::Mono));
    }
    // For xi = Split: the nonzero M1 -> M2 has nonsplit cone, so not proper.
    ProperClass sp = ProperClass::split();
    CHECK_FALSE(is_proper(*eng, sp, ts::unit_mor(*eng, 0, 1), ProperSide::Mono));
}

TEST_CASE("rotation closure iff xi is everything (Prop 2.10 at desk scale)") {
    auto eng = ts::n3_engine();
    CHECK(rotation_closure_report(*eng, ProperClass::all()));
    CHECK_FALSE(rotation_closure_report(*eng, ProperClass::split()));
    ProperClass cohM1 = ProperClass::cohomological(Obj::indec(eng->C(), 0), "cohM1");
    ProperClass cohM2 = ProperClass::cohomological(Obj::indec(eng->C(), 1), "cohM2");
    CHECK_FALSE(rotation_closure_report(*eng, cohM1));
    CHECK_FALSE(rotation_closure_report(*eng, cohM2));
}

TEST_CASE("strictness of the shipped classes") {
    auto eng = ts::n3_engine();
    StrictnessReport all = strictness_report(*eng, ProperClass::all());
    CHECK(all.contains_nonsplit);
    CHECK_FALSE(all.misses_some);
    StrictnessReport sp = strictness_report(*eng, ProperClass::split());
    CHECK_FALSE(sp.contains_nonsplit);
    CHECK(sp.misses_some);
    // VEC is semisimple at bound 2 in the sense that the split class still
    // misses triangles (nonsplit exact sequences exist), so run on the zero
    // subuniverse instead: a bound-0 engine sees only the zero object.
    auto ez = std::make_shared<Engine>(std::make_shared<SemisimpleBackend>(2, 1), 0, 1 << 20);
    StrictnessReport z = strictness_report(*ez, ProperClass::split());
    CHECK_FALSE(z.contains_nonsplit);
    CHECK_FALSE(z.misses_some);
}

TEST_CASE("composite lemmas: proper monos/epis compose and cancel") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    for (const ProperClass& xi : n3_classes(*eng)) {
        for (const Obj& A : eng->universe())
            for (const Obj& B : eng->universe()) {
                if (A.total() + B.total() > 3) continue;  // keep the triple loop small
                for (const Mor& u : eng->morphisms_between(A, B))
                    for (const Obj& D : eng->universe()) {
                        if (D.total() > 1) continue;
                        for (const Mor& v : eng->morphisms_between(B, D)) {
                            Mor vu = compose(C, v, u);
                            bool u_mono = is_proper(*eng, xi, u, ProperSide::Mono);
                            bool v_mono = is_proper(*eng, xi, v, ProperSide::Mono);
                            bool u_epi = is_proper(*eng, xi, u, ProperSide::Epi);
                            bool v_epi = is_proper(*eng, xi, v, ProperSide::Epi);
                            bool vu_mono = is_proper(*eng, xi, vu, ProperSide::Mono);
                            bool vu_epi = is_proper(*eng, xi, vu, ProperSide::Epi);
                            // Composition closure.
                            if (u_mono && v_mono) CHECK(vu_mono);
                            if (u_epi && v_epi) CHECK(vu_epi);
                            // Cancellation.
                            if (vu_mono) CHECK(u_mono);
                            if (vu_epi) CHECK(v_epi);
                        }
                    }
            }
    }
}

TEST_CASE("four-term triangles") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    ProperClass all = ProperClass::all();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);

    // Case 1 with alpha = id: hok(beta) appears at both ends.
    Mor beta = ts::unit_mor(*eng, 0, 1);
    Triangle t1 = four_term_triangle(*eng, all, identity_mor(C, M1), beta, 1);
    CHECK(t1.X.is_zero());  // hok(id) = 0
    CHECK(eng->is_distinguished(t1));

    // Case 2 with beta = id.
    Triangle t2 = four_term_triangle(*eng, all, beta, identity_mor(C, M2), 2);
    CHECK(eng->is_distinguished(t2));
    CHECK(t2.Z == eng->cone(identity_mor(C, M2)).Z);  // hoc(id) = 0

    // Case 3: alpha the nonzero mono M1 -> M2 (proper for xi = all), with
    // beta chosen so beta.alpha is a proper epi.
    for (const Mor& b2 : eng->morphisms_between(M2, M1)) {
        Mor ba = compose(C, b2, beta);
        if (!is_proper(*eng, all, beta, ProperSide::Mono)) continue;
        if (!is_proper(*eng, all, ba, ProperSide::Epi)) continue;
        Triangle t3 = four_term_triangle(*eng, all, beta, b2, 3);
        CHECK(eng->is_distinguished(t3));
        // Ends: hok(ba) -> hok(b2) -> hoc(beta) -> hok(ba)[1].
        CHECK(t3.X == eng->hok(ba).first);
        CHECK(t3.Y == eng->hok(b2).first);
        CHECK(t3.Z == eng->hoc(beta).first);
    }

    // Case 4 with a proper epi beta and beta.alpha a proper mono.
    for (const Mor& a : eng->morphisms_between(M1, M2))
        for (const Mor& b : eng->morphisms_between(M2, M2)) {
            if (!is_proper(*eng, all, b, ProperSide::Epi)) continue;
            Mor ba = compose(C, b, a);
            if (!is_proper(*eng, all, ba, ProperSide::Mono)) continue;
            Triangle t4 = four_term_triangle(*eng, all, a, b, 4);
            CHECK(eng->is_distinguished(t4));
        }
}

TEST_CASE("two-out-of-three membership transfer on stacked diagrams") {
    // Composite-closure corollaries of the saturation machinery: if the
    // completion of u and of v are members, so is the completion of vu;
    // exercised through the four-term construction in case 1/2 style.
    auto eng = ts::n3_engine();
    ProperClass all = ProperClass::all();
    const auto& C = eng->C();
    Obj M2 = Obj::indec(C, 1);
    Mor id2 = identity_mor(C, M2);
    CHECK_NOTHROW(four_term_triangle(*eng, all, id2, id2, 1));
    CHECK_NOTHROW(four_term_triangle(*eng, all, id2, id2, 2));
}
