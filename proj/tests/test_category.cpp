#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace trimodel;

TEST_CASE("composition unit and zero laws") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj A = ts::obj(*eng, {1, 1});
    for (const Mor& f : eng->morphisms_between(A, A)) {
        CHECK(compose(C, identity_mor(C, A), f) == f);
        CHECK(compose(C, f, identity_mor(C, A)) == f);
        CHECK(compose(C, zero_mor(C, A, A), f).is_zero());
    }
}

TEST_CASE("associativity over all enumerated composable triples at bound 2") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj A = Obj::indec(C, 0), B = ts::obj(*eng, {1, 1}), D = Obj::indec(C, 1);
    for (const Mor& f : eng->morphisms_between(A, B))
        for (const Mor& g : eng->morphisms_between(B, D))
            for (const Mor& h : eng->morphisms_between(D, B))
                CHECK(compose(C, h, compose(C, g, f)) == compose(C, compose(C, h, g), f));
}

TEST_CASE("direct sum is functorial") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    for (const Mor& f1 : eng->morphisms_between(M1, M2))
        for (const Mor& g1 : eng->morphisms_between(M2, M1))
            for (const Mor& f2 : eng->morphisms_between(M2, M2))
                for (const Mor& g2 : eng->morphisms_between(M2, M2)) {
                    Mor lhs = compose(C, direct_sum(C, g1, g2), direct_sum(C, f1, f2));
                    Mor rhs = direct_sum(C, compose(C, g1, f1), compose(C, g2, f2));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("biproduct structure maps") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    std::vector<Obj> parts = {M1, M2};
    Mor i0 = inclusion(C, parts, 0), i1 = inclusion(C, parts, 1);
    Mor p0 = projection(C, parts, 0), p1 = projection(C, parts, 1);
    CHECK(compose(C, p0, i0) == identity_mor(C, M1));
    CHECK(compose(C, p1, i1) == identity_mor(C, M2));
    CHECK(compose(C, p1, i0).is_zero());
    Mor idsum = add(C, compose(C, i0, p0), compose(C, i1, p1));
    CHECK(idsum == identity_mor(C, Obj::sum(M1, M2)));
    CHECK(direct_sum(C, identity_mor(C, M1), identity_mor(C, M2)) ==
          identity_mor(C, Obj::sum(M1, M2)));
}

TEST_CASE("isomorphism search produces a two-sided inverse") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj A = ts::obj(*eng, {1, 1});
    CHECK(is_isomorphism(C, identity_mor(C, A)));
    CHECK_FALSE(is_isomorphism(C, zero_mor(C, A, A)));
    int count = 0;
    for (const Mor& f : eng->morphisms_between(A, A)) {
        if (auto g = inverse_of(C, f)) {
            CHECK(compose(C, *g, f) == identity_mor(C, A));
            CHECK(compose(C, f, *g) == identity_mor(C, A));
            ++count;
        }
    }
    CHECK(count == static_cast<int>(eng->aut_group(A).size()));
}

TEST_CASE("hom enumeration counts") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj M1 = Obj::indec(C, 0);
    CHECK(eng->morphisms_between(Obj::zero(C), M1).size() == 1);
    CHECK(eng->morphisms_between(M1, M1).size() == 2);
    CHECK(eng->morphisms_between(ts::obj(*eng, {2, 0}), M1).size() == 4);
}

TEST_CASE("opposite presentation is an involution and reverses composition") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    CategoryPresentation O = opposite(C);
    O.validate();
    CategoryPresentation OO = opposite(O);
    CHECK(OO.hom_dim == C.hom_dim);
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j)
            for (int k = 0; k < C.n; ++k) CHECK(OO.comp[i][j][k] == C.comp[i][j][k]);

    Obj A = ts::obj(*eng, {1, 1});
    for (const Mor& f : eng->morphisms_between(Obj::indec(C, 0), A))
        for (const Mor& g : eng->morphisms_between(A, Obj::indec(C, 1))) {
            Mor lhs = op_mor(C, compose(C, g, f));
            Mor rhs = compose(O, op_mor(C, f), op_mor(C, g));
            CHECK(lhs == rhs);
        }
    for (const Mor& f : eng->morphisms_between(A, A)) CHECK(op_mor(O, op_mor(C, f)) == f);
}

TEST_CASE("shift data: functor laws and strict inverse") {
    auto eng = ts::n3_engine();
    const auto& C = eng->C();
    Obj A = ts::obj(*eng, {1, 1});
    CHECK(eng->shift(A, 0) == A);
    CHECK(eng->shift(Obj::indec(C, 0), 1) == Obj::indec(C, 1));  // M1[1] = M2 in N3
    for (const Mor& f : eng->morphisms_between(A, A)) {
        CHECK(eng->shift(eng->shift(f, 1), -1) == f);
        CHECK(eng->shift(f, 2) == f);  // order 2
    }
    Obj M1 = Obj::indec(C, 0), M2 = Obj::indec(C, 1);
    for (const Mor& f : eng->morphisms_between(M1, M2))
        for (const Mor& g : eng->morphisms_between(M2, M2)) {
            CHECK(eng->shift(compose(C, g, f), 1) == compose(C, eng->shift(g, 1), eng->shift(f, 1)));
            CHECK(eng->shift(direct_sum(C, f, g), 1) ==
                  direct_sum(C, eng->shift(f, 1), eng->shift(g, 1)));
        }
}
