#pragma once

#include "trimodel/proper_class.hpp"

namespace trimodel {

// Ext_xi(X, Y) under its embedding into Hom(X, Y[1]): the member w's are the
// third maps of the xi-triangles Y -> E -> X -> Y[1].
struct ExtGroup {
    Obj X, Y;
    int ambient_dim = 0;
    std::vector<Mor> members;  // every member, in enumeration order
    std::vector<Mor> basis;    // independent spanning subset
    bool trivial() const { return members.size() <= 1; }
    bool full() const;
    Mat basis_matrix(const CategoryPresentation& C) const;  // ambient_dim x |basis|
};

// Enumerates Hom(X, Y[1]) and keeps the xi members; verifies the result is a
// subspace (TheoremViolation otherwise).
ExtGroup ext_group(const Engine& e, const ProperClass& xi, const Obj& X, const Obj& Y);

// Baer sum of two classes in xi*(X,Y), computed by coproduct + base change
// along the diagonal + cobase change along the codiagonal.  The triangles
// are stored as (Y, E, X; c, d, w).  The w-coordinate of the result must be
// w1 + w2 (TheoremViolation otherwise).
Triangle baer_sum(const Engine& e, const ProperClass& xi, const Triangle& t1, const Triangle& t2);

// The lifting problem of the extension-lifting theorem: rows
// row1 = (A,B,X; i,d,u) and row2 = (Y,C,D; c,p,v) in xi, with alpha: A -> C
// and beta: B -> D making the square commute.  Returns lambda: B -> C with
// lambda.i = alpha and p.lambda = beta when one exists.
std::optional<Mor> lifting_exists(const Engine& e, const ProperClass& xi, const Triangle& row1,
                                  const Triangle& row2, const Mor& alpha, const Mor& beta);

// Ext_xi(X,Y) = 0 iff every lifting problem over U is solvable; both sides
// are evaluated and must agree (TheoremViolation otherwise).
bool extension_lifting_equivalence(const Engine& e, const ProperClass& xi, const Obj& X, const Obj& Y);

struct SixTermReport {
    bool exact[4] = {false, false, false, false};
    bool all() const { return exact[0] && exact[1] && exact[2] && exact[3]; }
};

// The six-term exact sequence induced by t in xi against W; contravariant
// uses Hom(-, W), covariant uses Hom(W, -).  Throws TheoremViolation when a
// position is inexact or a connecting map leaves the Ext subgroup.
SixTermReport six_term_check(const Engine& e, const ProperClass& xi, const Triangle& t, const Obj& W,
                             bool contravariant);

}  // namespace trimodel
