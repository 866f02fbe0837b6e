#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trimodel/category.hpp"

namespace trimodel {

// Candidate or certified triangle X -> Y -> Z -> X[1].  Constructed through
// Engine::make_triangle, which enforces the zero-composite invariants.
struct Triangle {
    Obj X, Y, Z;
    Mor u, v, w;  // u: X->Y, v: Y->Z, w: Z->X[1]

    bool operator==(const Triangle& t) const = default;
    std::vector<std::uint8_t> key() const;
};

// Commutative square
//      P --a--> Q
//      |b       |c
//      R --d--> S      with c.a = d.b.
struct Square {
    Mor a, b, c, d;
};

// All objects and arrows of the base change diagram of t along alpha: Z' -> Z.
//
//            X' ====== X'
//            |beta'     |beta3
//   X -u'-> Y' -v'-> Z' -----> X[1]
//   |        |alpha'   |alpha   |
//   X -u-->  Y --v-->  Z -w->  X[1]
//            |          |gamma
//           X'[1] ==== X'[1]
//
// row2 = (X,Y',Z'; u',v',w.alpha), col2 = (X',Y',Y; beta',alpha',gamma.v),
// col3 = (X',Z',Z; beta3,alpha,gamma); all three certified distinguished.
// delta = u'[1].w is the homotopy cartesian witness of the middle square.
struct BaseChangeDiagram {
    Triangle t;        // the original
    Mor alpha;         // Z' -> Z
    Triangle row2;     // base-changed triangle
    Triangle col2;
    Triangle col3;
    Mor alpha_prime;   // Y' -> Y
    Mor beta_prime;    // X' -> Y'
    Mor delta;         // Z -> Y'[1]
};

// Dual diagram for the cobase change of t along beta: X -> X'.
// row3 = (X',Y',Z; u',v',beta[1].w), col2 = cone(beta) = (X,X',Z'; beta,beta2,gamma),
// col3 = (Y,Y',Z'; beta',alpha',u[1].gamma); delta = -w.v' witnesses the middle square.
struct CobaseChangeDiagram {
    Triangle t;
    Mor beta;          // X -> X'
    Triangle row3;     // cobase-changed triangle
    Triangle col2;
    Triangle col3;
    Mor beta_prime;    // Y -> Y'
    Mor alpha_prime;   // Y' -> Z'
    Mor delta;         // Y' -> X[1]
};

// Octahedron over a composable pair (u: X->Y, v: Y->Z): cones of u, v, vu and
// the fills making the third column (Z' -> Y' -> X' -> Z'[1]) distinguished.
struct OctahedronDiagram {
    Mor u, v;
    Triangle t_u;    // (X, Y, Z')
    Triangle t_vu;   // (X, Z, Y')
    Triangle t_v;    // (Y, Z, X')
    Mor f;           // Z' -> Y'
    Mor g;           // Y' -> X'
    Triangle col3;   // (Z', Y', X'; f, g, t_u.v[1] . t_v.w)
};

// Supplies the ambient category, the shift, and the cone oracle.  The cone
// oracle is the only source of distinguished triangles; everything else is
// derived from it.
class Backend {
  public:
    virtual ~Backend() = default;
    virtual const CategoryPresentation& cat() const = 0;
    virtual const ShiftData& shift_data() const = 0;
    virtual Triangle cone(const Mor& u) const = 0;
    virtual std::string name() const = 0;
};

// The triangle calculus over a backend, with memoized cones, membership
// tests and bounded searches.  `bound` is the total multiplicity defining
// the search universe U; `budget` caps every enumeration.
class Engine {
  public:
    Engine(std::shared_ptr<const Backend> backend, int bound, std::uint64_t budget);

    const Backend& backend() const { return *backend_; }
    std::shared_ptr<const Backend> backend_ptr() const { return backend_; }
    const CategoryPresentation& C() const { return backend_->cat(); }
    const ShiftData& S() const { return backend_->shift_data(); }
    int bound() const { return bound_; }
    std::uint64_t budget() const { return budget_; }

    Obj shift(const Obj& a, int i) const { return shift_obj(C(), S(), a, i); }
    Mor shift(const Mor& f, int i) const { return shift_mor(C(), S(), f, i); }
    // Matrix of f |-> f[1] on Mor(A,B) -> Mor(A[1],B[1]).
    Mat shift_matrix(const Obj& A, const Obj& B) const;

    Triangle make_triangle(const Obj& X, const Obj& Y, const Obj& Z, const Mor& u, const Mor& v,
                           const Mor& w) const;
    bool zero_composites(const Mor& u, const Mor& v, const Mor& w) const;

    Triangle cone(const Mor& u) const;                     // memoized oracle call
    std::pair<Obj, Mor> hoc(const Mor& u) const;           // (Z, v) of cone(u)
    std::pair<Obj, Mor> hok(const Mor& u) const;           // (W, f) with W->X->Y->W[1] dist.
    Triangle hok_triangle(const Mor& u) const;             // the whole completion (W,X,Y)

    bool is_distinguished(const Triangle& t) const;        // memoized
    // The canonical distinguished triangle whose third map is exactly w
    // (any two such are isomorphic with identities on both ends).
    Triangle completion_of_third(const Mor& w) const;
    Triangle rotate(const Triangle& t, int k) const;
    Triangle suspend(const Triangle& t, int i) const;      // signs (-1)^i
    Triangle coproduct(const Triangle& t1, const Triangle& t2) const;

    // TR3 fill h: Z -> Z' for a morphism (f,g) of triangles; first solution
    // in enumeration order, or nullopt if the linear system is inconsistent.
    std::optional<Mor> fill_morphism(const Triangle& t1, const Triangle& t2, const Mor& f,
                                     const Mor& g) const;

    BaseChangeDiagram base_change(const Triangle& t, const Mor& alpha) const;
    CobaseChangeDiagram cobase_change(const Triangle& t, const Mor& beta) const;

    std::optional<Mor> homotopy_cartesian_witness(const Square& s) const;
    bool is_weak_pullback(const Square& s) const;
    bool is_weak_pushout(const Square& s) const;

    // For w = 0: the normalized retraction pair (s, t') with s.u = id,
    // v.t' = id, s.t' = 0, u.s + t'.v = id.  Absent iff w != 0.
    std::optional<std::pair<Mor, Mor>> split_data(const Triangle& t) const;
    bool is_split(const Triangle& t) const { return t.w.is_zero(); }

    OctahedronDiagram octahedron(const Mor& u, const Mor& v) const;

    // Search universe: objects of total multiplicity <= bound, graded lex.
    const std::vector<Obj>& universe() const;
    std::vector<Mor> morphisms_between(const Obj& A, const Obj& B) const;
    const std::vector<Mor>& all_morphisms() const;
    // Every distinguished triangle with all three vertices in U.
    const std::vector<Triangle>& all_distinguished() const;
    const std::vector<Mor>& aut_group(const Obj& A) const;

    // Triangle isomorphism with prescribed end behaviour: searches h making
    // (f,g,h) an isomorphism of triangles; f and g must be isomorphisms.
    std::optional<Mor> triangle_iso_fill(const Triangle& t1, const Triangle& t2, const Mor& f,
                                         const Mor& g) const;

  private:
    std::shared_ptr<const Backend> backend_;
    int bound_;
    std::uint64_t budget_;

    mutable std::mutex mu_;
    mutable std::map<std::vector<std::uint8_t>, Triangle> cone_memo_;
    mutable std::map<std::vector<std::uint8_t>, bool> dist_memo_;
    mutable std::map<std::vector<int>, std::vector<Mor>> aut_memo_;
    mutable std::map<std::vector<int>, std::vector<Mor>> mor_memo_;
    mutable std::optional<std::vector<Obj>> universe_;
    mutable std::optional<std::vector<Mor>> all_mor_;
    mutable std::optional<std::vector<Triangle>> all_dist_;
};

}  // namespace trimodel
