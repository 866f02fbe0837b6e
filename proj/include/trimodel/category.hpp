#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trimodel/gf.hpp"

namespace trimodel {

// A finite spectroid: pairwise non-isomorphic indecomposables I_0..I_{n-1},
// a chosen basis of every hom space, composition structure constants, and
// the coordinates of each identity.  The additive category it presents has
// objects the formal sums of indecomposables and morphisms block matrices.
struct CategoryPresentation {
    int p = 2;
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> hom_dim;  // hom_dim[i][j] = dim Hom(I_i, I_j)
    // comp[i][j][k]: matrix of shape hom_dim(i,k) x (hom_dim(i,j)*hom_dim(j,k)).
    // Column (f + g*hom_dim(i,j)) holds the coordinates of basis_g . basis_f.
    std::vector<std::vector<std::vector<Mat>>> comp;
    std::vector<Mat> id_coords;  // id_{I_a} in the basis of Hom(I_a, I_a)

    int hd(int i, int j) const { return hom_dim[i][j]; }
    int label_index(const std::string& s) const;

    // Coordinates of g.f for coordinate vectors f in Hom(i,j), g in Hom(j,k).
    Mat compose_coords(int i, int j, int k, const Mat& f, const Mat& g) const;

    // Associativity on all basis triples and two-sided unit laws.
    void validate() const;
};

CategoryPresentation opposite(const CategoryPresentation& C);

struct Obj {
    std::vector<int> mult;

    int total() const;
    bool is_zero() const;
    bool operator==(const Obj& o) const = default;

    static Obj zero(const CategoryPresentation& C);
    static Obj indec(const CategoryPresentation& C, int i);
    static Obj sum(const Obj& a, const Obj& b);

    std::string show(const CategoryPresentation& C) const;
};

// Expanded slot list of an object: indecomposable index per copy, grouped by
// indecomposable in ascending order.
std::vector<int> slots(const Obj& a);

// A morphism between formal sums.  Block (t, s) is the coordinate vector of
// the component I_{src slot s} -> I_{tgt slot t}; blocks are flattened
// t-major into `a`.
struct Mor {
    Obj src, tgt;
    std::vector<Scalar> a;

    bool operator==(const Mor& o) const = default;
    bool is_zero() const;
    std::vector<std::uint8_t> key() const;  // memoization key
};

// Layout helper shared by all block-level operations.
struct MorShape {
    const CategoryPresentation* C;
    std::vector<int> src_slots, tgt_slots;
    std::vector<int> offset;  // per (t,s) pair, t-major; last entry = dim
    int dim;

    MorShape(const CategoryPresentation& cat, const Obj& src, const Obj& tgt);
    int block_offset(int t, int s) const { return offset[static_cast<size_t>(t) * src_slots.size() + s]; }
    int block_len(int t, int s) const { return C->hd(src_slots[s], tgt_slots[t]); }
};

int hom_space_dim(const CategoryPresentation& C, const Obj& A, const Obj& B);

Mor zero_mor(const CategoryPresentation& C, const Obj& A, const Obj& B);
Mor identity_mor(const CategoryPresentation& C, const Obj& A);
Mor compose(const CategoryPresentation& C, const Mor& g, const Mor& f);  // g after f
Mor add(const CategoryPresentation& C, const Mor& f, const Mor& g);
Mor sub(const CategoryPresentation& C, const Mor& f, const Mor& g);
Mor negate(const CategoryPresentation& C, const Mor& f);
Mor scale(const CategoryPresentation& C, const Mor& f, Scalar c);

// Block-diagonal sum f + g : src(f)+src(g) -> tgt(f)+tgt(g).
Mor direct_sum(const CategoryPresentation& C, const Mor& f, const Mor& g);

// Biproduct structure maps for S = parts[0] + ... + parts[m-1].
Mor inclusion(const CategoryPresentation& C, const std::vector<Obj>& parts, int which);
Mor projection(const CategoryPresentation& C, const std::vector<Obj>& parts, int which);

// (f, g): A+B -> C from f: A->C, g: B->C, and (f; g): C -> A+B dually.
Mor from_components_src(const CategoryPresentation& C, const std::vector<Mor>& fs);
Mor from_components_tgt(const CategoryPresentation& C, const std::vector<Mor>& fs);

Mat mor_to_vec(const CategoryPresentation& C, const Mor& f);
Mor vec_to_mor(const CategoryPresentation& C, const Obj& A, const Obj& B, const Mat& v);

// Matrix of h |-> g.h on Mor(A, src g) -> Mor(A, tgt g).
Mat postcompose_matrix(const CategoryPresentation& C, const Mor& g, const Obj& A);
// Matrix of h |-> h.f on Mor(tgt f, B) -> Mor(src f, B).
Mat precompose_matrix(const CategoryPresentation& C, const Mor& f, const Obj& B);

// Two-sided inverse when it exists (solves g.f = id, f.g = id jointly).
std::optional<Mor> inverse_of(const CategoryPresentation& C, const Mor& f);
inline bool is_isomorphism(const CategoryPresentation& C, const Mor& f) { return inverse_of(C, f).has_value(); }

// All morphisms A -> B in the deterministic coordinate order.
class MorEnumerator {
  public:
    MorEnumerator(const CategoryPresentation& C, const Obj& A, const Obj& B, std::uint64_t budget);
    std::optional<Mor> next();

  private:
    const CategoryPresentation& C_;
    Obj A_, B_;
    VectorEnumerator vecs_;
};

// f as a morphism of the opposite presentation (src/tgt swapped, blocks kept).
Mor op_mor(const CategoryPresentation& C, const Mor& f);

// Builder for linear systems whose unknown is a morphism h: src -> tgt.
class MorSystem {
  public:
    MorSystem(const CategoryPresentation& C, const Obj& src, const Obj& tgt);
    void post(const Mor& g, const Mor& rhs);  // g.h = rhs
    void pre(const Mor& f, const Mor& rhs);   // h.f = rhs
    void lin(const Mat& M, const Mor& rhs);   // M * vec(h) = vec(rhs)
    std::optional<AffineSolution> solve() const;
    std::optional<Mor> first_solution() const;
    const Obj& src() const { return src_; }
    const Obj& tgt() const { return tgt_; }
    Mor to_mor(const Mat& v) const { return vec_to_mor(C_, src_, tgt_, v); }

  private:
    const CategoryPresentation& C_;
    Obj src_, tgt_;
    Mat A_;
    Mat b_;
};

// The shift autoequivalence: a permutation of indecomposables together with
// base-change matrices on every hom space, of finite order.
struct ShiftData {
    std::vector<int> perm;
    int order = 1;
    std::vector<std::vector<Mat>> hom_map;  // hom_map[i][j]: hd(pi,pj) x hd(i,j)

    void validate(const CategoryPresentation& C) const;
};

Obj shift_obj(const CategoryPresentation& C, const ShiftData& S, const Obj& A, int steps);
Mor shift_mor(const CategoryPresentation& C, const ShiftData& S, const Mor& f, int steps);

ShiftData opposite_shift(const CategoryPresentation& C, const ShiftData& S);

}  // namespace trimodel
