#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trimodel/triangles.hpp"

namespace trimodel {

// A finite-dimensional module given by one action matrix per algebra basis
// element (left modules; columns are acted on from the left).
struct ModuleRep {
    int dim = 0;
    std::vector<Mat> action;
};

// A finite-dimensional algebra over GF(p) by structure constants, plus its
// declared complete list of indecomposable modules.
struct AlgebraPresentation {
    int p = 2;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<Mat>> products;  // products[i][j]: coords of e_i * e_j
    Mat unit;                                // coords of 1
    std::vector<std::string> module_names;
    std::vector<ModuleRep> modules;

    Mat mult_coords(const Mat& a, const Mat& b) const;  // coords of a*b
    ModuleRep regular_module() const;                   // the algebra over itself
    void validate() const;  // associativity, unit, module axioms
};

// Module-level linear algebra.
std::vector<Mat> module_hom_basis(const AlgebraPresentation& A, const ModuleRep& M, const ModuleRep& N);
ModuleRep module_sum(const AlgebraPresentation& A, const std::vector<const ModuleRep*>& parts);
bool modules_isomorphic(const AlgebraPresentation& A, const ModuleRep& M, const ModuleRep& N,
                        std::uint64_t budget);
bool has_local_endo_ring(const AlgebraPresentation& A, const ModuleRep& M, std::uint64_t budget);

// Decomposition of M over the declared list: multiplicities together with a
// mutually inverse pair of module isomorphisms M <-> + modules[i]^mult[i]
// (blocks ordered by declared index, copies consecutive).
struct Decomposition {
    std::vector<int> mult;
    Mat to_sum;    // M -> sum
    Mat from_sum;  // sum -> M
};
Decomposition decompose_module(const AlgebraPresentation& A, const ModuleRep& M, std::uint64_t budget);

// Exactness of Hom(-, regular module) against all monomorphisms between
// direct sums of declared modules with at most `bound` summands per side.
bool verify_self_injective(const AlgebraPresentation& A, int bound, std::uint64_t budget);

// Omega^{-steps} (steps > 0, cosyzygy) or Omega^{|steps|} (steps < 0,
// syzygy) of M, reduced to a sum of declared non-projective modules.
struct SyzygyResult {
    std::vector<int> mult;  // over declared modules, projectives dropped
};
SyzygyResult syzygy_shift(const AlgebraPresentation& A, const ModuleRep& M, int steps,
                          std::uint64_t budget);

// The stable module category of a self-injective algebra as a triangulated
// backend: objects are sums of the non-projective declared indecomposables,
// hom spaces are stable homs, the shift is the cosyzygy, and cones come from
// pushouts along injective hulls.
class StableBackend : public Backend {
  public:
    StableBackend(AlgebraPresentation algebra, std::uint64_t budget);

    const CategoryPresentation& cat() const override { return cat_; }
    const ShiftData& shift_data() const override { return shift_; }
    Triangle cone(const Mor& u) const override;
    std::string name() const override { return "stable"; }

    // Stable hom basis between declared indecomposables (by spectroid index).
    const std::vector<Mat>& stable_basis(int i, int j) const { return stable_basis_[i][j]; }
    const AlgebraPresentation& algebra() const { return A_; }
    int spectroid_module_index(int i) const { return spec_modules_[i]; }

  private:
    struct Hull {
        std::vector<int> proj_mult;  // hull as multiset of projective indecomposables
        ModuleRep Q;
        Mat iota;    // M -> Q
        Mat coker;   // Q -> C, full row rank, coker*iota = 0
        Mat sect;    // C -> Q with coker*sect = id
        ModuleRep C;
        int sigma = -1;  // spectroid index of the nonprojective part of C
        Mat phi;         // C -> M_sigma iso
        Mat phi_inv;
    };

    ModuleRep realize(const Obj& o) const;
    Mat realize_mor(const Mor& f) const;
    Mor extract_mor(const Obj& src, const Obj& tgt, const Mat& G) const;
    Mat reduce_stable(int i, int j, const Mat& F) const;  // module map -> stable coords
    Hull build_hull(const ModuleRep& M) const;

    AlgebraPresentation A_;
    std::uint64_t budget_;
    std::vector<int> spec_modules_;  // spectroid index -> declared module index
    std::vector<int> proj_modules_;  // declared projective indecomposables
    CategoryPresentation cat_;
    ShiftData shift_;
    std::vector<std::vector<std::vector<Mat>>> stable_basis_;  // reps per (i,j)
    std::vector<std::vector<Mat>> factoring_;                  // basis of maps through projectives
    std::vector<Hull> hulls_;                                  // per spectroid index
};

// Vector spaces over GF(p) with identity shift; distinguished triangles are
// the 3-periodic exact sequences.  `simples` independent simple objects.
class SemisimpleBackend : public Backend {
  public:
    SemisimpleBackend(int p, int simples);

    const CategoryPresentation& cat() const override { return cat_; }
    const ShiftData& shift_data() const override { return shift_; }
    Triangle cone(const Mor& u) const override;
    std::string name() const override { return "semisimple"; }

  private:
    CategoryPresentation cat_;
    ShiftData shift_;
};

// An explicitly presented category with a declared seed set of triangles;
// the cone oracle searches the closure of the seeds under isomorphism,
// rotation and finite coproducts.  Mainly a vehicle for corrupted-fixture
// tests and tiny hand-rolled categories.
class SeededBackend : public Backend {
  public:
    SeededBackend(CategoryPresentation cat, ShiftData shift, std::vector<Triangle> seeds, int bound,
                  std::uint64_t budget);

    const CategoryPresentation& cat() const override { return cat_; }
    const ShiftData& shift_data() const override { return shift_; }
    Triangle cone(const Mor& u) const override;
    std::string name() const override { return "seeded"; }

  private:
    CategoryPresentation cat_;
    ShiftData shift_;
    std::vector<Triangle> seeds_;
    int bound_;
    std::uint64_t budget_;
};

// The opposite of a backend: objects unchanged, morphisms reversed, shift
// inverted; the cone of u° is the reversed homotopy-kernel completion of u.
class OppositeBackend : public Backend {
  public:
    explicit OppositeBackend(std::shared_ptr<const Backend> primal, int bound, std::uint64_t budget);

    const CategoryPresentation& cat() const override { return cat_; }
    const ShiftData& shift_data() const override { return shift_; }
    Triangle cone(const Mor& u) const override;
    std::string name() const override { return primal_->name() + "-op"; }

    // Transport between the primal category and this one.
    Mor to_op(const Mor& f) const;    // primal f: A->B  |->  f°: B->A
    Mor from_op(const Mor& f) const;  // inverse transport
    Triangle to_op(const Triangle& t) const;
    Triangle from_op(const Triangle& t) const;
    const Engine& primal_engine() const { return primal_engine_; }

  private:
    std::shared_ptr<const Backend> primal_;
    Engine primal_engine_;
    CategoryPresentation cat_;
    ShiftData shift_;
};

}  // namespace trimodel
