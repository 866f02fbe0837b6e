#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "trimodel/triangles.hpp"

namespace trimodel {

enum class XiVariant { All, Split, Cohomological, Explicit, Custom };

// A proper class of triangles, given by a decidable membership predicate.
// Membership of a distinguished triangle depends only on its third map w,
// because any two distinguished triangles with the same third map are
// isomorphic with identities on both ends and all supported variants are
// closed under isomorphism.
class ProperClass {
  public:
    static ProperClass all(std::string name = "all");
    static ProperClass split(std::string name = "split");
    static ProperClass cohomological(Obj generator, std::string name);
    // Seeds plus declared closure under isomorphism, suspension and finite
    // coproducts; when adjoin_splits, the split generators are included.
    static ProperClass explicit_class(std::vector<Triangle> seeds, bool adjoin_splits,
                                      std::string name);
    // Arbitrary iso-invariant decider on third maps (used for transported
    // classes, e.g. the opposite of a proper class).
    static ProperClass custom(std::function<bool(const Engine&, const Mor&)> decider, std::string name);

    const std::string& name() const { return name_; }
    XiVariant variant() const { return variant_; }
    const Obj& generator() const { return generator_; }

    // Membership; throws std::invalid_argument when t is not distinguished.
    bool contains(const Engine& e, const Triangle& t) const;
    // Fast path for triangles already known distinguished: membership of the
    // class of distinguished triangles with third map w.
    bool contains_third(const Engine& e, const Mor& w) const;

  private:
    ProperClass() = default;

    bool decide(const Engine& e, const Mor& w) const;
    bool decide_explicit(const Engine& e, const Mor& w) const;

    std::string name_;
    XiVariant variant_ = XiVariant::All;
    Obj generator_;
    std::vector<Triangle> seeds_;
    bool adjoin_splits_ = true;
    std::function<bool(const Engine&, const Mor&)> decider_;

    struct Memo {
        std::mutex mu;
        std::map<std::vector<std::uint8_t>, bool> map;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// One verdict per proper-class axiom, each decided exhaustively over the
// universe U; budget overruns are recorded per axiom rather than thrown.
struct AxiomReport {
    enum class Verdict { Pass, Fail, Budget };
    struct Item {
        std::string axiom;
        Verdict verdict;
        std::string detail;  // counterexample or budget note
    };
    std::vector<Item> items;
    bool all_pass() const;
};

AxiomReport verify_proper_class_axioms(const Engine& e, const ProperClass& xi);

enum class ProperSide { Mono, Epi };
bool is_proper(const Engine& e, const ProperClass& xi, const Mor& u, ProperSide side);

// True iff every rotation of every member in U is again a member;
// cross-checked against "xi = all distinguished triangles over U"
// (they must agree; disagreement raises TheoremViolation).
bool rotation_closure_report(const Engine& e, const ProperClass& xi);

// The four-term triangles of the composite lemmas; `which` is 1..4.
Triangle four_term_triangle(const Engine& e, const ProperClass& xi, const Mor& alpha, const Mor& beta,
                            int which);

struct StrictnessReport {
    bool contains_nonsplit = false;
    bool misses_some = false;
};
StrictnessReport strictness_report(const Engine& e, const ProperClass& xi);

// Every member of xi with all three vertices in U.
std::vector<Triangle> xi_members(const Engine& e, const ProperClass& xi);

}  // namespace trimodel
