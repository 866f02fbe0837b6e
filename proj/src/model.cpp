#include "trimodel/model.hpp"

#include <algorithm>
#include <functional>

namespace trimodel {

namespace {

Mor zero_from(const Engine& e, const Obj& T) { return zero_mor(e.C(), Obj::zero(e.C()), T); }
Mor zero_to(const Engine& e, const Obj& T) { return zero_mor(e.C(), T, Obj::zero(e.C())); }

bool is_split_mono(const Engine& e, const Mor& f) {
    MorSystem sys(e.C(), f.tgt, f.src);
    sys.pre(f, identity_mor(e.C(), f.src));
    return sys.solve().has_value();
}

// Objects with total multiplicity <= cap, graded lex (a superset of the
// universe when cap exceeds the bound).
std::vector<Obj> objects_up_to(const Engine& e, int cap) {
    std::vector<Obj> us;
    int n = e.C().n;
    for (int total = 0; total <= cap; ++total) {
        std::vector<int> m(n, 0);
        std::function<void(int, int)> rec = [&](int idx, int rest) {
            if (idx == n - 1 || n == 0) {
                if (n > 0) m[idx] = rest;
                if (n > 0 || total == 0) us.push_back(Obj{m});
                return;
            }
            for (int c = 0; c <= rest; ++c) {
                m[idx] = c;
                rec(idx + 1, rest - c);
            }
        };
        if (n == 0) {
            if (total == 0) us.push_back(Obj{m});
        } else {
            rec(0, total);
        }
    }
    return us;
}

}  // namespace

bool ModelStructure::memo(int which, const Mor& f) const {
    auto key = f.key();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_[which].find(key);
        if (it != memo_[which].end()) return it->second;
    }
    bool res = which == 0 ? eval_cofib(f) : which == 1 ? eval_fib(f) : eval_weq(f);
    std::lock_guard<std::mutex> lk(mu_);
    memo_[which].emplace(std::move(key), res);
    return res;
}

bool ModelStructure::cofibrant(const Obj& T) const { return cofib(zero_from(engine(), T)); }
bool ModelStructure::fibrant(const Obj& T) const { return fib(zero_to(engine(), T)); }
bool ModelStructure::trivial_obj(const Obj& T) const { return weq(zero_from(engine(), T)); }

// ---------------------------------------------------------------------------
// ProjectiveModel: construction (4.1)
// ---------------------------------------------------------------------------

ProjectiveModel::ProjectiveModel(std::shared_ptr<const Engine> e, ProperClass xi, SubcategorySpec X,
                                 SubcategorySpec Y)
    : ModelStructure(std::move(e)), xi_(std::move(xi)), X_(std::move(X)), Y_(std::move(Y)),
      omega_(core(X_, Y_)) {}

std::string ProjectiveModel::describe() const {
    return "projective(" + X_.show(engine().C()) + ", " + Y_.show(engine().C()) + "; " + xi_.name() + ")";
}

bool ProjectiveModel::eval_cofib(const Mor& f) const {
    const Engine& e = engine();
    if (!is_proper(e, xi_, f, ProperSide::Mono)) return false;
    return X_.contains_obj(e.cone(f).Z);
}

bool ProjectiveModel::eval_fib(const Mor& f) const {
    const Engine& e = engine();
    for (int w : omega_.members) {
        Obj W = Obj::indec(e.C(), w);
        if (rank(postcompose_matrix(e.C(), f, W)) != hom_space_dim(e.C(), W, f.tgt)) return false;
    }
    return true;
}

bool ProjectiveModel::eval_weq(const Mor& f) const {
    const Engine& e = engine();
    const auto& C = e.C();
    // Approximation shortcut: if B has a right omega-approximation t, then
    // f is a weak equivalence iff (f, t) is a xi-proper epi with hokernel in Y.
    std::optional<Mor> approx;
    {
        std::lock_guard<std::mutex> lk(amu_);
        auto it = approx_.find(f.tgt.mult);
        if (it != approx_.end()) {
            approx = it->second;
        } else {
            approx = right_approximation(e, omega_, f.tgt);
            approx_.emplace(f.tgt.mult, approx);
        }
    }
    if (approx) {
        Mor m = from_components_src(C, {f, *approx});
        return is_proper(e, xi_, m, ProperSide::Epi) && Y_.contains_obj(e.hok(m).first);
    }
    // Fallback: enumerate W in add(omega) within the bound and all t.
    for (const Obj& W : e.universe()) {
        if (!omega_.contains_obj(W)) continue;
        for (const Mor& t : e.morphisms_between(W, f.tgt)) {
            Mor m = from_components_src(C, {f, t});
            if (is_proper(e, xi_, m, ProperSide::Epi) && Y_.contains_obj(e.hok(m).first)) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// InjectiveModel: construction (7.1) via the opposite category
// ---------------------------------------------------------------------------

InjectiveModel::InjectiveModel(std::shared_ptr<const Engine> e, ProperClass xi, SubcategorySpec X,
                               SubcategorySpec Y)
    : ModelStructure(e), xi_(xi), X_(std::move(X)), Y_(std::move(Y)) {
    op_backend_ = std::make_shared<OppositeBackend>(e->backend_ptr(), e->bound(), e->budget());
    op_engine_ = std::make_shared<Engine>(op_backend_, e->bound(), e->budget());
    // xi transported to the opposite category.
    auto primal_engine = e;
    auto primal_xi = xi_;
    auto opb = op_backend_;
    ProperClass xi_op = ProperClass::custom(
        [primal_engine, primal_xi, opb](const Engine& eop, const Mor& w) {
            Triangle t_op = eop.completion_of_third(w);
            Triangle t = opb->from_op(t_op);
            return primal_xi.contains(*primal_engine, t);
        },
        xi_.name() + "-op");
    // The pair swaps across the duality.
    SubcategorySpec Xop = SubcategorySpec::of(Y_.members, Y_.name + "-op");
    SubcategorySpec Yop = SubcategorySpec::of(X_.members, X_.name + "-op");
    op_model_ = std::make_shared<ProjectiveModel>(op_engine_, xi_op, Xop, Yop);
}

std::string InjectiveModel::describe() const {
    return "injective(" + X_.show(engine().C()) + ", " + Y_.show(engine().C()) + ")";
}

bool InjectiveModel::eval_cofib(const Mor& f) const { return op_model_->fib(to_op(f)); }
bool InjectiveModel::eval_fib(const Mor& f) const { return op_model_->cofib(to_op(f)); }
bool InjectiveModel::eval_weq(const Mor& f) const { return op_model_->weq(to_op(f)); }

// ---------------------------------------------------------------------------
// HoveyModel: the xi-triangulated construction
// ---------------------------------------------------------------------------

HoveyModel::HoveyModel(std::shared_ptr<const Engine> e, ProperClass xi, HoveyTriple triple)
    : ModelStructure(std::move(e)), xi_(std::move(xi)), triple_(std::move(triple)) {}

std::string HoveyModel::describe() const {
    const auto& C = engine().C();
    return "hovey(" + triple_.C.show(C) + ", " + triple_.F.show(C) + ", " + triple_.W.show(C) + ")";
}

bool HoveyModel::eval_cofib(const Mor& f) const {
    const Engine& e = engine();
    return is_proper(e, xi_, f, ProperSide::Mono) && triple_.C.contains_obj(e.cone(f).Z);
}

bool HoveyModel::eval_fib(const Mor& f) const {
    const Engine& e = engine();
    return is_proper(e, xi_, f, ProperSide::Epi) && triple_.F.contains_obj(e.hok(f).first);
}

bool HoveyModel::eval_weq(const Mor& f) const {
    const Engine& e = engine();
    const auto& C = e.C();
    SubcategorySpec CW = core(triple_.C, triple_.W);
    SubcategorySpec FW = core(triple_.F, triple_.W);
    auto tc_shape = [&](const Mor& i) {
        return is_proper(e, xi_, i, ProperSide::Mono) && CW.contains_obj(e.cone(i).Z);
    };
    auto tf_shape = [&](const Mor& p) {
        return is_proper(e, xi_, p, ProperSide::Epi) && FW.contains_obj(e.hok(p).first);
    };
    // The intermediate of a composite factorization can be as large as the
    // biproduct of the two ends (e.g. A -> A+B -> B), so search past U.
    for (const Obj& V : objects_up_to(e, f.src.total() + f.tgt.total())) {
        for (const Mor& i : e.morphisms_between(f.src, V)) {
            if (!tc_shape(i)) continue;
            for (const Mor& p : e.morphisms_between(V, f.tgt)) {
                if (!(compose(C, p, i) == f)) continue;
                if (tf_shape(p)) return true;
            }
        }
    }
    return false;
}

ExplicitModel::ExplicitModel(std::shared_ptr<const Engine> e, Pred cofib, Pred fib, Pred weq)
    : ModelStructure(std::move(e)), c_(std::move(cofib)), f_(std::move(fib)), w_(std::move(weq)) {}

std::shared_ptr<ProjectiveModel> build_projective_model(std::shared_ptr<const Engine> e,
                                                        const ProperClass& xi,
                                                        const SubcategorySpec& X,
                                                        const SubcategorySpec& Y) {
    return std::make_shared<ProjectiveModel>(std::move(e), xi, X, Y);
}

std::shared_ptr<InjectiveModel> build_injective_model(std::shared_ptr<const Engine> e,
                                                      const ProperClass& xi, const SubcategorySpec& X,
                                                      const SubcategorySpec& Y) {
    return std::make_shared<InjectiveModel>(std::move(e), xi, X, Y);
}

std::shared_ptr<HoveyModel> build_xi_triangulated_model(std::shared_ptr<const Engine> e,
                                                        const ProperClass& xi, const HoveyTriple& h) {
    return std::make_shared<HoveyModel>(std::move(e), xi, h);
}

// ---------------------------------------------------------------------------
// Characterizations and axiom verification
// ---------------------------------------------------------------------------

bool tclass_characterization_check(const ProjectiveModel& ms) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    for (const Mor& f : e.all_morphisms()) {
        bool split_mono_omega = is_split_mono(e, f) && ms.omega().contains_obj(e.cone(f).Z);
        if (ms.tcofib(f) != split_mono_omega)
            throw TheoremViolation("TCoFib differs from the splitting-mono class at " +
                                   f.src.show(C) + " -> " + f.tgt.show(C));
        bool pe_y = is_proper(e, ms.xi(), f, ProperSide::Epi) && ms.Yclass().contains_obj(e.hok(f).first);
        if (ms.tfib(f) != pe_y)
            throw TheoremViolation("TFib differs from the proper-epi class at " + f.src.show(C) +
                                   " -> " + f.tgt.show(C));
    }
    // Weq = TFib . TCoFib as predicates over U.
    for (const Mor& f : e.all_morphisms()) {
        bool composite = false;
        for (const Obj& V : e.universe()) {
            for (const Mor& i : e.morphisms_between(f.src, V)) {
                if (!ms.tcofib(i)) continue;
                for (const Mor& p : e.morphisms_between(V, f.tgt))
                    if (compose(C, p, i) == f && ms.tfib(p)) {
                        composite = true;
                        break;
                    }
                if (composite) break;
            }
            if (composite) break;
        }
        if (ms.weq(f) != composite)
            throw TheoremViolation("Weq differs from TFib.TCoFib at " + f.src.show(C) + " -> " +
                                   f.tgt.show(C));
    }
    return true;
}

bool ModelAxiomReport::all_pass() const {
    for (const auto& it : items)
        if (it.verdict != Verdict::Pass) return false;
    return true;
}

ModelAxiomReport verify_model_axioms(const ModelStructure& ms) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    ModelAxiomReport rep;
    auto add = [&rep](const std::string& axiom, ModelAxiomReport::Verdict v, std::string detail = "") {
        rep.items.push_back({axiom, v, std::move(detail)});
    };
    auto guarded = [&](const std::string& axiom, auto&& body) {
        try {
            body();
        } catch (const BudgetExceeded& b) {
            add(axiom, ModelAxiomReport::Verdict::Budget, b.what());
        }
    };
    auto show = [&](const Mor& f) { return f.src.show(C) + " -> " + f.tgt.show(C); };

    guarded("isomorphisms-in-all-classes", [&] {
        for (const Mor& f : e.all_morphisms()) {
            if (!inverse_of(C, f)) continue;
            if (!ms.cofib(f) || !ms.fib(f) || !ms.weq(f)) {
                add("isomorphisms-in-all-classes", ModelAxiomReport::Verdict::Fail, show(f));
                return;
            }
        }
        add("isomorphisms-in-all-classes", ModelAxiomReport::Verdict::Pass);
    });

    guarded("two-out-of-three", [&] {
        for (const Obj& A : e.universe())
            for (const Obj& B : e.universe()) {
                auto fs = e.morphisms_between(A, B);
                for (const Obj& D : e.universe()) {
                    auto gs = e.morphisms_between(B, D);
                    for (const Mor& alpha : fs)
                        for (const Mor& beta : gs) {
                            Mor ba = compose(C, beta, alpha);
                            int count = ms.weq(alpha) + ms.weq(beta) + ms.weq(ba);
                            if (count == 2) {
                                add("two-out-of-three", ModelAxiomReport::Verdict::Fail,
                                    show(alpha) + " then " + show(beta));
                                return;
                            }
                        }
                }
            }
        add("two-out-of-three", ModelAxiomReport::Verdict::Pass);
    });

    guarded("retract-closure", [&] {
        if (!retract_closure_check(ms)) {
            add("retract-closure", ModelAxiomReport::Verdict::Fail, "a retract escapes its class");
            return;
        }
        add("retract-closure", ModelAxiomReport::Verdict::Pass);
    });

    // Every commutative square (f,g) with p.f = g.i admits a lifting iff the
    // space of compatible squares is contained in the image of
    // lambda |-> (lambda.i, p.lambda): one rank comparison per (i, p).
    auto lifting_axiom = [&](const std::string& label, auto&& left_class, auto&& right_class) {
        for (const Mor& i : e.all_morphisms()) {
            if (!left_class(i)) continue;
            for (const Mor& p : e.all_morphisms()) {
                if (!right_class(p)) continue;
                int d1 = hom_space_dim(C, i.src, p.src);
                int d2 = hom_space_dim(C, i.tgt, p.tgt);
                Mat M(hom_space_dim(C, i.src, p.tgt), d1 + d2, C.p);
                M.paste(postcompose_matrix(C, p, i.src), 0, 0);
                M.paste(precompose_matrix(C, i, p.tgt).negated(), 0, d1);
                auto compat = kernel_basis(M);
                Mat K(d1 + d2, static_cast<int>(compat.size()), C.p);
                for (size_t k = 0; k < compat.size(); ++k)
                    for (int r = 0; r < d1 + d2; ++r) K.at(r, static_cast<int>(k)) = compat[k].at(r, 0);
                Mat T(d1 + d2, hom_space_dim(C, i.tgt, p.src), C.p);
                T.paste(precompose_matrix(C, i, p.src), 0, 0);
                T.paste(postcompose_matrix(C, p, i.tgt), d1, 0);
                if (rank(T.hstack(K)) != rank(T)) {
                    add(label, ModelAxiomReport::Verdict::Fail,
                        "no lifting for " + show(i) + " against " + show(p));
                    return;
                }
            }
        }
        add(label, ModelAxiomReport::Verdict::Pass);
    };
    guarded("lifting-cofib-tfib",
            [&] { lifting_axiom("lifting-cofib-tfib", [&](const Mor& m) { return ms.cofib(m); },
                                [&](const Mor& m) { return ms.tfib(m); }); });
    guarded("lifting-tcofib-fib",
            [&] { lifting_axiom("lifting-tcofib-fib", [&](const Mor& m) { return ms.tcofib(m); },
                                [&](const Mor& m) { return ms.fib(m); }); });

    guarded("factorization", [&] {
        const auto* proj = dynamic_cast<const ProjectiveModel*>(&ms);
        for (const Mor& f : e.all_morphisms()) {
            if (proj) {
                try {
                    auto [i1, p1] = factorize(*proj, f, FactorKind::TCofibFib);
                    auto [i2, p2] = factorize(*proj, f, FactorKind::CofibTFib);
                    (void)i1;
                    (void)p1;
                    (void)i2;
                    (void)p2;
                } catch (const NoApproximation& ex) {
                    add("factorization", ModelAxiomReport::Verdict::Fail, ex.what());
                    return;
                } catch (const TheoremViolation& ex) {
                    add("factorization", ModelAxiomReport::Verdict::Fail, ex.what());
                    return;
                }
            } else {
                // Bounded search through intermediates slightly beyond U.
                int cap = e.bound() + std::max(f.src.total(), f.tgt.total());
                auto mids = objects_up_to(e, cap);
                auto find = [&](auto&& first_class, auto&& second_class) {
                    for (const Obj& V : mids)
                        for (const Mor& i : e.morphisms_between(f.src, V)) {
                            if (!first_class(i)) continue;
                            for (const Mor& p : e.morphisms_between(V, f.tgt))
                                if (compose(C, p, i) == f && second_class(p)) return true;
                        }
                    return false;
                };
                bool ok1 = find([&](const Mor& m) { return ms.tcofib(m); },
                                [&](const Mor& m) { return ms.fib(m); });
                bool ok2 = find([&](const Mor& m) { return ms.cofib(m); },
                                [&](const Mor& m) { return ms.tfib(m); });
                if (!ok1 || !ok2) {
                    add("factorization", ModelAxiomReport::Verdict::Fail,
                        "no factorization of " + show(f) + " at the bound");
                    return;
                }
            }
        }
        add("factorization", ModelAxiomReport::Verdict::Pass);
    });

    return rep;
}

std::pair<Mor, Mor> factorize(const ProjectiveModel& ms, const Mor& f, FactorKind kind) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    const Obj& A = f.src;
    const Obj& B = f.tgt;
    if (kind == FactorKind::TCofibFib) {
        auto tau = right_approximation(e, ms.omega(), B);
        if (!tau)
            throw NoApproximation("no right omega-approximation of " + B.show(C) + " at the bound");
        std::vector<Obj> parts = {A, tau->src};
        Mor first = inclusion(C, parts, 0);              // A -> A + W_B
        Mor second = from_components_src(C, {f, *tau});  // (f, tau_B)
        if (!(compose(C, second, first) == f)) throw TheoremViolation("factorization does not compose");
        if (!ms.tcofib(first) || !ms.fib(second))
            throw TheoremViolation("factor classes fail for the tcofib-fib factorization");
        return {first, second};
    }
    // Cofib-then-TFib per the cobase-change construction.
    // Approximation triangle Y_B -> X_B -> B in xi.
    std::optional<Triangle> approx;
    for (const Obj& Yc : e.universe()) {
        if (!ms.Yclass().contains_obj(Yc)) continue;
        for (const Mor& wm : e.morphisms_between(B, e.shift(Yc, 1))) {
            if (!ms.xi().contains_third(e, wm)) continue;
            Triangle t = e.completion_of_third(wm);
            if (ms.Xclass().contains_obj(t.Y)) {
                approx = t;
                break;
            }
        }
        if (approx) break;
    }
    if (!approx)
        throw NoApproximation("no approximation triangle for " + B.show(C) + " at the bound");
    Mor tB = approx->v;  // X_B -> B, a xi-proper epi with hokernel in Y
    Mor m = from_components_src(C, {f, tB});
    Triangle hk = e.hok_triangle(m);  // K -> A + X_B -> B
    if (!ms.xi().contains_third(e, hk.w))
        throw TheoremViolation("(f, t_B) is not a xi-proper epimorphism");
    // Coapproximation triangle K -> Y -> X in xi.
    std::optional<Triangle> coapprox;
    for (const Obj& Xc : e.universe()) {
        if (!ms.Xclass().contains_obj(Xc)) continue;
        for (const Mor& wm : e.morphisms_between(Xc, e.shift(hk.X, 1))) {
            if (!ms.xi().contains_third(e, wm)) continue;
            Triangle t = e.completion_of_third(wm);
            if (ms.Yclass().contains_obj(t.Y)) {
                coapprox = t;
                break;
            }
        }
        if (coapprox) break;
    }
    if (!coapprox)
        throw NoApproximation("no coapproximation triangle for the hokernel at the bound");
    Mor sigma = coapprox->u;  // K -> Y
    CobaseChangeDiagram d = e.cobase_change(hk, sigma);
    Mor p = d.row3.v;                                          // E -> B
    Mor i = d.beta_prime;                                      // A + X_B -> E
    std::vector<Obj> parts = {A, tB.src};
    Mor j = compose(C, i, inclusion(C, parts, 0));             // A -> E
    if (!(compose(C, p, j) == f)) throw TheoremViolation("cofib-tfib factorization does not compose");
    if (!ms.cofib(j) || !ms.tfib(p))
        throw TheoremViolation("factor classes fail for the cofib-tfib factorization");
    return {j, p};
}

DerivedTriple derive_triple(const ModelStructure& ms) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    std::vector<int> cof, fib, triv;
    for (int i = 0; i < C.n; ++i) {
        Obj T = Obj::indec(C, i);
        if (ms.cofibrant(T)) cof.push_back(i);
        if (ms.fibrant(T)) fib.push_back(i);
        if (ms.trivial_obj(T)) triv.push_back(i);
    }
    return DerivedTriple{SubcategorySpec::of(cof, "cofibrant"), SubcategorySpec::of(fib, "fibrant"),
                         SubcategorySpec::of(triv, "trivial")};
}

std::pair<SubcategorySpec, SubcategorySpec> psi(const ModelStructure& ms) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    std::vector<int> cof, tf;
    for (int i = 0; i < C.n; ++i) {
        Obj T = Obj::indec(C, i);
        if (ms.cofibrant(T)) cof.push_back(i);
        if (ms.fibrant(T) && ms.trivial_obj(T)) tf.push_back(i);
    }
    return {SubcategorySpec::of(cof, "C"), SubcategorySpec::of(tf, "TF")};
}

WeaklyProjectiveReport weakly_projective_check(const ModelStructure& ms, const ProperClass& xi) {
    const Engine& e = ms.engine();
    WeaklyProjectiveReport r;
    DerivedTriple dt = derive_triple(ms);
    SubcategorySpec TF = SubcategorySpec::of(
        [&] {
            std::vector<int> v;
            for (int i : dt.fibrant.members)
                if (dt.trivial.contains_indec(i)) v.push_back(i);
            return v;
        }(),
        "TF");

    bool cofib_eq = true, cofib_sub = true, tfib_eq = true, tfib_sub = true;
    bool cofib_sub_hoc = true, tfib_sub_hok = true;
    for (const Mor& f : e.all_morphisms()) {
        bool pm_c = is_proper(e, xi, f, ProperSide::Mono) && dt.cofibrant.contains_obj(e.cone(f).Z);
        bool pe_tf = is_proper(e, xi, f, ProperSide::Epi) && TF.contains_obj(e.hok(f).first);
        bool c = ms.cofib(f), tf = ms.tfib(f);
        cofib_eq = cofib_eq && c == pm_c;
        cofib_sub = cofib_sub && (!c || pm_c);
        tfib_eq = tfib_eq && tf == pe_tf;
        tfib_sub = tfib_sub && (!tf || pe_tf);
        cofib_sub_hoc = cofib_sub_hoc && (!c || dt.cofibrant.contains_obj(e.cone(f).Z));
        tfib_sub_hok = tfib_sub_hok && (!tf || TF.contains_obj(e.hok(f).first));
    }
    r.cond1 = cofib_eq && tfib_sub;
    r.cond3 = cofib_sub && tfib_eq;
    r.cond4 = cofib_eq && tfib_eq;
    bool pair_complete = is_cotorsion_pair(e, xi, dt.cofibrant, TF) &&
                         completeness(e, xi, dt.cofibrant, TF).complete;
    r.cond5 = pair_complete && cofib_sub_hoc && tfib_sub_hok;
    if (r.cond1 != r.cond3 || r.cond3 != r.cond4 || r.cond4 != r.cond5)
        throw TheoremViolation("the weak-projectivity characterizations disagree");
    r.fibrant = true;
    for (int i = 0; i < e.C().n; ++i) r.fibrant = r.fibrant && ms.fibrant(Obj::indec(e.C(), i));
    r.verdict = r.cond4 && r.fibrant;
    return r;
}

bool is_hovey_triple(const Engine& e, const ProperClass& xi, const HoveyTriple& h) {
    // xi-thickness of W: two-out-of-three on xi-triangles over U.
    for (const Triangle& t : e.all_distinguished()) {
        if (!xi.contains_third(e, t.w)) continue;
        int in = h.W.contains_obj(t.X) + h.W.contains_obj(t.Y) + h.W.contains_obj(t.Z);
        if (in == 2) return false;
    }
    SubcategorySpec FW = core(h.F, h.W), CW = core(h.C, h.W);
    if (!is_cotorsion_pair(e, xi, h.C, FW) || !completeness(e, xi, h.C, FW).complete) return false;
    if (!is_cotorsion_pair(e, xi, CW, h.F) || !completeness(e, xi, CW, h.F).complete) return false;
    return true;
}

XiProjectiveReport xi_projective_report(const Engine& e, const ProperClass& xi) {
    const auto& C = e.C();
    XiProjectiveReport rep;
    std::vector<int> projs;
    for (int i = 0; i < C.n; ++i) {
        Obj P = Obj::indec(C, i);
        bool ok = true;
        for (const Triangle& t : e.all_distinguished()) {
            if (!xi.contains_third(e, t.w)) continue;
            Mat A = postcompose_matrix(C, t.u, P);
            Mat B = postcompose_matrix(C, t.v, P);
            int dx = hom_space_dim(C, P, t.X);
            int dy = hom_space_dim(C, P, t.Y);
            int dz = hom_space_dim(C, P, t.Z);
            if (rank(A) != dx || rank(B) != dz || rank(A) + rank(B) != dy) {
                ok = false;
                break;
            }
        }
        if (ok) projs.push_back(i);
    }
    rep.P = SubcategorySpec::of(std::move(projs), "P(xi)");
    rep.enough = true;
    for (int i = 0; i < C.n && rep.enough; ++i) {
        Obj T = Obj::indec(C, i);
        bool found = false;
        for (const Obj& P : e.universe()) {
            if (!rep.P.contains_obj(P)) continue;
            for (const Mor& v : e.morphisms_between(P, T))
                if (xi.contains_third(e, e.hok_triangle(v).w)) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        rep.enough = found;
    }
    return rep;
}

XiTriangulatedEquivalence xi_triangulated_equivalence_check(std::shared_ptr<const Engine> eng,
                                                            const ProperClass& xi,
                                                            const SubcategorySpec& X,
                                                            const SubcategorySpec& Y) {
    const Engine& e = *eng;
    auto ms = build_projective_model(eng, xi, X, Y);
    DerivedTriple dt = derive_triple(*ms);
    SubcategorySpec TC = core(dt.cofibrant, dt.trivial);
    SubcategorySpec TF = SubcategorySpec::of(
        [&] {
            std::vector<int> v;
            for (int i : dt.fibrant.members)
                if (dt.trivial.contains_indec(i)) v.push_back(i);
            return v;
        }(),
        "TF");

    XiTriangulatedEquivalence res;
    bool a = true;
    for (const Mor& f : e.all_morphisms()) {
        bool pm_c = is_proper(e, xi, f, ProperSide::Mono) && dt.cofibrant.contains_obj(e.cone(f).Z);
        bool pm_tc = is_proper(e, xi, f, ProperSide::Mono) && TC.contains_obj(e.cone(f).Z);
        bool pe_f = is_proper(e, xi, f, ProperSide::Epi) && dt.fibrant.contains_obj(e.hok(f).first);
        bool pe_tf = is_proper(e, xi, f, ProperSide::Epi) && TF.contains_obj(e.hok(f).first);
        if (ms->cofib(f) != pm_c || ms->tcofib(f) != pm_tc || ms->fib(f) != pe_f ||
            ms->tfib(f) != pe_tf) {
            a = false;
            break;
        }
    }
    XiProjectiveReport xp = xi_projective_report(e, xi);
    bool b = xp.enough && core(X, Y).members == xp.P.members;
    res.phi_is_xi_triangulated = a;
    res.enough_and_core_is_P = b;
    if (a != b) throw TheoremViolation("xi-triangulated equivalence fails: the two sides disagree");

    // Four-way equivalence: (2) pair-side and (3) generalized-projective side.
    bool hereditary_complete;
    {
        bool pair = is_cotorsion_pair(e, xi, X, Y);
        bool complete = completeness(e, xi, X, Y).complete;
        hereditary_complete = pair && complete && heredity(e, xi, X, Y, complete).def_form;
    }
    bool two = hereditary_complete && b;
    // Y xi-thick?
    bool thick = true;
    for (const Triangle& t : e.all_distinguished()) {
        if (!xi.contains_third(e, t.w)) continue;
        int in = Y.contains_obj(t.X) + Y.contains_obj(t.Y) + Y.contains_obj(t.Z);
        if (in == 2) thick = false;
    }
    bool three = is_cotorsion_pair(e, xi, X, Y) && completeness(e, xi, X, Y).complete && thick &&
                 core(X, Y).members == xp.P.members && xp.enough;
    bool fibrant_all = true;
    for (int i = 0; i < e.C().n; ++i) fibrant_all = fibrant_all && ms->fibrant(Obj::indec(e.C(), i));
    bool four = a && fibrant_all;
    if (hereditary_complete) {
        if (a != two || a != three || a != four)
            throw TheoremViolation("the four characterizations of xi-triangulated models disagree");
    }
    // Intersection statement: weakly xi-projective and xi-triangulated
    // together are exactly the xi-projective models.
    WeaklyProjectiveReport wp = weakly_projective_check(*ms, xi);
    if ((wp.verdict && a) != four)
        throw TheoremViolation("the intersection statement fails on this fixture");
    return res;
}

bool retract_closure_check(const ModelStructure& ms) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    auto classes = {0, 1, 2};
    auto in_class = [&](int c, const Mor& m) {
        return c == 0 ? ms.cofib(m) : c == 1 ? ms.fib(m) : ms.weq(m);
    };
    std::map<std::vector<std::uint8_t>, bool> split_memo;
    auto split_mono = [&](const Mor& m) {
        auto key = m.key();
        auto it = split_memo.find(key);
        if (it != split_memo.end()) return it->second;
        bool r = is_split_mono(e, m);
        split_memo.emplace(std::move(key), r);
        return r;
    };
    for (const Mor& f : e.all_morphisms())
        for (const Mor& g : e.all_morphisms()) {
            // g a potential retract of f requires componentwise smaller ends.
            bool dominated = true;
            for (size_t i = 0; i < g.src.mult.size(); ++i)
                dominated = dominated && g.src.mult[i] <= f.src.mult[i] &&
                            g.tgt.mult[i] <= f.tgt.mult[i];
            if (!dominated) continue;
            bool interesting = false;
            for (int c : classes) interesting = interesting || (in_class(c, f) && !in_class(c, g));
            if (!interesting) continue;
            // Retraction data: phi1: A'->A, phi2: B'->B with f.phi1 = phi2.g,
            // then (psi1, psi2) with psi1.phi1 = id, psi2.phi2 = id, g.psi1 = psi2.f.
            int d1 = hom_space_dim(C, g.src, f.src);
            int d2 = hom_space_dim(C, g.tgt, f.tgt);
            Mat M(hom_space_dim(C, g.src, f.tgt), d1 + d2, C.p);
            M.paste(postcompose_matrix(C, f, g.src), 0, 0);
            M.paste(precompose_matrix(C, g, f.tgt).negated(), 0, d1);
            auto sol = solve_affine(M, Mat(M.rows, 1, C.p));
            AffineEnumerator en(*sol, C.p, e.budget());
            while (auto x = en.next()) {
                Mor phi1 = vec_to_mor(C, g.src, f.src, x->submat(0, 0, d1, 1));
                if (!split_mono(phi1)) continue;
                Mor phi2 = vec_to_mor(C, g.tgt, f.tgt, x->submat(d1, 0, d2, 1));
                if (!split_mono(phi2)) continue;
                // Solve for (psi1, psi2) jointly.
                int e1 = hom_space_dim(C, f.src, g.src);
                int e2 = hom_space_dim(C, f.tgt, g.tgt);
                int rows1 = hom_space_dim(C, g.src, g.src);
                int rows2 = hom_space_dim(C, g.tgt, g.tgt);
                int rows3 = hom_space_dim(C, f.src, g.tgt);
                Mat S(rows1 + rows2 + rows3, e1 + e2, C.p);
                Mat rhs(rows1 + rows2 + rows3, 1, C.p);
                S.paste(precompose_matrix(C, phi1, g.src), 0, 0);
                rhs.paste(mor_to_vec(C, identity_mor(C, g.src)), 0, 0);
                S.paste(precompose_matrix(C, phi2, g.tgt), rows1, e1);
                rhs.paste(mor_to_vec(C, identity_mor(C, g.tgt)), rows1, 0);
                S.paste(postcompose_matrix(C, g, f.src), rows1 + rows2, 0);
                S.paste(precompose_matrix(C, f, g.tgt).negated(), rows1 + rows2, e1);
                if (!solve_affine(S, rhs)) continue;
                // g is a retract of f; classes must transfer.
                for (int c : classes)
                    if (in_class(c, f) && !in_class(c, g)) return false;
            }
        }
    return true;
}

bool pushout_pullback_closure_check(const ModelStructure& ms) {
    const Engine& e = ms.engine();
    // Cofibrations and trivial cofibrations along weak push-outs produced by
    // cobase change; fibrations and trivial fibrations dually.
    for (const Mor& i : e.all_morphisms()) {
        if (!ms.cofib(i)) continue;
        Triangle t;
        try {
            t = e.cone(i);
        } catch (...) {
            continue;
        }
        for (const Obj& Cc : e.universe())
            for (const Mor& u : e.morphisms_between(i.src, Cc)) {
                CobaseChangeDiagram d = e.cobase_change(t, u);
                Square s{t.u, d.beta, d.beta_prime, d.row3.u};
                if (!e.is_weak_pushout(s)) return false;
                if (!ms.cofib(d.row3.u)) return false;
                if (ms.tcofib(i) && !ms.tcofib(d.row3.u)) return false;
            }
    }
    for (const Mor& p : e.all_morphisms()) {
        if (!ms.fib(p)) continue;
        if (!is_proper(e, ProperClass::all(), p, ProperSide::Epi)) continue;
        Triangle t = e.hok_triangle(p);
        for (const Obj& Zc : e.universe())
            for (const Mor& alpha : e.morphisms_between(Zc, p.tgt)) {
                BaseChangeDiagram d = e.base_change(t, alpha);
                Square s{d.row2.v, d.alpha_prime, d.alpha, t.v};
                if (!e.is_weak_pullback(s)) return false;
                if (!ms.fib(d.row2.v)) return false;
                if (ms.tfib(p) && !ms.tfib(d.row2.v)) return false;
            }
    }
    return true;
}

bool models_agree(const ModelStructure& a, const ModelStructure& b) {
    const Engine& e = a.engine();
    for (const Mor& f : e.all_morphisms())
        if (a.cofib(f) != b.cofib(f) || a.fib(f) != b.fib(f) || a.weq(f) != b.weq(f)) return false;
    return true;
}

bool injective_literal_check(const InjectiveModel& ms, const ProperClass& xi) {
    const Engine& e = ms.engine();
    const auto& C = e.C();
    SubcategorySpec omega = core(ms.Xclass(), ms.Yclass());
    for (const Mor& f : e.all_morphisms()) {
        bool fib_lit = is_proper(e, xi, f, ProperSide::Epi) && ms.Yclass().contains_obj(e.hok(f).first);
        if (ms.fib(f) != fib_lit) return false;
        bool cof_lit = true;
        for (int w : omega.members) {
            Obj W = Obj::indec(C, w);
            if (rank(precompose_matrix(C, f, W)) != hom_space_dim(C, f.src, W)) {
                cof_lit = false;
                break;
            }
        }
        if (ms.cofib(f) != cof_lit) return false;
        // Left-approximation shortcut (dual of the Weq shortcut of (4.1));
        // fall back to enumeration when no approximation exists at the bound.
        bool weq_lit = false;
        if (auto lam = left_approximation(e, omega, f.src)) {
            Mor m = from_components_tgt(C, {f, *lam});
            weq_lit = is_proper(e, xi, m, ProperSide::Mono) && ms.Xclass().contains_obj(e.cone(m).Z);
        } else {
            for (const Obj& W : e.universe()) {
                if (!omega.contains_obj(W)) continue;
                for (const Mor& t : e.morphisms_between(f.src, W)) {
                    Mor m = from_components_tgt(C, {f, t});
                    if (is_proper(e, xi, m, ProperSide::Mono) &&
                        ms.Xclass().contains_obj(e.cone(m).Z)) {
                        weq_lit = true;
                        break;
                    }
                }
                if (weq_lit) break;
            }
        }
        if (ms.weq(f) != weq_lit) return false;
    }
    return true;
}

}  // namespace trimodel
