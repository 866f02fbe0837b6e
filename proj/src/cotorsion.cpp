#include "trimodel/cotorsion.hpp"

#include <algorithm>

namespace trimodel {

SubcategorySpec SubcategorySpec::of(std::vector<int> indices, std::string name) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return SubcategorySpec{std::move(name), std::move(indices)};
}

SubcategorySpec SubcategorySpec::all(const CategoryPresentation& C, std::string name) {
    std::vector<int> v(C.n);
    for (int i = 0; i < C.n; ++i) v[i] = i;
    return SubcategorySpec{std::move(name), std::move(v)};
}

SubcategorySpec SubcategorySpec::none(std::string name) { return SubcategorySpec{std::move(name), {}}; }

bool SubcategorySpec::contains_indec(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool SubcategorySpec::contains_obj(const Obj& o) const {
    for (size_t i = 0; i < o.mult.size(); ++i)
        if (o.mult[i] > 0 && !contains_indec(static_cast<int>(i))) return false;
    return true;
}

std::string SubcategorySpec::show(const CategoryPresentation& C) const {
    std::string s = "{";
    for (size_t k = 0; k < members.size(); ++k) {
        if (k) s += ",";
        s += C.labels[members[k]];
    }
    return s + "}";
}

SubcategorySpec orthogonal(const Engine& e, const ProperClass& xi, const SubcategorySpec& S,
                           bool right_side) {
    const auto& C = e.C();
    std::vector<int> out;
    for (int z = 0; z < C.n; ++z) {
        bool ok = true;
        for (int s : S.members) {
            ExtGroup g = right_side ? ext_group(e, xi, Obj::indec(C, s), Obj::indec(C, z))
                                    : ext_group(e, xi, Obj::indec(C, z), Obj::indec(C, s));
            if (!g.trivial()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(z);
    }
    return SubcategorySpec::of(std::move(out), S.name + (right_side ? "^perp" : "perp^"));
}

bool is_cotorsion_pair(const Engine& e, const ProperClass& xi, const SubcategorySpec& X,
                       const SubcategorySpec& Y) {
    return orthogonal(e, xi, X, true).members == Y.members &&
           orthogonal(e, xi, Y, false).members == X.members;
}

CompletenessResult completeness(const Engine& e, const ProperClass& xi, const SubcategorySpec& X,
                                const SubcategorySpec& Y) {
    const auto& C = e.C();
    CompletenessResult res;
    if (!is_cotorsion_pair(e, xi, X, Y)) {
        // Fall back to the orthogonality form: Ext_xi(X, Y) = 0.
        res.orthogonality_checked = true;
        for (int x : X.members)
            for (int y : Y.members)
                if (!ext_group(e, xi, Obj::indec(C, x), Obj::indec(C, y)).trivial()) return res;
    }
    try {
        for (int i = 0; i < C.n; ++i) {
            Obj T = Obj::indec(C, i);
            CompletenessWitness w;
            w.T = T;
            // Approximation triangle Y -> X -> T -> Y[1].
            bool found = false;
            for (const Obj& Yc : e.universe()) {
                if (!Y.contains_obj(Yc)) continue;
                for (const Mor& wm : e.morphisms_between(T, e.shift(Yc, 1))) {
                    if (!xi.contains_third(e, wm)) continue;
                    Triangle t = e.completion_of_third(wm);
                    if (!X.contains_obj(t.Y)) continue;
                    w.approx = t;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (!found) {
                res.failing = C.labels[i];
                return res;
            }
            // Coapproximation triangle T -> Y' -> X' -> T[1].
            found = false;
            for (const Obj& Xc : e.universe()) {
                if (!X.contains_obj(Xc)) continue;
                for (const Mor& wm : e.morphisms_between(Xc, e.shift(T, 1))) {
                    if (!xi.contains_third(e, wm)) continue;
                    Triangle t = e.completion_of_third(wm);
                    if (!Y.contains_obj(t.Y)) continue;
                    w.coapprox = t;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (!found) {
                res.failing = C.labels[i];
                return res;
            }
            res.witnesses.push_back(std::move(w));
        }
    } catch (const BudgetExceeded&) {
        res.unknown_at_bound = true;
        return res;
    }
    res.complete = true;
    return res;
}

HeredityResult heredity(const Engine& e, const ProperClass& xi, const SubcategorySpec& X,
                        const SubcategorySpec& Y, bool pair_is_complete) {
    HeredityResult r;
    r.hok_form = true;
    r.hoc_form = true;
    for (const Triangle& t : e.all_distinguished()) {
        if (!xi.contains_third(e, t.w)) continue;
        if (X.contains_obj(t.Y) && X.contains_obj(t.Z) && !X.contains_obj(t.X)) r.hok_form = false;
        if (Y.contains_obj(t.X) && Y.contains_obj(t.Y) && !Y.contains_obj(t.Z)) r.hoc_form = false;
    }
    r.def_form = r.hok_form && r.hoc_form;
    if (pair_is_complete && !r.agree())
        throw TheoremViolation("the three heredity formulations disagree for a complete pair");
    return r;
}

SubcategorySpec core(const SubcategorySpec& X, const SubcategorySpec& Y) {
    std::vector<int> out;
    for (int i : X.members)
        if (Y.contains_indec(i)) out.push_back(i);
    return SubcategorySpec::of(std::move(out), "core");
}

std::optional<Mor> right_approximation(const Engine& e, const SubcategorySpec& S, const Obj& T) {
    const auto& C = e.C();
    for (const Obj& W : e.universe()) {
        if (!S.contains_obj(W)) continue;
        for (const Mor& t : e.morphisms_between(W, T)) {
            bool ok = true;
            for (int s : S.members) {
                Obj Ws = Obj::indec(C, s);
                Mat m = postcompose_matrix(C, t, Ws);
                if (rank(m) != hom_space_dim(C, Ws, T)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return t;
        }
    }
    return std::nullopt;
}

std::optional<Mor> left_approximation(const Engine& e, const SubcategorySpec& S, const Obj& T) {
    const auto& C = e.C();
    for (const Obj& W : e.universe()) {
        if (!S.contains_obj(W)) continue;
        for (const Mor& t : e.morphisms_between(T, W)) {
            bool ok = true;
            for (int s : S.members) {
                Obj Ws = Obj::indec(C, s);
                if (rank(precompose_matrix(C, t, Ws)) != hom_space_dim(C, T, Ws)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return t;
        }
    }
    return std::nullopt;
}

bool extension_closure_check(const Engine& e, const ProperClass& xi, const SubcategorySpec& S) {
    for (const Triangle& t : e.all_distinguished()) {
        if (!xi.contains_third(e, t.w)) continue;
        if (S.contains_obj(t.X) && S.contains_obj(t.Z) && !S.contains_obj(t.Y)) return false;
    }
    return true;
}

bool co_t_structure_check(const Engine& e, const SubcategorySpec& X, const SubcategorySpec& Y) {
    const auto& C = e.C();
    // (1) X[-1] in X and Y[1] in Y.
    for (int x : X.members)
        if (!X.contains_obj(e.shift(Obj::indec(C, x), -1))) return false;
    for (int y : Y.members)
        if (!Y.contains_obj(e.shift(Obj::indec(C, y), 1))) return false;
    // (2) Hom(X, Y[1]) = 0.
    for (int x : X.members)
        for (int y : Y.members)
            if (hom_space_dim(C, Obj::indec(C, x), e.shift(Obj::indec(C, y), 1)) != 0) return false;
    // (3) Decomposition triangle X[-1] -> T -> Y -> X for every T in U.
    for (const Obj& T : e.universe()) {
        bool found = false;
        for (const Obj& Xc : e.universe()) {
            if (!X.contains_obj(Xc)) continue;
            Obj Xm = e.shift(Xc, -1);
            for (const Mor& u : e.morphisms_between(Xm, T)) {
                Triangle t = e.cone(u);
                if (Y.contains_obj(t.Z)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace trimodel
