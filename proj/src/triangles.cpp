#include "trimodel/triangles.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace trimodel {

std::vector<std::uint8_t> Triangle::key() const {
    std::vector<std::uint8_t> k;
    auto app = [&k](const std::vector<std::uint8_t>& v) {
        k.push_back(254);
        k.insert(k.end(), v.begin(), v.end());
    };
    app(u.key());
    app(v.key());
    app(w.key());
    return k;
}

Engine::Engine(std::shared_ptr<const Backend> backend, int bound, std::uint64_t budget)
    : backend_(std::move(backend)), bound_(bound), budget_(budget) {}

Mat Engine::shift_matrix(const Obj& A, const Obj& B) const {
    int d = hom_space_dim(C(), A, B);
    Obj A1 = shift(A, 1), B1 = shift(B, 1);
    Mat m(hom_space_dim(C(), A1, B1), d, C().p);
    for (int c = 0; c < d; ++c) {
        Mat e(d, 1, C().p);
        e.at(c, 0) = 1;
        Mat img = mor_to_vec(C(), shift(vec_to_mor(C(), A, B, e), 1));
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = img.at(r, 0);
    }
    return m;
}

bool Engine::zero_composites(const Mor& u, const Mor& v, const Mor& w) const {
    if (!compose(C(), v, u).is_zero()) return false;
    if (!compose(C(), w, v).is_zero()) return false;
    return compose(C(), shift(u, 1), w).is_zero();
}

Triangle Engine::make_triangle(const Obj& X, const Obj& Y, const Obj& Z, const Mor& u, const Mor& v,
                               const Mor& w) const {
    if (!(u.src == X && u.tgt == Y && v.src == Y && v.tgt == Z && w.src == Z && w.tgt == shift(X, 1)))
        throw std::invalid_argument("make_triangle: endpoint mismatch");
    if (!zero_composites(u, v, w))
        throw std::invalid_argument("make_triangle: consecutive composites are not zero");
    return Triangle{X, Y, Z, u, v, w};
}

Triangle Engine::cone(const Mor& u) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cone_memo_.find(u.key());
        if (it != cone_memo_.end()) return it->second;
    }
    Triangle t = backend_->cone(u);
    if (!(t.u == u) || !zero_composites(t.u, t.v, t.w))
        throw FixtureError("backend failure: cone oracle returned an invalid completion");
    std::lock_guard<std::mutex> lk(mu_);
    cone_memo_.emplace(u.key(), t);
    return t;
}

std::pair<Obj, Mor> Engine::hoc(const Mor& u) const {
    Triangle t = cone(u);
    return {t.Z, t.v};
}

Triangle Engine::hok_triangle(const Mor& u) const {
    // Completion W -> X -> Y -> W[1] with middle map exactly u, obtained by
    // rotating the cone of -u[-1] forward twice.
    Mor m = negate(C(), shift(u, -1));
    return rotate(cone(m), 2);
}

std::pair<Obj, Mor> Engine::hok(const Mor& u) const {
    Triangle t = hok_triangle(u);
    return {t.X, t.u};
}

Triangle Engine::completion_of_third(const Mor& w) const {
    return rotate(cone(w), -2);
}

Triangle Engine::rotate(const Triangle& t, int k) const {
    Triangle r = t;
    for (; k > 0; --k) {
        Mor nu = negate(C(), shift(r.u, 1));
        r = Triangle{r.Y, r.Z, shift(r.X, 1), r.v, r.w, nu};
    }
    for (; k < 0; ++k) {
        Mor nw = negate(C(), shift(r.w, -1));
        r = Triangle{shift(r.Z, -1), r.X, r.Y, nw, r.u, r.v};
    }
    return r;
}

Triangle Engine::suspend(const Triangle& t, int i) const {
    Mor u = shift(t.u, i), v = shift(t.v, i), w = shift(t.w, i);
    bool neg = ((i % 2) + 2) % 2 == 1;
    if (neg) {
        u = negate(C(), u);
        v = negate(C(), v);
        w = negate(C(), w);
    }
    return Triangle{shift(t.X, i), shift(t.Y, i), shift(t.Z, i), u, v, w};
}

Triangle Engine::coproduct(const Triangle& t1, const Triangle& t2) const {
    return Triangle{Obj::sum(t1.X, t2.X), Obj::sum(t1.Y, t2.Y), Obj::sum(t1.Z, t2.Z),
                    direct_sum(C(), t1.u, t2.u), direct_sum(C(), t1.v, t2.v),
                    direct_sum(C(), t1.w, t2.w)};
}

bool Engine::is_distinguished(const Triangle& t) const {
    auto k = t.key();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = dist_memo_.find(k);
        if (it != dist_memo_.end()) return it->second;
    }
    bool res = false;
    if (zero_composites(t.u, t.v, t.w)) {
        Triangle c = cone(t.u);
        if (t.Z.mult == c.Z.mult) {
            // Isomorphism h: Z -> Zc with h.v = vc and wc.h = w.
            MorSystem sys(C(), t.Z, c.Z);
            sys.pre(t.v, c.v);
            sys.post(c.w, t.w);
            if (auto sol = sys.solve()) {
                AffineEnumerator en(*sol, C().p, budget_);
                while (auto h = en.next()) {
                    if (inverse_of(C(), sys.to_mor(*h))) {
                        res = true;
                        break;
                    }
                }
            }
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    dist_memo_.emplace(std::move(k), res);
    return res;
}

std::optional<Mor> Engine::fill_morphism(const Triangle& t1, const Triangle& t2, const Mor& f,
                                         const Mor& g) const {
    if (!(compose(C(), g, t1.u) == compose(C(), t2.u, f)))
        throw std::invalid_argument("fill_morphism: the left square does not commute");
    MorSystem sys(C(), t1.Z, t2.Z);
    sys.pre(t1.v, compose(C(), t2.v, g));
    sys.post(t2.w, compose(C(), shift(f, 1), t1.w));
    return sys.first_solution();
}

std::optional<Mor> Engine::triangle_iso_fill(const Triangle& t1, const Triangle& t2, const Mor& f,
                                             const Mor& g) const {
    if (!(compose(C(), g, t1.u) == compose(C(), t2.u, f))) return std::nullopt;
    MorSystem sys(C(), t1.Z, t2.Z);
    sys.pre(t1.v, compose(C(), t2.v, g));
    sys.post(t2.w, compose(C(), shift(f, 1), t1.w));
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    AffineEnumerator en(*sol, C().p, budget_);
    while (auto h = en.next()) {
        Mor hm = sys.to_mor(*h);
        if (inverse_of(C(), hm)) return hm;
    }
    return std::nullopt;
}

BaseChangeDiagram Engine::base_change(const Triangle& t, const Mor& alpha) const {
    if (!(alpha.tgt == t.Z)) throw std::invalid_argument("base_change: alpha must land in t.Z");
    BaseChangeDiagram d;
    d.t = t;
    d.alpha = alpha;
    const Obj& X = t.X;
    const Obj Zp = alpha.src;

    // Third column: completion X' -> Z' -> Z -> X'[1] of alpha.
    d.col3 = hok_triangle(alpha);
    const Obj Xp = d.col3.X;
    const Mor& beta3 = d.col3.u;
    const Mor& gamma = d.col3.w;

    // Homotopy pullback vertex: completion Y' -> Y + Z' -> Z -> Y'[1] of (v, alpha).
    Mor m = from_components_src(C(), {t.v, alpha});
    Triangle hc = hok_triangle(m);
    const Obj Yp = hc.X;
    std::vector<Obj> parts = {t.Y, Zp};
    d.alpha_prime = compose(C(), projection(C(), parts, 0), hc.u);
    Mor vprime = negate(C(), compose(C(), projection(C(), parts, 1), hc.u));
    d.delta = hc.w;

    // Fill u': X -> Y' with alpha'.u' = u, v'.u' = 0 and u'[1].w = delta,
    // such that the second row is distinguished (Tr4, base change form).
    Mor wa = compose(C(), t.w, alpha);
    {
        MorSystem sys(C(), X, Yp);
        sys.post(d.alpha_prime, t.u);
        sys.post(vprime, zero_mor(C(), X, Zp));
        Mat lift = precompose_matrix(C(), t.w, shift(Yp, 1)) * shift_matrix(X, Yp);
        sys.lin(lift, d.delta);
        auto sol = sys.solve();
        bool found = false;
        if (sol) {
            AffineEnumerator en(*sol, C().p, budget_);
            while (auto x = en.next()) {
                Mor uprime = sys.to_mor(*x);
                Triangle row2{X, Yp, Zp, uprime, vprime, wa};
                if (zero_composites(uprime, vprime, wa) && is_distinguished(row2)) {
                    d.row2 = row2;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw TheoremViolation("base change: no admissible fill for the second row");
    }

    // Fill beta': X' -> Y' with v'.beta' = beta3, alpha'.beta' = 0 and
    // beta'[1].gamma = -delta, second column distinguished.
    {
        MorSystem sys(C(), Xp, Yp);
        sys.post(vprime, beta3);
        sys.post(d.alpha_prime, zero_mor(C(), Xp, t.Y));
        Mat lift = precompose_matrix(C(), gamma, shift(Yp, 1)) * shift_matrix(Xp, Yp);
        sys.lin(lift, negate(C(), d.delta));
        Mor gamma2 = compose(C(), gamma, t.v);
        auto sol = sys.solve();
        bool found = false;
        if (sol) {
            AffineEnumerator en(*sol, C().p, budget_);
            while (auto x = en.next()) {
                Mor bp = sys.to_mor(*x);
                Triangle col2{Xp, Yp, t.Y, bp, d.alpha_prime, gamma2};
                if (zero_composites(bp, d.alpha_prime, gamma2) && is_distinguished(col2)) {
                    d.beta_prime = bp;
                    d.col2 = col2;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw TheoremViolation("base change: no admissible fill for the second column");
    }
    return d;
}

CobaseChangeDiagram Engine::cobase_change(const Triangle& t, const Mor& beta) const {
    if (!(beta.src == t.X)) throw std::invalid_argument("cobase_change: beta must start at t.X");
    CobaseChangeDiagram d;
    d.t = t;
    d.beta = beta;
    const Obj Xp = beta.tgt;

    // Second column: cone of beta, X -> X' -> Z' -> X[1].
    d.col2 = cone(beta);
    const Obj Zp = d.col2.Z;
    const Mor& beta2 = d.col2.v;
    const Mor& gamma = d.col2.w;

    // Homotopy pushout vertex: completion X -> X' + Y -> Y' -> X[1] of (beta; -u).
    Mor m = from_components_tgt(C(), {beta, negate(C(), t.u)});
    Triangle hc = cone(m);
    const Obj Yp = hc.Z;
    std::vector<Obj> parts = {Xp, t.Y};
    Mor uprime = compose(C(), hc.v, inclusion(C(), parts, 0));
    d.beta_prime = compose(C(), hc.v, inclusion(C(), parts, 1));
    d.delta = hc.w;

    Mor wp = compose(C(), shift(beta, 1), t.w);  // third map of the cobase-changed row

    // Fill v': Y' -> Z with v'.beta' = v, v'.u' = 0 and -w.v' = delta,
    // third row distinguished.
    {
        MorSystem sys(C(), Yp, t.Z);
        sys.pre(d.beta_prime, t.v);
        sys.pre(uprime, zero_mor(C(), Xp, t.Z));
        Mat lift = postcompose_matrix(C(), negate(C(), t.w), Yp);
        sys.lin(lift, d.delta);
        auto sol = sys.solve();
        bool found = false;
        if (sol) {
            AffineEnumerator en(*sol, C().p, budget_);
            while (auto x = en.next()) {
                Mor vprime = sys.to_mor(*x);
                Triangle row3{Xp, Yp, t.Z, uprime, vprime, wp};
                if (zero_composites(uprime, vprime, wp) && is_distinguished(row3)) {
                    d.row3 = row3;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw TheoremViolation("cobase change: no admissible fill for the third row");
    }

    // Fill alpha': Y' -> Z' with alpha'.u' = beta2, alpha'.beta' = 0 and
    // gamma.alpha' = -w.v' = delta, third column distinguished.
    {
        Mor gamma3 = compose(C(), shift(t.u, 1), gamma);
        MorSystem sys(C(), Yp, Zp);
        sys.pre(uprime, beta2);
        sys.pre(d.beta_prime, zero_mor(C(), t.Y, Zp));
        Mat lift = postcompose_matrix(C(), gamma, Yp);
        sys.lin(lift, d.delta);
        auto sol = sys.solve();
        bool found = false;
        if (sol) {
            AffineEnumerator en(*sol, C().p, budget_);
            while (auto x = en.next()) {
                Mor ap = sys.to_mor(*x);
                Triangle col3{t.Y, Yp, Zp, d.beta_prime, ap, gamma3};
                if (zero_composites(d.beta_prime, ap, gamma3) && is_distinguished(col3)) {
                    d.alpha_prime = ap;
                    d.col3 = col3;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw TheoremViolation("cobase change: no admissible fill for the third column");
    }
    return d;
}

std::optional<Mor> Engine::homotopy_cartesian_witness(const Square& s) const {
    if (!(compose(C(), s.c, s.a) == compose(C(), s.d, s.b)))
        throw std::invalid_argument("square does not commute");
    const Obj& P = s.a.src;
    const Obj& S_ = s.c.tgt;
    std::vector<Obj> parts = {s.b.tgt, s.a.tgt};  // R + Q
    Mor e = from_components_tgt(C(), {s.b, negate(C(), s.a)});
    Mor m = from_components_src(C(), {s.d, s.c});
    MorEnumerator en(C(), S_, shift(P, 1), budget_);
    while (auto delta = en.next()) {
        if (!zero_composites(e, m, *delta)) continue;
        Triangle t{P, Obj::sum(parts[0], parts[1]), S_, e, m, *delta};
        if (is_distinguished(t)) return delta;
    }
    return std::nullopt;
}

bool Engine::is_weak_pullback(const Square& s) const {
    if (!(compose(C(), s.c, s.a) == compose(C(), s.d, s.b)))
        throw std::invalid_argument("square does not commute");
    const Obj& P = s.a.src;
    const Obj& Q = s.a.tgt;
    const Obj& R = s.b.tgt;
    for (const Obj& W : universe()) {
        int d1 = hom_space_dim(C(), W, R), d2 = hom_space_dim(C(), W, Q);
        // Pairs (f: W->R, g: W->Q) with d.f = c.g.
        Mat A = postcompose_matrix(C(), s.d, W).hstack(postcompose_matrix(C(), negate(C(), s.c), W));
        auto pairs = solve_affine(A, Mat(A.rows, 1, C().p));
        AffineEnumerator en(*pairs, C().p, budget_);
        while (auto x = en.next()) {
            Mor f = vec_to_mor(C(), W, R, x->submat(0, 0, d1, 1));
            Mor g = vec_to_mor(C(), W, Q, x->submat(d1, 0, d2, 1));
            MorSystem sys(C(), W, P);
            sys.post(s.b, f);
            sys.post(s.a, g);
            if (!sys.solve()) return false;
        }
    }
    return true;
}

bool Engine::is_weak_pushout(const Square& s) const {
    if (!(compose(C(), s.c, s.a) == compose(C(), s.d, s.b)))
        throw std::invalid_argument("square does not commute");
    const Obj& Q = s.a.tgt;
    const Obj& R = s.b.tgt;
    const Obj& S_ = s.c.tgt;
    for (const Obj& W : universe()) {
        int d1 = hom_space_dim(C(), Q, W), d2 = hom_space_dim(C(), R, W);
        // Pairs (f: Q->W, g: R->W) with f.a = g.b.
        Mat A = precompose_matrix(C(), s.a, W).hstack(precompose_matrix(C(), s.b, W).negated());
        auto pairs = solve_affine(A, Mat(A.rows, 1, C().p));
        AffineEnumerator en(*pairs, C().p, budget_);
        while (auto x = en.next()) {
            Mor f = vec_to_mor(C(), Q, W, x->submat(0, 0, d1, 1));
            Mor g = vec_to_mor(C(), R, W, x->submat(d1, 0, d2, 1));
            MorSystem sys(C(), S_, W);
            sys.pre(s.c, f);
            sys.pre(s.d, g);
            if (!sys.solve()) return false;
        }
    }
    return true;
}

std::optional<std::pair<Mor, Mor>> Engine::split_data(const Triangle& t) const {
    if (!t.w.is_zero()) return std::nullopt;
    MorSystem sys(C(), t.Y, t.X);
    sys.pre(t.u, identity_mor(C(), t.X));
    auto s = sys.first_solution();
    if (!s) throw TheoremViolation("split triangle admits no retraction of u");
    Mor sv = from_components_tgt(C(), {*s, t.v});  // (s; v): Y -> X + Z
    auto inv = inverse_of(C(), sv);
    if (!inv) throw TheoremViolation("split triangle: (s; v) is not invertible");
    std::vector<Obj> parts = {t.X, t.Z};
    Mor tprime = compose(C(), *inv, inclusion(C(), parts, 1));
    // Normalization identities.
    if (!(compose(C(), *s, t.u) == identity_mor(C(), t.X)) ||
        !(compose(C(), t.v, tprime) == identity_mor(C(), t.Z)) ||
        !compose(C(), *s, tprime).is_zero())
        throw TheoremViolation("split data fails the normalization identities");
    return std::make_pair(*s, tprime);
}

OctahedronDiagram Engine::octahedron(const Mor& u, const Mor& v) const {
    if (!(u.tgt == v.src)) throw std::invalid_argument("octahedron: u and v are not composable");
    OctahedronDiagram d;
    d.u = u;
    d.v = v;
    d.t_u = cone(u);
    d.t_vu = cone(compose(C(), v, u));
    d.t_v = cone(v);

    // f: Z' -> Y' with f.t_u.v = t_vu.v . v and t_vu.w . f = t_u.w.
    MorSystem fsys(C(), d.t_u.Z, d.t_vu.Z);
    fsys.pre(d.t_u.v, compose(C(), d.t_vu.v, v));
    fsys.post(d.t_vu.w, d.t_u.w);
    auto fsol = fsys.solve();
    if (!fsol) throw TheoremViolation("octahedron: no fill f exists");

    Mor third = compose(C(), shift(d.t_u.v, 1), d.t_v.w);  // X' -> Z'[1]
    AffineEnumerator fen(*fsol, C().p, budget_);
    while (auto fx = fen.next()) {
        Mor f = fsys.to_mor(*fx);
        // g: Y' -> X' with g.t_vu.v = t_v.v and t_v.w[... ] handled via the
        // displayed identities: g.w = v', v''.g = u[1].w'.
        MorSystem gsys(C(), d.t_vu.Z, d.t_v.Z);
        gsys.pre(d.t_vu.v, d.t_v.v);
        gsys.post(d.t_v.w, compose(C(), shift(u, 1), d.t_vu.w));
        auto gsol = gsys.solve();
        if (!gsol) continue;
        AffineEnumerator gen(*gsol, C().p, budget_);
        while (auto gx = gen.next()) {
            Mor g = gsys.to_mor(*gx);
            if (!zero_composites(f, g, third)) continue;
            Triangle col3{d.t_u.Z, d.t_vu.Z, d.t_v.Z, f, g, third};
            if (is_distinguished(col3)) {
                d.f = f;
                d.g = g;
                d.col3 = col3;
                return d;
            }
        }
    }
    throw TheoremViolation("octahedron: no pair of fills makes the third column distinguished");
}

const std::vector<Obj>& Engine::universe() const {
    std::lock_guard<std::mutex> lk(mu_);
    if (universe_) return *universe_;
    std::vector<Obj> us;
    // Graded lexicographic: total multiplicity ascending, then lex ascending.
    for (int total = 0; total <= bound_; ++total) {
        std::vector<int> m(C().n, 0);
        // Enumerate compositions of `total` into n parts, lex ascending.
        std::function<void(int, int)> rec = [&](int idx, int rest) {
            if (idx == C().n - 1) {
                m[idx] = rest;
                us.push_back(Obj{m});
                return;
            }
            for (int c = 0; c <= rest; ++c) {
                m[idx] = c;
                rec(idx + 1, rest - c);
            }
        };
        if (C().n == 0) {
            if (total == 0) us.push_back(Obj{m});
        } else {
            rec(0, total);
        }
    }
    universe_ = std::move(us);
    return *universe_;
}

std::vector<Mor> Engine::morphisms_between(const Obj& A, const Obj& B) const {
    std::vector<int> key = A.mult;
    key.push_back(-1);
    key.insert(key.end(), B.mult.begin(), B.mult.end());
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = mor_memo_.find(key);
        if (it != mor_memo_.end()) return it->second;
    }
    std::vector<Mor> ms;
    MorEnumerator en(C(), A, B, budget_);
    while (auto f = en.next()) ms.push_back(*f);
    std::lock_guard<std::mutex> lk(mu_);
    return mor_memo_.emplace(std::move(key), std::move(ms)).first->second;
}

const std::vector<Mor>& Engine::all_morphisms() const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (all_mor_) return *all_mor_;
    }
    const auto& us = universe();
    std::vector<Mor> ms;
    for (const Obj& A : us)
        for (const Obj& B : us) {
            auto batch = morphisms_between(A, B);
            ms.insert(ms.end(), batch.begin(), batch.end());
        }
    std::lock_guard<std::mutex> lk(mu_);
    if (!all_mor_) all_mor_ = std::move(ms);
    return *all_mor_;
}

const std::vector<Mor>& Engine::aut_group(const Obj& A) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = aut_memo_.find(A.mult);
        if (it != aut_memo_.end()) return it->second;
    }
    std::vector<Mor> isos;
    MorEnumerator en(C(), A, A, budget_);
    while (auto f = en.next())
        if (inverse_of(C(), *f)) isos.push_back(*f);
    std::lock_guard<std::mutex> lk(mu_);
    return aut_memo_.emplace(A.mult, std::move(isos)).first->second;
}

const std::vector<Triangle>& Engine::all_distinguished() const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (all_dist_) return *all_dist_;
    }
    std::vector<Triangle> ts;
    std::set<std::vector<std::uint8_t>> seen;
    for (const Mor& u : all_morphisms()) {
        Triangle c = cone(u);
        if (c.Z.total() > bound_) continue;
        for (const Mor& k : aut_group(c.Z)) {
            Mor kinv = *inverse_of(C(), k);
            Triangle t{c.X, c.Y, c.Z, u, compose(C(), kinv, c.v), compose(C(), c.w, k)};
            if (seen.insert(t.key()).second) ts.push_back(t);
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    if (!all_dist_) {
        for (const Triangle& t : ts) dist_memo_.emplace(t.key(), true);
        all_dist_ = std::move(ts);
    }
    return *all_dist_;
}

}  // namespace trimodel
