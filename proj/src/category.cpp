#include "trimodel/category.hpp"

#include <cassert>

namespace trimodel {

int CategoryPresentation::label_index(const std::string& s) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == s) return i;
    throw FixtureError("unknown indecomposable label '" + s + "'");
}

Mat CategoryPresentation::compose_coords(int i, int j, int k, const Mat& f, const Mat& g) const {
    assert(f.rows == hd(i, j) && g.rows == hd(j, k));
    Mat t(hd(i, j) * hd(j, k), 1, p);
    for (int q = 0; q < hd(j, k); ++q) {
        Scalar gq = g.at(q, 0);
        if (gq == 0) continue;
        for (int f_ = 0; f_ < hd(i, j); ++f_)
            t.at(f_ + q * hd(i, j), 0) = static_cast<Scalar>(f.at(f_, 0) * gq % p);
    }
    return comp[i][j][k] * t;
}

void CategoryPresentation::validate() const {
    if (static_cast<int>(labels.size()) != n || static_cast<int>(hom_dim.size()) != n)
        throw FixtureError("presentation: size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Mat& m = comp[i][j][k];
                if (m.rows != hd(i, k) || m.cols != hd(i, j) * hd(j, k))
                    throw FixtureError("presentation: composition tensor shape at (" + labels[i] + "," +
                                       labels[j] + "," + labels[k] + ")");
            }
    // Unit laws.
    for (int i = 0; i < n; ++i) {
        if (id_coords[i].rows != hd(i, i))
            throw FixtureError("presentation: identity coordinates shape at " + labels[i]);
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < hd(i, j); ++b) {
                Mat e(hd(i, j), 1, p);
                e.at(b, 0) = 1;
                if (!(compose_coords(i, i, j, id_coords[i], e) == e))
                    throw FixtureError("presentation: right unit law fails at Hom(" + labels[i] + "," +
                                       labels[j] + ") basis " + std::to_string(b));
                if (!(compose_coords(i, j, j, e, id_coords[j]) == e))
                    throw FixtureError("presentation: left unit law fails at Hom(" + labels[i] + "," +
                                       labels[j] + ") basis " + std::to_string(b));
            }
    }
    // Associativity on basis triples.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int bf = 0; bf < hd(i, j); ++bf)
                        for (int bg = 0; bg < hd(j, k); ++bg)
                            for (int bh = 0; bh < hd(k, l); ++bh) {
                                Mat f(hd(i, j), 1, p), g(hd(j, k), 1, p), h(hd(k, l), 1, p);
                                f.at(bf, 0) = 1;
                                g.at(bg, 0) = 1;
                                h.at(bh, 0) = 1;
                                Mat lhs = compose_coords(i, k, l, compose_coords(i, j, k, f, g), h);
                                Mat rhs = compose_coords(i, j, l, f, compose_coords(j, k, l, g, h));
                                if (!(lhs == rhs))
                                    throw FixtureError("presentation: associativity fails on basis triple (" +
                                                       labels[i] + "->" + labels[j] + "->" + labels[k] + "->" +
                                                       labels[l] + ") indices (" + std::to_string(bf) + "," +
                                                       std::to_string(bg) + "," + std::to_string(bh) + ")");
                            }
}

CategoryPresentation opposite(const CategoryPresentation& C) {
    CategoryPresentation O;
    O.p = C.p;
    O.n = C.n;
    O.labels = C.labels;
    O.hom_dim.assign(C.n, std::vector<int>(C.n, 0));
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j) O.hom_dim[i][j] = C.hom_dim[j][i];
    O.comp.assign(C.n, std::vector<std::vector<Mat>>(C.n, std::vector<Mat>(C.n)));
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j)
            for (int k = 0; k < C.n; ++k) {
                // g° . f° = (f.g)° with f° in Hom_op(i,j) = Hom(j,i), g° in Hom_op(j,k) = Hom(k,j).
                Mat m(O.hom_dim[i][k], O.hom_dim[i][j] * O.hom_dim[j][k], C.p);
                for (int fp = 0; fp < O.hom_dim[i][j]; ++fp)
                    for (int gq = 0; gq < O.hom_dim[j][k]; ++gq) {
                        Mat f(C.hd(j, i), 1, C.p), g(C.hd(k, j), 1, C.p);
                        f.at(fp, 0) = 1;
                        g.at(gq, 0) = 1;
                        Mat r = C.compose_coords(k, j, i, g, f);
                        for (int t = 0; t < r.rows; ++t) m.at(t, fp + gq * O.hom_dim[i][j]) = r.at(t, 0);
                    }
                O.comp[i][j][k] = std::move(m);
            }
    O.id_coords = C.id_coords;
    return O;
}

int Obj::total() const {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

bool Obj::is_zero() const { return total() == 0; }

Obj Obj::zero(const CategoryPresentation& C) { return Obj{std::vector<int>(C.n, 0)}; }

Obj Obj::indec(const CategoryPresentation& C, int i) {
    Obj o = zero(C);
    o.mult[i] = 1;
    return o;
}

Obj Obj::sum(const Obj& a, const Obj& b) {
    Obj o = a;
    for (size_t i = 0; i < o.mult.size(); ++i) o.mult[i] += b.mult[i];
    return o;
}

std::string Obj::show(const CategoryPresentation& C) const {
    std::string s;
    for (int i = 0; i < C.n; ++i)
        for (int c = 0; c < mult[i]; ++c) {
            if (!s.empty()) s += "+";
            s += C.labels[i];
        }
    return s.empty() ? "0" : s;
}

std::vector<int> slots(const Obj& a) {
    std::vector<int> s;
    for (size_t i = 0; i < a.mult.size(); ++i)
        for (int c = 0; c < a.mult[i]; ++c) s.push_back(static_cast<int>(i));
    return s;
}

bool Mor::is_zero() const {
    for (Scalar x : a)
        if (x != 0) return false;
    return true;
}

std::vector<std::uint8_t> Mor::key() const {
    std::vector<std::uint8_t> k;
    for (int m : src.mult) k.push_back(static_cast<std::uint8_t>(m));
    k.push_back(255);
    for (int m : tgt.mult) k.push_back(static_cast<std::uint8_t>(m));
    k.push_back(255);
    k.insert(k.end(), a.begin(), a.end());
    return k;
}

MorShape::MorShape(const CategoryPresentation& cat, const Obj& src, const Obj& tgt)
    : C(&cat), src_slots(slots(src)), tgt_slots(slots(tgt)) {
    offset.resize(src_slots.size() * tgt_slots.size() + 1, 0);
    int d = 0;
    for (size_t t = 0; t < tgt_slots.size(); ++t)
        for (size_t s = 0; s < src_slots.size(); ++s) {
            offset[t * src_slots.size() + s] = d;
            d += cat.hd(src_slots[s], tgt_slots[t]);
        }
    offset.back() = d;
    dim = d;
}

int hom_space_dim(const CategoryPresentation& C, const Obj& A, const Obj& B) {
    int d = 0;
    for (size_t i = 0; i < A.mult.size(); ++i)
        for (size_t j = 0; j < B.mult.size(); ++j)
            d += A.mult[i] * B.mult[j] * C.hd(static_cast<int>(i), static_cast<int>(j));
    return d;
}

Mor zero_mor(const CategoryPresentation& C, const Obj& A, const Obj& B) {
    Mor f{A, B, {}};
    f.a.assign(static_cast<size_t>(hom_space_dim(C, A, B)), 0);
    return f;
}

Mor identity_mor(const CategoryPresentation& C, const Obj& A) {
    Mor f = zero_mor(C, A, A);
    MorShape sh(C, A, A);
    for (size_t t = 0; t < sh.tgt_slots.size(); ++t) {
        int i = sh.tgt_slots[t];
        const Mat& id = C.id_coords[i];
        int off = sh.block_offset(static_cast<int>(t), static_cast<int>(t));
        for (int b = 0; b < id.rows; ++b) f.a[off + b] = id.at(b, 0);
    }
    return f;
}

Mor compose(const CategoryPresentation& C, const Mor& g, const Mor& f) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("compose: object mismatch");
    Mor r = zero_mor(C, f.src, g.tgt);
    MorShape shf(C, f.src, f.tgt), shg(C, g.src, g.tgt), shr(C, f.src, g.tgt);
    for (size_t u = 0; u < shr.tgt_slots.size(); ++u)
        for (size_t s = 0; s < shr.src_slots.size(); ++s) {
            int i = shr.src_slots[s], k = shr.tgt_slots[u];
            if (C.hd(i, k) == 0) continue;
            Mat acc(C.hd(i, k), 1, C.p);
            for (size_t t = 0; t < shf.tgt_slots.size(); ++t) {
                int j = shf.tgt_slots[t];
                int lf = C.hd(i, j), lg = C.hd(j, k);
                if (lf == 0 || lg == 0) continue;
                Mat fv(lf, 1, C.p), gv(lg, 1, C.p);
                int offf = shf.block_offset(static_cast<int>(t), static_cast<int>(s));
                int offg = shg.block_offset(static_cast<int>(u), static_cast<int>(t));
                bool nz = false;
                for (int b = 0; b < lf; ++b) {
                    fv.at(b, 0) = f.a[offf + b];
                    nz |= fv.at(b, 0) != 0;
                }
                if (!nz) continue;
                nz = false;
                for (int b = 0; b < lg; ++b) {
                    gv.at(b, 0) = g.a[offg + b];
                    nz |= gv.at(b, 0) != 0;
                }
                if (!nz) continue;
                acc = acc + C.compose_coords(i, j, k, fv, gv);
            }
            int offr = shr.block_offset(static_cast<int>(u), static_cast<int>(s));
            for (int b = 0; b < acc.rows; ++b) r.a[offr + b] = acc.at(b, 0);
        }
    return r;
}

Mor add(const CategoryPresentation& C, const Mor& f, const Mor& g) {
    assert(f.src == g.src && f.tgt == g.tgt);
    Mor r = f;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<Scalar>((r.a[i] + g.a[i]) % C.p);
    return r;
}

Mor sub(const CategoryPresentation& C, const Mor& f, const Mor& g) {
    assert(f.src == g.src && f.tgt == g.tgt);
    Mor r = f;
    for (size_t i = 0; i < r.a.size(); ++i)
        r.a[i] = static_cast<Scalar>(((r.a[i] - g.a[i]) % C.p + C.p) % C.p);
    return r;
}

Mor negate(const CategoryPresentation& C, const Mor& f) {
    Mor r = f;
    for (auto& x : r.a) x = static_cast<Scalar>((C.p - x) % C.p);
    return r;
}

Mor scale(const CategoryPresentation& C, const Mor& f, Scalar c) {
    Mor r = f;
    for (auto& x : r.a) x = static_cast<Scalar>(x * c % C.p);
    return r;
}

Mor direct_sum(const CategoryPresentation& C, const Mor& f, const Mor& g) {
    Obj S = Obj::sum(f.src, g.src), T = Obj::sum(f.tgt, g.tgt);
    Mor r = zero_mor(C, S, T);
    MorShape shr(C, S, T), shf(C, f.src, f.tgt), shg(C, g.src, g.tgt);
    // For indec i, slots of the sum: copies of the first part precede copies
    // of the second.
    std::vector<int> fsrc_to_S, gsrc_to_S, ftgt_to_T, gtgt_to_T;
    {
        auto build = [&](const Obj& a, const Obj& b, std::vector<int>& amap, std::vector<int>& bmap,
                         const Obj& s) {
            std::vector<int> base(s.mult.size(), 0);
            int acc = 0;
            for (size_t i = 0; i < s.mult.size(); ++i) {
                base[i] = acc;
                acc += s.mult[i];
            }
            amap.clear();
            bmap.clear();
            for (size_t i = 0; i < a.mult.size(); ++i)
                for (int c = 0; c < a.mult[i]; ++c) amap.push_back(base[i] + c);
            for (size_t i = 0; i < b.mult.size(); ++i)
                for (int c = 0; c < b.mult[i]; ++c) bmap.push_back(base[i] + a.mult[i] + c);
        };
        build(f.src, g.src, fsrc_to_S, gsrc_to_S, S);
        build(f.tgt, g.tgt, ftgt_to_T, gtgt_to_T, T);
    }
    auto paste_block = [&](const MorShape& shp, const Mor& m, const std::vector<int>& smap,
                           const std::vector<int>& tmap) {
        for (size_t t = 0; t < shp.tgt_slots.size(); ++t)
            for (size_t s = 0; s < shp.src_slots.size(); ++s) {
                int len = shp.block_len(static_cast<int>(t), static_cast<int>(s));
                if (len == 0) continue;
                int from = shp.block_offset(static_cast<int>(t), static_cast<int>(s));
                int to = shr.block_offset(tmap[t], smap[s]);
                for (int b = 0; b < len; ++b) r.a[to + b] = m.a[from + b];
            }
    };
    paste_block(shf, f, fsrc_to_S, ftgt_to_T);
    paste_block(shg, g, gsrc_to_S, gtgt_to_T);
    return r;
}

namespace {

// Slot maps of each part into the biproduct of parts.
std::vector<std::vector<int>> part_slot_maps(const std::vector<Obj>& parts, const Obj& S) {
    size_t nind = S.mult.size();
    std::vector<int> base(nind, 0);
    int acc = 0;
    for (size_t i = 0; i < nind; ++i) {
        base[i] = acc;
        acc += S.mult[i];
    }
    std::vector<std::vector<int>> maps(parts.size());
    std::vector<int> used(nind, 0);
    for (size_t q = 0; q < parts.size(); ++q) {
        for (size_t i = 0; i < nind; ++i)
            for (int c = 0; c < parts[q].mult[i]; ++c) maps[q].push_back(base[i] + used[i] + c);
        for (size_t i = 0; i < nind; ++i) used[i] += parts[q].mult[i];
    }
    return maps;
}

Obj sum_all(const std::vector<Obj>& parts) {
    Obj S = parts.at(0);
    for (size_t q = 1; q < parts.size(); ++q) S = Obj::sum(S, parts[q]);
    return S;
}

}  // namespace

Mor inclusion(const CategoryPresentation& C, const std::vector<Obj>& parts, int which) {
    Obj S = sum_all(parts);
    auto maps = part_slot_maps(parts, S);
    const Obj& A = parts[which];
    Mor r = zero_mor(C, A, S);
    MorShape shr(C, A, S);
    std::vector<int> aslots = slots(A);
    for (size_t s = 0; s < aslots.size(); ++s) {
        int i = aslots[s];
        int t = maps[which][s];
        int off = shr.block_offset(t, static_cast<int>(s));
        const Mat& id = C.id_coords[i];
        for (int b = 0; b < id.rows; ++b) r.a[off + b] = id.at(b, 0);
    }
    return r;
}

Mor projection(const CategoryPresentation& C, const std::vector<Obj>& parts, int which) {
    Obj S = sum_all(parts);
    auto maps = part_slot_maps(parts, S);
    const Obj& A = parts[which];
    Mor r = zero_mor(C, S, A);
    MorShape shr(C, S, A);
    std::vector<int> aslots = slots(A);
    for (size_t t = 0; t < aslots.size(); ++t) {
        int i = aslots[t];
        int s = maps[which][t];
        int off = shr.block_offset(static_cast<int>(t), s);
        const Mat& id = C.id_coords[i];
        for (int b = 0; b < id.rows; ++b) r.a[off + b] = id.at(b, 0);
    }
    return r;
}

Mor from_components_src(const CategoryPresentation& C, const std::vector<Mor>& fs) {
    std::vector<Obj> parts;
    for (auto& f : fs) parts.push_back(f.src);
    Mor r = zero_mor(C, sum_all(parts), fs[0].tgt);
    for (size_t q = 0; q < fs.size(); ++q) {
        Mor term = compose(C, fs[q], projection(C, parts, static_cast<int>(q)));
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] = static_cast<Scalar>((r.a[i] + term.a[i]) % C.p);
    }
    return r;
}

Mor from_components_tgt(const CategoryPresentation& C, const std::vector<Mor>& fs) {
    std::vector<Obj> parts;
    for (auto& f : fs) parts.push_back(f.tgt);
    Mor r = zero_mor(C, fs[0].src, sum_all(parts));
    for (size_t q = 0; q < fs.size(); ++q) {
        Mor term = compose(C, inclusion(C, parts, static_cast<int>(q)), fs[q]);
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] = static_cast<Scalar>((r.a[i] + term.a[i]) % C.p);
    }
    return r;
}

Mat mor_to_vec(const CategoryPresentation& C, const Mor& f) {
    Mat v(static_cast<int>(f.a.size()), 1, C.p);
    for (size_t i = 0; i < f.a.size(); ++i) v.at(static_cast<int>(i), 0) = f.a[i];
    return v;
}

Mor vec_to_mor(const CategoryPresentation& C, const Obj& A, const Obj& B, const Mat& v) {
    Mor f = zero_mor(C, A, B);
    assert(static_cast<int>(f.a.size()) == v.rows);
    for (int i = 0; i < v.rows; ++i) f.a[i] = v.at(i, 0);
    return f;
}

Mat postcompose_matrix(const CategoryPresentation& C, const Mor& g, const Obj& A) {
    int din = hom_space_dim(C, A, g.src);
    int dout = hom_space_dim(C, A, g.tgt);
    Mat m(dout, din, C.p);
    for (int c = 0; c < din; ++c) {
        Mat e(din, 1, C.p);
        e.at(c, 0) = 1;
        Mor h = vec_to_mor(C, A, g.src, e);
        Mat img = mor_to_vec(C, compose(C, g, h));
        for (int r = 0; r < dout; ++r) m.at(r, c) = img.at(r, 0);
    }
    return m;
}

Mat precompose_matrix(const CategoryPresentation& C, const Mor& f, const Obj& B) {
    int din = hom_space_dim(C, f.tgt, B);
    int dout = hom_space_dim(C, f.src, B);
    Mat m(dout, din, C.p);
    for (int c = 0; c < din; ++c) {
        Mat e(din, 1, C.p);
        e.at(c, 0) = 1;
        Mor h = vec_to_mor(C, f.tgt, B, e);
        Mat img = mor_to_vec(C, compose(C, h, f));
        for (int r = 0; r < dout; ++r) m.at(r, c) = img.at(r, 0);
    }
    return m;
}

std::optional<Mor> inverse_of(const CategoryPresentation& C, const Mor& f) {
    if (!(f.src.mult == f.tgt.mult)) return std::nullopt;  // Krull-Schmidt
    // Unknown g: tgt -> src with g.f = id and f.g = id.
    Mat eq1 = precompose_matrix(C, f, f.src);   // g |-> g.f in Mor(src,src)
    Mat eq2 = postcompose_matrix(C, f, f.tgt);  // g |-> f.g in Mor(tgt,tgt)
    Mat A = eq1.vstack(eq2);
    Mat b = mor_to_vec(C, identity_mor(C, f.src)).vstack(mor_to_vec(C, identity_mor(C, f.tgt)));
    auto s = solve_affine(A, b);
    if (!s) return std::nullopt;
    return vec_to_mor(C, f.tgt, f.src, s->particular);
}

MorEnumerator::MorEnumerator(const CategoryPresentation& C, const Obj& A, const Obj& B, std::uint64_t budget)
    : C_(C), A_(A), B_(B), vecs_(hom_space_dim(C, A, B), C.p, budget) {}

std::optional<Mor> MorEnumerator::next() {
    auto v = vecs_.next();
    if (!v) return std::nullopt;
    return vec_to_mor(C_, A_, B_, *v);
}

Mor op_mor(const CategoryPresentation& C, const Mor& f) {
    // In C^op the morphism runs tgt -> src; block (s,t) of the result is
    // block (t,s) of f, with the identical coordinate vector.
    Mor r;
    r.src = f.tgt;
    r.tgt = f.src;
    MorShape shf(C, f.src, f.tgt);
    // Shape of r under the opposite presentation: hd_op(i,j) = hd(j,i), so the
    // block lengths match blockwise transposition.
    size_t ns = shf.src_slots.size(), nt = shf.tgt_slots.size();
    r.a.assign(f.a.size(), 0);
    // Offsets of r: iterate (tgt slot of r = src slot of f) major.
    std::vector<int> roff(ns * nt + 1, 0);
    int d = 0;
    for (size_t t = 0; t < ns; ++t)
        for (size_t s = 0; s < nt; ++s) {
            roff[t * nt + s] = d;
            d += C.hd(shf.src_slots[t], shf.tgt_slots[s]);
        }
    for (size_t t = 0; t < ns; ++t)
        for (size_t s = 0; s < nt; ++s) {
            int len = C.hd(shf.src_slots[t], shf.tgt_slots[s]);
            int from = shf.block_offset(static_cast<int>(s), static_cast<int>(t));
            int to = roff[t * nt + s];
            for (int b = 0; b < len; ++b) r.a[to + b] = f.a[from + b];
        }
    return r;
}

MorSystem::MorSystem(const CategoryPresentation& C, const Obj& src, const Obj& tgt)
    : C_(C), src_(src), tgt_(tgt), A_(0, hom_space_dim(C, src, tgt), C.p), b_(0, 1, C.p) {}

void MorSystem::post(const Mor& g, const Mor& rhs) {
    assert(g.src == tgt_ && rhs.src == src_ && rhs.tgt == g.tgt);
    A_ = A_.vstack(postcompose_matrix(C_, g, src_));
    b_ = b_.vstack(mor_to_vec(C_, rhs));
}

void MorSystem::pre(const Mor& f, const Mor& rhs) {
    assert(f.tgt == src_ && rhs.src == f.src && rhs.tgt == tgt_);
    A_ = A_.vstack(precompose_matrix(C_, f, tgt_));
    b_ = b_.vstack(mor_to_vec(C_, rhs));
}

void MorSystem::lin(const Mat& M, const Mor& rhs) {
    assert(M.cols == A_.cols);
    A_ = A_.vstack(M);
    b_ = b_.vstack(mor_to_vec(C_, rhs));
}

std::optional<AffineSolution> MorSystem::solve() const { return solve_affine(A_, b_); }

std::optional<Mor> MorSystem::first_solution() const {
    auto s = solve();
    if (!s) return std::nullopt;
    return vec_to_mor(C_, src_, tgt_, s->particular);
}

void ShiftData::validate(const CategoryPresentation& C) const {
    if (static_cast<int>(perm.size()) != C.n) throw FixtureError("shift: permutation size");
    std::vector<bool> seen(C.n, false);
    for (int v : perm) {
        if (v < 0 || v >= C.n || seen[v]) throw FixtureError("shift: not a permutation");
        seen[v] = true;
    }
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j) {
            const Mat& m = hom_map[i][j];
            if (m.rows != C.hd(perm[i], perm[j]) || m.cols != C.hd(i, j))
                throw FixtureError("shift: hom map shape at (" + C.labels[i] + "," + C.labels[j] + ")");
            if (rank(m) != m.rows || m.rows != m.cols)
                throw FixtureError("shift: hom map not invertible at (" + C.labels[i] + "," + C.labels[j] + ")");
        }
    // Functoriality on basis pairs and preservation of identities.
    for (int i = 0; i < C.n; ++i) {
        if (!(hom_map[i][i] * C.id_coords[i] == C.id_coords[perm[i]]))
            throw FixtureError("shift: does not preserve identity of " + C.labels[i]);
        for (int j = 0; j < C.n; ++j)
            for (int k = 0; k < C.n; ++k)
                for (int bf = 0; bf < C.hd(i, j); ++bf)
                    for (int bg = 0; bg < C.hd(j, k); ++bg) {
                        Mat f(C.hd(i, j), 1, C.p), g(C.hd(j, k), 1, C.p);
                        f.at(bf, 0) = 1;
                        g.at(bg, 0) = 1;
                        Mat lhs = hom_map[i][k] * C.compose_coords(i, j, k, f, g);
                        Mat rhs = C.compose_coords(perm[i], perm[j], perm[k], hom_map[i][j] * f,
                                                   hom_map[j][k] * g);
                        if (!(lhs == rhs)) throw FixtureError("shift: functoriality fails");
                    }
    }
    // Finite order.
    if (order < 1) throw FixtureError("shift: order must be positive");
    std::vector<int> s(C.n);
    for (int i = 0; i < C.n; ++i) s[i] = i;
    for (int step = 0; step < order; ++step)
        for (int i = 0; i < C.n; ++i) s[i] = perm[s[i]];
    (void)s;
    for (int i = 0; i < C.n; ++i) {
        int v = i;
        for (int step = 0; step < order; ++step) v = perm[v];
        if (v != i) throw FixtureError("shift: order is not " + std::to_string(order));
    }
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j) {
            Mat acc = Mat::identity(C.hd(i, j), C.p);
            int ci = i, cj = j;
            for (int step = 0; step < order; ++step) {
                acc = hom_map[ci][cj] * acc;
                ci = perm[ci];
                cj = perm[cj];
            }
            if (!acc.is_identity())
                throw FixtureError("shift: hom maps do not have order " + std::to_string(order));
        }
}

Obj shift_obj(const CategoryPresentation& C, const ShiftData& S, const Obj& A, int steps) {
    int k = ((steps % S.order) + S.order) % S.order;
    Obj r = A;
    for (int step = 0; step < k; ++step) {
        Obj next = Obj::zero(C);
        for (int i = 0; i < C.n; ++i) next.mult[S.perm[i]] = r.mult[i];
        r = next;
    }
    return r;
}

Mor shift_mor(const CategoryPresentation& C, const ShiftData& S, const Mor& f, int steps) {
    int k = ((steps % S.order) + S.order) % S.order;
    Mor r = f;
    for (int step = 0; step < k; ++step) {
        Obj ns = shift_obj(C, S, r.src, 1), nt = shift_obj(C, S, r.tgt, 1);
        Mor nx = zero_mor(C, ns, nt);
        MorShape sh(C, r.src, r.tgt), shn(C, ns, nt);
        // Slot c of indec i maps to slot c of indec perm[i]; since losing or
        // gaining order only by permutation, slot positions permute blockwise.
        std::vector<int> src_map(sh.src_slots.size()), tgt_map(sh.tgt_slots.size());
        {
            // position of (perm[i], copy) within shifted slot list
            std::vector<int> base(C.n, 0);
            int acc = 0;
            for (int i = 0; i < C.n; ++i) {
                base[i] = acc;
                acc += ns.mult[i];
            }
            std::vector<int> used(C.n, 0);
            for (size_t s = 0; s < sh.src_slots.size(); ++s) {
                int pi = S.perm[sh.src_slots[s]];
                src_map[s] = base[pi] + used[pi]++;
            }
            acc = 0;
            for (int i = 0; i < C.n; ++i) {
                base[i] = acc;
                acc += nt.mult[i];
            }
            used.assign(C.n, 0);
            for (size_t t = 0; t < sh.tgt_slots.size(); ++t) {
                int pi = S.perm[sh.tgt_slots[t]];
                tgt_map[t] = base[pi] + used[pi]++;
            }
        }
        for (size_t t = 0; t < sh.tgt_slots.size(); ++t)
            for (size_t s = 0; s < sh.src_slots.size(); ++s) {
                int i = sh.src_slots[s], j = sh.tgt_slots[t];
                int len = C.hd(i, j);
                if (len == 0) continue;
                Mat v(len, 1, C.p);
                int off = sh.block_offset(static_cast<int>(t), static_cast<int>(s));
                for (int b = 0; b < len; ++b) v.at(b, 0) = r.a[off + b];
                Mat w = S.hom_map[i][j] * v;
                int offn = shn.block_offset(tgt_map[t], src_map[s]);
                for (int b = 0; b < w.rows; ++b) nx.a[offn + b] = w.at(b, 0);
            }
        r = std::move(nx);
    }
    return r;
}

ShiftData opposite_shift(const CategoryPresentation& C, const ShiftData& S) {
    // [1]_op = [-1] = [order-1].  Build the (order-1)-fold iterate of the
    // primal shift, then reindex hom maps for the opposite presentation.
    ShiftData O;
    O.order = S.order;
    O.perm.resize(C.n);
    std::vector<int> inv(C.n);
    for (int i = 0; i < C.n; ++i) inv[S.perm[i]] = i;
    O.perm = inv;
    // Primal (order-1)-fold hom map on Hom(i,j):
    auto iter_map = [&](int i, int j) {
        Mat acc = Mat::identity(C.hd(i, j), C.p);
        int ci = i, cj = j;
        for (int step = 0; step < S.order - 1; ++step) {
            acc = S.hom_map[ci][cj] * acc;
            ci = S.perm[ci];
            cj = S.perm[cj];
        }
        return acc;
    };
    O.hom_map.assign(C.n, std::vector<Mat>(C.n));
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j)
            // Hom_op(i,j) = Hom(j,i); the op-shift acts by the primal [-1].
            O.hom_map[i][j] = iter_map(j, i);
    return O;
}

}  // namespace trimodel
