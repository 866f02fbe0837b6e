#include "trimodel/gf.hpp"

#include <cassert>

namespace trimodel {

namespace {

Scalar inv_mod(Scalar x, int p) {
    // p is tiny; scan.
    for (int g = 1; g < p; ++g)
        if (g * x % p == 1) return static_cast<Scalar>(g);
    assert(false && "non-unit");
    return 0;
}

// Row echelon form in place; returns pivot columns.  When `reduced` the
// pivots are normalized to 1 and cleared above as well.
std::vector<int> echelon(Mat& m, bool reduced) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = inv_mod(m.at(r, c), m.p);
        if (inv != 1)
            for (int j = 0; j < m.cols; ++j) m.at(r, j) = static_cast<Scalar>(m.at(r, j) * inv % m.p);
        int lo = reduced ? 0 : r + 1;
        for (int i = lo; i < m.rows; ++i) {
            if (i == r) continue;
            Scalar f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j) {
                int v = m.at(i, j) - f * m.at(r, j) % m.p;
                m.at(i, j) = static_cast<Scalar>(((v % m.p) + m.p) % m.p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Mat::Mat(int r, int c, int prime) : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * c, 0) {}

Mat Mat::identity(int n, int prime) {
    Mat m(n, n, prime);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::col_vec(const std::vector<Scalar>& v, int prime) {
    Mat m(static_cast<int>(v.size()), 1, prime);
    m.a = v;
    return m;
}

bool Mat::is_zero() const {
    for (Scalar x : a)
        if (x != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat Mat::operator*(const Mat& rhs) const {
    assert(cols == rhs.rows && p == rhs.p);
    Mat r(rows, rhs.cols, p);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Scalar f = at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < rhs.cols; ++j)
                r.at(i, j) = static_cast<Scalar>((r.at(i, j) + f * rhs.at(k, j)) % p);
        }
    return r;
}

Mat Mat::operator+(const Mat& rhs) const {
    assert(rows == rhs.rows && cols == rhs.cols && p == rhs.p);
    Mat r(rows, cols, p);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<Scalar>((a[i] + rhs.a[i]) % p);
    return r;
}

Mat Mat::operator-(const Mat& rhs) const {
    assert(rows == rhs.rows && cols == rhs.cols && p == rhs.p);
    Mat r(rows, cols, p);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<Scalar>(((a[i] - rhs.a[i]) % p + p) % p);
    return r;
}

Mat Mat::negated() const {
    Mat r(rows, cols, p);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<Scalar>((p - a[i]) % p);
    return r;
}

Mat Mat::scaled(Scalar c) const {
    Mat r(rows, cols, p);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<Scalar>(a[i] * c % p);
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::vstack(const Mat& below) const {
    assert(cols == below.cols && p == below.p);
    Mat r(rows + below.rows, cols, p);
    r.paste(*this, 0, 0);
    r.paste(below, rows, 0);
    return r;
}

Mat Mat::hstack(const Mat& right) const {
    assert(rows == right.rows && p == right.p);
    Mat r(rows, cols + right.cols, p);
    r.paste(*this, 0, 0);
    r.paste(right, 0, cols);
    return r;
}

void Mat::paste(const Mat& src, int r0, int c0) {
    assert(r0 + src.rows <= rows && c0 + src.cols <= cols);
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) at(r0 + i, c0 + j) = src.at(i, j);
}

Mat Mat::submat(int r0, int c0, int r, int c) const {
    Mat m(r, c, p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Mat Mat::col(int c) const { return submat(0, c, rows, 1); }

int rank(const Mat& m) {
    Mat w = m;
    return static_cast<int>(echelon(w, false).size());
}

std::optional<AffineSolution> solve_affine(const Mat& A, const Mat& b) {
    if (b.rows != A.rows || b.cols != 1)
        throw std::invalid_argument("solve_affine: dimension mismatch");
    Mat aug = A.hstack(b);
    std::vector<int> pivots = echelon(aug, true);
    // Inconsistent iff a pivot lands in the appended column.
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;

    AffineSolution s;
    s.particular = Mat(A.cols, 1, A.p);
    std::vector<int> pivot_of_col(A.cols, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
    for (int c = 0; c < A.cols; ++c)
        if (pivot_of_col[c] >= 0) s.particular.at(c, 0) = aug.at(pivot_of_col[c], A.cols);
    for (int c = 0; c < A.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Mat k(A.cols, 1, A.p);
        k.at(c, 0) = 1;
        for (int c2 = 0; c2 < A.cols; ++c2)
            if (pivot_of_col[c2] >= 0)
                k.at(c2, 0) = static_cast<Scalar>((A.p - aug.at(pivot_of_col[c2], c) % A.p) % A.p);
        s.kernel.push_back(std::move(k));
    }
    return s;
}

std::vector<Mat> kernel_basis(const Mat& A) {
    auto s = solve_affine(A, Mat(A.rows, 1, A.p));
    return s->kernel;  // Ax = 0 is always consistent
}

Mat left_kernel(const Mat& A) {
    std::vector<Mat> rows = kernel_basis(A.transposed());
    Mat L(static_cast<int>(rows.size()), A.rows, A.p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < A.rows; ++j) L.at(static_cast<int>(i), j) = rows[i].at(j, 0);
    return L;
}

std::optional<Mat> right_inverse(const Mat& A) {
    Mat R(A.cols, A.rows, A.p);
    for (int j = 0; j < A.rows; ++j) {
        Mat e(A.rows, 1, A.p);
        e.at(j, 0) = 1;
        auto s = solve_affine(A, e);
        if (!s) return std::nullopt;
        for (int i = 0; i < A.cols; ++i) R.at(i, j) = s->particular.at(i, 0);
    }
    return R;
}

std::uint64_t checked_pow(int p, int dim, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < dim; ++i) {
        v *= static_cast<std::uint64_t>(p);
        if (v > cap)
            throw BudgetExceeded("enumeration of " + std::to_string(dim) + " GF(" + std::to_string(p) +
                                 ") coordinates exceeds budget " + std::to_string(cap));
    }
    return v;
}

VectorEnumerator::VectorEnumerator(int dim, int prime, std::uint64_t budget)
    : dim_(dim), p_(prime), total_(checked_pow(prime, dim, budget)), digits_(dim, 0) {}

std::optional<Mat> VectorEnumerator::next() {
    if (index_ >= total_) return std::nullopt;
    if (index_ > 0) {
        // Increment the base-p counter, least significant digit last.
        for (int i = dim_ - 1; i >= 0; --i) {
            if (++digits_[i] < p_) break;
            digits_[i] = 0;
        }
    }
    ++index_;
    return Mat::col_vec(digits_, p_);
}

AffineEnumerator::AffineEnumerator(const AffineSolution& sol, int prime, std::uint64_t budget)
    : sol_(sol), coeffs_(static_cast<int>(sol.kernel.size()), prime, budget) {}

std::optional<Mat> AffineEnumerator::next() {
    auto c = coeffs_.next();
    if (!c) return std::nullopt;
    Mat v = sol_.particular;
    for (size_t i = 0; i < sol_.kernel.size(); ++i) {
        Scalar f = c->at(static_cast<int>(i), 0);
        if (f != 0) v = v + sol_.kernel[i].scaled(f);
    }
    return v;
}

}  // namespace trimodel
