#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trimodel/errors.hpp"

namespace trimodel {

using Scalar = std::uint8_t;  // value in [0, p)

// Dense matrix over GF(p), p a small prime.  Entries are reduced mod p at
// all times.  Row-major storage; 0x0 (and rx0, 0xc) matrices are legal and
// show up constantly as hom spaces of the zero object.
struct Mat {
    int rows = 0;
    int cols = 0;
    int p = 2;
    std::vector<Scalar> a;  // rows*cols, row-major

    Mat() = default;
    Mat(int r, int c, int prime);

    static Mat identity(int n, int prime);
    static Mat col_vec(const std::vector<Scalar>& v, int prime);

    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Scalar at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat negated() const;
    Mat scaled(Scalar c) const;
    Mat transposed() const;

    bool operator==(const Mat& rhs) const { return rows == rhs.rows && cols == rhs.cols && a == rhs.a; }

    // Stacks rhs below / to the right of *this.
    Mat vstack(const Mat& below) const;
    Mat hstack(const Mat& right) const;

    // Copies src into *this with top-left corner at (r0, c0).
    void paste(const Mat& src, int r0, int c0);
    Mat submat(int r0, int c0, int r, int c) const;
    Mat col(int c) const;
};

int rank(const Mat& m);

// One solution of Ax = b together with a basis of ker A, or nullopt when the
// system is inconsistent.  b must be a column vector with b.rows == A.rows.
struct AffineSolution {
    Mat particular;           // cols x 1
    std::vector<Mat> kernel;  // each cols x 1, independent, spanning ker A
};
std::optional<AffineSolution> solve_affine(const Mat& A, const Mat& b);

std::vector<Mat> kernel_basis(const Mat& A);

// Basis of the row space's left annihilator: full-row-rank L with L*A == 0
// and rank(L) == A.rows - rank(A).  Used for cokernel presentations.
Mat left_kernel(const Mat& A);

// Right inverse: R with A*R == I (requires full row rank), via solve per column.
std::optional<Mat> right_inverse(const Mat& A);

// Deterministic enumeration of all p^dim column vectors, lexicographic in
// base-p digits (digit 0 is the most significant).  Construction throws
// BudgetExceeded when p^dim > budget.
class VectorEnumerator {
  public:
    VectorEnumerator(int dim, int prime, std::uint64_t budget);
    std::optional<Mat> next();
    std::uint64_t count() const { return total_; }

  private:
    int dim_;
    int p_;
    std::uint64_t total_;
    std::uint64_t index_ = 0;
    std::vector<Scalar> digits_;
};

// p^dim as a checked 64-bit value; throws BudgetExceeded past the cap.
std::uint64_t checked_pow(int p, int dim, std::uint64_t cap);

// Enumerates the affine set particular + span(kernel) in the deterministic
// coefficient order of VectorEnumerator.
class AffineEnumerator {
  public:
    AffineEnumerator(const AffineSolution& sol, int prime, std::uint64_t budget);
    std::optional<Mat> next();

  private:
    const AffineSolution& sol_;
    VectorEnumerator coeffs_;
};

}  // namespace trimodel
