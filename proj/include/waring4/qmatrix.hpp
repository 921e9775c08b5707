// Exact linear algebra over the rationals: Gaussian elimination with pivot
// normalization, rank/kernel/solve, and canonical row-reduced subspaces.
#pragma once

#include <optional>
#include <vector>

#include "waring4/rational.hpp"
#include "waring4/rng.hpp"

namespace waring4 {

using QMat = std::vector<QVec>;

QMat qmat_zero(std::size_t rows, std::size_t cols);
QMat qmat_identity(std::size_t n);
QVec qmat_apply(const QMat& a, const QVec& x);           // a * x
QMat qmat_mul(const QMat& a, const QMat& b);
QMat qmat_transpose(const QMat& a);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in order.
std::vector<std::size_t> rref(QMat& a);

std::size_t qmat_rank(QMat a);
Scalar qmat_det(QMat a);

// Basis of { x : a * x = 0 }.
QMat kernel_basis(const QMat& a);

struct SolveResult {
    bool consistent = false;
    QVec solution;   // one solution when consistent
    QMat kernel;     // basis of the homogeneous solutions
};

// Solve a * x = b.
SolveResult solve(const QMat& a, const QVec& b);

// A linear subspace of K^{ambient}, stored with a canonical row-reduced
// basis so that equality of spans is plain equality of representations.
class LinearSubspace {
  public:
    LinearSubspace() = default;
    explicit LinearSubspace(std::size_t ambient) : ambient_(ambient) {}

    static LinearSubspace from_rows(std::size_t ambient, const QMat& rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }  // linear dimension
    const QMat& basis() const { return basis_; }

    bool contains(const QVec& v) const;
    bool contains_subspace(const LinearSubspace& other) const;

    // Coordinates of v in this basis; nullopt if v is outside the span.
    std::optional<QVec> coordinates(const QVec& v) const;

    LinearSubspace sum(const LinearSubspace& other) const;
    LinearSubspace intersect(const LinearSubspace& other) const;

    bool operator==(const LinearSubspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

  private:
    std::size_t ambient_ = 0;
    QMat basis_;  // reduced echelon rows
};

// First nonzero coordinate scaled to 1; identically-zero input is an error.
QVec projective_normalize(const QVec& v);

bool is_zero_vec(const QVec& v);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scale(const Scalar& c, const QVec& a);

// All (lambda, mu) != 0 with lambda*p + mu*q in V form a linear condition;
// returns one nontrivial solution if it exists.
std::optional<std::pair<Scalar, Scalar>> pencil_meet_subspace(
    const QVec& p, const QVec& q, const LinearSubspace& v);

// Random invertible (m+1)x(m+1) matrix with entries in [-bound, bound].
QMat random_invertible(std::size_t n, Rng& rng, long long bound = 3);

}  // namespace waring4
