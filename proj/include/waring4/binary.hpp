// Binary forms and Sylvester's rank algorithm: border rank from
// catalecticant kernels, rank via squarefree apolar witnesses, rational
// root extraction, and the brute-force oracle used by the tests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring4/qmatrix.hpp"
#include "waring4/rational.hpp"
#include "waring4/rng.hpp"

namespace waring4 {

// Coefficients on the basis x^D, x^(D-1)y, ..., y^D.  Dual forms (acting as
// differential operators) use the same layout.
class BinaryForm {
  public:
    BinaryForm() = default;
    explicit BinaryForm(QVec coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::runtime_error("BinaryForm: empty coefficient vector");
    }

    static BinaryForm zero(int degree) { return BinaryForm(QVec(degree + 1, Scalar(0))); }
    // Form vanishing at the given points of P^1 (product of their linear forms).
    static BinaryForm from_roots(const std::vector<std::pair<Scalar, Scalar>>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const QVec& coeffs() const { return c_; }
    Scalar coeff(int k) const { return c_[k]; }
    bool is_zero() const { return is_zero_vec(c_); }

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scaled(const Scalar& s) const;
    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }

    Scalar evaluate(const Scalar& x, const Scalar& y) const;
    BinaryForm dx() const;
    BinaryForm dy() const;

    std::string str(const std::string& xname = "x", const std::string& yname = "y") const;

  private:
    QVec c_;
};

// g(d/dx, d/dy) applied to f; requires deg g <= deg f.
BinaryForm binary_contract(const BinaryForm& f, const BinaryForm& g);

// Rows: monomials of degree D-r; columns: dual monomials of degree r.
QMat binary_catalecticant(const BinaryForm& f, int r);

// Basis of the apolar forms of degree r (kernel of the catalecticant).
std::vector<BinaryForm> apolar_basis(const BinaryForm& f, int r);

// Matrix of f -> binary_contract(f, h) on forms f of degree big_d; its
// kernel is the space of degree-big_d forms annihilated by h.
QMat annihilated_by_matrix(const BinaryForm& h, int big_d);

BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b);
bool binary_squarefree(const BinaryForm& f);

int binary_border_rank(const BinaryForm& f);

struct BinaryRankCertificate {
    int border_rank = 0;
    int rank = 0;
    bool tangent_case = false;      // minimal apolar generator not squarefree
    BinaryForm witness;             // squarefree apolar form of degree = rank
    BinaryForm minimal_generator;   // apolar form of degree = border_rank
};

BinaryRankCertificate binary_rank(const BinaryForm& f, Rng& rng);

// Greedy rational root extraction: every rational root it can peel off,
// with multiplicity; possibly incomplete when irrational factors remain.
std::vector<std::pair<Scalar, Scalar>> some_rational_roots(const BinaryForm& h);

// All roots in P^1 if the squarefree form splits over Q, else nullopt.
std::optional<std::vector<std::pair<Scalar, Scalar>>> explicit_roots_if_rational(const BinaryForm& h);

// Certificate check: h squarefree, deg h <= deg f and h annihilates f.
bool verify_binary_decomposition(const BinaryForm& f, const BinaryForm& h);

// Independent oracle: the least r admitting a squarefree apolar form of
// degree r, found by exhaustive small-integer sweeps over the kernel plus
// random combinations.  Test-grade, deliberately separate from binary_rank.
int binary_rank_bruteforce(const BinaryForm& f, Rng& rng);

}  // namespace waring4
