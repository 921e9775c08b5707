// Multivariate homogeneous forms over the rationals with sparse monomial
// storage, apolarity contraction, catalecticant matrices, and Veronese
// coordinate vectors.  The monomial basis of each degree is ordered by
// graded lex with x0 > x1 > ... ; all coordinate vectors use that order.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring4/qmatrix.hpp"
#include "waring4/rational.hpp"

namespace waring4 {

using Expo = std::vector<int>;  // exponent vector, sums to the degree

// Monomials of given degree in nvars variables, in descending lex order.
const std::vector<Expo>& monomial_basis(int nvars, int degree);
std::size_t monomial_index(const Expo& e);
std::size_t monomial_count(int nvars, int degree);

Scalar binomial(long n, long k);
Scalar multinomial(const Expo& e);

// A point of P^m, stored with its first nonzero coordinate scaled to 1.
struct ProjectivePoint {
    QVec coords;
    ProjectivePoint() = default;
    explicit ProjectivePoint(const QVec& v) : coords(projective_normalize(v)) {}
    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
};

class Form {
  public:
    Form() = default;
    Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

    static Form zero(int nvars, int degree) { return Form(nvars, degree); }
    static Form monomial(const Expo& e, const Scalar& c);
    // The linear form with the given coefficient vector.
    static Form linear(const QVec& coeffs);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coef_.empty(); }
    const std::map<Expo, Scalar>& terms() const { return coef_; }

    Scalar coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Scalar& c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Form& o) const;
    Form scaled(const Scalar& c) const;
    bool operator==(const Form& o) const { return nvars_ == o.nvars_ && degree_ == o.degree_ && coef_ == o.coef_; }

    Form pow(int k) const;

    // Coefficient vector over monomial_basis(nvars, degree).
    QVec coeff_vector() const;
    static Form from_coeff_vector(int nvars, int degree, const QVec& v);

    // Value at a point.
    Scalar evaluate(const QVec& p) const;

    // d/dx_i.
    Form derivative(int var) const;

    // Substitute variables by forms of a common degree (homogeneous
    // composition); images.size() must equal nvars().
    Form substitute(const std::vector<Form>& images) const;

    std::string str() const;

  private:
    int nvars_ = 0;
    int degree_ = 0;
    std::map<Expo, Scalar> coef_;  // zero coefficients never stored
};

// G(d/dx0, ..., d/dxm) applied to F; requires deg G <= deg F.
Form contract(const Form& f, const Form& g);

// Matrix of the contraction pairing in bidegree (a, d-a): rows indexed by
// monomials of degree d-a, columns by dual monomials of degree a.
QMat catalecticant(const Form& f, int a);

// Coefficient vector of (p0*x0 + ... + pm*xm)^d.
QVec veronese(const QVec& p, int d);

// max rank of catalecticant(F, a) over 1 <= a <= amax (amax clamped to d-1).
std::size_t catalecticant_rank_bound(const Form& f, int amax);

// deg_e - 1 - dim(span), as projective dimensions; never negative for spans
// of Veronese images of degree-deg_e schemes.
int h1_defect(const LinearSubspace& span, int deg_e);

// Parser for "c*x0^a0*x1^a1 + ..." with integer or p/q coefficients.
// Rejects inhomogeneous input.
Form parse_form(const std::string& text, int nvars_hint = -1);

// Matrix of the degree-d action induced by the linear substitution
// x_i -> sum_j m[j][i] x_j, on coefficient vectors.
QMat induced_degree_action(const QMat& m, int d);

}  // namespace waring4
