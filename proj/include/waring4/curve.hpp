// Rational curves in P^m (lines, conics, rational normal curves) given by a
// binary parametrization, and the exact correspondence between points of
// the span of their degree-d Veronese image and binary forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring4/binary.hpp"
#include "waring4/poly.hpp"

namespace waring4 {

class CurveMap {
  public:
    // param: m+1 binary forms of a common degree e >= 1 with no common root.
    CurveMap(std::vector<Form> param, int d, std::string description);

    static CurveMap line(const QVec& p, const QVec& q, int d);

    int ambient_vars() const { return static_cast<int>(param_.size()); }
    int curve_degree() const { return e_; }
    int veronese_degree() const { return d_; }
    int binary_degree() const { return d_ * e_; }  // degree of pulled-back forms
    const std::vector<Form>& param() const { return param_; }
    const std::string& description() const { return description_; }

    // Point of P^m at parameter (s : t).
    QVec point(const Scalar& s, const Scalar& t) const;

    // Image of a binary form under the span isomorphism; maps l_q^(de) to
    // veronese(point(q), d).
    QVec to_ambient(const BinaryForm& f) const;

    // Inverse where defined: nullopt if v is outside the span of the curve.
    std::optional<BinaryForm> from_ambient(const QVec& v) const;

    // Span of the Veronese image of the divisor { h = 0 } on the curve:
    // the image of the apolar complement of h.  h need not be squarefree.
    LinearSubspace divisor_span(const BinaryForm& h) const;

    // Span of the whole curve's Veronese image.
    LinearSubspace span() const;

  private:
    std::vector<Form> param_;
    int d_;
    int e_;
    std::string description_;
    QMat w_;  // columns: ambient vectors per (s,t)-monomial, binomials folded
};

// Parametrization of a smooth plane conic in P^2 through a rational point
// p0 lying on it.  Returns the degree-2 map.
std::vector<Form> conic_parametrization(const QMat& sym3, const QVec& p0);

}  // namespace waring4
