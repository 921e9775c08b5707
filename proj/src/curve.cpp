#include "waring4/curve.hpp"

#include <stdexcept>

namespace waring4 {

CurveMap::CurveMap(std::vector<Form> param, int d, std::string description)
    : param_(std::move(param)), d_(d), description_(std::move(description)) {
    if (param_.empty()) throw std::runtime_error("CurveMap: empty parametrization");
    e_ = param_[0].degree();
    for (const Form& f : param_)
        if (f.nvars() != 2 || f.degree() != e_)
            throw std::runtime_error("CurveMap: parametrization must be binary forms of equal degree");
    const int nvars = ambient_vars();
    const int big_d = binary_degree();
    const auto& rows = monomial_basis(nvars, d_);
    w_ = qmat_zero(rows.size(), big_d + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Form prod = Form::monomial(Expo(2, 0), multinomial(rows[r]));
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < rows[r][i]; ++k) prod = prod * param_[i];
        // prod is a binary form of degree big_d; column k holds the
        // coefficient of s^(big_d - k) t^k.
        for (const auto& [e, c] : prod.terms()) w_[r][e[1]] = c;
    }
    // A faithful degree-(d*e) rational normal curve must span dimension
    // big_d + 1; this also rejects parametrizations with a common factor.
    if (qmat_rank(w_) != static_cast<std::size_t>(big_d) + 1)
        throw std::runtime_error("CurveMap: parametrization is degenerate (not a rational normal curve)");
}

CurveMap CurveMap::line(const QVec& p, const QVec& q, int d) {
    if (p.size() != q.size()) throw std::runtime_error("CurveMap::line: size mismatch");
    std::vector<Form> param;
    for (std::size_t i = 0; i < p.size(); ++i)
        param.push_back(Form::linear(QVec{p[i], q[i]}));
    return CurveMap(std::move(param), d, "line");
}

QVec CurveMap::point(const Scalar& s, const Scalar& t) const {
    QVec pt(param_.size());
    for (std::size_t i = 0; i < param_.size(); ++i) pt[i] = param_[i].evaluate(QVec{s, t});
    if (is_zero_vec(pt)) throw std::runtime_error("CurveMap::point: parametrization vanishes");
    return pt;
}

QVec CurveMap::to_ambient(const BinaryForm& f) const {
    const int big_d = binary_degree();
    if (f.degree() != big_d) throw std::runtime_error("CurveMap::to_ambient: wrong degree");
    QVec u(big_d + 1);
    for (int k = 0; k <= big_d; ++k) u[k] = f.coeff(k) / binomial(big_d, k);
    return qmat_apply(w_, u);
}

std::optional<BinaryForm> CurveMap::from_ambient(const QVec& v) const {
    SolveResult res = solve(w_, v);
    if (!res.consistent) return std::nullopt;
    const int big_d = binary_degree();
    QVec a(big_d + 1);
    for (int k = 0; k <= big_d; ++k) a[k] = res.solution[k] * binomial(big_d, k);
    return BinaryForm(std::move(a));
}

LinearSubspace CurveMap::divisor_span(const BinaryForm& h) const {
    const int big_d = binary_degree();
    if (h.degree() > big_d) throw std::runtime_error("CurveMap::divisor_span: divisor degree too large");
    QMat cat = annihilated_by_matrix(h, big_d);
    QMat rows;
    for (const QVec& k : kernel_basis(cat)) rows.push_back(to_ambient(BinaryForm(k)));
    return LinearSubspace::from_rows(w_.size(), rows);
}

LinearSubspace CurveMap::span() const {
    QMat rows;
    const int big_d = binary_degree();
    for (int k = 0; k <= big_d; ++k) {
        QVec col(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) col[i] = w_[i][k];
        rows.push_back(std::move(col));
    }
    return LinearSubspace::from_rows(w_.size(), rows);
}

std::vector<Form> conic_parametrization(const QMat& sym3, const QVec& p0) {
    if (sym3.size() != 3 || p0.size() != 3)
        throw std::runtime_error("conic_parametrization: expected a plane conic");
    // Check p0 lies on the conic.
    Scalar q0 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q0 += p0[i] * sym3[i][j] * p0[j];
    if (q0 != 0) throw std::runtime_error("conic_parametrization: base point not on the conic");
    // Complete p0 to a basis with two coordinate vectors.
    int skip = 0;
    while (skip < 3 && p0[skip] == 0) ++skip;
    std::vector<QVec> dirs;
    for (int i = 0; i < 3 && dirs.size() < 2; ++i) {
        if (i == skip) continue;
        QVec e(3, Scalar(0));
        e[i] = 1;
        dirs.push_back(e);
    }
    // v(s,t) = s*dirs[0] + t*dirs[1]; pi = (v M v) p0 - 2 (p0 M v) v.
    auto bilinear = [&](const QVec& a, const QVec& b) {
        Scalar r = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r += a[i] * sym3[i][j] * b[j];
        return r;
    };
    const Scalar a00 = bilinear(dirs[0], dirs[0]);
    const Scalar a01 = bilinear(dirs[0], dirs[1]);
    const Scalar a11 = bilinear(dirs[1], dirs[1]);
    const Scalar b0 = bilinear(p0, dirs[0]);
    const Scalar b1 = bilinear(p0, dirs[1]);
    std::vector<Form> param;
    for (int i = 0; i < 3; ++i) {
        // Quadratic in (s,t): (a00 s^2 + 2 a01 st + a11 t^2) p0[i]
        //                    - 2 (b0 s + b1 t)(s dirs0[i] + t dirs1[i]).
        Form f(2, 2);
        Scalar c_s2 = a00 * p0[i] - 2 * b0 * dirs[0][i];
        Scalar c_st = 2 * a01 * p0[i] - 2 * (b0 * dirs[1][i] + b1 * dirs[0][i]);
        Scalar c_t2 = a11 * p0[i] - 2 * b1 * dirs[1][i];
        if (c_s2 != 0) f.set_coeff(Expo{2, 0}, c_s2);
        if (c_st != 0) f.set_coeff(Expo{1, 1}, c_st);
        if (c_t2 != 0) f.set_coeff(Expo{0, 2}, c_t2);
        param.push_back(std::move(f));
    }
    return param;
}

}  // namespace waring4
