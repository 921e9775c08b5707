#include "waring4/qmatrix.hpp"

#include <stdexcept>

namespace waring4 {

QMat qmat_zero(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Scalar(0)));
}

QMat qmat_identity(std::size_t n) {
    QMat m = qmat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
    QVec y(a.size(), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::runtime_error("qmat_apply: size mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    }
    return y;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    if (a.empty() || b.empty()) return {};
    QMat c = qmat_zero(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size()) throw std::runtime_error("qmat_mul: size mismatch");
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

QMat qmat_transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t = qmat_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

std::vector<std::size_t> rref(QMat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        const Scalar inv = Scalar(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);  // drop zero rows; canonical representation
    return pivots;
}

std::size_t qmat_rank(QMat a) { return rref(a).size(); }

Scalar qmat_det(QMat a) {
    const std::size_t n = a.size();
    for (const QVec& r : a)
        if (r.size() != n) throw std::runtime_error("qmat_det: matrix not square");
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a[pr][c] == 0) ++pr;
        if (pr == n) return Scalar(0);
        if (pr != c) {
            std::swap(a[pr], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Scalar inv = Scalar(1) / a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Scalar f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

QMat kernel_basis(const QMat& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    QMat m = a;
    std::vector<std::size_t> piv = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    QMat basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Scalar(0));
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const QMat& a, const QVec& b) {
    SolveResult res;
    if (a.size() != b.size()) throw std::runtime_error("solve: size mismatch");
    if (a.empty()) {
        res.consistent = true;
        return res;
    }
    const std::size_t cols = a[0].size();
    QMat m(a.size(), QVec(cols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        m[i] = a[i];
        m[i].push_back(b[i]);
    }
    std::vector<std::size_t> piv = rref(m);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == cols) return res;  // 0 = 1 row: inconsistent
    res.consistent = true;
    res.solution.assign(cols, Scalar(0));
    for (std::size_t i = 0; i < piv.size(); ++i) res.solution[piv[i]] = m[i][cols];
    res.kernel = kernel_basis(a);
    return res;
}

LinearSubspace LinearSubspace::from_rows(std::size_t ambient, const QMat& rows) {
    LinearSubspace s(ambient);
    QMat m;
    for (const QVec& r : rows) {
        if (r.size() != ambient) throw std::runtime_error("LinearSubspace: row size mismatch");
        if (!is_zero_vec(r)) m.push_back(r);
    }
    rref(m);
    s.basis_ = std::move(m);
    return s;
}

bool LinearSubspace::contains(const QVec& v) const {
    return coordinates(v).has_value();
}

std::optional<QVec> LinearSubspace::coordinates(const QVec& v) const {
    if (v.size() != ambient_) throw std::runtime_error("LinearSubspace: vector size mismatch");
    // Reduce v against the echelon basis.
    QVec r = v;
    QVec coords(basis_.size(), Scalar(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t c = 0;
        while (c < ambient_ && basis_[i][c] == 0) ++c;
        if (c == ambient_) continue;
        const Scalar f = r[c];  // pivot entry of basis_[i] is 1
        if (f == 0) continue;
        coords[i] = f;
        for (std::size_t j = c; j < ambient_; ++j)
            if (basis_[i][j] != 0) r[j] -= f * basis_[i][j];
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return coords;
}

bool LinearSubspace::contains_subspace(const LinearSubspace& other) const {
    for (const QVec& r : other.basis_)
        if (!contains(r)) return false;
    return true;
}

LinearSubspace LinearSubspace::sum(const LinearSubspace& other) const {
    if (ambient_ != other.ambient_) throw std::runtime_error("subspace sum: ambient mismatch");
    QMat rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return from_rows(ambient_, rows);
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& other) const {
    if (ambient_ != other.ambient_) throw std::runtime_error("subspace intersect: ambient mismatch");
    // Zassenhaus: row-reduce [A A; B 0]; rows with zero left half carry the
    // intersection in the right half.
    const std::size_t n = ambient_;
    QMat m;
    for (const QVec& r : basis_) {
        QVec row(2 * n, Scalar(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
        m.push_back(std::move(row));
    }
    for (const QVec& r : other.basis_) {
        QVec row(2 * n, Scalar(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = r[j];
        m.push_back(std::move(row));
    }
    rref(m);
    QMat inter;
    for (const QVec& row : m) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        QVec v(row.begin() + n, row.end());
        if (!is_zero_vec(v)) inter.push_back(std::move(v));
    }
    return from_rows(n, inter);
}

QVec projective_normalize(const QVec& v) {
    for (const Scalar& x : v) {
        if (x != 0) {
            QVec w = v;
            const Scalar inv = Scalar(1) / x;
            for (Scalar& y : w) y *= inv;
            return w;
        }
    }
    throw std::runtime_error("projective_normalize: zero vector");
}

bool is_zero_vec(const QVec& v) {
    for (const Scalar& x : v)
        if (x != 0) return false;
    return true;
}

QVec vec_add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::runtime_error("vec_add: size mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::runtime_error("vec_sub: size mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

QVec vec_scale(const Scalar& c, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

std::optional<std::pair<Scalar, Scalar>> pencil_meet_subspace(
    const QVec& p, const QVec& q, const LinearSubspace& v) {
    // Columns: basis of V, then p and q; a kernel vector with a nonzero
    // tail gives lambda*p + mu*q = -(combination in V).
    const std::size_t n = v.ambient();
    if (p.size() != n || q.size() != n) throw std::runtime_error("pencil_meet_subspace: size mismatch");
    const QMat& b = v.basis();
    QMat m = qmat_zero(n, b.size() + 2);
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = b[j][i];
    for (std::size_t i = 0; i < n; ++i) {
        m[i][b.size()] = p[i];
        m[i][b.size() + 1] = q[i];
    }
    QMat ker = kernel_basis(m);
    for (const QVec& k : ker) {
        const Scalar lambda = k[b.size()], mu = k[b.size() + 1];
        if (lambda != 0 || mu != 0) return std::make_pair(lambda, mu);
    }
    return std::nullopt;
}

QMat random_invertible(std::size_t n, Rng& rng, long long bound) {
    for (;;) {
        QMat m = qmat_zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = rng.grid(bound);
        if (qmat_rank(m) == n) return m;
    }
}

}  // namespace waring4
