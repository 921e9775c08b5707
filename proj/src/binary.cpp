#include "waring4/binary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace waring4 {

BinaryForm BinaryForm::from_roots(const std::vector<std::pair<Scalar, Scalar>>& roots) {
    BinaryForm f(QVec{Scalar(1)});  // constant 1
    for (const auto& [a, b] : roots) {
        // Linear form vanishing at (a : b): b*x - a*y.
        BinaryForm lin(QVec{b, -a});
        if (lin.is_zero()) throw std::runtime_error("from_roots: zero point");
        f = f * lin;
    }
    return f;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree() != o.degree()) throw std::runtime_error("binary +: degree mismatch");
    return BinaryForm(vec_add(c_, o.c_));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (degree() != o.degree()) throw std::runtime_error("binary -: degree mismatch");
    return BinaryForm(vec_sub(c_, o.c_));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    QVec r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::scaled(const Scalar& s) const { return BinaryForm(vec_scale(s, c_)); }

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
    const int d = degree();
    Scalar total = 0;
    for (int k = 0; k <= d; ++k) {
        if (c_[k] == 0) continue;
        Scalar t = c_[k];
        for (int i = 0; i < d - k; ++i) t *= x;
        for (int i = 0; i < k; ++i) t *= y;
        total += t;
    }
    return total;
}

BinaryForm BinaryForm::dx() const {
    const int d = degree();
    if (d == 0) return BinaryForm(QVec{Scalar(0)});
    QVec r(d, Scalar(0));
    for (int k = 0; k < d; ++k) r[k] = c_[k] * Scalar(d - k);
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::dy() const {
    const int d = degree();
    if (d == 0) return BinaryForm(QVec{Scalar(0)});
    QVec r(d, Scalar(0));
    for (int k = 1; k <= d; ++k) r[k - 1] = c_[k] * Scalar(k);
    return BinaryForm(std::move(r));
}

std::string BinaryForm::str(const std::string& xname, const std::string& yname) const {
    const int d = degree();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= d; ++k) {
        const Scalar& c = c_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Scalar a = abs(c);
        bool printed = false;
        if (a != 1 || k == 0 || d == 0) {
            if (a != 1) {
                os << a.str();
                printed = true;
            }
        }
        if (d - k > 0) {
            if (printed) os << "*";
            os << xname;
            if (d - k > 1) os << "^" << (d - k);
            printed = true;
        }
        if (k > 0) {
            if (printed) os << "*";
            os << yname;
            if (k > 1) os << "^" << k;
            printed = true;
        }
        if (!printed) os << a.str();
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm binary_contract(const BinaryForm& f, const BinaryForm& g) {
    const int d = f.degree(), r = g.degree();
    if (r > d) throw std::runtime_error("binary_contract: operator degree exceeds form degree");
    // d/dx^(r-j) d/dy^j applied to x^(d-k) y^k.
    QVec out(d - r + 1, Scalar(0));
    for (int j = 0; j <= r; ++j) {
        if (g.coeff(j) == 0) continue;
        for (int k = 0; k <= d; ++k) {
            if (f.coeff(k) == 0) continue;
            const int xe = d - k, ye = k;
            const int dxs = r - j, dys = j;
            if (xe < dxs || ye < dys) continue;
            Scalar c = f.coeff(k) * g.coeff(j);
            for (int t = 0; t < dxs; ++t) c *= Scalar(xe - t);
            for (int t = 0; t < dys; ++t) c *= Scalar(ye - t);
            out[ye - dys] += c;  // resulting y-exponent indexes the basis
        }
    }
    return BinaryForm(std::move(out));
}

QMat binary_catalecticant(const BinaryForm& f, int r) {
    const int d = f.degree();
    if (r < 1 || r > d) throw std::runtime_error("binary_catalecticant: need 1 <= r <= d");
    QMat m = qmat_zero(d - r + 1, r + 1);
    for (int j = 0; j <= r; ++j) {
        QVec e(r + 1, Scalar(0));
        e[j] = 1;
        BinaryForm col = binary_contract(f, BinaryForm(e));
        for (int i = 0; i <= d - r; ++i) m[i][j] = col.coeff(i);
    }
    return m;
}

namespace {

// Scale to a primitive integer vector; keeps witness coefficients small.
QVec primitive_integer(const QVec& v) {
    BigInt lcm = 1;
    for (const Scalar& c : v) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    BigInt gcd = 0;
    QVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i] * Scalar(lcm);
        gcd = boost::multiprecision::gcd(gcd, numerator(w[i]));
    }
    if (gcd > 1)
        for (Scalar& c : w) c /= Scalar(gcd);
    return w;
}

}  // namespace

std::vector<BinaryForm> apolar_basis(const BinaryForm& f, int r) {
    QMat ker = kernel_basis(binary_catalecticant(f, r));
    std::vector<BinaryForm> out;
    out.reserve(ker.size());
    for (QVec& v : ker) out.emplace_back(primitive_integer(v));
    return out;
}

QMat annihilated_by_matrix(const BinaryForm& h, int big_d) {
    const int r = h.degree();
    if (r > big_d) throw std::runtime_error("annihilated_by_matrix: divisor degree exceeds form degree");
    QMat m = qmat_zero(big_d - r + 1, big_d + 1);
    for (int k = 0; k <= big_d; ++k) {
        QVec e(big_d + 1, Scalar(0));
        e[k] = 1;
        BinaryForm res = binary_contract(BinaryForm(std::move(e)), h);
        for (int i = 0; i <= big_d - r; ++i) m[i][k] = res.coeff(i);
    }
    return m;
}

namespace {

// Univariate view: strip leading zero coefficients (in x) of the
// dehomogenization f(x, 1), returning coefficients low-to-high in x.
QVec dehomogenize(const BinaryForm& f) {
    const int d = f.degree();
    QVec p;  // p[i] = coefficient of x^i in f(x,1)
    for (int k = d; k >= 0; --k) p.push_back(f.coeff(k));
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

QVec poly_mod(QVec a, const QVec& b) {
    if (b.size() == 1 && b[0] == 0) throw std::runtime_error("poly_mod: division by zero");
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Scalar q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

QVec poly_gcd(QVec a, QVec b) {
    auto is_zero = [](const QVec& p) { return p.size() == 1 && p[0] == 0; };
    while (!is_zero(b)) {
        QVec r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!is_zero(a)) {
        Scalar lead = a.back();
        for (Scalar& c : a) c /= lead;
    }
    return a;
}

QVec poly_derivative(const QVec& p) {
    if (p.size() == 1) return QVec{Scalar(0)};
    QVec d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Scalar(i);
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
}

int y_multiplicity(const BinaryForm& f) {
    // Multiplicity of the root (1 : 0).
    const int d = f.degree();
    for (int k = 0; k <= d; ++k)
        if (f.coeff(k) != 0) return k;
    return d + 1;  // zero form
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::runtime_error("binary_gcd: zero input");
    const int ya = y_multiplicity(a), yb = y_multiplicity(b);
    QVec g = poly_gcd(dehomogenize(a), dehomogenize(b));
    const int yfactor = std::min(ya, yb);
    const int gdeg = static_cast<int>(g.size()) - 1;
    // Homogenize g and append the common power of the root at infinity.
    QVec coeffs(gdeg + yfactor + 1, Scalar(0));
    for (int i = 0; i <= gdeg; ++i) coeffs[gdeg - i] = g[i];
    return BinaryForm(std::move(coeffs));
}

bool binary_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    if (y_multiplicity(f) >= 2) return false;
    QVec p = dehomogenize(f);
    if (p.size() == 1) return true;  // pure power of y handled above
    QVec g = poly_gcd(p, poly_derivative(p));
    return g.size() == 1;
}

int binary_border_rank(const BinaryForm& f) {
    if (f.is_zero()) throw std::runtime_error("binary_border_rank: zero form");
    const int d = f.degree();
    if (d == 0) throw std::runtime_error("binary_border_rank: constant form");
    for (int r = 1; r <= d - 1; ++r)
        if (!kernel_basis(binary_catalecticant(f, r)).empty()) return r;
    // Apolar ideal in degree d always has an element beyond the principal
    // part; a nonzero form of degree d has border rank <= ceil((d+1)/2),
    // so this point is unreachable for d >= 1 except d == 1.
    return d == 1 ? 1 : d;
}

namespace {

// Search a kernel for a squarefree element: basis first, then a
// deterministic small-integer sweep, then random combinations.
std::optional<BinaryForm> find_squarefree(const std::vector<BinaryForm>& basis, Rng& rng) {
    if (basis.empty()) return std::nullopt;
    for (const BinaryForm& b : basis)
        if (binary_squarefree(b)) return b;
    if (basis.size() < 2) return std::nullopt;  // kernel is a line: decided
    auto combo = [&](const std::vector<long long>& w) -> BinaryForm {
        BinaryForm acc = BinaryForm::zero(basis[0].degree());
        for (std::size_t i = 0; i < basis.size(); ++i)
            acc = acc + basis[i].scaled(Scalar(w[i]));
        return acc;
    };
    // Deterministic small-integer sweep when the kernel is small enough.
    const long long sweep = 3;
    double total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= 2 * sweep + 1;
    if (total <= 3000) {
        std::vector<long long> w(basis.size(), -sweep);
        for (;;) {
            bool all_zero = std::all_of(w.begin(), w.end(), [](long long v) { return v == 0; });
            if (!all_zero) {
                BinaryForm cand = combo(w);
                if (!cand.is_zero() && binary_squarefree(cand)) return cand;
            }
            std::size_t i = 0;
            while (i < w.size() && w[i] == sweep) w[i++] = -sweep;
            if (i == w.size()) break;
            ++w[i];
        }
    }
    for (int tries = 0; tries < 100; ++tries) {
        std::vector<long long> r(basis.size());
        for (auto& v : r) v = rng.uniform(-9, 9);
        BinaryForm cand = combo(r);
        if (!cand.is_zero() && binary_squarefree(cand)) return cand;
    }
    return std::nullopt;
}

}  // namespace

BinaryRankCertificate binary_rank(const BinaryForm& f, Rng& rng) {
    if (f.is_zero()) throw std::runtime_error("binary_rank: zero form");
    const int d = f.degree();
    BinaryRankCertificate cert;
    if (d == 0) throw std::runtime_error("binary_rank: constant form");
    cert.border_rank = binary_border_rank(f);
    const int r0 = cert.border_rank;
    std::vector<BinaryForm> ker;
    if (r0 <= d - 1)
        ker = apolar_basis(f, r0);
    else  // d = 1: the apolar line through the point's annihilator
        ker = {BinaryForm(QVec{f.coeff(1), -f.coeff(0)})};
    cert.minimal_generator = ker.front();
    if (auto w = find_squarefree(ker, rng)) {
        cert.rank = r0;
        cert.tangent_case = false;
        cert.witness = *w;
        return cert;
    }
    // Tangent case: the minimal generator is unique up to scale and not
    // squarefree; a generic apolar form of degree d - r0 + 2 is squarefree.
    cert.tangent_case = true;
    cert.rank = d - r0 + 2;
    std::vector<BinaryForm> high = apolar_basis(f, cert.rank);
    auto w = find_squarefree(high, rng);
    if (!w) throw std::runtime_error("binary_rank: no squarefree apolar form found in degree " +
                                     std::to_string(cert.rank));
    cert.witness = *w;
    return cert;
}

std::vector<std::pair<Scalar, Scalar>> some_rational_roots(const BinaryForm& h) {
    if (h.is_zero()) throw std::runtime_error("some_rational_roots: zero form");
    std::vector<std::pair<Scalar, Scalar>> roots;
    const int ymult = y_multiplicity(h);
    for (int i = 0; i < ymult; ++i) roots.emplace_back(Scalar(1), Scalar(0));
    QVec p = dehomogenize(h);
    // Clear denominators to an integer polynomial for the rational root test.
    BigInt lcm = 1;
    for (const Scalar& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<BigInt> ip;
    for (const Scalar& c : p) ip.push_back(numerator(c * Scalar(lcm)));
    while (ip.size() > 1) {
        // Divisor pairs (num | ip[0], den | ip.back()); constant term zero
        // means a root at x = 0.
        if (ip[0] == 0) {
            roots.emplace_back(Scalar(0), Scalar(1));
            ip.erase(ip.begin());
            continue;
        }
        BigInt a0 = abs(ip[0]), an = abs(ip.back());
        // Trial division cap keeps the search fast; roots whose numerator or
        // denominator exceeds every divisor found below the cap are missed
        // and the corresponding factor stays implicit.
        auto divisors = [](const BigInt& x) {
            std::vector<BigInt> out;
            BigInt limit = boost::multiprecision::sqrt(x);
            const long long cap = 100000;
            const long long lim = limit > cap ? cap : limit.convert_to<long long>();
            for (long long t = 1; t <= lim; ++t) {
                if (x % t != 0) continue;
                out.push_back(t);
                out.push_back(x / t);
            }
            return out;
        };
        const std::vector<BigInt> dnum = divisors(a0), dden = divisors(an);
        // Candidates are screened modulo a prime before exact evaluation.
        const long long prime = 1000003;
        std::vector<long long> ipm;
        for (const BigInt& c : ip) {
            long long r = (c % prime).convert_to<long long>();
            ipm.push_back(r < 0 ? r + prime : r);
        }
        auto eval_mod = [&](long long x) {
            long long v = 0;
            for (std::size_t i = ipm.size(); i-- > 0;) v = (v % prime * (x % prime) + ipm[i]) % prime;
            return v;
        };
        auto mod_inverse = [&](long long x) {
            long long t = 0, new_t = 1, r = prime, new_r = x % prime;
            while (new_r != 0) {
                const long long q = r / new_r;
                long long tmp = t - q * new_t;
                t = new_t;
                new_t = tmp;
                tmp = r - q * new_r;
                r = new_r;
                new_r = tmp;
            }
            return t < 0 ? t + prime : t;
        };
        bool found = false;
        for (const BigInt& nn : dnum) {
            for (const BigInt& dd : dden) {
                for (int sign = -1; sign <= 1 && !found; sign += 2) {
                    long long dm = (dd % prime).convert_to<long long>();
                    if (dm != 0) {
                        long long nm = (nn % prime).convert_to<long long>();
                        long long x = nm % prime * mod_inverse(dm) % prime;
                        if (sign < 0 && x != 0) x = prime - x;
                        if (eval_mod(x) != 0) continue;
                    }
                    Scalar cand = Scalar(nn * sign) / Scalar(dd);
                    Scalar val = 0;
                    for (std::size_t i = ip.size(); i-- > 0;) val = val * cand + Scalar(ip[i]);
                    if (val == 0) {
                        roots.emplace_back(cand, Scalar(1));
                        // Deflate by (x - cand).
                        QVec q(ip.size() - 1, Scalar(0));
                        Scalar carry = 0;
                        for (std::size_t i = ip.size(); i-- > 1;) {
                            carry = Scalar(ip[i]) + carry * cand;
                            q[i - 1] = carry;
                        }
                        BigInt l2 = 1;
                        for (const Scalar& c : q) l2 = boost::multiprecision::lcm(l2, denominator(c));
                        ip.clear();
                        for (const Scalar& c : q) ip.push_back(numerator(c * Scalar(l2)));
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return roots;  // irrational or irreducible factor remains
    }
    return roots;
}

std::optional<std::vector<std::pair<Scalar, Scalar>>> explicit_roots_if_rational(const BinaryForm& h) {
    std::vector<std::pair<Scalar, Scalar>> roots = some_rational_roots(h);
    if (static_cast<int>(roots.size()) != h.degree()) return std::nullopt;
    return roots;
}

bool verify_binary_decomposition(const BinaryForm& f, const BinaryForm& h) {
    if (h.is_zero() || f.is_zero()) return false;
    if (!binary_squarefree(h)) return false;
    if (h.degree() > f.degree()) return false;
    return binary_contract(f, h).is_zero();
}

int binary_rank_bruteforce(const BinaryForm& f, Rng& rng) {
    if (f.is_zero()) throw std::runtime_error("binary_rank_bruteforce: zero form");
    const int d = f.degree();
    for (int r = 1; r <= d; ++r)
        if (auto w = find_squarefree(apolar_basis(f, r), rng); w.has_value()) return r;
    throw std::runtime_error("binary_rank_bruteforce: exhausted degrees");
}

}  // namespace waring4
