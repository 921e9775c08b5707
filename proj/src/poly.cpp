#include "waring4/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace waring4 {

namespace {

void enumerate_monomials(int nvars, int degree, Expo& cur, int pos, std::vector<Expo>& out) {
    if (pos == nvars - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(nvars, degree - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

}  // namespace

const std::vector<Expo>& monomial_basis(int nvars, int degree) {
    static std::map<std::pair<int, int>, std::vector<Expo>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    enumerate_monomials(nvars, degree, cur, 0, out);
    return cache.emplace(key, std::move(out)).first->second;
}

std::size_t monomial_index(const Expo& e) {
    int deg = 0;
    for (int x : e) deg += x;
    const auto& basis = monomial_basis(static_cast<int>(e.size()), deg);
    auto it = std::lower_bound(basis.begin(), basis.end(), e,
                               [](const Expo& a, const Expo& b) { return a > b; });
    if (it == basis.end() || *it != e) throw std::runtime_error("monomial_index: not found");
    return static_cast<std::size_t>(it - basis.begin());
}

std::size_t monomial_count(int nvars, int degree) {
    return monomial_basis(nvars, degree).size();
}

Scalar binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Scalar r = 1;
    for (long i = 0; i < k; ++i) r = r * Scalar(n - i) / Scalar(i + 1);
    return r;
}

Scalar multinomial(const Expo& e) {
    long total = 0;
    Scalar r = 1;
    for (int x : e) {
        total += x;
        r *= binomial(total, x);
    }
    return r;
}

Form Form::monomial(const Expo& e, const Scalar& c) {
    int deg = 0;
    for (int x : e) deg += x;
    Form f(static_cast<int>(e.size()), deg);
    if (c != 0) f.coef_[e] = c;
    return f;
}

Form Form::linear(const QVec& coeffs) {
    Form f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Expo e(coeffs.size(), 0);
        e[i] = 1;
        f.coef_[e] = coeffs[i];
    }
    return f;
}

Scalar Form::coeff(const Expo& e) const {
    auto it = coef_.find(e);
    return it == coef_.end() ? Scalar(0) : it->second;
}

void Form::set_coeff(const Expo& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::runtime_error("set_coeff: wrong arity");
    int deg = 0;
    for (int x : e) {
        if (x < 0) throw std::runtime_error("set_coeff: negative exponent");
        deg += x;
    }
    if (deg != degree_) throw std::runtime_error("set_coeff: wrong degree");
    if (c == 0)
        coef_.erase(e);
    else
        coef_[e] = c;
}

Form& Form::operator+=(const Form& o) {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw std::runtime_error("form addition: degree/arity mismatch");
    for (const auto& [e, c] : o.coef_) {
        Scalar s = coeff(e) + c;
        if (s == 0)
            coef_.erase(e);
        else
            coef_[e] = s;
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += o.scaled(Scalar(-1)); }

Form Form::operator+(const Form& o) const {
    Form r = *this;
    r += o;
    return r;
}

Form Form::operator-(const Form& o) const {
    Form r = *this;
    r -= o;
    return r;
}

Form Form::operator*(const Form& o) const {
    if (nvars_ != o.nvars_) throw std::runtime_error("form multiplication: arity mismatch");
    Form r(nvars_, degree_ + o.degree_);
    for (const auto& [e1, c1] : coef_)
        for (const auto& [e2, c2] : o.coef_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            Scalar s = r.coeff(e) + c1 * c2;
            if (s == 0)
                r.coef_.erase(e);
            else
                r.coef_[e] = s;
        }
    return r;
}

Form Form::scaled(const Scalar& c) const {
    Form r(nvars_, degree_);
    if (c == 0) return r;
    for (const auto& [e, v] : coef_) r.coef_[e] = c * v;
    return r;
}

Form Form::pow(int k) const {
    if (k < 0) throw std::runtime_error("pow: negative exponent");
    Form r = Form::monomial(Expo(nvars_, 0), 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

QVec Form::coeff_vector() const {
    const auto& basis = monomial_basis(nvars_, degree_);
    QVec v(basis.size(), Scalar(0));
    for (const auto& [e, c] : coef_) v[monomial_index(e)] = c;
    return v;
}

Form Form::from_coeff_vector(int nvars, int degree, const QVec& v) {
    const auto& basis = monomial_basis(nvars, degree);
    if (v.size() != basis.size()) throw std::runtime_error("from_coeff_vector: wrong length");
    Form f(nvars, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) f.coef_[basis[i]] = v[i];
    return f;
}

Scalar Form::evaluate(const QVec& p) const {
    if (static_cast<int>(p.size()) != nvars_) throw std::runtime_error("evaluate: wrong arity");
    Scalar total = 0;
    for (const auto& [e, c] : coef_) {
        Scalar t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= p[i];
        total += t;
    }
    return total;
}

Form Form::derivative(int var) const {
    if (degree_ == 0) return Form(nvars_, 0);
    Form r(nvars_, degree_ - 1);
    for (const auto& [e, c] : coef_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.coef_[d] = c * Scalar(e[var]);
    }
    return r;
}

Form Form::substitute(const std::vector<Form>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::runtime_error("substitute: wrong number of images");
    int img_deg = images.empty() ? 1 : images[0].degree();
    int img_vars = images.empty() ? 0 : images[0].nvars();
    for (const Form& g : images)
        if (g.degree() != img_deg || g.nvars() != img_vars)
            throw std::runtime_error("substitute: inhomogeneous images");
    Form total(img_vars, degree_ * img_deg);
    for (const auto& [e, c] : coef_) {
        Form t = Form::monomial(Expo(img_vars, 0), c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * images[i];
        total += t;
    }
    return total;
}

std::string Form::str() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print in descending graded-lex order.
    std::vector<std::pair<Expo, Scalar>> items(coef_.begin(), coef_.end());
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [e, c] : items) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Scalar a = abs(c);
        bool printed = false;
        if (a != 1) {
            os << a.str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

Form contract(const Form& f, const Form& g) {
    if (f.nvars() != g.nvars()) throw std::runtime_error("contract: arity mismatch");
    if (g.degree() > f.degree()) throw std::runtime_error("contract: operator degree exceeds form degree");
    Form total(f.nvars(), f.degree() - g.degree());
    for (const auto& [ge, gc] : g.terms()) {
        Form t = f;
        for (int i = 0; i < f.nvars(); ++i)
            for (int k = 0; k < ge[i]; ++k) t = t.derivative(i);
        total += t.scaled(gc);
    }
    return total;
}

QMat catalecticant(const Form& f, int a) {
    const int d = f.degree();
    if (a < 1 || a > d - 1) throw std::runtime_error("catalecticant: need 1 <= a <= d-1");
    const auto& dual = monomial_basis(f.nvars(), a);
    const auto& rows = monomial_basis(f.nvars(), d - a);
    QMat m = qmat_zero(rows.size(), dual.size());
    for (std::size_t j = 0; j < dual.size(); ++j) {
        Form g = Form::monomial(dual[j], 1);
        QVec col = contract(f, g).coeff_vector();
        for (std::size_t i = 0; i < rows.size(); ++i) m[i][j] = col[i];
    }
    return m;
}

QVec veronese(const QVec& p, int d) {
    if (d < 1) throw std::runtime_error("veronese: degree must be >= 1");
    return Form::linear(p).pow(d).coeff_vector();
}

std::size_t catalecticant_rank_bound(const Form& f, int amax) {
    std::size_t best = 0;
    for (int a = 1; a <= std::min(amax, f.degree() - 1); ++a)
        best = std::max(best, qmat_rank(catalecticant(f, a)));
    return best;
}

int h1_defect(const LinearSubspace& span, int deg_e) {
    int dim_proj = static_cast<int>(span.dim()) - 1;
    return deg_e - 1 - dim_proj;
}

namespace {

struct Tok {
    std::string s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

}  // namespace

Form parse_form(const std::string& text, int nvars_hint) {
    Tok t{text};
    struct Term {
        Scalar c;
        std::map<int, int> pows;
        int degree = 0;
    };
    std::vector<Term> terms;
    int max_var = -1;

    bool expecting_term = true;
    Scalar pending_sign = 1;
    while (true) {
        char c = t.peek();
        if (c == '\0') break;
        if (c == '+') {
            t.eat('+');
            expecting_term = true;
            continue;
        }
        if (c == '-') {
            t.eat('-');
            pending_sign = -pending_sign;
            expecting_term = true;
            continue;
        }
        if (!expecting_term) throw std::runtime_error("parse_form: expected '+' or '-' near position " + std::to_string(t.pos));
        Term term;
        term.c = pending_sign;
        pending_sign = 1;
        bool saw_factor = false;
        while (true) {
            char p = t.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                std::size_t start = t.pos;
                while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
                std::string num = t.s.substr(start, t.pos - start);
                if (t.eat('/')) {
                    t.skip_ws();
                    std::size_t ds = t.pos;
                    while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
                    if (ds == t.pos) throw std::runtime_error("parse_form: missing denominator");
                    num += "/" + t.s.substr(ds, t.pos - ds);
                }
                term.c *= parse_scalar(num);
                saw_factor = true;
            } else if (p == 'x') {
                ++t.pos;
                t.skip_ws();
                std::size_t start = t.pos;
                while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
                if (start == t.pos) throw std::runtime_error("parse_form: variable index missing after 'x'");
                int idx = std::stoi(t.s.substr(start, t.pos - start));
                int e = 1;
                if (t.eat('^')) {
                    t.skip_ws();
                    std::size_t es = t.pos;
                    while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
                    if (es == t.pos) throw std::runtime_error("parse_form: exponent missing after '^'");
                    e = std::stoi(t.s.substr(es, t.pos - es));
                }
                term.pows[idx] += e;
                term.degree += e;
                max_var = std::max(max_var, idx);
                saw_factor = true;
            } else {
                break;
            }
            if (!t.eat('*')) break;
        }
        if (!saw_factor) throw std::runtime_error("parse_form: empty term near position " + std::to_string(t.pos));
        terms.push_back(std::move(term));
        expecting_term = false;
    }
    if (terms.empty()) throw std::runtime_error("parse_form: no terms");
    int degree = terms[0].degree;
    for (const Term& term : terms)
        if (term.degree != degree) throw std::runtime_error("parse_form: inhomogeneous input");
    int nvars = std::max(max_var + 1, nvars_hint);
    if (nvars <= 0) throw std::runtime_error("parse_form: no variables");
    Form f(nvars, degree);
    for (const Term& term : terms) {
        Expo e(nvars, 0);
        for (const auto& [i, p] : term.pows) e[i] = p;
        f.set_coeff(e, f.coeff(e) + term.c);
    }
    return f;
}

QMat induced_degree_action(const QMat& m, int d) {
    const int n = static_cast<int>(m.size());
    std::vector<Form> images;
    for (int i = 0; i < n; ++i) {
        QVec col(n);
        for (int j = 0; j < n; ++j) col[j] = m[j][i];
        images.push_back(Form::linear(col));
    }
    const auto& basis = monomial_basis(n, d);
    QMat a = qmat_zero(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        QVec img = Form::monomial(basis[j], 1).substitute(images).coeff_vector();
        for (std::size_t i = 0; i < basis.size(); ++i) a[i][j] = img[i];
    }
    return a;
}

}  // namespace waring4
