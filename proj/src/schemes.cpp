#include "waring4/schemes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "waring4/binary.hpp"

namespace waring4 {

namespace {

Scalar scalar_from_json(const Json& v) {
    if (v.is_number_integer()) return Scalar(static_cast<long long>(v.get<long long>()));
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    throw std::runtime_error("scheme json: expected integer or rational string");
}

QVec vec_from_json(const Json& v) {
    QVec out;
    for (const auto& x : v) out.push_back(scalar_from_json(x));
    return out;
}

Json vec_to_json(const QVec& v) {
    Json out = Json::array();
    for (const Scalar& x : v) out.push_back(scalar_str(x));
    return out;
}

}  // namespace

int component_degree(const Component& c) {
    if (std::holds_alternative<JetComponent>(c)) return std::get<JetComponent>(c).length();
    if (std::holds_alternative<SquarePencilComponent>(c)) return 4;
    return std::get<FatPointComponent>(c).degree();
}

const QVec& component_support(const Component& c) {
    if (std::holds_alternative<JetComponent>(c)) return std::get<JetComponent>(c).support;
    if (std::holds_alternative<SquarePencilComponent>(c)) return std::get<SquarePencilComponent>(c).support;
    return std::get<FatPointComponent>(c).support;
}

int Degree4Scheme::degree() const {
    int d = 0;
    for (const Component& c : components) d += component_degree(c);
    return d;
}

bool Degree4Scheme::is_reduced() const {
    for (const Component& c : components)
        if (component_degree(c) != 1) return false;
    return true;
}

bool Degree4Scheme::is_curvilinear() const {
    for (const Component& c : components)
        if (!std::holds_alternative<JetComponent>(c)) return false;
    return true;
}

void Degree4Scheme::validate() const {
    if (ambient_dim < 1) throw std::runtime_error("scheme: ambient dimension must be >= 1");
    if (degree() != 4) throw std::runtime_error("scheme: total degree must be 4");
    std::vector<QVec> supports;
    for (const Component& c : components) {
        const QVec& s = component_support(c);
        if (static_cast<int>(s.size()) != nvars())
            throw std::runtime_error("scheme: support has wrong coordinate count");
        supports.push_back(projective_normalize(s));
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            if (jet->length() > 4) throw std::runtime_error("scheme: jet length exceeds 4");
            for (const QVec& v : jet->jets)
                if (static_cast<int>(v.size()) != nvars())
                    throw std::runtime_error("scheme: jet vector has wrong coordinate count");
            if (jet->length() >= 2) {
                QMat rows{jet->support, jet->jets[0]};
                if (qmat_rank(rows) != 2)
                    throw std::runtime_error("scheme: first jet vector must be independent of the support");
            }
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            QMat rows{sp->support, sp->w1, sp->w2};
            if (qmat_rank(rows) != 3)
                throw std::runtime_error("scheme: pencil tangent plane is degenerate");
            QMat qs{QVec{sp->q1[0], sp->q1[1], sp->q1[2]}, QVec{sp->q2[0], sp->q2[1], sp->q2[2]}};
            if (qmat_rank(qs) != 2)
                throw std::runtime_error("scheme: pencil quadrics must be linearly independent");
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            if (fat.directions.size() < 2 || fat.directions.size() > 3)
                throw std::runtime_error("scheme: fat point needs 2 or 3 directions");
            QMat rows = fat.directions;
            rows.push_back(fat.support);
            if (qmat_rank(rows) != fat.directions.size() + 1)
                throw std::runtime_error("scheme: fat point directions are degenerate");
        }
    }
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (std::size_t j = i + 1; j < supports.size(); ++j)
            if (supports[i] == supports[j])
                throw std::runtime_error("scheme: component supports must be pairwise distinct");
}

Degree4Scheme Degree4Scheme::from_json(const Json& j) {
    Degree4Scheme a;
    a.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& cj : j.at("components")) {
        const std::string type = cj.at("type").get<std::string>();
        if (type == "jet") {
            JetComponent jet;
            jet.support = vec_from_json(cj.at("support"));
            if (cj.contains("jets"))
                for (const auto& v : cj.at("jets")) jet.jets.push_back(vec_from_json(v));
            a.components.emplace_back(std::move(jet));
        } else if (type == "square_pencil") {
            SquarePencilComponent sp;
            sp.support = vec_from_json(cj.at("support"));
            sp.w1 = vec_from_json(cj.at("w1"));
            sp.w2 = vec_from_json(cj.at("w2"));
            QVec q1 = vec_from_json(cj.at("q1")), q2 = vec_from_json(cj.at("q2"));
            if (q1.size() != 3 || q2.size() != 3)
                throw std::runtime_error("scheme json: pencil quadrics need 3 coefficients");
            sp.q1 = {q1[0], q1[1], q1[2]};
            sp.q2 = {q2[0], q2[1], q2[2]};
            a.components.emplace_back(std::move(sp));
        } else if (type == "fat_point") {
            FatPointComponent fat;
            fat.support = vec_from_json(cj.at("support"));
            for (const auto& v : cj.at("directions")) fat.directions.push_back(vec_from_json(v));
            a.components.emplace_back(std::move(fat));
        } else {
            throw std::runtime_error("scheme json: unknown component type '" + type + "'");
        }
    }
    a.validate();
    return a;
}

Json Degree4Scheme::to_json() const {
    Json j;
    j["ambient_dim"] = ambient_dim;
    Json comps = Json::array();
    for (const Component& c : components) {
        Json cj;
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            cj["type"] = "jet";
            cj["support"] = vec_to_json(jet->support);
            Json jets = Json::array();
            for (const QVec& v : jet->jets) jets.push_back(vec_to_json(v));
            cj["jets"] = jets;
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            cj["type"] = "square_pencil";
            cj["support"] = vec_to_json(sp->support);
            cj["w1"] = vec_to_json(sp->w1);
            cj["w2"] = vec_to_json(sp->w2);
            cj["q1"] = vec_to_json(QVec{sp->q1[0], sp->q1[1], sp->q1[2]});
            cj["q2"] = vec_to_json(QVec{sp->q2[0], sp->q2[1], sp->q2[2]});
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            cj["type"] = "fat_point";
            cj["support"] = vec_to_json(fat.support);
            Json dirs = Json::array();
            for (const QVec& v : fat.directions) dirs.push_back(vec_to_json(v));
            cj["directions"] = dirs;
        }
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

GateResult gorenstein_gate(const Degree4Scheme& a) {
    a.validate();
    for (const Component& c : a.components) {
        if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            BinaryForm b1(QVec{sp->q1[0], sp->q1[1], sp->q1[2]});
            BinaryForm b2(QVec{sp->q2[0], sp->q2[1], sp->q2[2]});
            if (binary_gcd(b1, b2).degree() >= 1)
                return {GateVerdict::RejectNotGorenstein,
                        "pencil quadrics share a linear factor: local ring has 2-dimensional socle"};
        } else if (const auto* fat = std::get_if<FatPointComponent>(&c)) {
            if (fat->degree() == 4)
                return {GateVerdict::RejectFatPoint,
                        "first infinitesimal neighborhood in P^3: span lies inside sigma_2"};
            return {GateVerdict::RejectPlanarFatPoint,
                    "planar first infinitesimal neighborhood: span lies inside sigma_3"};
        }
    }
    return {GateVerdict::Accept, ""};
}

namespace {

// Coefficients of t^0..t^(k-1) of (l_p + t l_v1 + t^2 l_v2 + t^3 l_v3)^d.
std::vector<Form> jet_power_series(const JetComponent& jet, int d, int nvars) {
    const int k = jet.length();
    std::vector<Form> stages;  // t-coefficients of the linear series
    stages.push_back(Form::linear(jet.support));
    for (const QVec& v : jet.jets) stages.push_back(Form::linear(v));
    // Truncated power: series[j] holds the coefficient of t^j.
    std::vector<Form> acc(k, Form::zero(nvars, 0));
    acc[0] = Form::monomial(Expo(nvars, 0), 1);
    for (int step = 0; step < d; ++step) {
        std::vector<Form> next(k, Form::zero(nvars, acc[0].degree() + 1));
        for (int i = 0; i < k; ++i) {
            if (acc[i].is_zero()) continue;
            for (int j = 0; i + j < k && j < static_cast<int>(stages.size()); ++j)
                next[i + j] += acc[i] * stages[j];
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::vector<QVec> component_span_generators(const Component& c, int d, int nvars) {
    std::vector<QVec> gens;
    if (const auto* jet = std::get_if<JetComponent>(&c)) {
        for (Form& f : jet_power_series(*jet, d, nvars)) gens.push_back(f.coeff_vector());
    } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
        Form p = Form::linear(sp->support);
        Form a = Form::linear(sp->w1);
        Form b = Form::linear(sp->w2);
        Form pd2 = p.pow(d - 2);
        gens.push_back((pd2 * p * p).coeff_vector());
        gens.push_back((pd2 * p * a).coeff_vector());
        gens.push_back((pd2 * p * b).coeff_vector());
        auto dual = pencil_dual_quadric(sp->q1, sp->q2);
        Form qt = (a * a).scaled(dual[0]) + (a * b).scaled(dual[1]) + (b * b).scaled(dual[2]);
        gens.push_back((pd2 * qt).coeff_vector());
    } else {
        const auto& fat = std::get<FatPointComponent>(c);
        Form p = Form::linear(fat.support);
        Form pd1 = p.pow(d - 1);
        gens.push_back((pd1 * p).coeff_vector());
        for (const QVec& w : fat.directions) gens.push_back((pd1 * Form::linear(w)).coeff_vector());
    }
    return gens;
}

std::array<Scalar, 3> pencil_dual_quadric(const std::array<Scalar, 3>& q1,
                                          const std::array<Scalar, 3>& q2) {
    // Differential pairing of (a x^2 + b xy + c y^2) against dual
    // (A, B, C): 2aA + bB + 2cC.
    QMat m{QVec{2 * q1[0], q1[1], 2 * q1[2]}, QVec{2 * q2[0], q2[1], 2 * q2[2]}};
    QMat ker = kernel_basis(m);
    if (ker.size() != 1)
        throw std::runtime_error("pencil_dual_quadric: quadrics not independent");
    return {ker[0][0], ker[0][1], ker[0][2]};
}

SpanData scheme_span(const Degree4Scheme& a, int d) {
    if (d < 3) throw std::runtime_error("scheme_span: requires d >= 3");
    a.validate();
    SpanData out;
    QMat rows;
    for (const Component& c : a.components)
        for (QVec& g : component_span_generators(c, d, a.nvars())) {
            rows.push_back(g);
            out.generators.push_back(std::move(g));
        }
    out.span = LinearSubspace::from_rows(monomial_count(a.nvars(), d), rows);

    // One-step truncations of a single component.
    for (std::size_t ci = 0; ci < a.components.size(); ++ci) {
        Degree4Scheme sub = a;  // note: degree drops to 3; validate() not used
        std::string label;
        const Component& c = a.components[ci];
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            if (jet->length() == 1) {
                sub.components.erase(sub.components.begin() + ci);
                label = "drop point component " + std::to_string(ci);
            } else {
                JetComponent t = *jet;
                t.jets.pop_back();
                sub.components[ci] = t;
                label = "truncate jet component " + std::to_string(ci);
            }
        } else if (std::holds_alternative<SquarePencilComponent>(c)) {
            const auto& sp = std::get<SquarePencilComponent>(c);
            FatPointComponent fat;
            fat.support = sp.support;
            fat.directions = {sp.w1, sp.w2};
            sub.components[ci] = fat;
            label = "pencil component " + std::to_string(ci) + " -> planar fat point";
        } else {
            // Fat points are inadmissible upstream; drop one direction to
            // keep the list total anyway.
            FatPointComponent fat = std::get<FatPointComponent>(c);
            fat.directions.pop_back();
            if (fat.directions.size() < 2) continue;
            sub.components[ci] = fat;
            label = "shrink fat point component " + std::to_string(ci);
        }
        QMat sub_rows;
        for (const Component& sc : sub.components)
            for (QVec& g : component_span_generators(sc, d, a.nvars())) sub_rows.push_back(std::move(g));
        out.truncations.emplace_back(label,
                                     LinearSubspace::from_rows(monomial_count(a.nvars(), d), sub_rows));
    }
    return out;
}

int component_line_degree(const Component& c, const QVec& p, const QVec& q, int nvars) {
    // Basis of linear forms vanishing on the line: kernel of evaluation at
    // p and q (as rows).
    QMat eval{p, q};
    QMat lines = kernel_basis(eval);  // coefficient vectors of linear forms
    if (const auto* jet = std::get_if<JetComponent>(&c)) {
        const int k = jet->length();
        int min_ord = k;
        for (const QVec& l : lines) {
            QVec stages{std::inner_product(l.begin(), l.end(), jet->support.begin(), Scalar(0))};
            for (const QVec& v : jet->jets)
                stages.push_back(std::inner_product(l.begin(), l.end(), v.begin(), Scalar(0)));
            int ord = k;
            for (int i = 0; i < static_cast<int>(stages.size()); ++i)
                if (stages[i] != 0) { ord = i; break; }
            min_ord = std::min(min_ord, ord);
        }
        return min_ord;
    }
    const QVec& sup = component_support(c);
    // Support off the line: empty intersection.
    {
        QMat m{p, q, sup};
        if (qmat_rank(m) == 3) return 0;
    }
    if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
        QMat plane{sp->support, sp->w1, sp->w2};
        LinearSubspace pl = LinearSubspace::from_rows(sp->support.size(), plane);
        if (!(pl.contains(p) && pl.contains(q))) return 1;  // line leaves the tangent plane
        // Line inside the plane through the support: express its direction
        // in (w1, w2) coordinates and evaluate the quadrics on it.
        // Direction vector: any of p, q independent from support.
        QVec u;
        for (const QVec* cand : {&p, &q}) {
            QMat m{sp->support, *cand};
            if (qmat_rank(m) == 2) { u = *cand; break; }
        }
        // Solve u = alpha*support + x*w1 + y*w2.
        QMat sys = qmat_transpose(QMat{sp->support, sp->w1, sp->w2});
        SolveResult sol = solve(sys, u);
        if (!sol.consistent) throw std::runtime_error("component_line_degree: direction solve failed");
        const Scalar x = sol.solution[1], y = sol.solution[2];
        Scalar v1 = sp->q1[0] * x * x + sp->q1[1] * x * y + sp->q1[2] * y * y;
        Scalar v2 = sp->q2[0] * x * x + sp->q2[1] * x * y + sp->q2[2] * y * y;
        return (v1 == 0 && v2 == 0) ? 3 : 2;
    }
    const auto& fat = std::get<FatPointComponent>(c);
    QMat dirspan = fat.directions;
    dirspan.push_back(fat.support);
    LinearSubspace span = LinearSubspace::from_rows(sup.size(), dirspan);
    if (span.contains(p) && span.contains(q)) return 2;
    return 1;
}

LineProfile line_profile(const Degree4Scheme& a) {
    a.validate();
    const int nv = a.nvars();
    std::vector<std::pair<QVec, QVec>> candidates;
    std::set<QMat> seen;
    auto add_line = [&](const QVec& p, const QVec& q) {
        QMat rows{p, q};
        if (qmat_rank(rows) != 2) return;
        LinearSubspace s = LinearSubspace::from_rows(nv, rows);
        if (seen.insert(s.basis()).second) candidates.emplace_back(p, q);
    };
    const auto& comps = a.components;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            add_line(component_support(comps[i]), component_support(comps[j]));
    for (const Component& c : comps) {
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            if (jet->length() >= 2) add_line(jet->support, jet->jets[0]);
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            add_line(sp->support, sp->w1);
            add_line(sp->support, sp->w2);
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            for (const QVec& w : fat.directions) add_line(fat.support, w);
        }
    }

    LineProfile prof;
    for (const auto& [p, q] : candidates) {
        int deg = 0;
        for (const Component& c : comps) deg += component_line_degree(c, p, q, nv);
        if (deg > prof.max_degree) {
            prof.max_degree = deg;
            prof.line_p = p;
            prof.line_q = q;
        }
    }
    if (prof.max_degree == 0) return prof;  // single fat point etc.

    // Residual along the maximizing line.
    LinearSubspace line =
        LinearSubspace::from_rows(nv, QMat{prof.line_p, prof.line_q});
    prof.residual_degree = 0;
    prof.residual_on_line = true;
    prof.residual_reduced = true;
    for (const Component& c : comps) {
        const int j = component_line_degree(c, prof.line_p, prof.line_q, nv);
        const int deg = component_degree(c);
        if (j >= deg) continue;  // component absorbed by the line
        const int rdeg = deg - j;
        prof.residual_degree += rdeg;
        prof.residual_support = component_support(c);
        if (!line.contains(component_support(c))) prof.residual_on_line = false;
        if (rdeg > 1) prof.residual_reduced = false;
    }
    return prof;
}

QMat conic_symmetric_matrix(const QVec& six) {
    // Order: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
    QMat m = qmat_zero(3, 3);
    m[0][0] = six[0];
    m[0][1] = m[1][0] = six[1] / 2;
    m[0][2] = m[2][0] = six[2] / 2;
    m[1][1] = six[3];
    m[1][2] = m[2][1] = six[4] / 2;
    m[2][2] = six[5];
    return m;
}

namespace {

// Univariate multiplication of t-polynomials.
QVec tpoly_mul(const QVec& a, const QVec& b) {
    QVec r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

ConicPencilInfo conic_pencil(const Degree4Scheme& a) {
    if (a.ambient_dim != 2) throw std::runtime_error("conic_pencil: scheme must be planar");
    a.validate();
    const auto& basis2 = monomial_basis(3, 2);  // 6 conic monomials
    QMat conditions;
    for (const Component& c : a.components) {
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            // gamma(t) coordinates as t-polynomials.
            std::vector<QVec> coord(3);
            for (int i = 0; i < 3; ++i) {
                coord[i] = QVec{jet->support[i]};
                for (const QVec& v : jet->jets) coord[i].push_back(v[i]);
            }
            const int k = jet->length();
            for (int j = 0; j < k; ++j) {
                QVec row(6, Scalar(0));
                for (std::size_t mi = 0; mi < basis2.size(); ++mi) {
                    // Monomial value along gamma as a t-polynomial.
                    QVec val{Scalar(1)};
                    for (int var = 0; var < 3; ++var)
                        for (int e = 0; e < basis2[mi][var]; ++e) val = tpoly_mul(val, coord[var]);
                    if (j < static_cast<int>(val.size())) row[mi] = val[j];
                }
                conditions.push_back(std::move(row));
            }
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            // Functionals 1, d/dx, d/dy and the dual quadric applied to
            // C(p + x w1 + y w2) at the origin.
            auto dual = pencil_dual_quadric(sp->q1, sp->q2);
            for (int which = 0; which < 4; ++which) {
                QVec row(6, Scalar(0));
                for (std::size_t mi = 0; mi < basis2.size(); ++mi) {
                    Form mono = Form::monomial(basis2[mi], 1);
                    if (which == 0) {
                        row[mi] = mono.evaluate(sp->support);
                    } else if (which == 1 || which == 2) {
                        const QVec& u = which == 1 ? sp->w1 : sp->w2;
                        Scalar v = 0;
                        for (int var = 0; var < 3; ++var)
                            v += mono.derivative(var).evaluate(sp->support) * u[var];
                        row[mi] = v;
                    } else {
                        // dual[0] d^2/dx^2 + dual[1] d^2/dxdy + dual[2] d^2/dy^2.
                        auto second = [&](const QVec& u, const QVec& v) {
                            Scalar s = 0;
                            for (int v1 = 0; v1 < 3; ++v1)
                                for (int v2 = 0; v2 < 3; ++v2)
                                    s += mono.derivative(v1).derivative(v2).evaluate(sp->support) * u[v1] * v[v2];
                            return s;
                        };
                        row[mi] = dual[0] * second(sp->w1, sp->w1) + dual[1] * second(sp->w1, sp->w2) +
                                  dual[2] * second(sp->w2, sp->w2);
                    }
                }
                conditions.push_back(std::move(row));
            }
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            for (int which = 0; which <= static_cast<int>(fat.directions.size()); ++which) {
                QVec row(6, Scalar(0));
                for (std::size_t mi = 0; mi < basis2.size(); ++mi) {
                    Form mono = Form::monomial(basis2[mi], 1);
                    if (which == 0) {
                        row[mi] = mono.evaluate(fat.support);
                    } else {
                        const QVec& u = fat.directions[which - 1];
                        Scalar v = 0;
                        for (int var = 0; var < 3; ++var)
                            v += mono.derivative(var).evaluate(fat.support) * u[var];
                        row[mi] = v;
                    }
                }
                conditions.push_back(std::move(row));
            }
        }
    }
    ConicPencilInfo info;
    info.conics = kernel_basis(conditions);
    info.pencil_dim = static_cast<int>(info.conics.size());
    if (info.pencil_dim != 2)
        throw std::runtime_error("conic_pencil: expected a pencil; scheme is degenerate (dim " +
                                 std::to_string(info.pencil_dim) + ")");
    QMat m1 = conic_symmetric_matrix(info.conics[0]);
    QMat m2 = conic_symmetric_matrix(info.conics[1]);
    // det(l*M1 + m*M2) as a binary cubic in (l, m).
    std::vector<std::vector<Form>> entries(3, std::vector<Form>(3, Form(2, 1)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) entries[i][j] = Form::linear(QVec{m1[i][j], m2[i][j]});
    Form acc = Form::zero(2, 3);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int signs[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
        Form term = entries[0][perms[p][0]] * entries[1][perms[p][1]] * entries[2][perms[p][2]];
        acc += term.scaled(Scalar(signs[p]));
    }
    info.det_cubic = acc;
    info.generic_member_smooth = !acc.is_zero();
    return info;
}

AmbientReduction reduce_ambient(const Degree4Scheme& a) {
    a.validate();
    QMat rows;
    for (const Component& c : a.components) {
        rows.push_back(component_support(c));
        if (const auto* jet = std::get_if<JetComponent>(&c))
            for (const QVec& v : jet->jets) rows.push_back(v);
        else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            rows.push_back(sp->w1);
            rows.push_back(sp->w2);
        } else
            for (const QVec& v : std::get<FatPointComponent>(c).directions) rows.push_back(v);
    }
    LinearSubspace span = LinearSubspace::from_rows(a.nvars(), rows);
    AmbientReduction red;
    red.embedding = span.basis();
    if (span.dim() == static_cast<std::size_t>(a.nvars())) {
        red.scheme = a;
        return red;
    }
    auto rewrite = [&](const QVec& v) {
        auto c = span.coordinates(v);
        if (!c) throw std::runtime_error("reduce_ambient: vector escapes the span");
        return *c;
    };
    Degree4Scheme b;
    b.ambient_dim = static_cast<int>(span.dim()) - 1;
    for (const Component& c : a.components) {
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            JetComponent t;
            t.support = rewrite(jet->support);
            for (const QVec& v : jet->jets) t.jets.push_back(rewrite(v));
            b.components.emplace_back(std::move(t));
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            SquarePencilComponent t = *sp;
            t.support = rewrite(sp->support);
            t.w1 = rewrite(sp->w1);
            t.w2 = rewrite(sp->w2);
            b.components.emplace_back(std::move(t));
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            FatPointComponent t;
            t.support = rewrite(fat.support);
            for (const QVec& v : fat.directions) t.directions.push_back(rewrite(v));
            b.components.emplace_back(std::move(t));
        }
    }
    b.validate();
    red.scheme = std::move(b);
    return red;
}

Degree4Scheme apply_projectivity(const Degree4Scheme& a, const QMat& m) {
    Degree4Scheme b;
    b.ambient_dim = a.ambient_dim;
    for (const Component& c : a.components) {
        if (const auto* jet = std::get_if<JetComponent>(&c)) {
            JetComponent t;
            t.support = qmat_apply(m, jet->support);
            for (const QVec& v : jet->jets) t.jets.push_back(qmat_apply(m, v));
            b.components.emplace_back(std::move(t));
        } else if (const auto* sp = std::get_if<SquarePencilComponent>(&c)) {
            SquarePencilComponent t = *sp;
            t.support = qmat_apply(m, sp->support);
            t.w1 = qmat_apply(m, sp->w1);
            t.w2 = qmat_apply(m, sp->w2);
            b.components.emplace_back(std::move(t));
        } else {
            const auto& fat = std::get<FatPointComponent>(c);
            FatPointComponent t;
            t.support = qmat_apply(m, fat.support);
            for (const QVec& v : fat.directions) t.directions.push_back(qmat_apply(m, v));
            b.components.emplace_back(std::move(t));
        }
    }
    return b;
}

}  // namespace waring4
