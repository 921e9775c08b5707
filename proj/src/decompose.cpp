#include "waring4/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring4 {

namespace {

QVec power_vec(const QVec& p, int d) { return veronese(p, d); }

QVec tangent_vec(const QVec& p, const QVec& v, int d) {
    return (Form::linear(p).pow(d - 1) * Form::linear(v)).coeff_vector();
}

SolveResult solve_columns(const std::vector<QVec>& cols, const QVec& target) {
    if (cols.empty()) throw std::runtime_error("solve_columns: no columns");
    QMat a = qmat_zero(target.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != target.size()) throw std::runtime_error("solve_columns: size mismatch");
        for (std::size_t i = 0; i < target.size(); ++i) a[i][j] = cols[j][i];
    }
    return solve(a, target);
}

// Block built from a point of the span of a rational curve's Veronese
// image via the binary rank algorithm; returns the certificate rank.
std::pair<ImplicitBlock, BinaryRankCertificate> sylvester_block(const CurveMap& cm, const QVec& ambient,
                                                                Rng& rng, const std::string& desc) {
    auto fb = cm.from_ambient(ambient);
    if (!fb) throw std::runtime_error("sylvester_block: point is outside the curve span (" + desc + ")");
    if (fb->is_zero()) throw std::runtime_error("sylvester_block: zero component (" + desc + ")");
    BinaryRankCertificate cert = binary_rank(*fb, rng);
    ImplicitBlock b;
    b.carrier_param = cm.param();
    b.carrier_desc = desc;
    b.witness = cert.witness;
    if (auto roots = explicit_roots_if_rational(cert.witness)) {
        for (const auto& [s, t] : *roots)
            b.rational_points.push_back(projective_normalize(cm.point(s, t)));
    }
    return {std::move(b), std::move(cert)};
}

const JetComponent& only_jet(const Degree4Scheme& a) {
    if (a.components.size() != 1 || !std::holds_alternative<JetComponent>(a.components[0]))
        throw std::runtime_error("recipe: expected a single jet component");
    return std::get<JetComponent>(a.components[0]);
}

// Point of the line through p independent from p, extracted from a span pair.
QVec second_point(const QVec& p, const QVec& c1, const QVec& c2) {
    for (const QVec* cand : {&c1, &c2}) {
        QMat m{p, *cand};
        if (qmat_rank(m) == 2) return *cand;
    }
    throw std::runtime_error("second_point: degenerate line");
}

// Random direction making {fixed..., u} a full-rank family.
QVec random_independent_dir(const std::vector<QVec>& fixed, int nvars, Rng& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        QVec u(nvars);
        for (Scalar& x : u) x = rng.grid(5);
        if (is_zero_vec(u)) continue;
        QMat m = QMat(fixed.begin(), fixed.end());
        m.push_back(u);
        if (qmat_rank(m) == fixed.size() + 1) return u;
    }
    throw std::runtime_error("random_independent_dir: exhausted retries");
}

// Choose delta so that base + delta*shift pulls back to a binary form of
// the expected rank on the curve.  Uses generic draws, plus an exact
// determinant solve for the square middle catalecticant when available.
struct TunedBlock {
    QVec vec;
    ImplicitBlock block;
};

std::optional<TunedBlock> tune_rank_block(const CurveMap& cm, const QVec& base, const QVec& shift,
                                          int expected_rank, Rng& rng, const std::string& desc) {
    auto attempt = [&](const Scalar& delta) -> std::optional<TunedBlock> {
        QVec cand = vec_add(base, vec_scale(delta, shift));
        auto fb = cm.from_ambient(cand);
        if (!fb || fb->is_zero()) return std::nullopt;
        BinaryRankCertificate cert = binary_rank(*fb, rng);
        if (cert.rank != expected_rank) return std::nullopt;
        auto [block, c2] = sylvester_block(cm, cand, rng, desc);
        return TunedBlock{cand, std::move(block)};
    };
    for (long long v : {0, 1, -1, 2, -2, 3, -3, 5, -5})
        if (auto t = attempt(Scalar(v))) return t;
    const int big_d = cm.binary_degree();
    if (big_d % 2 == 0) {
        // Rank deficiency of the square middle catalecticant is a
        // polynomial condition in delta; find its rational roots exactly.
        const int r = big_d / 2;
        const int n = r + 1;  // matrix size and degree bound of det(delta)
        auto det_at = [&](const Scalar& delta) -> std::optional<Scalar> {
            QVec cand = vec_add(base, vec_scale(delta, shift));
            auto fb = cm.from_ambient(cand);
            if (!fb) return std::nullopt;
            return qmat_det(binary_catalecticant(*fb, r));
        };
        // Interpolate det(delta), degree <= n.
        std::vector<Scalar> xs, ys;
        for (int i = 0; i <= n; ++i) {
            Scalar x = Scalar(i);
            auto v = det_at(x);
            if (!v) return std::nullopt;
            xs.push_back(x);
            ys.push_back(*v);
        }
        // Lagrange interpolation to power-basis coefficients.
        QVec poly(n + 1, Scalar(0));
        for (int i = 0; i <= n; ++i) {
            QVec term{Scalar(1)};
            Scalar denom = 1;
            for (int j = 0; j <= n; ++j) {
                if (j == i) continue;
                QVec next(term.size() + 1, Scalar(0));
                for (std::size_t k = 0; k < term.size(); ++k) {
                    next[k] -= xs[j] * term[k];
                    next[k + 1] += term[k];
                }
                term = std::move(next);
                denom *= xs[i] - xs[j];
            }
            for (std::size_t k = 0; k < term.size(); ++k) poly[k] += ys[i] * term[k] / denom;
        }
        while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
        if (!(poly.size() == 1 && poly[0] == 0)) {
            const int deg = static_cast<int>(poly.size()) - 1;
            QVec homog(deg + 1, Scalar(0));
            for (int i = 0; i <= deg; ++i) homog[deg - i] = poly[i];
            for (const auto& [num, den] : some_rational_roots(BinaryForm(homog))) {
                if (den == 0) continue;
                if (auto t = attempt(num / den)) return t;
            }
        }
    }
    for (int tries = 0; tries < 40; ++tries)
        if (auto t = attempt(Scalar(rng.uniform(-40, 40)))) return t;
    return std::nullopt;
}

}  // namespace

SampledPoint sample_point(const Degree4Scheme& a, const SpanData& sd, int d, Rng& rng,
                          long long grid, int retries) {
    if (sd.generators.empty()) throw std::runtime_error("sample_point: empty span data");
    const std::size_t n = sd.generators[0].size();
    for (int attempt = 0; attempt < retries; ++attempt) {
        const long long g = grid + 2 * (attempt / 10);  // widen the grid on persistent failure
        QVec coeffs(sd.generators.size());
        for (Scalar& c : coeffs) c = rng.grid_nonzero(g);
        QVec fvec(n, Scalar(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            fvec = vec_add(fvec, vec_scale(coeffs[i], sd.generators[i]));
        SampledPoint sp;
        sp.form = Form::from_coeff_vector(a.nvars(), d, fvec);
        sp.span_coefficients = coeffs;
        bool ok = true;
        int checks = 0;
        for (const auto& [label, sub] : sd.truncations) {
            if (sub.contains(fvec)) {
                ok = false;
                break;
            }
            ++checks;
        }
        if (!ok) continue;
        sp.subscheme_checks = checks;
        sp.certificate_rank = static_cast<int>(catalecticant_rank_bound(sp.form, 3));
        if (d >= 4 && sp.certificate_rank != 4) continue;
        return sp;
    }
    throw std::runtime_error("sample_point: no admissible point found (degenerate scheme?)");
}

int Decomposition::total_size() const {
    int n = static_cast<int>(points.size());
    for (const ImplicitBlock& b : blocks) n += b.size();
    return n;
}

Json Decomposition::to_json() const {
    Json j;
    j["total_size"] = total_size();
    Json pts = Json::array();
    for (const auto& [p, c] : points) {
        Json pj;
        Json coords = Json::array();
        for (const Scalar& x : p) coords.push_back(scalar_str(x));
        pj["point"] = coords;
        pj["coefficient"] = scalar_str(c);
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    Json blks = Json::array();
    for (const ImplicitBlock& b : blocks) {
        Json bj;
        bj["size"] = b.size();
        Json w = Json::array();
        for (const Scalar& c : b.witness.coeffs()) w.push_back(scalar_str(c));
        bj["witness"] = std::move(w);
        Json carrier;
        carrier["description"] = b.carrier_desc;
        carrier["degree"] = b.carrier_param.empty() ? 0 : b.carrier_param[0].degree();
        Json param = Json::array();
        for (const Form& f : b.carrier_param) {
            Json coeffs = Json::array();
            const int e = f.degree();
            for (int k = 0; k <= e; ++k) {
                Expo mono{e - k, k};
                coeffs.push_back(scalar_str(f.coeff(mono)));
            }
            param.push_back(std::move(coeffs));
        }
        carrier["param"] = std::move(param);
        bj["carrier"] = std::move(carrier);
        if (!b.rational_points.empty()) {
            Json rp = Json::array();
            for (const QVec& p : b.rational_points) {
                Json coords = Json::array();
                for (const Scalar& x : p) coords.push_back(scalar_str(x));
                rp.push_back(std::move(coords));
            }
            bj["rational_points"] = std::move(rp);
        }
        blks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blks);
    j["nvars"] = nvars;
    j["degree"] = d;
    return j;
}

Decomposition Decomposition::from_json(const Json& j) {
    Decomposition dec;
    dec.nvars = j.at("nvars").get<int>();
    dec.d = j.at("degree").get<int>();
    for (const auto& pj : j.at("points")) {
        QVec p;
        for (const auto& x : pj.at("point"))
            p.push_back(x.is_string() ? parse_scalar(x.get<std::string>())
                                      : Scalar(x.get<long long>()));
        Scalar c = pj.at("coefficient").is_string() ? parse_scalar(pj.at("coefficient").get<std::string>())
                                                    : Scalar(pj.at("coefficient").get<long long>());
        dec.points.emplace_back(std::move(p), std::move(c));
    }
    for (const auto& bj : j.at("blocks")) {
        ImplicitBlock b;
        QVec w;
        for (const auto& x : bj.at("witness"))
            w.push_back(x.is_string() ? parse_scalar(x.get<std::string>()) : Scalar(x.get<long long>()));
        b.witness = BinaryForm(std::move(w));
        b.carrier_desc = bj.at("carrier").at("description").get<std::string>();
        for (const auto& coeffs : bj.at("carrier").at("param")) {
            const int e = static_cast<int>(coeffs.size()) - 1;
            Form f(2, e);
            for (int k = 0; k <= e; ++k) {
                Scalar c = coeffs[k].is_string() ? parse_scalar(coeffs[k].get<std::string>())
                                                 : Scalar(coeffs[k].get<long long>());
                if (c != 0) f.set_coeff(Expo{e - k, k}, c);
            }
            b.carrier_param.push_back(std::move(f));
        }
        dec.blocks.push_back(std::move(b));
    }
    return dec;
}

VerifyResult verify_decomposition(const Form& f, const Decomposition& dec) {
    VerifyResult out;
    out.size = dec.total_size();
    const QVec fvec = f.coeff_vector();
    std::vector<QVec> cols;
    std::vector<std::pair<std::size_t, std::size_t>> block_ranges;
    for (const auto& [p, c] : dec.points) cols.push_back(veronese(p, f.degree()));
    std::vector<CurveMap> maps;
    for (const ImplicitBlock& b : dec.blocks) {
        CurveMap cm(b.carrier_param, f.degree(), b.carrier_desc);
        if (!binary_squarefree(b.witness)) {
            out.detail = "block witness is not squarefree";
            return out;
        }
        LinearSubspace sub = cm.divisor_span(b.witness);
        std::size_t begin = cols.size();
        for (const QVec& row : sub.basis()) cols.push_back(row);
        block_ranges.emplace_back(begin, cols.size());
        maps.push_back(std::move(cm));
    }
    SolveResult sol = solve_columns(cols, fvec);
    if (!sol.consistent) {
        out.detail = "form is not in the span of the decomposition";
        return out;
    }
    out.member = true;

    // Irredundancy: dropping any explicit point must break membership, and
    // every block's solved component must have binary rank equal to the
    // block size (no sub-divisor of the block suffices).
    out.irredundant = true;
    for (std::size_t drop = 0; drop < dec.points.size(); ++drop) {
        std::vector<QVec> sub;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != drop) sub.push_back(cols[j]);
        if (sub.empty()) {
            out.irredundant = is_zero_vec(fvec) ? false : true;
            continue;
        }
        if (solve_columns(sub, fvec).consistent) {
            out.irredundant = false;
            out.detail = "explicit part " + std::to_string(drop) + " is redundant";
        }
    }
    Rng rng = Rng::seeded(12345);  // block rank checks only search witnesses
    for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
        auto [lo, hi] = block_ranges[bi];
        QVec contrib(fvec.size(), Scalar(0));
        for (std::size_t j = lo; j < hi; ++j)
            contrib = vec_add(contrib, vec_scale(sol.solution[j], cols[j]));
        if (is_zero_vec(contrib)) {
            out.irredundant = false;
            out.detail = "block " + std::to_string(bi) + " contributes nothing";
            continue;
        }
        auto g = maps[bi].from_ambient(contrib);
        if (!g) {
            out.member = false;
            out.detail = "block contribution escaped its carrier";
            return out;
        }
        BinaryRankCertificate cert = binary_rank(*g, rng);
        if (cert.rank != dec.blocks[bi].size()) {
            out.irredundant = false;
            out.detail = "block " + std::to_string(bi) + " component has rank " +
                         std::to_string(cert.rank) + " < block size " +
                         std::to_string(dec.blocks[bi].size());
        }
    }
    return out;
}

namespace {

using RecipeFn = Decomposition (*)(const Form&, const Degree4Scheme&, int, Rng&);

Decomposition finish(const Form& f, Decomposition dec) {
    // Recompute explicit coefficients from the verification solve so the
    // serialized output is self-consistent.
    VerifyResult vr = verify_decomposition(f, dec);
    if (!vr.member || !vr.irredundant)
        throw std::runtime_error("recipe produced an invalid witness: " + vr.detail);
    std::vector<QVec> cols;
    for (const auto& [p, c] : dec.points) cols.push_back(veronese(p, f.degree()));
    if (!cols.empty()) {
        std::vector<LinearSubspace> subs;
        for (const ImplicitBlock& b : dec.blocks) {
            CurveMap cm(b.carrier_param, f.degree(), b.carrier_desc);
            subs.push_back(cm.divisor_span(b.witness));
        }
        std::vector<QVec> all = cols;
        for (const LinearSubspace& s : subs)
            for (const QVec& r : s.basis()) all.push_back(r);
        SolveResult sol = solve_columns(all, f.coeff_vector());
        for (std::size_t i = 0; i < dec.points.size(); ++i) dec.points[i].second = sol.solution[i];
    }
    return dec;
}

Decomposition recipe_points(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    (void)rng;
    Decomposition dec;
    dec.nvars = a.nvars();
    dec.d = d;
    for (const Component& c : a.components)
        dec.points.emplace_back(projective_normalize(component_support(c)), Scalar(1));
    return finish(f, std::move(dec));
}

Decomposition recipe_r1(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    if (a.ambient_dim != 1) throw std::runtime_error("R1: scheme must live on a line");
    CurveMap cm = CurveMap::line(QVec{Scalar(1), Scalar(0)}, QVec{Scalar(0), Scalar(1)}, d);
    auto [block, cert] = sylvester_block(cm, f.coeff_vector(), rng, "coordinate line");
    if (cert.rank != d - 2)
        throw std::runtime_error("R1: binary rank " + std::to_string(cert.rank) + ", expected d-2");
    Decomposition dec;
    dec.nvars = 2;
    dec.d = d;
    dec.blocks.push_back(std::move(block));
    return finish(f, std::move(dec));
}

Decomposition recipe_r2(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    LineProfile lp = line_profile(a);
    if (lp.max_degree != 3 || lp.residual_on_line) throw std::runtime_error("R2: wrong configuration");
    LinearSubspace line = LinearSubspace::from_rows(a.nvars(), QMat{lp.line_p, lp.line_q});
    // Split off the isolated point.
    const Component* point_comp = nullptr;
    std::vector<QVec> on_line_gens;
    for (const Component& c : a.components) {
        if (!line.contains(component_support(c)))
            point_comp = &c;
        else
            for (QVec& g : component_span_generators(c, d, a.nvars())) on_line_gens.push_back(std::move(g));
    }
    if (!point_comp || component_degree(*point_comp) != 1)
        throw std::runtime_error("R2: residual point not found");
    const QVec o = projective_normalize(component_support(*point_comp));
    std::vector<QVec> cols{power_vec(o, d)};
    cols.insert(cols.end(), on_line_gens.begin(), on_line_gens.end());
    SolveResult sol = solve_columns(cols, f.coeff_vector());
    if (!sol.consistent) throw std::runtime_error("R2: split failed");
    QVec pprime = vec_sub(f.coeff_vector(), vec_scale(sol.solution[0], cols[0]));
    CurveMap cm = CurveMap::line(lp.line_p, lp.line_q, d);
    auto [block, cert] = sylvester_block(cm, pprime, rng, "line through the degree-3 part");
    if (cert.rank != d - 1)
        throw std::runtime_error("R2: line component has rank " + std::to_string(cert.rank) +
                                 ", expected d-1");
    Decomposition dec;
    dec.nvars = a.nvars();
    dec.d = d;
    dec.points.emplace_back(o, sol.solution[0]);
    dec.blocks.push_back(std::move(block));
    return finish(f, std::move(dec));
}

// Shared core of the two 2d-2 line recipes: split F into a tangent-line
// part along a fresh line L through O and a part in the span of a degree-4
// divisor on the distinguished line R, then tune the free multiple of
// O^d so the R-part has binary rank d-2.
Decomposition tangent_pair_recipe(const Form& f, const Degree4Scheme& a, int d, Rng& rng,
                                  const QVec& o, const QVec& r_second, const BinaryForm& divisor_form,
                                  const std::vector<QVec>& avoid_dirs, const char* tag) {
    const int nv = a.nvars();
    CurveMap r_map = CurveMap::line(o, r_second, d);
    LinearSubspace v_r = r_map.divisor_span(divisor_form);
    for (int attempt = 0; attempt < 25; ++attempt) {
        std::vector<QVec> fixed{o, r_second};
        QVec u;
        try {
            u = random_independent_dir(fixed, nv, rng);
        } catch (const std::exception&) {
            break;
        }
        bool bad = false;
        for (const QVec& dir : avoid_dirs) {
            QMat m{o, dir, u};
            if (qmat_rank(m) != 3) bad = true;  // u falls on an excluded line
        }
        if (bad) continue;
        const QVec t1 = tangent_vec(o, u, d);
        std::vector<QVec> cols{t1};
        for (const QVec& row : v_r.basis()) cols.push_back(row);
        SolveResult sol = solve_columns(cols, f.coeff_vector());
        if (!sol.consistent) continue;
        const Scalar gamma = sol.solution[0];
        if (gamma == 0) continue;
        QVec q2_base = vec_sub(f.coeff_vector(), vec_scale(gamma, t1));
        auto tuned = tune_rank_block(r_map, q2_base, vec_scale(Scalar(-1), power_vec(o, d)), d - 2, rng,
                                     std::string(tag) + ": distinguished line");
        if (!tuned) continue;
        // delta * O^d moved into the tangent part: recover it from the
        // difference, then take the tangent block.
        QVec tpart = vec_sub(f.coeff_vector(), tuned->vec);
        CurveMap l_map = CurveMap::line(o, u, d);
        auto [tblock, tcert] = sylvester_block(l_map, tpart, rng, std::string(tag) + ": fresh line");
        if (tcert.rank != d) continue;
        Decomposition dec;
        dec.nvars = nv;
        dec.d = d;
        dec.blocks.push_back(std::move(tblock));
        dec.blocks.push_back(std::move(tuned->block));
        return finish(f, std::move(dec));
    }
    throw std::runtime_error(std::string(tag) + ": retries exhausted");
}

Decomposition recipe_r3(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    const JetComponent& jet = only_jet(a);
    LineProfile lp = line_profile(a);
    if (lp.max_degree != 3) throw std::runtime_error("R3: expected a degree-3 line");
    const QVec o = projective_normalize(jet.support);
    const QVec r2 = second_point(o, lp.line_p, lp.line_q);
    // Degree-4 divisor 4*O on R; O sits at parameter (1:0).
    BinaryForm h4(QVec{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    return tangent_pair_recipe(f, a, d, rng, o, r2, h4, {}, "R3");
}

Decomposition recipe_r4(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    LineProfile lp = line_profile(a);
    if (lp.max_degree != 3) throw std::runtime_error("R4: expected a degree-3 line");
    // Identify the jet contained in the line (degree 2 on it) and the jet
    // whose support lies on the line with tangent elsewhere.
    const JetComponent* on_line = nullptr;
    const JetComponent* at_o = nullptr;
    for (const Component& c : a.components) {
        const auto* jet = std::get_if<JetComponent>(&c);
        if (!jet || jet->length() != 2) throw std::runtime_error("R4: expected two 2-jets");
        int deg = component_line_degree(c, lp.line_p, lp.line_q, a.nvars());
        if (deg == 2)
            on_line = jet;
        else if (deg == 1)
            at_o = jet;
    }
    if (!on_line || !at_o) throw std::runtime_error("R4: incidence structure not recognized");
    const QVec o = projective_normalize(at_o->support);
    const QVec p1 = projective_normalize(on_line->support);
    // Divisor 2*O + 2*P1 on the line (O, P1): parameters (1:0) and (0:1),
    // annihilating form x^2 y^2.
    BinaryForm h22(QVec{Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    return tangent_pair_recipe(f, a, d, rng, o, p1, h22, {at_o->jets[0]}, "R4");
}

Decomposition recipe_r5(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    const JetComponent* jet = nullptr;
    std::vector<const Component*> pts;
    for (const Component& c : a.components) {
        const auto* j = std::get_if<JetComponent>(&c);
        if (j && j->length() == 2)
            jet = j;
        else if (j && j->length() == 1)
            pts.push_back(&c);
    }
    if (!jet || pts.size() != 2) throw std::runtime_error("R5: expected a 2-jet and two points");
    const QVec o = projective_normalize(jet->support);
    const QVec o1 = projective_normalize(component_support(*pts[0]));
    const QVec o2 = projective_normalize(component_support(*pts[1]));
    std::vector<QVec> cols{power_vec(o, d), tangent_vec(o, jet->jets[0], d), power_vec(o1, d),
                           power_vec(o2, d)};
    SolveResult sol = solve_columns(cols, f.coeff_vector());
    if (!sol.consistent) throw std::runtime_error("R5: split failed");
    if (sol.solution[1] == 0) throw std::runtime_error("R5: tangent coefficient vanishes");
    QVec tpart = vec_add(vec_scale(sol.solution[0], cols[0]), vec_scale(sol.solution[1], cols[1]));
    CurveMap cm = CurveMap::line(o, jet->jets[0], d);
    auto [block, cert] = sylvester_block(cm, tpart, rng, "tangent line of the 2-jet");
    if (cert.rank != d)
        throw std::runtime_error("R5: tangent part has rank " + std::to_string(cert.rank));
    Decomposition dec;
    dec.nvars = a.nvars();
    dec.d = d;
    dec.points.emplace_back(o1, sol.solution[2]);
    dec.points.emplace_back(o2, sol.solution[3]);
    dec.blocks.push_back(std::move(block));
    return finish(f, std::move(dec));
}

Decomposition recipe_r6(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    ConicPencilInfo cp = conic_pencil(a);
    if (!cp.generic_member_smooth) throw std::runtime_error("R6: pencil has no smooth member");
    const QVec p0 = projective_normalize(component_support(a.components[0]));
    const long long sweep[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}, {1, -2}};
    for (int attempt = 0; attempt < 60; ++attempt) {
        Scalar lambda, mu;
        if (attempt < 8) {
            lambda = Scalar(sweep[attempt][0]);
            mu = Scalar(sweep[attempt][1]);
        } else {
            lambda = Scalar(rng.uniform(-8, 8));
            mu = Scalar(rng.uniform(-8, 8));
        }
        QVec six = vec_add(vec_scale(lambda, cp.conics[0]), vec_scale(mu, cp.conics[1]));
        if (is_zero_vec(six)) continue;
        QMat m = conic_symmetric_matrix(six);
        if (qmat_det(m) == 0) continue;  // member is singular
        std::vector<Form> param;
        try {
            param = conic_parametrization(m, p0);
        } catch (const std::exception&) {
            continue;
        }
        try {
            CurveMap cm(param, d, "smooth conic through the scheme");
            auto [block, cert] = sylvester_block(cm, f.coeff_vector(), rng, cm.description());
            if (cert.rank != 2 * d - 2) continue;
            Decomposition dec;
            dec.nvars = a.nvars();
            dec.d = d;
            dec.blocks.push_back(std::move(block));
            return finish(f, std::move(dec));
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("R6: no usable smooth conic found");
}

Decomposition recipe_r7(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    if (a.components.size() != 1 || !std::holds_alternative<SquarePencilComponent>(a.components[0]))
        throw std::runtime_error("R7: expected a single complete-intersection component");
    ConicPencilInfo cp = conic_pencil(a);
    if (!cp.det_cubic.is_zero()) throw std::runtime_error("R7: pencil has smooth members");
    const auto& sp = std::get<SquarePencilComponent>(a.components[0]);
    const QVec o = projective_normalize(sp.support);
    auto is_square = [](const Scalar& s, Scalar& root) {
        if (s < 0) return false;
        BigInt n = numerator(s), dn = denominator(s);
        BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(dn);
        if (rn * rn != n || rd * rd != dn) return false;
        root = Scalar(rn) / Scalar(rd);
        return true;
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        Scalar lambda, mu;
        if (attempt < 19) {
            lambda = Scalar(attempt % 2 == 0 ? 1 : attempt / 2);
            mu = Scalar(attempt % 2 == 0 ? attempt / 2 : 1);
            if (attempt % 4 >= 2) mu = -mu;
        } else {
            lambda = Scalar(rng.uniform(-30, 30));
            mu = Scalar(rng.uniform(-30, 30));
        }
        QVec six = vec_add(vec_scale(lambda, cp.conics[0]), vec_scale(mu, cp.conics[1]));
        if (is_zero_vec(six)) continue;
        QMat m = conic_symmetric_matrix(six);
        // Reduced member: rank exactly 2, vertex at the support.
        if (qmat_rank(m) != 2) continue;
        // Factor the rank-2 form into two rational lines through the vertex.
        std::vector<QVec> dirs;
        {
            // Complete o to a basis with coordinate vectors.
            int skip = 0;
            while (skip < 3 && o[skip] == 0) ++skip;
            for (int i = 0; i < 3 && dirs.size() < 2; ++i) {
                if (i == skip) continue;
                QVec e(3, Scalar(0));
                e[i] = 1;
                dirs.push_back(e);
            }
        }
        auto bil = [&](const QVec& x, const QVec& y) {
            Scalar r = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r += x[i] * m[i][j] * y[j];
            return r;
        };
        const Scalar qa = bil(dirs[0], dirs[0]), qb = bil(dirs[0], dirs[1]), qc = bil(dirs[1], dirs[1]);
        // Roots of qa t^2 + 2 qb t u + qc u^2 give the two line directions.
        QVec root1, root2;
        Scalar sq;
        if (qa == 0 && qc == 0) {
            if (qb == 0) continue;
            root1 = dirs[0];
            root2 = dirs[1];
        } else if (qa != 0) {
            if (!is_square(qb * qb - qa * qc, sq)) continue;
            if (sq == 0) continue;  // double line
            root1 = vec_add(vec_scale(-qb + sq, dirs[0]), vec_scale(qa, dirs[1]));
            root2 = vec_add(vec_scale(-qb - sq, dirs[0]), vec_scale(qa, dirs[1]));
        } else {
            // qa = 0, qc != 0: u * (2 qb t + qc u) with qb != 0.
            if (qb == 0) continue;
            root1 = dirs[0];
            root2 = vec_add(vec_scale(qc, dirs[0]), vec_scale(-2 * qb, dirs[1]));
        }
        if (is_zero_vec(root1) || is_zero_vec(root2)) continue;
        CurveMap l1 = CurveMap::line(o, root1, d);
        CurveMap l2 = CurveMap::line(o, root2, d);
        std::vector<QVec> cols;
        LinearSubspace s1 = l1.span(), s2 = l2.span();
        for (const QVec& r : s1.basis()) cols.push_back(r);
        const std::size_t split_at = cols.size();
        for (const QVec& r : s2.basis()) cols.push_back(r);
        SolveResult sol = solve_columns(cols, f.coeff_vector());
        if (!sol.consistent) continue;
        QVec g1(f.coeff_vector().size(), Scalar(0));
        for (std::size_t j = 0; j < split_at; ++j)
            g1 = vec_add(g1, vec_scale(sol.solution[j], cols[j]));
        auto tuned = tune_rank_block(l1, g1, power_vec(o, d), d - 1, rng, "first line of the split conic");
        if (!tuned) continue;
        QVec g2 = vec_sub(f.coeff_vector(), tuned->vec);
        auto g2b = l2.from_ambient(g2);
        if (!g2b || g2b->is_zero()) continue;
        BinaryRankCertificate c2 = binary_rank(*g2b, rng);
        if (c2.rank != d - 1) continue;
        auto [b2, cert2] = sylvester_block(l2, g2, rng, "second line of the split conic");
        Decomposition dec;
        dec.nvars = a.nvars();
        dec.d = d;
        dec.blocks.push_back(std::move(tuned->block));
        dec.blocks.push_back(std::move(b2));
        return finish(f, std::move(dec));
    }
    throw std::runtime_error("R7: no reduced rational line pair found in the pencil");
}

Decomposition recipe_r8(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    std::vector<const JetComponent*> jets;
    for (const Component& c : a.components)
        if (const auto* j = std::get_if<JetComponent>(&c); j && j->length() == 2) jets.push_back(j);
    if (jets.size() != 2) throw std::runtime_error("R8: expected two 2-jets");
    std::vector<QVec> cols{power_vec(projective_normalize(jets[0]->support), d),
                           tangent_vec(jets[0]->support, jets[0]->jets[0], d),
                           power_vec(projective_normalize(jets[1]->support), d),
                           tangent_vec(jets[1]->support, jets[1]->jets[0], d)};
    SolveResult sol = solve_columns(cols, f.coeff_vector());
    if (!sol.consistent) throw std::runtime_error("R8: split failed");
    Decomposition dec;
    dec.nvars = a.nvars();
    dec.d = d;
    for (int i = 0; i < 2; ++i) {
        QVec part = vec_add(vec_scale(sol.solution[2 * i], cols[2 * i]),
                            vec_scale(sol.solution[2 * i + 1], cols[2 * i + 1]));
        CurveMap cm = CurveMap::line(jets[i]->support, jets[i]->jets[0], d);
        auto [block, cert] =
            sylvester_block(cm, part, rng, i == 0 ? "first tangent line" : "second tangent line");
        if (cert.rank != d)
            throw std::runtime_error("R8: tangent part has rank " + std::to_string(cert.rank));
        dec.blocks.push_back(std::move(block));
    }
    return finish(f, std::move(dec));
}

Decomposition recipe_r9(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    const JetComponent& jet = only_jet(a);
    if (jet.length() != 4) throw std::runtime_error("R9: expected a 4-jet");
    std::vector<Form> param;
    for (int i = 0; i < a.nvars(); ++i) {
        Form fi(2, 3);
        QVec stage{jet.support[i], jet.jets[0][i], jet.jets[1][i], jet.jets[2][i]};
        for (int k = 0; k <= 3; ++k)
            if (stage[k] != 0) fi.set_coeff(Expo{3 - k, k}, stage[k]);
        param.push_back(std::move(fi));
    }
    CurveMap cm(param, d, "rational normal curve completing the jet");
    auto [block, cert] = sylvester_block(cm, f.coeff_vector(), rng, cm.description());
    if (cert.rank != 3 * d - 2)
        throw std::runtime_error("R9: curve component has rank " + std::to_string(cert.rank) +
                                 ", expected 3d-2");
    Decomposition dec;
    dec.nvars = a.nvars();
    dec.d = d;
    dec.blocks.push_back(std::move(block));
    return finish(f, std::move(dec));
}

Decomposition recipe_r10(const Form& f, const Degree4Scheme& a, int d, Rng& rng) {
    const JetComponent* jet3 = nullptr;
    const JetComponent* point = nullptr;
    for (const Component& c : a.components)
        if (const auto* j = std::get_if<JetComponent>(&c)) {
            if (j->length() == 3) jet3 = j;
            if (j->length() == 1) point = j;
        }
    if (!jet3 || !point) throw std::runtime_error("R10: expected a 3-jet and a point");
    const QVec o = projective_normalize(point->support);
    // Plane of the 3-jet and its coordinates.
    LinearSubspace plane =
        LinearSubspace::from_rows(a.nvars(), QMat{jet3->support, jet3->jets[0], jet3->jets[1]});
    if (plane.dim() != 3) throw std::runtime_error("R10: jet does not span a plane");
    auto in_plane = [&](const QVec& v) {
        auto c = plane.coordinates(v);
        if (!c) throw std::runtime_error("R10: vector escapes the jet plane");
        return *c;
    };
    QVec sup_p = in_plane(jet3->support);
    QVec v1_p = in_plane(jet3->jets[0]);
    QVec v2_p = in_plane(jet3->jets[1]);
    // Conics through the 3-jet inside the plane.
    std::vector<QVec> coord(3);
    for (int i = 0; i < 3; ++i) coord[i] = QVec{sup_p[i], v1_p[i], v2_p[i]};
    const auto& basis2 = monomial_basis(3, 2);
    QMat conditions;
    for (int j = 0; j < 3; ++j) {
        QVec row(6, Scalar(0));
        for (std::size_t mi = 0; mi < basis2.size(); ++mi) {
            QVec val{Scalar(1)};
            for (int var = 0; var < 3; ++var)
                for (int e = 0; e < basis2[mi][var]; ++e) {
                    QVec next(val.size() + coord[var].size() - 1, Scalar(0));
                    for (std::size_t x = 0; x < val.size(); ++x)
                        for (std::size_t y = 0; y < coord[var].size(); ++y)
                            next[x + y] += val[x] * coord[var][y];
                    val = std::move(next);
                }
            if (j < static_cast<int>(val.size())) row[mi] = val[j];
        }
        conditions.push_back(std::move(row));
    }
    QMat net = kernel_basis(conditions);
    if (net.size() != 3) throw std::runtime_error("R10: conics through the jet do not form a net");
    // Span of the 3-jet's Veronese image for the point split.
    Degree4Scheme jet_only;
    jet_only.ambient_dim = a.ambient_dim;
    jet_only.components = {*jet3};
    std::vector<QVec> jet_gens = component_span_generators(jet_only.components[0], d, a.nvars());
    std::vector<QVec> cols{power_vec(o, d)};
    cols.insert(cols.end(), jet_gens.begin(), jet_gens.end());
    SolveResult sol = solve_columns(cols, f.coeff_vector());
    if (!sol.consistent) throw std::runtime_error("R10: point split failed");
    QVec p1 = vec_sub(f.coeff_vector(), vec_scale(sol.solution[0], cols[0]));

    for (int attempt = 0; attempt < 80; ++attempt) {
        QVec six(6, Scalar(0));
        for (const QVec& b : net) six = vec_add(six, vec_scale(rng.grid(4), b));
        if (is_zero_vec(six)) continue;
        QMat msym = conic_symmetric_matrix(six);
        if (qmat_det(msym) == 0) continue;
        std::vector<Form> param_plane;
        try {
            param_plane = conic_parametrization(msym, sup_p);
        } catch (const std::exception&) {
            continue;
        }
        // Embed the plane parametrization into the ambient space.
        std::vector<Form> param_amb;
        for (int i = 0; i < a.nvars(); ++i) {
            Form fi = Form::zero(2, 2);
            for (int j = 0; j < 3; ++j) fi += param_plane[j].scaled(plane.basis()[j][i]);
            param_amb.push_back(std::move(fi));
        }
        try {
            CurveMap cm(param_amb, d, "smooth conic through the 3-jet");
            auto [block, cert] = sylvester_block(cm, p1, rng, cm.description());
            if (cert.rank != 2 * d - 1) continue;
            Decomposition dec;
            dec.nvars = a.nvars();
            dec.d = d;
            dec.points.emplace_back(o, sol.solution[0]);
            dec.blocks.push_back(std::move(block));
            return finish(f, std::move(dec));
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("R10: no usable conic found");
}

}  // namespace

Decomposition decompose(const Form& f, const Degree4Scheme& a, int d, const std::string& recipe,
                        Rng& rng, int retries) {
    std::runtime_error last("decompose: no attempt made");
    for (int attempt = 0; attempt < std::max(1, retries / 10); ++attempt) {
        try {
            if (recipe == "R0") return recipe_points(f, a, d, rng);
            if (recipe == "R1") return recipe_r1(f, a, d, rng);
            if (recipe == "R2") return recipe_r2(f, a, d, rng);
            if (recipe == "R3") return recipe_r3(f, a, d, rng);
            if (recipe == "R4") return recipe_r4(f, a, d, rng);
            if (recipe == "R5") return recipe_r5(f, a, d, rng);
            if (recipe == "R6") return recipe_r6(f, a, d, rng);
            if (recipe == "R7") return recipe_r7(f, a, d, rng);
            if (recipe == "R8") return recipe_r8(f, a, d, rng);
            if (recipe == "R9") return recipe_r9(f, a, d, rng);
            if (recipe == "R10") return recipe_r10(f, a, d, rng);
            throw std::runtime_error("decompose: unknown recipe '" + recipe + "'");
        } catch (const std::runtime_error& e) {
            last = e;
        }
    }
    throw last;
}

std::vector<CurveMap> configuration_carriers(const Degree4Scheme& a, int d,
                                             const std::string& recipe, Rng& rng) {
    std::vector<CurveMap> carriers;
    if (recipe == "R9") {
        const JetComponent& jet = only_jet(a);
        std::vector<Form> param;
        for (int i = 0; i < a.nvars(); ++i) {
            Form fi(2, 3);
            QVec stage{jet.support[i], jet.jets[0][i], jet.jets[1][i], jet.jets[2][i]};
            for (int k = 0; k <= 3; ++k)
                if (stage[k] != 0) fi.set_coeff(Expo{3 - k, k}, stage[k]);
            param.push_back(std::move(fi));
        }
        carriers.emplace_back(param, d, "completed rational normal curve");
        return carriers;
    }
    // Lines of the configuration: jet tangent lines and support pair lines,
    // plus a few random lines through each support.
    std::vector<QVec> sups;
    for (const Component& c : a.components) sups.push_back(projective_normalize(component_support(c)));
    for (const Component& c : a.components)
        if (const auto* jet = std::get_if<JetComponent>(&c); jet && jet->length() >= 2)
            carriers.push_back(CurveMap::line(jet->support, jet->jets[0], d));
    for (std::size_t i = 0; i < sups.size(); ++i)
        for (std::size_t j = i + 1; j < sups.size(); ++j) {
            QMat m{sups[i], sups[j]};
            if (qmat_rank(m) == 2) carriers.push_back(CurveMap::line(sups[i], sups[j], d));
        }
    for (const QVec& s : sups)
        for (int extra = 0; extra < 2; ++extra)
            carriers.push_back(CurveMap::line(s, random_independent_dir({s}, a.nvars(), rng), d));
    return carriers;
}

std::optional<int> oracle_rank_upper(const Form& f, const std::vector<CurveMap>& carriers,
                                     int size_cap, int trials, Rng& rng) {
    if (carriers.empty() || size_cap < 1) return std::nullopt;
    const QVec target = f.coeff_vector();
    for (int t = 0; t < trials; ++t) {
        std::vector<QVec> cols;
        for (int i = 0; i < size_cap; ++i) {
            const CurveMap& cm =
                carriers[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(carriers.size()) - 1))];
            Scalar s = Scalar(rng.uniform(-9, 9)), u = Scalar(rng.uniform(-9, 9));
            if (s == 0 && u == 0) s = 1;
            QVec pt;
            try {
                pt = cm.point(s, u);
            } catch (const std::exception&) {
                continue;
            }
            cols.push_back(veronese(pt, f.degree()));
        }
        if (cols.size() != static_cast<std::size_t>(size_cap)) continue;
        if (solve_columns(cols, target).consistent) return size_cap;
    }
    return std::nullopt;
}

Decomposition embed_decomposition(const Decomposition& dec, const QMat& embedding, int target_vars) {
    Decomposition out;
    out.nvars = target_vars;
    out.d = dec.d;
    auto map_point = [&](const QVec& p) {
        QVec q(target_vars, Scalar(0));
        for (std::size_t j = 0; j < p.size(); ++j)
            for (int i = 0; i < target_vars; ++i) q[i] += p[j] * embedding[j][i];
        return projective_normalize(q);
    };
    for (const auto& [p, c] : dec.points) out.points.emplace_back(map_point(p), c);
    for (const ImplicitBlock& b : dec.blocks) {
        ImplicitBlock nb;
        nb.carrier_desc = b.carrier_desc;
        nb.witness = b.witness;
        for (int i = 0; i < target_vars; ++i) {
            Form fi =
                Form::zero(2, b.carrier_param.empty() ? 1 : b.carrier_param[0].degree());
            for (std::size_t j = 0; j < b.carrier_param.size(); ++j)
                fi += b.carrier_param[j].scaled(embedding[j][i]);
            nb.carrier_param.push_back(std::move(fi));
        }
        for (const QVec& p : b.rational_points) nb.rational_points.push_back(map_point(p));
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

}  // namespace waring4
