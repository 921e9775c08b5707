// Command-line front end: classification, decomposition, binary-form rank,
// witness verification, point sampling and the configuration atlas.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "waring4/atlas.hpp"
#include "waring4/binary.hpp"
#include "waring4/decompose.hpp"
#include "waring4/stratify.hpp"

namespace {

using namespace waring4;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnclassified = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Degree4Scheme load_scheme(const std::string& path) {
    return Degree4Scheme::from_json(Json::parse(read_file(path)));
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

// Accepts either a file path or an inline polynomial.
Form load_form(const std::string& spec, int nvars_hint = -1) {
    std::ifstream probe(spec);
    if (probe.good()) return parse_form(read_file(spec), nvars_hint);
    return parse_form(spec, nvars_hint);
}

BinaryForm form_to_binary(const Form& f) {
    if (f.nvars() != 2) throw std::runtime_error("expected a binary form (variables x0, x1)");
    const int d = f.degree();
    QVec c(d + 1, Scalar(0));
    for (const auto& [e, v] : f.terms()) c[e[1]] = v;
    return BinaryForm(std::move(c));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WARING4_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank stratification and Waring decompositions for border-rank-4 forms"};
    app.require_subcommand(1);

    std::string scheme_path, form_spec, witness_path, out_path, format = "json";
    int degree = 0;
    std::uint64_t seed = default_seed();
    long long grid = 7;
    int retries = 60;
    int m_max = 3, d_max = 8, per_config = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "deterministic random seed");
        cmd->add_option("--grid", grid, "coefficient grid half-width for sampling");
        cmd->add_option("--retries", retries, "retry bound for genericity-dependent steps");
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--format", format, "json|table");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "classify a scheme into its rank stratum");
    c_classify->add_option("--scheme", scheme_path, "scheme JSON file")->required();
    c_classify->add_option("--degree", degree, "Veronese degree d (>= 3)")->required();
    add_common(c_classify);

    CLI::App* c_decompose =
        app.add_subcommand("decompose", "sample a generic point of the span and build a witness");
    c_decompose->add_option("--scheme", scheme_path, "scheme JSON file")->required();
    c_decompose->add_option("--degree", degree, "Veronese degree d (>= 3)")->required();
    add_common(c_decompose);

    CLI::App* c_sylvester = app.add_subcommand("sylvester", "rank of a binary form");
    c_sylvester->add_option("--form", form_spec, "binary form (inline or file), variables x0, x1")
        ->required();
    add_common(c_sylvester);

    CLI::App* c_verify = app.add_subcommand("verify", "check a decomposition against a form");
    c_verify->add_option("--form", form_spec, "form (inline or file)")->required();
    c_verify->add_option("--witness", witness_path, "decomposition JSON file")->required();
    add_common(c_verify);

    CLI::App* c_sample = app.add_subcommand("sample", "sample a certified generic point of the span");
    c_sample->add_option("--scheme", scheme_path, "scheme JSON file")->required();
    c_sample->add_option("--degree", degree, "Veronese degree d (>= 3)")->required();
    add_common(c_sample);

    CLI::App* c_atlas = app.add_subcommand("atlas", "sweep configurations across (m, d) cells");
    c_atlas->add_option("--mmax", m_max, "largest ambient dimension (<= 3)");
    c_atlas->add_option("--dmax", d_max, "largest degree");
    c_atlas->add_option("--per-config", per_config, "instances per configuration");
    add_common(c_atlas);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) {
            Degree4Scheme a = load_scheme(scheme_path);
            AmbientReduction red = reduce_ambient(a);
            StratumResult st = classify(red.scheme, degree);
            Json j = st.to_json();
            j["schema_version"] = 1;
            j["ambient_dim"] = a.ambient_dim;
            emit(j, out_path);
            return st.kind == VerdictKind::Unclassified ? kExitUnclassified : kExitOk;
        }
        if (c_decompose->parsed()) {
            Degree4Scheme a = load_scheme(scheme_path);
            Rng rng = Rng::seeded(seed);
            PipelineResult pr = run_pipeline(a, degree, rng, grid, retries);
            Json j;
            j["schema_version"] = 1;
            j["classification"] = pr.stratum.to_json();
            if (!pr.decomposed) {
                emit(j, out_path);
                return kExitUnclassified;
            }
            j["form"] = pr.form_original.str();
            j["rank"] = pr.stratum.rank;
            j["recipe"] = pr.stratum.recipe;
            Json w = pr.witness.to_json();
            j["parts"] = w["points"];
            j["implicit_blocks"] = w["blocks"];
            j["witness"] = std::move(w);
            j["certificate_rank"] = pr.sampled_reduced.certificate_rank;
            j["verified"] = true;
            emit(j, out_path);
            return kExitOk;
        }
        if (c_sylvester->parsed()) {
            Form f = load_form(form_spec, 2);
            BinaryForm bf = form_to_binary(f);
            Rng rng = Rng::seeded(seed);
            BinaryRankCertificate cert = binary_rank(bf, rng);
            Json j;
            j["schema_version"] = 1;
            j["degree"] = bf.degree();
            j["border_rank"] = cert.border_rank;
            j["rank"] = cert.rank;
            j["tangent_case"] = cert.tangent_case;
            j["witness_poly"] = cert.witness.str("y0", "y1");
            if (auto roots = explicit_roots_if_rational(cert.witness)) {
                Json pts = Json::array();
                for (const auto& [s, t] : *roots)
                    pts.push_back(Json::array({scalar_str(s), scalar_str(t)}));
                j["rational_points"] = std::move(pts);
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (c_verify->parsed()) {
            Decomposition dec = Decomposition::from_json(Json::parse(read_file(witness_path)));
            Form f = load_form(form_spec, dec.nvars);
            VerifyResult vr = verify_decomposition(f, dec);
            Json j;
            j["schema_version"] = 1;
            j["member"] = vr.member;
            j["irredundant"] = vr.irredundant;
            j["size"] = vr.size;
            j["verified"] = vr.member && vr.irredundant;
            if (!vr.detail.empty()) j["detail"] = vr.detail;
            emit(j, out_path);
            return (vr.member && vr.irredundant) ? kExitOk : kExitVerification;
        }
        if (c_sample->parsed()) {
            Degree4Scheme a = load_scheme(scheme_path);
            AmbientReduction red = reduce_ambient(a);
            StratumResult st = classify(red.scheme, degree);
            Rng rng = Rng::seeded(seed);
            SpanData sd = scheme_span(red.scheme, degree);
            SampledPoint sp = sample_point(red.scheme, sd, degree, rng, grid, retries);
            Json j;
            j["schema_version"] = 1;
            j["classification"] = st.to_json();
            j["form"] = sp.form.str();
            j["certificate_rank"] = sp.certificate_rank;
            j["subscheme_exclusions"] = sp.subscheme_checks;
            Json coeffs = Json::array();
            for (const Scalar& c : sp.span_coefficients) coeffs.push_back(scalar_str(c));
            j["span_coefficients"] = std::move(coeffs);
            emit(j, out_path);
            return kExitOk;
        }
        if (c_atlas->parsed()) {
            Json atlas = run_atlas(m_max, d_max, per_config, seed);
            if (format == "table") {
                if (out_path.empty()) {
                    std::cout << atlas_table(atlas);
                } else {
                    std::ofstream out(out_path);
                    out << atlas_table(atlas);
                }
            } else {
                emit(atlas, out_path);
            }
            return kExitOk;
        }
    } catch (const Json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("parse") != std::string::npos) return kExitParse;
        if (msg.find("verification") != std::string::npos || msg.find("invalid witness") != std::string::npos)
            return kExitVerification;
        return kExitUnclassified;
    }
    return kExitOk;
}
