#include "waring4/stratify.hpp"

#include <stdexcept>

namespace waring4 {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Rank: return "rank";
        case VerdictKind::InSigma2: return "in_sigma_2";
        case VerdictKind::InSigma3: return "in_sigma_3";
        case VerdictKind::Sigma4Zero: return "rank_4_reduced";
        case VerdictKind::Unclassified: return "unclassified";
    }
    return "?";
}

Json StratumResult::to_json() const {
    Json j;
    j["verdict"] = verdict_name(kind);
    j["span_dim"] = span_dim;
    j["configuration"] = configuration;
    if (kind == VerdictKind::Rank || kind == VerdictKind::Sigma4Zero) {
        j["rank"] = rank;
        j["stratum"] = stratum;
        if (!recipe.empty()) j["recipe"] = recipe;
        j["recipe_supported"] = recipe_supported;
    }
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

namespace {

std::string stratum_label(int rank, int m, int d) {
    return "sigma_{4," + std::to_string(rank) + "}(X_{" + std::to_string(m) + "," +
           std::to_string(d) + "})";
}

StratumResult make_rank(int rank, const std::string& recipe, bool supported, int s, int m, int d,
                        std::string config) {
    StratumResult r;
    r.kind = VerdictKind::Rank;
    r.rank = rank;
    r.recipe = recipe;
    r.recipe_supported = supported;
    r.stratum = stratum_label(rank, m, d);
    r.span_dim = s;
    r.configuration = std::move(config);
    if (!supported)
        r.reason = "rank value follows from results cited from outside this casework; "
                   "no witness recipe is implemented for this configuration";
    return r;
}

StratumResult make_sigma(VerdictKind kind, int s, std::string config, std::string reason) {
    StratumResult r;
    r.kind = kind;
    r.span_dim = s;
    r.configuration = std::move(config);
    r.reason = std::move(reason);
    return r;
}

bool all_jets_of_length(const Degree4Scheme& a, int len) {
    for (const Component& c : a.components) {
        const auto* jet = std::get_if<JetComponent>(&c);
        if (!jet || jet->length() != len) return false;
    }
    return true;
}

}  // namespace

StratumResult classify(const Degree4Scheme& a, int d) {
    if (d < 3) throw std::runtime_error("classify: requires d >= 3");
    a.validate();

    GateResult gate = gorenstein_gate(a);
    const int m = a.ambient_dim;

    AmbientReduction red = reduce_ambient(a);
    if (red.scheme.ambient_dim != a.ambient_dim)
        throw std::runtime_error("classify: scheme is not ambient-reduced (span has dimension " +
                                 std::to_string(red.scheme.ambient_dim) + " < " + std::to_string(m) + ")");
    const int s = m;

    switch (gate.verdict) {
        case GateVerdict::RejectFatPoint:
            return make_sigma(VerdictKind::InSigma2, s, "III1-fat-point", gate.detail);
        case GateVerdict::RejectPlanarFatPoint:
            return make_sigma(VerdictKind::InSigma3, s, "planar-fat-point-component", gate.detail);
        case GateVerdict::RejectNotGorenstein:
            return make_sigma(VerdictKind::InSigma3, s, "II1.2.1-not-gorenstein", gate.detail);
        case GateVerdict::Accept:
            break;
    }

    if (s == 1) {
        if (d < 6)
            return make_sigma(VerdictKind::InSigma3, s, "I-collinear-low-degree",
                              "for d <= 5 every binary form of degree d has border rank <= 3");
        if (a.is_reduced()) {
            StratumResult r = make_rank(4, "R0", true, s, m, d, "I-collinear-reduced");
            r.kind = VerdictKind::Sigma4Zero;
            return r;
        }
        return make_rank(d - 2, "R1", true, s, m, d, "I-collinear");
    }

    if (a.is_reduced()) {
        StratumResult r = make_rank(4, "R0", true, s, m, d, "sigma4-zero-reduced");
        r.kind = VerdictKind::Sigma4Zero;
        return r;
    }

    if (s == 2) {
        LineProfile lp = line_profile(a);
        if (lp.max_degree >= 4)
            throw std::runtime_error("classify: degree-4 intersection with a line contradicts span dimension 2");
        if (lp.max_degree == 3) {
            if (!lp.residual_on_line) {
                if (d == 3)
                    return make_sigma(VerdictKind::InSigma3, s, "II1.1-la1-d3",
                                      "for d = 3 the span of a degree-3 divisor of a line plus a point "
                                      "lies inside sigma_3");
                return make_rank(d, "R2", true, s, m, d, "II1.1-la1");
            }
            switch (a.support_count()) {
                case 1:
                    // The gate already rejected the non-curvilinear case.
                    return make_rank(2 * d - 2, "R3", d >= 4, s, m, d, "II1.2.1-m3lemma");
                case 2:
                    if (all_jets_of_length(a, 2))
                        return make_rank(2 * d - 2, "R4", d >= 4, s, m, d, "II1.2.2-m1");
                    return make_sigma(
                        VerdictKind::Unclassified, s, "II1.2-tangent-point",
                        "a simple point on the tangent line of a non-collinear jet matches no "
                        "constructive case: the residual lies on the line but the scheme is "
                        "disconnected");
                case 3:
                    if (d >= 4) return make_rank(d + 2, "R5", true, s, m, d, "II1.2.3-la1.3");
                    return make_rank(4, "", false, s, m, d, "II1.2.3-la1.3-d3");
                default:
                    break;
            }
            return make_sigma(VerdictKind::Unclassified, s, "II1-unmatched",
                              "line intersection of degree 3 with unexpected support structure");
        }
        // Conic regime: every line meets A in degree <= 2.
        ConicPencilInfo cp = conic_pencil(a);
        if (a.support_count() == 3) {
            if (d >= 4) return make_rank(d + 2, "R5", true, s, m, d, "II2-lb2.4");
            return make_rank(4, "", false, s, m, d, "II2-lb2.4-d3");
        }
        if (cp.generic_member_smooth)
            return make_rank(2 * d - 2, "R6", true, s, m, d, "II2.1-lb1");
        // Every conic through A singular: A is connected, a complete
        // intersection and not curvilinear.
        if (a.support_count() == 1 && !a.is_curvilinear())
            return make_rank(2 * d - 2, "R7", true, s, m, d, "II2.2-lb2.1");
        return make_sigma(VerdictKind::Unclassified, s, "II2-singular-unmatched",
                          "generic conic through A is singular but A is not a single "
                          "complete-intersection component");
    }

    if (s == 3) {
        switch (a.support_count()) {
            case 1:
                // A single spanning component must be a curvilinear 4-jet
                // (the fat point was rejected, a pencil only spans a plane).
                return make_rank(3 * d - 2, "R9", true, s, m, d, "III1-3bp");
            case 2: {
                if (all_jets_of_length(a, 2))
                    return make_rank(2 * d, "R8", true, s, m, d, "III2.2-3a");
                // 3-jet spanning a plane plus a point off that plane.
                bool has3 = false, has1 = false;
                for (const Component& c : a.components)
                    if (const auto* jet = std::get_if<JetComponent>(&c)) {
                        if (jet->length() == 3) has3 = true;
                        if (jet->length() == 1) has1 = true;
                    }
                if (has3 && has1) return make_rank(2 * d, "R10", true, s, m, d, "III2.3-p15");
                return make_sigma(VerdictKind::Unclassified, s, "III2-unmatched",
                                  "two-component spatial scheme with unexpected degrees");
            }
            case 3:
                return make_rank(d + 2, "R5", true, s, m, d, "III3-2a1.3");
            default:
                break;
        }
        return make_sigma(VerdictKind::Unclassified, s, "III-unmatched",
                          "spatial scheme with unexpected support structure");
    }

    return make_sigma(VerdictKind::Unclassified, s, "span-dim-out-of-range",
                      "span dimension " + std::to_string(s) + " is outside 1..3");
}

std::set<int> theorem1_table(int m, int d) {
    if (m < 1 || d < 3) throw std::runtime_error("theorem1_table: need m >= 1, d >= 3");
    if (m == 1) {
        if (d >= 6) return {4, d - 2};
        return {};
    }
    if (m == 2) {
        if (d == 3) return {4};
        if (d == 4) return {4, 6, 7};
        if (d == 5) return {4, 5, 7, 8, 9};
        return {4, d - 2, d, d + 2, 2 * d - 2};
    }
    if (d == 3) return {4, 5, 6, 7};
    if (d == 4) return {4, 6, 8, 10};
    if (d == 5) return {4, 5, 7, 8, 10, 13};
    return {4, d - 2, d, d + 2, 2 * d - 2, 2 * d, 3 * d - 2};
}

std::set<int> theorem1_external(int m, int d) {
    if (m == 2 && d == 4) return {7};
    if (m == 2 && d == 5) return {9};
    return {};
}

}  // namespace waring4
