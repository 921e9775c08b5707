// Degree-4 zero-dimensional schemes in P^m: jet (curvilinear) components,
// local complete-intersection pencil components, fat points; the Gorenstein
// admissibility gate; Veronese span computation; line intersection profiles
// and the conic pencil analysis used by the planar casework.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "waring4/poly.hpp"
#include "waring4/qmatrix.hpp"

namespace waring4 {

using Json = nlohmann::ordered_json;

// Spec K[t]/(t^k) embedded by t -> support + t v1 + t^2 v2 + t^3 v3.
struct JetComponent {
    QVec support;
    QMat jets;  // v1..v_{k-1}; k = length = jets.size() + 1, between 1 and 4
    int length() const { return static_cast<int>(jets.size()) + 1; }
};

// Degree-4 local scheme of embedding dimension 2: ideal (Q1, Q2, (x,y)^3)
// in the plane through support spanned by w1, w2, with Qi given on the
// basis (x^2, xy, y^2).
struct SquarePencilComponent {
    QVec support;
    QVec w1, w2;
    std::array<Scalar, 3> q1, q2;
};

// First infinitesimal neighborhood inside the span of the directions:
// degree 3 when planar (2 directions), degree 4 in P^3 (3 directions).
struct FatPointComponent {
    QVec support;
    QMat directions;
    int degree() const { return static_cast<int>(directions.size()) + 1; }
};

using Component = std::variant<JetComponent, SquarePencilComponent, FatPointComponent>;

int component_degree(const Component& c);
const QVec& component_support(const Component& c);

struct Degree4Scheme {
    int ambient_dim = 0;  // m; points live in P^m with m+1 coordinates
    std::vector<Component> components;

    int nvars() const { return ambient_dim + 1; }
    int degree() const;
    int support_count() const { return static_cast<int>(components.size()); }
    bool is_reduced() const;
    bool is_curvilinear() const;  // every component a jet

    // Structural invariants: coordinate sizes, distinct supports, total
    // degree 4, jet/pencil direction independence.  Throws on violation.
    void validate() const;

    static Degree4Scheme from_json(const Json& j);
    Json to_json() const;
};

enum class GateVerdict {
    Accept,
    RejectNotGorenstein,   // pencil quadrics share a linear factor
    RejectFatPoint,        // 2O in P^3: span lies in sigma_2
    RejectPlanarFatPoint,  // planar 2O component: sigma_3 context
};

struct GateResult {
    GateVerdict verdict = GateVerdict::Accept;
    std::string detail;
};

GateResult gorenstein_gate(const Degree4Scheme& a);

struct SpanData {
    LinearSubspace span;                       // of the Veronese image, in K^{N}
    std::vector<QVec> generators;              // one block per component, flattened
    std::vector<std::pair<std::string, LinearSubspace>> truncations;
    // spans of all one-step truncations of single components
};

SpanData scheme_span(const Degree4Scheme& a, int d);

// Veronese span generators of a single component (the rows scheme_span
// assembles): jet stages, or pencil/fat-point inverse-system functionals.
std::vector<QVec> component_span_generators(const Component& c, int d, int nvars);

struct LineProfile {
    int max_degree = 0;         // max over lines of deg(A cap L)
    QVec line_p, line_q;        // two points spanning a maximizing line
    int residual_degree = 0;    // degree of A minus its part on the line
    bool residual_on_line = false;
    bool residual_reduced = true;
    QVec residual_support;      // support of the residual when connected
};

LineProfile line_profile(const Degree4Scheme& a);

// Scheme-theoretic intersection degree of one component with the line
// spanned by p and q.
int component_line_degree(const Component& c, const QVec& p, const QVec& q, int nvars);

struct ConicPencilInfo {
    int pencil_dim = 0;              // linear dimension of I_A(2)
    QMat conics;                     // basis, rows of 6 coefficients
    bool generic_member_smooth = false;
    Form det_cubic;                  // det(l M1 + m M2) as a binary cubic
};

// Requires a planar scheme (ambient_dim == 2) with max line degree <= 2.
ConicPencilInfo conic_pencil(const Degree4Scheme& a);

// 3x3 symmetric matrix of a plane conic given by 6 coefficients in the
// monomial order x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
QMat conic_symmetric_matrix(const QVec& six);

struct AmbientReduction {
    Degree4Scheme scheme;  // rewritten in P^s
    QMat embedding;        // rows: basis of <A> in the original coordinates
};

// Rewrites A inside its projective span.
AmbientReduction reduce_ambient(const Degree4Scheme& a);

Degree4Scheme apply_projectivity(const Degree4Scheme& a, const QMat& m);

// Dual quadric of a pencil: the degree-2 functional annihilated by both
// quadrics under the differential pairing.
std::array<Scalar, 3> pencil_dual_quadric(const std::array<Scalar, 3>& q1,
                                          const std::array<Scalar, 3>& q2);

}  // namespace waring4
