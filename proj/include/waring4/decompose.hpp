// Generic point sampling in the span of a scheme's Veronese image, the
// constructive decomposition recipes, exact verification, and the
// randomized smaller-decomposition search used for corroboration.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring4/curve.hpp"
#include "waring4/rng.hpp"
#include "waring4/schemes.hpp"
#include "waring4/stratify.hpp"

namespace waring4 {

struct SampledPoint {
    Form form;                   // degree-d form in m+1 variables
    QVec span_coefficients;      // over SpanData::generators
    int certificate_rank = 0;    // best catalecticant rank over a <= 3
    int subscheme_checks = 0;    // truncation spans certified to exclude F
};

// Draws span coefficients from an integer grid until the point avoids all
// one-step-truncated subscheme spans and, for d >= 4, carries a rank-4
// catalecticant certificate.  Throws after `retries` failures.
SampledPoint sample_point(const Degree4Scheme& a, const SpanData& sd, int d, Rng& rng,
                          long long grid = 7, int retries = 50);

struct ImplicitBlock {
    std::vector<Form> carrier_param;  // m+1 binary forms of a common degree
    std::string carrier_desc;
    BinaryForm witness;               // squarefree; degree = block size
    std::vector<QVec> rational_points;  // filled when the witness splits over Q

    int size() const { return witness.degree(); }
};

struct Decomposition {
    int nvars = 0;
    int d = 0;
    std::vector<std::pair<QVec, Scalar>> points;  // explicit summands with coefficients
    std::vector<ImplicitBlock> blocks;

    int total_size() const;
    Json to_json() const;
    static Decomposition from_json(const Json& j);
};

// Builds a witness of exactly the classified size using the recipe chosen
// by classify().  The scheme must be ambient-reduced and accepted, F a
// point produced by sample_point.
Decomposition decompose(const Form& f, const Degree4Scheme& a, int d, const std::string& recipe,
                        Rng& rng, int retries = 60);

struct VerifyResult {
    bool member = false;
    bool irredundant = false;
    int size = 0;
    std::string detail;
};

VerifyResult verify_decomposition(const Form& f, const Decomposition& dec);

// Randomized search for a decomposition of size at most `size_cap` with all
// points drawn from the given carrier curves.  Returns the size found, or
// nullopt when `trials` samples all fail (evidence, not proof).
std::optional<int> oracle_rank_upper(const Form& f, const std::vector<CurveMap>& carriers,
                                     int size_cap, int trials, Rng& rng);

// Carrier curves of the configuration, used by oracle_rank_upper.
std::vector<CurveMap> configuration_carriers(const Degree4Scheme& a, int d,
                                             const std::string& recipe, Rng& rng);

// Maps a decomposition produced in reduced coordinates back through a
// linear embedding (rows of `embedding` span the target coordinates).
Decomposition embed_decomposition(const Decomposition& dec, const QMat& embedding, int target_vars);

}  // namespace waring4
