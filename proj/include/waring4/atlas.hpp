// Random instance generators for every configuration class, the
// classify/sample/decompose/verify pipeline, and the atlas runner that
// sweeps (m, d) cells and compares realized ranks against the rank table.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "waring4/decompose.hpp"
#include "waring4/stratify.hpp"

namespace waring4 {

struct ConfigGenerator {
    std::string tag;
    int min_ambient;                 // smallest m the class lives in
    std::function<Degree4Scheme(int m, Rng&)> make;  // ambient m scheme
};

// All configuration classes, in a fixed order.
const std::vector<ConfigGenerator>& configuration_generators();

struct PipelineResult {
    Degree4Scheme reduced;    // ambient-reduced scheme
    QMat embedding;           // rows: basis of <A> in original coordinates
    StratumResult stratum;
    bool decomposed = false;
    SampledPoint sampled_reduced;   // the sampled form in reduced coordinates
    Form form_original;             // same point in the original coordinates
    Decomposition witness;          // in original coordinates
    VerifyResult verification;
};

// classify, then (for supported rank verdicts) sample a generic point,
// run the recipe and verify the witness end to end in the original
// coordinates.  Throws on any exact check failure.
PipelineResult run_pipeline(const Degree4Scheme& a, int d, Rng& rng, long long grid = 7,
                            int retries = 60);

Json run_atlas(int m_max, int d_max, int per_config, std::uint64_t seed);

// Plain-text table of an atlas JSON document.
std::string atlas_table(const Json& atlas);

}  // namespace waring4
