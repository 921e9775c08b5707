// The executable rank classification for degree-4 border-rank schemes:
// maps an admissible scheme and a Veronese degree to its rank stratum and
// the witness recipe that realizes it.
#pragma once

#include <set>
#include <string>

#include "waring4/schemes.hpp"

namespace waring4 {

enum class VerdictKind { Rank, InSigma2, InSigma3, Sigma4Zero, Unclassified };

struct StratumResult {
    VerdictKind kind = VerdictKind::Unclassified;
    int rank = 0;                 // set for Rank and Sigma4Zero (then 4)
    std::string recipe;           // decomposition recipe id, empty if none
    bool recipe_supported = false;  // witness construction implemented here
    std::string stratum;          // e.g. "sigma_{4,10}(X_{3,5})"
    int span_dim = 0;             // projective dimension of <A>
    std::string configuration;    // case tag of the decision tree
    std::string reason;           // diagnostics for sigma/unclassified verdicts

    Json to_json() const;
};

// Requires an ambient-reduced scheme (A spans P^m).  The Gorenstein gate
// runs first; inadmissible schemes yield the matching sigma_2 / sigma_3
// verdict.  d >= 3.
StratumResult classify(const Degree4Scheme& a, int d);

// The rank set of the stratification for border rank 4 in P(S^d K^{m+1}),
// including ranks only reachable through results cited from elsewhere.
std::set<int> theorem1_table(int m, int d);

// The subset of theorem1_table whose witness constructions come from
// external citations and are not implemented here.
std::set<int> theorem1_external(int m, int d);

const char* verdict_name(VerdictKind k);

}  // namespace waring4
