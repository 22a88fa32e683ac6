#pragma once

#include <optional>

#include "arcforge/analysis.hpp"

namespace arcforge {

// 3 x k generator matrix over GF(Q) whose columns are the normalized arc
// points in arc index order. The column code of a (k,n)-arc has parameters
// [k, 3, k-n].
struct ArcCode {
    GFPtr F;
    u64 k = 0;
    std::array<std::vector<u64>, 3> rows;
};

// Throws when the arc has rank < 3 (collinear or too small).
ArcCode code_from_arc(const Arc& arc);

unsigned code_rank(const ArcCode& code);

// Minimum distance by codeword weight enumeration over all Q^3 - 1 nonzero
// functionals; throws when Q^3 exceeds the enumeration bound.
u64 min_distance_enum(const ArcCode& code, unsigned threads = 0);

// k - n from the arc spectrum.
u64 min_distance_from_spectrum(const ArcCode& code, const Spectrum& spec);

struct DistanceResult {
    u64 k = 0;
    u64 d = 0;
    u64 d_enum = 0;
    u64 d_spectrum = 0;
    bool agree = false;
};

// Both routes where feasible; they must agree.
DistanceResult min_distance(const Arc& arc, unsigned threads = 0);

struct ExtendibilityReport {
    u64 n = 0;
    bool complete = false;
    bool extendible = false;            // complete <=> not extendible
    std::optional<u64> witness;         // an uncovered off-arc point
    bool witness_valid = false;         // adding it keeps the max character at n
};

ExtendibilityReport extendibility_report(const Arc& arc, unsigned threads = 0);

std::string code_matrix_text(const ArcCode& code);
std::string code_params_json(const ArcCode& code, const DistanceResult& dist);

}  // namespace arcforge
