#pragma once

#include <map>
#include <optional>

#include "arcforge/arcs.hpp"

namespace arcforge {

// Character spectrum of an arc: character c -> number of lines meeting the
// arc in exactly c points. Zero-count characters are omitted.
struct Spectrum {
    std::map<u64, u64> counts;
    u64 Q = 0;
    u64 k = 0;

    u64 n() const;                        // max character present
    std::vector<u64> support() const;     // ascending characters
    u64 lines_with(u64 c) const;
};

// Lines meeting the arc in >= 2 points with their intersection counts,
// sorted by line index. Built by the pair census: every unordered pair of
// arc points is charged to its joining line; a line collecting t pairs meets
// the arc in c points with t = c(c-1)/2.
struct SecantCensus {
    std::vector<std::pair<u64, u64>> lines;  // (line index, |line ∩ arc|)
};

SecantCensus secant_census(const Arc& arc, unsigned threads = 0);

Spectrum spectrum(const Arc& arc, unsigned threads = 0);
Spectrum spectrum_from_census(const Arc& arc, const SecantCensus& census);

// All lines meeting the arc in exactly n points. n >= 2 reads the census;
// n == 1 walks the pencils of arc points; n == 0 needs plane enumeration.
std::vector<u64> full_secants(const Arc& arc, u64 n, unsigned threads = 0);

struct CoverageReport {
    u64 n = 0;
    bool is_complete = false;
    u64 uncovered_off_count = 0;
    u64 uncovered_on_count = 0;
    // verbatim lists capped at 10^4 entries each, index-ascending
    std::vector<u64> uncovered_off;
    std::vector<u64> uncovered_on;
    bool off_truncated = false, on_truncated = false;
    // subfield order -> uncovered points lying in that subplane
    std::map<u64, u64> off_subplane, on_subplane;
};

// Marks every point on every n-secant and classifies the unmarked points.
// Workers mark private bitmaps that are OR-merged, so reports are identical
// for any thread count.
CoverageReport coverage(const Arc& arc, u64 n, unsigned threads = 0);

u64 secants_through(const Arc& arc, u64 point, u64 n, const SecantCensus* census = nullptr);

struct ExtensionResult {
    Arc arc;
    Spectrum spectrum;
    CoverageReport coverage;
    bool character_violation = false;  // extension raised the max character above n
};

// Adds the given off-arc points, rechecks the spectrum against n and
// recomputes coverage. Points already in the arc throw.
ExtensionResult extend_and_recheck(const Arc& arc, const std::vector<u64>& extra, u64 n,
                                   unsigned threads = 0);

// Tangent lines to the family curve through the affine point (a, b):
// Hermitian -> lines with slope a root of the tangent polynomial;
// BKS -> roots of 2a m^2 - 2b m + 1 plus the special lines at a = 0.
std::vector<u64> tangent_lines_through(ArcFamily family, const PlanePtr& plane, u64 q, u64 a,
                                       u64 b);

// {arc meta, spectrum, n, is_complete, uncovered_off, uncovered_on} as JSON.
std::string report_json(const Arc& arc, const Spectrum& spec, const CoverageReport& cov);

}  // namespace arcforge
