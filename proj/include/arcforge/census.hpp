#pragma once

#include "arcforge/poly.hpp"

namespace arcforge {

// Exact cycle-type distribution of a finite permutation group.
struct GroupCycleDistribution {
    std::string name;
    unsigned degree = 0;
    u64 order = 0;
    std::map<CycleType, u64> counts;

    std::string to_json() const;  // {degree, order, types:[{parts, count}]}
};

// PGL(2,q) on the q+1 points of PG(1,q); q <= 16.
GroupCycleDistribution pgl2_distribution(u64 q);

// AGL(1,q) = {x -> ax+b} on GF(q); q <= 64.
GroupCycleDistribution agl1_distribution(u64 q);

// Regular cyclic group of order n on itself.
GroupCycleDistribution cyclic_regular_distribution(unsigned n);

// Regular elementary-abelian group of order p^e on itself.
GroupCycleDistribution elementary_abelian_regular_distribution(u64 p, unsigned e);

enum class CensusFamily {
    hermitian_line,      // degree q+1, expected PGL(2,q)
    hermitian_onpoint,   // degree q,   expected AGL(1,q)
    bks_line_monic,      // degree q+1, expected PGL(2,q)
    bks_onpoint,         // degree q,   expected AGL(1,q)
    calibration_i,       // degree q+1, regular cyclic
    calibration_ii       // degree q,   regular elementary-abelian
};

std::string census_family_name(CensusFamily f);

// Affine curve membership: b^q + b + a^{q+1} = 0, resp. the BKS equation (4).
bool on_hermitian_curve(const GF& F, u64 q, u64 a, u64 b);
bool on_bks_curve(const GF& F, u64 q, u64 a, u64 b);

// One specialization census: for every admissible value of the family's free
// variable in the field, the squarefree specializations contribute their
// distinct-degree pattern; non-squarefree ones land in the ramified bucket;
// excluded values are counted as skipped.
struct CensusReport {
    CensusFamily family;
    u64 q = 0;
    unsigned degree = 0;
    u64 a = 0, b = 0;  // (a,b), or (t,·), or (t,omega) depending on family
    u64 field_order = 0;
    std::string field;
    u64 ramified = 0, skipped = 0, draws = 1;
    std::map<FactorizationPattern, u64> patterns;

    struct Row {
        u64 index;
        char status;  // 'o' ok, 'r' ramified, 's' skipped
        FactorizationPattern pattern;
    };
    std::vector<Row> rows;  // per-value detail; dropped by merge()
    bool rows_valid = true;

    u64 samples() const;
    void merge(const CensusReport& other);  // aggregates pattern counts
    std::string to_csv() const;             // m_index,status,pattern
    std::string to_json() const;
};

// Family preconditions are enforced: Hermitian line needs (a,b) off the
// curve; Hermitian on-point needs (a,b) on the curve and outside PG(2,q^2);
// BKS line needs (a,b) off the curve and outside PG(2,q) (allow_degenerate
// lifts the subplane restriction for report-only runs); BKS on-point needs
// t outside GF(q^2); calibration II needs w^{q-1} = -1.
// The free-variable range is partitioned across workers; pattern counts
// merge associatively, so the report is identical for any thread count.
CensusReport specialization_census(CensusFamily family, const GFPtr& F, u64 q, u64 a, u64 b,
                                   bool allow_degenerate = false, unsigned threads = 0);

struct DistributionComparison {
    bool support_ok = false;
    double tv = 1.0;
    std::vector<CycleType> unexpected;  // observed patterns outside the group
};

// (i) hard support check, (ii) total-variation distance between the
// normalized pattern census and the group's element-count distribution.
DistributionComparison compare_distribution(const CensusReport& census,
                                            const GroupCycleDistribution& dist);

enum class TowerFamily { hermitian, bks };

// Tower consistency at a totally-split slope m0: the first twisted
// derivative matches its closed form and its roots are the root differences;
// the (q-1)-power criterion for w agrees with explicit solvability; solution
// tuples satisfy the three-equation system; the three generating maps
// (u,v,w) -> (v+u, -v, w^-1), (u, vw/(w+1), w+1), (u, v, lw) send solutions
// to solutions.
struct TowerCheck {
    u64 m0 = 0;
    u64 roots = 0, pairs = 0, w_found = 0, w_absent = 0;
    bool derivative_formula_ok = true;
    bool rootset_ok = true;
    bool w_criterion_ok = true;
    bool system_ok = true;
    bool closure_ok = true;
    bool ok() const {
        return derivative_formula_ok && rootset_ok && w_criterion_ok && system_ok && closure_ok;
    }
};

TowerCheck tower_consistency(TowerFamily fam, const GFPtr& F, u64 q, u64 a, u64 b, u64 m0);

// Slopes m0 whose line polynomial is squarefree and splits completely; up to
// `want` of them, ascending. BKS slopes are in monic coordinates.
std::vector<u64> find_split_slopes(TowerFamily fam, const GFPtr& F, u64 q, u64 a, u64 b,
                                   size_t want);

// Number of slopes in the closure field whose line specialization has a
// multiple root: q+1 for the Hermitian family (tangent polynomial split),
// at most 2 for BKS. Throws when the tangent polynomial does not split.
u64 ramified_place_count(TowerFamily fam, const GFPtr& closure, u64 q, u64 a, u64 b);

}  // namespace arcforge
