#pragma once

#include <optional>

#include "arcforge/analysis.hpp"
#include "arcforge/census.hpp"
#include "arcforge/codes.hpp"
#include "arcforge/genus.hpp"

namespace arcforge {

enum class Verdict { pass, fail, report_only };

std::string verdict_name(Verdict v);
int verdict_exit_code(Verdict v);  // 0 / 1 / 2

struct TaskParams {
    std::optional<u64> q;
    std::optional<unsigned> r;
    std::optional<u64> a, b;
    std::optional<u64> field_order;
    unsigned threads = 0;  // 0 = auto
    u64 seed = 0;
    double tolerance_tv = 0.05;
};

struct TaskReport {
    std::string id;
    Verdict verdict = Verdict::fail;
    std::string json;  // self-describing report
    double elapsed_ms = 0;
};

// Registry ids:
//   herm-spectrum herm-complete herm-incomplete-r2 herm-np herm-q3r3
//   bks-spectrum bks-complete-even bks-uncovered-odd bks-extend
//   bluher census-pgl census-agl census-calibration tower ramified-count
//   genus gate code-params
const std::vector<std::string>& task_ids();

// Runs one task. Without explicit parameters a task runs its full default
// desk-scale set. Unknown ids throw std::invalid_argument.
TaskReport run_task(const std::string& id, const TaskParams& params = {});

// Sampling helper shared with the census tasks: aggregates censuses over
// seeded random admissible parameters until min_samples unramified
// specializations are collected.
CensusReport aggregate_census(CensusFamily family, const GFPtr& F, u64 q, u64 min_samples,
                              u64 seed, unsigned threads = 0);

}  // namespace arcforge
