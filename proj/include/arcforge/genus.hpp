#pragma once

#include "arcforge/common.hpp"

namespace arcforge {

// Galois-closure cases with closed-form genus and ramified-place counts.
enum class ClosureCase {
    hermitian_offcurve,    // 2g-2 = q^4 - q^2 - 2q - 2,  ramified (q+1)^2, plane q^{2r}
    hermitian_onpoint,     // 2g-2 = q(q-1)^2 - 2,        ramified q+1,     plane q^{2r}
    bks_general_distinct,  // 2g-2 = 2q^2 - 2q - 4,       ramified q^2+1,   plane q^r
    bks_general_equal,     // 2g-2 = q^2 - q - 2,         ramified q+1,     plane q^r
    bks_special            // 2g-2 = -2 (rational),       ramified q^2+1,   plane q^r
};

std::string closure_case_name(ClosureCase c);

// Exact integer genus; BKS cases require q odd.
bigint closure_genus(ClosureCase c, u64 q);

// Ramified rational places charged against the Hasse-Weil count.
bigint closure_ramified(ClosureCase c, u64 q);

struct GateResult {
    bool holds = false;      // N + 1 - 2 g sqrt(N) > ramified
    bool exact_sqrt = false; // sqrt(N) integral (even prime power)
    bigint lower_bound;      // N + 1 - 2 g floor(sqrt(N))
};

// Hasse-Weil existence gate: enough unramified rational places to force a
// transversal line. Conservative (floor sqrt) when N is not a square.
GateResult hasse_weil_gate(const bigint& N, const bigint& g, const bigint& ramified);

struct GuaranteeRow {
    ClosureCase closure_case;
    u64 q = 0;
    unsigned minimal_r = 0;  // smallest r with the gate true (0 = none <= 64)
};

// Minimal guaranteed r per case per q in [2, q_max]; Hermitian cases use
// plane order q^{2r}, BKS cases q^r and odd q only.
std::vector<GuaranteeRow> guarantee_table(u64 q_max);

std::string guarantee_table_text(const std::vector<GuaranteeRow>& rows);
std::string guarantee_table_json(const std::vector<GuaranteeRow>& rows);

}  // namespace arcforge
