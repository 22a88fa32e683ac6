#include "arcforge/genus.hpp"

#include <sstream>

#include <json.hpp>

namespace arcforge {

namespace {

void require_parity(ClosureCase c, u64 q) {
    if (q < 2) throw std::invalid_argument("genus: q >= 2 required");
    const bool bks = c == ClosureCase::bks_general_distinct ||
                     c == ClosureCase::bks_general_equal || c == ClosureCase::bks_special;
    if (bks && q % 2 == 0) throw std::invalid_argument("genus: BKS cases need odd q");
}

bool hermitian_case(ClosureCase c) {
    return c == ClosureCase::hermitian_offcurve || c == ClosureCase::hermitian_onpoint;
}

}  // namespace

std::string closure_case_name(ClosureCase c) {
    switch (c) {
        case ClosureCase::hermitian_offcurve: return "hermitian_offcurve";
        case ClosureCase::hermitian_onpoint: return "hermitian_onpoint";
        case ClosureCase::bks_general_distinct: return "bks_general_distinct";
        case ClosureCase::bks_general_equal: return "bks_general_equal";
        case ClosureCase::bks_special: return "bks_special";
    }
    return "?";
}

bigint closure_genus(ClosureCase c, u64 q) {
    require_parity(c, q);
    const bigint Q(q);
    switch (c) {
        case ClosureCase::hermitian_offcurve:
            // 2g-2 = q^4 - q^2 - 2q - 2
            return (Q * Q * Q * Q - Q * Q - 2 * Q) / 2;
        case ClosureCase::hermitian_onpoint:
            // 2g-2 = q(q-1)^2 - 2
            return Q * (Q - 1) * (Q - 1) / 2;
        case ClosureCase::bks_general_distinct:
            // 2g-2 = 2q^2 - 2q - 4
            return Q * Q - Q - 1;
        case ClosureCase::bks_general_equal:
            // 2g-2 = q^2 - q - 2
            return (Q * Q - Q) / 2;
        case ClosureCase::bks_special:
            return 0;
    }
    throw std::logic_error("genus: unknown case");
}

bigint closure_ramified(ClosureCase c, u64 q) {
    require_parity(c, q);
    const bigint Q(q);
    switch (c) {
        case ClosureCase::hermitian_offcurve: return (Q + 1) * (Q + 1);
        case ClosureCase::hermitian_onpoint: return Q + 1;
        case ClosureCase::bks_general_distinct: return Q * Q + 1;
        case ClosureCase::bks_general_equal: return Q + 1;
        case ClosureCase::bks_special: return Q * Q + 1;
    }
    throw std::logic_error("genus: unknown case");
}

GateResult hasse_weil_gate(const bigint& N, const bigint& g, const bigint& ramified) {
    GateResult res;
    if (N < 2 || g < 0 || ramified < 0) throw std::invalid_argument("genus: bad gate input");
    const bigint root = boost::multiprecision::sqrt(N);
    res.exact_sqrt = root * root == N;
    res.lower_bound = N + 1 - 2 * g * root;
    res.holds = res.lower_bound > ramified;
    return res;
}

std::vector<GuaranteeRow> guarantee_table(u64 q_max) {
    std::vector<GuaranteeRow> rows;
    const ClosureCase cases[] = {ClosureCase::hermitian_offcurve, ClosureCase::hermitian_onpoint,
                                 ClosureCase::bks_general_distinct, ClosureCase::bks_general_equal,
                                 ClosureCase::bks_special};
    for (ClosureCase c : cases) {
        for (u64 q = 2; q <= q_max; ++q) {
            const bool bks = !hermitian_case(c);
            if (bks && q % 2 == 0) continue;
            const bigint g = closure_genus(c, q);
            const bigint ram = closure_ramified(c, q);
            GuaranteeRow row{c, q, 0};
            for (unsigned r = 1; r <= 64; ++r) {
                bigint N = 1;
                const unsigned e = bks ? r : 2 * r;
                for (unsigned i = 0; i < e; ++i) N *= q;
                if (hasse_weil_gate(N, g, ram).holds) {
                    row.minimal_r = r;
                    break;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string guarantee_table_text(const std::vector<GuaranteeRow>& rows) {
    std::ostringstream os;
    os << "case                  q   minimal_r\n";
    for (const auto& row : rows) {
        std::string name = closure_case_name(row.closure_case);
        name.resize(22, ' ');
        os << name << row.q << (row.q < 10 ? "   " : "  ");
        if (row.minimal_r)
            os << row.minimal_r;
        else
            os << "-";
        os << "\n";
    }
    return os.str();
}

std::string guarantee_table_json(const std::vector<GuaranteeRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["case"] = closure_case_name(row.closure_case);
        j["q"] = row.q;
        j["minimal_r"] = row.minimal_r;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace arcforge
