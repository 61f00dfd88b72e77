#ifndef CNGRAPH_HARNESS_HPP
#define CNGRAPH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cngraph/products.hpp"

namespace cngraph {

enum class Verdict { Pass, Fail, KnownErratum, Info };

std::string verdict_name(Verdict v);

struct PropCheck {
    std::string prop_id;
    std::map<std::string, std::string> params;
    std::map<std::string, long long> expected;
    std::map<std::string, long long> actual;
    Verdict verdict = Verdict::Pass;
};

struct FormulaRanges {
    int lo = 2;
    int hi = 12;
};

struct CheckSuiteReport {
    std::vector<PropCheck> checks;
    int passes = 0;
    int fails = 0;
    int errata = 0;
    int infos = 0;
    std::uint64_t seed = 0;

    void add(PropCheck check);
    void merge(const CheckSuiteReport& other);
    void sort();
};

/// Replays every closed-form result over the given parameter ranges.
/// Mismatches on ledgered erratum ids become KnownErratum, never Fail.
CheckSuiteReport run_formula_checks(const FormulaRanges& ranges);

/// Seeded randomized checks: join/corona bound theorems, multiset-vs-explicit
/// oracle equivalence for all five kinds, and the regular-factor laws.
/// Corona pairs are capped at order 7, everything else at max_order.
CheckSuiteReport run_bound_checks(int samples, int max_order, std::uint64_t seed);

/// Schema: array of {prop_id, params, expected, actual, verdict}.
nlohmann::json report_to_json(const CheckSuiteReport& report);

void print_report_table(std::ostream& os, const CheckSuiteReport& report);

}  // namespace cngraph

#endif
