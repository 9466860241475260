#ifndef NDP_REPORT_HPP
#define NDP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ndp/betti.hpp"
#include "ndp/io.hpp"

namespace ndp {

/// One check inside a report.  Failures carry a machine-checkable witness in
/// `details`.
struct CheckResult {
    std::string check;
    bool verdict = false;
    std::string method;
    nlohmann::json details;
};

struct Report {
    std::string command;
    IdealDocument input;
    nlohmann::json params;
    std::vector<CheckResult> results;
    std::optional<BettiTable> betti;
    std::optional<int> reg;
    double timing_ms = 0.0;

    bool overall_verdict() const;
    /// Deterministic apart from "timing_ms".
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct CheckParams {
    int d = -1; // -1: use the generator degree
    int p = 2;
    std::string method = "auto"; // auto | fast | oracle | locality | locality-lcms
    Field field = Field::q();
    int threads = 0;
    std::size_t budget = 20000; // lattice cap
};

/// Decide N_{d,p}, picking the cheapest applicable certifier under "auto":
/// the cubic classifications when they apply, the dual-graph path criterion
/// for p = 2, and the Betti oracle otherwise.
Report cmd_check(const IdealDocument& doc, const CheckParams& params);

/// Almost-linear analysis: shadow-system certificate or refutation, the full
/// Betti table, regularity, and the oracle N_{d,n-1} cross-check.
Report cmd_analyze(const IdealDocument& doc, const Field& field = Field::q(),
                   int threads = 0, std::size_t budget = 20000);

struct GenParams {
    std::string family; // fractal | sharp | power | bracket
    int n = 3;
    int d = -1;
    int p = -1;
    int r = -1;
};

IdealDocument cmd_gen(const GenParams& params);

/// Shelling search/decision.  mode: auto (structural decision when both
/// ideals are almost linear, else search), search, decide.
Report cmd_shelling(const IdealDocument& start, const IdealDocument& target,
                    const std::string& mode = "auto", std::size_t budget = 1000000);

/// Alexander dual of a square-free ideal plus the dual complex facet list.
Report cmd_dual(const IdealDocument& doc);
std::string dual_facets_text(const IdealDocument& doc);

nlohmann::json betti_to_json(const BettiTable& t);

} // namespace ndp

#endif
