#ifndef MAXCALC_RUNNER_HPP
#define MAXCALC_RUNNER_HPP

#include "maxcalc/script.hpp"
#include "maxcalc/session.hpp"

namespace maxcalc {

struct RunOptions {
    bool strict = false;
    int trunc_guard = 16;
};

// Exit-code contract: 0 = all assertions passed, 1 = an assertion failed,
// 2 = engine error (parse error, rule violation, contradiction, ...).
struct RunResult {
    int exit_code = 0;
    std::string report;
};

RunResult run_script(const std::string& text, const RunOptions& opts = {});
RunResult run_script(const Script& script, const RunOptions& opts = {});

// Report block for one profile's Betti table; shared by `print betti`.
std::string betti_report(const VarietyProfile& p);

// Goettsche rows q^0..q^upto for the given surface Betti numbers.
std::string series_report(const std::string& label, const std::array<Int, 5>& b, int upto);

// The generator catalog, rendered for `maxcalc catalog`.
std::string catalog_report();

// Runs the script and returns the serialized trace of one variety.
std::string trace_of(const std::string& text, const std::string& id,
                     const RunOptions& opts = {});

} // namespace maxcalc

#endif
