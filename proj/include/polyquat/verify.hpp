#pragma once

// Named, runnable invariant suites spanning all modules. Each suite is a flat
// list of assertions with expected/actual values rendered exactly, so the CLI
// and the test harness share one source of truth.

#include <string>
#include <string_view>
#include <vector>

namespace polyquat::verify {

struct CheckDetail {
    std::string assertion;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct CheckReport {
    std::string name;
    bool passed = false;
    std::vector<CheckDetail> details;
};

/// Suites: groups, orbits, snub, dual, lattice, fib; "all" runs every suite.
const std::vector<std::string>& suite_names();

/// Executes the named suite; failures are recorded, never thrown.
CheckReport run_suite(std::string_view name);

/// Human-readable rendering (one line per assertion on failure, summary line
/// always).
std::string report_text(const CheckReport& report, bool verbose);

/// JSON rendering with the full assertion list.
std::string report_json(const CheckReport& report);

}  // namespace polyquat::verify
