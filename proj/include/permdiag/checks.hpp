// Executable invariant suites shared by the verify command, the acceptance
// runner and the unit tests.  Each suite takes an exhaustiveness bound.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pd {

struct CheckResult {
    bool ok = false;
    std::string detail;
};

struct Check {
    std::string module;
    std::string name;
    // Largest bound the invariant is stated for.  verify runs max-n clamped
    // to floor..limit.
    int limit = 0;
    // A known deviation is reported as FAIL but does not change the exit
    // status of verify unless --strict is given.
    bool known_deviation = false;
    std::function<CheckResult(int bound)> run;
    // Smallest bound with at least one instance of the invariant.
    int floor = 1;
};

const std::vector<Check>& all_checks();
const Check& find_check(const std::string& name);

struct CheckReport {
    const Check* check = nullptr;
    int bound = 0;
    CheckResult result;
};

// Runs every suite whose module or name matches filter (all when empty) on up
// to jobs threads; the reports come back in suite order.
std::vector<CheckReport> run_checks(int max_n, int jobs, const std::string& filter = "");

}  // namespace pd
