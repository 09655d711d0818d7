#pragma once

#include <string>
#include <vector>

namespace lmc {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Known suites: field, poly, lifting, codec, repair, dual.
const std::vector<std::string>& verify_suites();

/// Runs one suite's property battery at desk scale. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite);

/// Runs every suite, in verify_suites() order.
std::vector<CheckResult> run_all_suites();

}  // namespace lmc
