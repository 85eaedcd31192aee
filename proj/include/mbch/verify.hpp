#pragma once

// Self-check suites run by `mbch verify`: every closed formula is compared
// against an independent route (associative oracle, classical recursion, or
// exact linear algebra in the free Lie algebra).

#include <string>
#include <vector>

namespace mbch {

enum class Suite { all, bch, metabelian, zassenhaus, kv, deeper };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Parses "all", "bch", ...; throws std::invalid_argument on unknown names.
Suite parse_suite(const std::string& name);

/// Runs the checks of `suite` at working degree `degree` (>= 2).
std::vector<CheckResult> run_suite(Suite suite, int degree);

}  // namespace mbch
