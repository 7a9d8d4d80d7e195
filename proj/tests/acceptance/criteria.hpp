#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fano::acceptance {

struct CriterionResult {
    bool pass;
    std::string detail;  // filled on failure
};

struct Criterion {
    std::string name;
    std::function<CriterionResult()> run;
};

/// The fixed list of end-to-end checks, each pinning the constants and
/// tolerances it asserts. Replayed both by the acceptance test binary
/// and by the CLI selftest command.
const std::vector<Criterion>& criteria();

}  // namespace fano::acceptance
