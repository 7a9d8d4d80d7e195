// Standalone runner for the acceptance criteria: one PASS/FAIL line
// per criterion, nonzero exit status when anything fails.

#include <iostream>

#include "acceptance/criteria.hpp"

int main() {
    const auto& all = fano::acceptance::criteria();
    int failures = 0;
    int index = 0;
    for (const auto& criterion : all) {
        ++index;
        fano::acceptance::CriterionResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& ex) {
            result = {false, ex.what()};
        }
        std::cout << (result.pass ? "PASS" : "FAIL") << " " << index << "/" << all.size() << " "
                  << criterion.name;
        if (!result.pass) std::cout << ": " << result.detail;
        std::cout << "\n";
        if (!result.pass) ++failures;
    }
    std::cout << (all.size() - failures) << "/" << all.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
