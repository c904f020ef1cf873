#include <cstdio>
#include <string>

#include "hypspec/acceptance.hpp"

// Runs every acceptance criterion and prints one pass/fail line each.
int main() {
    const std::string models = std::string(HYPSPEC_SOURCE_DIR) + "/models";
    const auto results = hypspec::run_acceptance(models);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s  %-62s (%7.0f ms)  %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.elapsed_ms, r.details.c_str());
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
