// End-to-end verification suite. Prints one line per criterion and exits
// nonzero if any of them fails.

#include <cstdio>

#include "liegeo/acceptance.hpp"

int main() {
    auto results = liegeo::run_acceptance_suite();
    int failures = 0;
    for (const auto& c : results) {
        std::printf("[%s] criterion %2d: %s — %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
        for (const auto& line : c.info) std::printf("        note: %s\n", line.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
