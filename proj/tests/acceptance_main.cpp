// Runs the complete verification matrix and prints one line per criterion.

#include "ybx/acceptance.hpp"

#include <cstdio>

int main() {
    auto certs = ybx::acceptance_suite(ybx::kDefaultSeed);
    int passed = 0, idx = 0;
    for (const auto& c : certs) {
        ++idx;
        std::printf("%s  %2d. %s\n", c.pass ? "PASS" : "FAIL", idx, c.check.c_str());
        if (c.pass)
            ++passed;
        else
            std::printf("      %s\n", c.details.dump().c_str());
    }
    std::printf("%d/%d criteria passed\n", passed, idx);
    return passed == idx ? 0 : 1;
}
