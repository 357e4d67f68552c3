// Acceptance suite: runs every spec criterion at its pinned parameters and
// prints one pass/fail line per criterion.  Nonzero exit on any failure.
#include <cstdio>

#include "cmsdef/verify.hpp"

int main() {
    auto results = cmsdef::verify::run_acceptance();
    bool all = true;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("[%s] criterion %2d: %-62s (%ld cases, %.2fs) %s\n",
                    r.pass ? "PASS" : "FAIL", idx, r.name.c_str(), r.cases, r.seconds,
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT");
    return all ? 0 : 1;
}
