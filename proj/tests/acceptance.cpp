// Acceptance gate: runs the seven verification criteria end to end and
// prints one pass/fail line per criterion. Exit status is nonzero when any
// criterion fails. Seed and sample count follow the standard environment
// override (OGFIBER_SEED) so failures can be replayed exactly.

#include "ogfiber/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main() {
    ogfiber::RunConfig cfg;
    if (const char* env = std::getenv("OGFIBER_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    bool all = true;
    const auto results = ogfiber::run_acceptance(cfg, nullptr);
    for (const auto& r : results) {
        std::printf("[%s] %-10s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                    r.seconds, r.details.c_str());
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
