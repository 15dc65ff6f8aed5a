#ifndef OGFIBER_REPORT_HPP
#define OGFIBER_REPORT_HPP

#include "ogfiber/presentations.hpp"
#include "ogfiber/stability.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ogfiber {

struct RunConfig {
    std::vector<CycleType> cases;    // empty = all five
    int degree_cap = 0;              // 0 = per-case defaults
    int timeout_sec = 0;             // 0 = no cap
    int samples = 120;
    unsigned long long seed = 17;
    int jobs = 1;
    bool unsafe_full_elimination = false;
    std::string json_path;
};

std::vector<CycleType> all_cycles();

GroebnerCaps caps_of(const RunConfig& cfg);

// Serialized reports are deterministic for a fixed config and seed: key order
// is fixed, wall-clock values never enter the JSON.
std::string case_report_json(const CycleType& cyc, const RunConfig& cfg);

std::string point_report_json(const GITProblem& P, const CaseGenerators& G,
                              const PointY& p, int search_box, int search_trials,
                              unsigned long long seed);

// JSON object mapping variable names to rationals ("num/den" or "num").
PointY parse_point_file(const GITProblem& P, const std::string& json_text);

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

// Full verification suite: the five case criteria, the stability suite, and
// the determinism double-run. `console`, when given, receives one line per
// criterion as it finishes.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* console);

std::string reproduce_report_json(const RunConfig& cfg,
                                  const std::vector<CriterionResult>& results);

} // namespace ogfiber

#endif
