// ogfiber: exact verification workbench for the five fiber presentations.
//
// Subcommands:
//   case         per-case generator/relation reports (JSON)
//   check-point  semistability report for one rational point (JSON)
//   reproduce    full acceptance battery plus a deterministic report
//
// Exit codes: 0 pass, 1 check failure, 2 configuration error, 3 a
// computation hit the degree/time cap without --unsafe-full-elimination.

#include "ogfiber/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace ogfiber;

struct Cli {
    std::vector<std::string> cases;
    RunConfig cfg;
    bool seed_given = false;
    std::string point_path;
};

int resolve_cases(Cli& cli, std::vector<CycleType>& out) {
    if (cli.cases.empty()) {
        out = all_cycles();
        return 0;
    }
    for (const auto& s : cli.cases) {
        try {
            out.push_back(CycleType::parse(s));
        } catch (const std::exception& e) {
            std::cerr << "invalid --case " << s << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

void apply_seed_env(Cli& cli) {
    if (cli.seed_given) return;
    if (const char* env = std::getenv("OGFIBER_SEED")) {
        try {
            cli.cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable OGFIBER_SEED\n";
        }
    }
}

int write_output(const Cli& cli, const std::string& text) {
    if (cli.cfg.json_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cli.cfg.json_path);
    if (!out) {
        std::cerr << "cannot open " << cli.cfg.json_path << " for writing\n";
        return 2;
    }
    out << text;
    return 0;
}

// scan a finished report for failed checks / capped computations
void scan_report(const nlohmann::json& j, bool& any_fail, bool& any_capped) {
    if (j.value("status", "ok") == "capped") any_capped = true;
    for (const auto& c : j.value("checks", nlohmann::json::array()))
        if (c.value("status", "pass") != "pass") any_fail = true;
}

int cmd_case(Cli& cli) {
    apply_seed_env(cli);
    std::vector<CycleType> cycles;
    if (int rc = resolve_cases(cli, cycles)) return rc;

    std::vector<std::future<std::string>> jobs;
    std::vector<std::string> reports(cycles.size());
    const int width = std::max(1, cli.cfg.jobs);
    for (std::size_t base = 0; base < cycles.size(); base += width) {
        jobs.clear();
        for (std::size_t i = base; i < std::min(base + width, cycles.size()); ++i)
            jobs.push_back(std::async(std::launch::async, [&, i] {
                return case_report_json(cycles[i], cli.cfg);
            }));
        for (std::size_t i = 0; i < jobs.size(); ++i) reports[base + i] = jobs[i].get();
    }

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool any_fail = false, any_capped = false;
    for (const auto& r : reports) {
        auto j = nlohmann::ordered_json::parse(r);
        scan_report(j, any_fail, any_capped);
        out.push_back(std::move(j));
    }
    if (int rc = write_output(cli, out.dump(2) + "\n")) return rc;
    if (any_capped && !cli.cfg.unsafe_full_elimination) return 3;
    return any_fail ? 1 : 0;
}

int cmd_check_point(Cli& cli) {
    apply_seed_env(cli);
    if (cli.cases.size() != 1) {
        std::cerr << "check-point needs exactly one --case\n";
        return 2;
    }
    std::vector<CycleType> cycles;
    if (int rc = resolve_cases(cli, cycles)) return rc;
    std::ifstream in(cli.point_path);
    if (!in) {
        std::cerr << "cannot read point file " << cli.point_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    auto P = std::make_shared<const GITProblem>(build_problem(cycles[0]));
    PointY p;
    try {
        p = parse_point_file(*P, buf.str());
    } catch (const std::exception& e) {
        std::cerr << "bad point file: " << e.what() << "\n";
        return 2;
    }
    const auto G = case_generators(P);
    std::string rep;
    try {
        rep = point_report_json(*P, G, p, 3, 50, cli.cfg.seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1; // point off the variety
    }
    return write_output(cli, rep);
}

int cmd_reproduce(Cli& cli) {
    apply_seed_env(cli);
    std::vector<CycleType> cycles;
    if (int rc = resolve_cases(cli, cycles)) return rc;
    cli.cfg.cases = cycles;

    const auto results = run_acceptance(cli.cfg, &std::cerr);
    bool all = true, capped = false;
    for (const auto& r : results) {
        all = all && r.passed;
        if (r.details.find("capped") != std::string::npos) capped = true;
    }
    if (int rc = write_output(cli, reproduce_report_json(cli.cfg, results))) return rc;
    if (capped && !cli.cfg.unsafe_full_elimination) return 3;
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for the fiber presentations"};
    app.require_subcommand(1);
    Cli cli;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--case", cli.cases,
                        "cycle type (e.g. 1,1,2); repeatable, default all five");
        sub->add_option("--degree-cap", cli.cfg.degree_cap, "cap elimination degree");
        sub->add_option("--timeout-sec", cli.cfg.timeout_sec, "cap elimination time");
        sub->add_option("--samples", cli.cfg.samples, "sample count for locus checks");
        sub->add_option("--seed", cli.cfg.seed, "RNG seed (default: OGFIBER_SEED or 17)")
            ->trigger_on_parse()
            ->each([&](const std::string&) { cli.seed_given = true; });
        sub->add_option("--jobs", cli.cfg.jobs, "concurrent cases");
        sub->add_option("--json", cli.cfg.json_path, "write the report here");
        sub->add_flag("--unsafe-full-elimination", cli.cfg.unsafe_full_elimination,
                      "attempt the heavy full eliminations instead of exiting 3 on a cap");
    };

    auto* c1 = app.add_subcommand("case", "per-case presentation reports");
    add_common(c1);
    auto* c2 = app.add_subcommand("check-point", "classify one rational point");
    c2->add_option("point", cli.point_path, "JSON file mapping variables to rationals")
        ->required();
    add_common(c2);
    auto* c3 = app.add_subcommand("reproduce", "run the acceptance battery");
    add_common(c3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c1->parsed()) return cmd_case(cli);
        if (c2->parsed()) return cmd_check_point(cli);
        return cmd_reproduce(cli);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
