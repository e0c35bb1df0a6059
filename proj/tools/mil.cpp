#include "mil/scenarios.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for modular invariant rings of finite matrix groups"};
    app.set_version_flag("--version", std::string(mil::kToolkitVersion));
    app.footer("The MIL_CAP environment variable bounds group enumeration (default 1000000).");
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "run a verification scenario");
    std::string scenario;
    run->add_option("scenario", scenario, "scenario name, or \"all\"")->required();
    unsigned q = 0, n = 0, m = 0, p = 0;
    run->add_option("--q", q, "field size parameter");
    run->add_option("--n", n, "block size parameter");
    run->add_option("--m", m, "dimension parameter");
    run->add_option("--p", p, "characteristic parameter");
    unsigned max_degree = 0;
    run->add_option("--max-degree", max_degree, "override the scenario's degree depth");
    unsigned budget = 1;
    run->add_option("--budget", budget, "multiplier on the certification search budgets");
    unsigned seed = 0;
    run->add_option("--seed", seed, "seed for the randomized parameter searches");
    unsigned jobs = 1;
    run->add_option("--jobs", jobs, "number of scenarios run concurrently");
    std::string format = "text";
    run->add_option("--report", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    bool recheck = false;
    run->add_flag("--recheck", recheck, "reparse and reverify every reported witness");
    bool timings = false;
    run->add_flag("--timings", timings, "include wall-clock seconds in the output");

    CLI::App* list = app.add_subcommand("list", "list the built-in scenarios");

    CLI::App* group = app.add_subcommand("group", "describe a named group construction");
    std::string spec;
    group->add_option("spec", spec, "family spec, e.g. gu3:q=2:sub=Htilde")->required();
    bool describe = false;
    group->add_flag("--describe", describe, "print the group's profile");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (list->parsed()) {
            for (const mil::ScenarioInfo& info : mil::scenario_catalog())
                std::cout << info.name << "\n    " << info.summary << "\n    [" << info.section
                          << "] \"" << info.anchor << "\"\n";
            std::cout << "all\n    every scenario above, in catalog order\n";
            return 0;
        }
        if (group->parsed()) {
            std::cout << mil::describe_group(spec);
            return 0;
        }
        mil::ScenarioParams params;
        if (run->count("--q")) params.q = q;
        if (run->count("--n")) params.n = n;
        if (run->count("--m")) params.m = m;
        if (run->count("--p")) params.p = p;
        params.max_degree = max_degree;
        params.budget = budget;
        params.seed = seed;
        params.recheck = recheck;
        std::vector<std::string> names;
        if (scenario == "all")
            for (const mil::ScenarioInfo& info : mil::scenario_catalog()) names.push_back(info.name);
        else
            names.push_back(scenario);
        std::vector<mil::ScenarioReport> reports = mil::run_scenarios(names, params, jobs);
        if (format == "json")
            std::cout << mil::reports_to_json(reports, seed, timings);
        else
            std::cout << mil::reports_to_text(reports, timings);
        switch (mil::combine_status(reports)) {
        case mil::ClaimStatus::pass: return 0;
        case mil::ClaimStatus::fail: return 2;
        default: return 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
