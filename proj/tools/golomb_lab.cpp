#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "golomb/error.hpp"
#include "golomb/runner.hpp"
#include "golomb/suites.hpp"

using namespace golomb;

namespace {

int emit_report(const json& report, const std::string& out, const std::string& format) {
    std::string text = format == "csv" ? report_to_csv(report) : report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "cannot write " << out << "\n";
            return 1;
        }
        os << text;
        std::cout << "report written to " << out << "\n";
    }
    return findings_exit_code(report);
}

int run_single(const ConfigEntry& entry, std::uint64_t seed, const std::string& out,
               const std::string& format) {
    Config cfg;
    cfg.seed = seed;
    cfg.entries.push_back(entry);
    return emit_report(run_config(cfg), out, format);
}

void add_params(CLI::App* cmd, std::vector<std::string>& params) {
    cmd->add_option("--param", params, "extra key=value parameters")->take_all();
}

ConfigEntry entry_from(const std::string& op, std::map<std::string, std::string> base,
                       const std::vector<std::string>& extra) {
    for (const auto& kv : extra) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error(Err::ConfigError, "--param expects key=value, got '" + kv + "'");
        base[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return {op, std::move(base), 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golomb-lab: exact experiments on Golomb topologies of polynomial rings"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::string out, format = "json";
    app.add_option("--seed", seed, "seed for the seeded randomized pieces");
    app.add_option("--out", out, "write the report to this path");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

    // run
    auto* run_cmd = app.add_subcommand("run", "run an experiment config file");
    std::string config_path;
    run_cmd->add_option("config", config_path, "config file path")->required();

    // verify-certificate
    auto* verify_cmd =
        app.add_subcommand("verify-certificate", "replay every certificate in a report");
    std::string report_path;
    verify_cmd->add_option("report", report_path, "report file path")->required();

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run an acceptance suite");
    std::string suite_name;
    suite_cmd->add_option("name", suite_name, "closure|dirichlet|sequences|obstructions|battery|all")
        ->required();

    // field
    auto* field_cmd = app.add_subcommand("field", "inspect a field descriptor");
    std::string field_desc;
    field_cmd->add_option("--field", field_desc, "field descriptor, e.g. Fq:2^4")->required();

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "closure membership for a coprime coset");
    std::string cl_field, cl_center, cl_modulus, cl_y;
    long cl_depth = -1;
    closure_cmd->add_option("--field", cl_field)->required();
    closure_cmd->add_option("--center", cl_center)->required();
    closure_cmd->add_option("--modulus", cl_modulus)->required();
    closure_cmd->add_option("--y", cl_y)->required();
    closure_cmd->add_option("--bruteforce-depth", cl_depth, "also sweep the definition oracle");

    // dirichlet
    auto* dir_cmd = app.add_subcommand("dirichlet", "irreducibles in every coprime coset");
    std::string d_field;
    long d_maxdeg = 0, d_slack = 0;
    dir_cmd->add_option("--field", d_field)->required();
    dir_cmd->add_option("--max-modulus-degree", d_maxdeg)->required();
    dir_cmd->add_option("--degree-slack", d_slack)->required();

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "convergence of an r(X)-sequence");
    std::vector<std::string> seq_params;
    add_params(seq_cmd, seq_params);

    // fingerprint
    auto* fp_cmd = app.add_subcommand("fingerprint", "invariant bundle of a field");
    std::string fp_field;
    long fp_bound = 0, fp_nmax = 0;
    fp_cmd->add_option("--field", fp_field)->required();
    fp_cmd->add_option("--order-bound", fp_bound)->required();
    fp_cmd->add_option("--nmax", fp_nmax)->required();

    // battery
    auto* bat_cmd = app.add_subcommand("battery", "compare two fields through their fingerprints");
    std::string bat_f1, bat_f2;
    long bat_bound = 0, bat_nmax = 0;
    bat_cmd->add_option("--field1", bat_f1)->required();
    bat_cmd->add_option("--field2", bat_f2)->required();
    bat_cmd->add_option("--order-bound", bat_bound)->required();
    bat_cmd->add_option("--nmax", bat_nmax)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            Config cfg = load_config_file(config_path);
            if (app.count("--seed")) cfg.seed = seed;
            if (app.count("--out")) cfg.out = out;
            if (app.count("--format")) cfg.format = format;
            return emit_report(run_config(cfg), cfg.out, cfg.format);
        }
        if (*verify_cmd) {
            std::ifstream in(report_path);
            if (!in) throw Error(Err::ReportError, "cannot open report '" + report_path + "'");
            json report = json::parse(in, nullptr, true);
            auto checks = verify_report(report);
            if (checks.empty())
                std::cout << "warning: empty report, vacuous pass\n";
            bool all = true;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "claim " << c.index << " ("
                          << c.op << "): " << c.message << "\n";
                all = all && c.pass;
            }
            return all ? 0 : 1;
        }
        if (*suite_cmd) {
            auto results = run_suite(suite_name);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "C" << r.id << " " << r.name
                          << " (" << r.seconds << "s) - " << r.detail << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
        if (*field_cmd) return run_single({"field", {{"field", field_desc}}, 0}, seed, out, format);
        if (*closure_cmd) {
            std::map<std::string, std::string> p{{"field", cl_field},
                                                 {"center", cl_center},
                                                 {"modulus", cl_modulus},
                                                 {"y", cl_y}};
            if (cl_depth >= 0) p["bruteforce_depth"] = std::to_string(cl_depth);
            return run_single({"closure", std::move(p), 0}, seed, out, format);
        }
        if (*dir_cmd) {
            return run_single({"dirichlet",
                               {{"field", d_field},
                                {"max_modulus_degree", std::to_string(d_maxdeg)},
                                {"degree_slack", std::to_string(d_slack)}},
                               0},
                              seed, out, format);
        }
        if (*seq_cmd) return run_single(entry_from("sequence", {}, seq_params), seed, out, format);
        if (*fp_cmd) {
            return run_single({"fingerprint",
                               {{"field", fp_field},
                                {"order_bound", std::to_string(fp_bound)},
                                {"n_max", std::to_string(fp_nmax)}},
                               0},
                              seed, out, format);
        }
        if (*bat_cmd) {
            return run_single({"battery",
                               {{"field1", bat_f1},
                                {"field2", bat_f2},
                                {"order_bound", std::to_string(bat_bound)},
                                {"n_max", std::to_string(bat_nmax)}},
                               0},
                              seed, out, format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
