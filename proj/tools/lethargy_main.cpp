#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lethargy/runner.hpp"
#include "lethargy/witness.hpp"

using nlohmann::json;
using namespace lethargy;

namespace {

json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw UsageError(std::string("cannot read ") + what + " '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string(what) + " '" + path + "' is not valid JSON: " + e.what());
    }
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& sets, const std::string& out_dir) {
    json cfg = load_config(config_path);
    for (const auto& s : sets) apply_override(cfg, s);
    RunOutcome r = run_experiment(cfg, out_dir);
    std::size_t total = r.report.at("claims").size(), failed = 0;
    for (const auto& c : r.report.at("claims"))
        if (!c.at("verified").get<bool>()) {
            ++failed;
            std::cerr << "unverified: " << c.at("id").get<std::string>() << " computed " << c.at("computed")
                      << ' ' << c.at("relation").get<std::string>() << ' ' << c.at("bound") << '\n';
        }
    if (out_dir.empty()) std::cout << r.report.dump(2) << '\n';
    else
        for (const auto& f : r.files) std::cout << f << '\n';
    std::cerr << "claims: " << total - failed << '/' << total << " verified\n";
    return r.exit_code;
}

int cmd_replay(const std::string& path) {
    json report = read_json_file(path, "report");
    json details;
    int code = replay_report(report, &details);
    std::cout << details.dump(2) << '\n';
    std::cerr << (code == kExitOk ? "replay: all claims reproduced\n" : "replay: claims not reproduced\n");
    return code;
}

int cmd_list(bool as_json) {
    json list = list_schemes();
    if (as_json) {
        std::cout << list.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& s : list)
        std::printf("%-22s %-16s %-40s levels=%-5zu %s\n", s.at("name").get<std::string>().c_str(),
                    s.at("kind").get<std::string>().c_str(), s.at("gap_rule").get<std::string>().c_str(),
                    s.at("levels").get<std::size_t>(), s.at("space").get<std::string>().c_str());
    return kExitOk;
}

int cmd_verify(const std::string& path) {
    json bundle = read_json_file(path, "witness bundle");
    json res = verify_witness_bundle(bundle);
    std::cout << res.dump(2) << '\n';
    return res.at("ok").get<bool>() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lethargy: best-approximation error profiles, witnesses and density audits"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, out_dir, report_path, witness_path;
    std::vector<std::string> sets;
    bool list_json = false;

    auto* run = app.add_subcommand("run", "Run an experiment config and write its report");
    run->add_option("--config", config_path, "JSON experiment config")->required();
    run->add_option("--set", sets, "Override a config field, key.path=value (repeatable)");
    run->add_option("--out", out_dir, "Output directory (report, CSV, plot data); stdout when omitted");

    auto* replay = app.add_subcommand("replay", "Re-verify every claim recorded in a report");
    replay->add_option("report", report_path, "Report JSON written by run")->required();

    auto* list = app.add_subcommand("list-schemes", "List the named scheme descriptors");
    list->add_flag("--json", list_json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Rebuild a witness bundle and check its bounds");
    verify->add_option("--witness", witness_path, "Witness bundle JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run) return cmd_run(config_path, sets, out_dir);
        if (*replay) return cmd_replay(report_path);
        if (*list) return cmd_list(list_json);
        if (*verify) return cmd_verify(witness_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IncompatibleVersion& e) {
        std::cerr << "incompatible report: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoSolver& e) {
        std::cerr << "no solver: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "malformed config: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
