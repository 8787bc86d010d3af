#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lethargy/runner.hpp"

using namespace lethargy;
using nlohmann::json;

namespace {

json c0_config() {
    return {{"task", "witness"}, {"scheme", "interleaved-c0"}, {"eps", {{"rule", "geometric"}, {"length", 10}, {"ratio", 0.5}}}};
}

std::string without_timestamp(json r) {
    r.erase("timestamp");
    return r.dump();
}

}  // namespace

TEST_SUITE("runner") {

TEST_CASE("overrides") {
    json cfg = {{"task", "profile"}, {"aqr", {{"r", 1}}}};
    apply_override(cfg, "n_max=7");
    apply_override(cfg, "aqr.q=3.5");
    apply_override(cfg, "element.fn=abs");
    apply_override(cfg, "scheme=\"rank\"");
    CHECK(cfg["n_max"] == 7);
    CHECK(cfg["aqr"]["q"] == 3.5);
    CHECK(cfg["aqr"]["r"] == 1);
    CHECK(cfg["element"]["fn"] == "abs");
    CHECK(cfg["scheme"] == "rank");
    CHECK_THROWS_AS(apply_override(cfg, "novalue"), UsageError);
    CHECK_THROWS_AS(apply_override(cfg, "a..b=1"), UsageError);
}

TEST_CASE("config-hash") {
    CHECK(config_hash(c0_config()) == config_hash(c0_config()));
    json other = c0_config();
    other["eps"]["length"] = 11;
    CHECK(config_hash(other) != config_hash(c0_config()));
    CHECK(config_hash(json::object()).size() == 16);
}

TEST_CASE("witness-run-and-replay") {
    RunOutcome r = run_experiment(c0_config());
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report.at("verified").get<bool>());
    CHECK(r.report.at("version") == kVersion);
    CHECK(r.report.at("config_hash") == config_hash(c0_config()));
    json details;
    CHECK(replay_report(r.report, &details) == kExitOk);
    CHECK(details.at("mismatches").empty());

    json tampered = r.report;
    tampered["claims"][2]["bound"] = tampered["claims"][2]["bound"].get<double>() + 0.01;
    CHECK(replay_report(tampered) == kExitVerification);

    json dropped = r.report;
    dropped["claims"].erase(0);
    CHECK(replay_report(dropped) == kExitVerification);

    json old = r.report;
    old["version"] = "0.1.0";
    CHECK_THROWS_AS(replay_report(old), IncompatibleVersion);
    json schema = r.report;
    schema["schema"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(replay_report(schema), IncompatibleVersion);
}

TEST_CASE("byte-stable-reports") {
    json cfg = {{"task", "density"}, {"scheme", "orthonormal-nterm"}, {"n_max", 3}, {"seed", 5}, {"probes", 2}};
    RunOutcome a = run_experiment(cfg), b = run_experiment(cfg);
    CHECK(without_timestamp(a.report) == without_timestamp(b.report));
}

TEST_CASE("usage-errors") {
    CHECK_THROWS_AS(run_experiment({{"task", "nope"}}), UsageError);
    CHECK_THROWS_AS(run_experiment({{"scheme", "rank"}}), UsageError);
    CHECK_THROWS_AS(run_experiment({{"task", "profile"}, {"scheme", "monomial"}, {"element", "abs"}}), UsageError);
    CHECK_THROWS_AS(run_experiment({{"task", "density"}, {"scheme", "monomial"}, {"n_max", 2}}), UsageError);
    CHECK_THROWS_AS(run_experiment({{"task", "profile"}, {"scheme", "unknown-scheme"}, {"n_max", 2}, {"element", "abs"}}),
                    UsageError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), UsageError);
}

TEST_CASE("profile-files") {
    auto dir = std::filesystem::temp_directory_path() / "lethargy_runner_test";
    std::filesystem::remove_all(dir);
    json cfg = {{"task", "profile"}, {"scheme", "monomial-l2"}, {"element", {{"fn", "abs"}}}, {"n_max", 5},
                {"aqr", {{"r", 1.0}, {"q", 2.0}}}};
    RunOutcome r = run_experiment(cfg, dir.string());
    CHECK(r.exit_code == kExitOk);
    CHECK(std::filesystem::exists(dir / "profile_report.json"));
    std::ifstream csv(dir / "profile.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header.rfind("n,value", 0) == 0);
    std::ifstream dat(dir / "profile.dat");
    double n = -1, v = -1;
    dat >> n >> v;
    CHECK(n == 0);
    CHECK(v > 0);
    CHECK(r.report.at("payload").contains("aqr"));
}

TEST_CASE("quantizer-shapiro-report") {
    json cfg = {{"task", "shapiro"}, {"scheme", "quantizer"}, {"n_max", 6}, {"seed", 1}, {"probes", 4}};
    RunOutcome r = run_experiment(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["payload"]["shapiro"]["verdict"] == "Shapiro-fails");
}

TEST_CASE("list") {
    json l = list_schemes();
    CHECK(l.size() == scheme_registry().size());
    for (const auto& e : l) CHECK(e.contains("gap_rule"));
}

}
