#include "lethargy/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lethargy/analyze.hpp"
#include "lethargy/solve.hpp"
#include "lethargy/witness.hpp"

namespace lethargy {

using nlohmann::json;

namespace {

struct Claim {
    std::string id;
    std::size_t n = 0;
    std::string relation;
    double bound = 0.0;
    double tol = 0.0;
    double computed = 0.0;
    std::string method = "solver";

    bool verified() const { return check_relation(relation, computed, bound, tol); }
    json to_json() const {
        return {{"id", id},       {"n", n},           {"relation", relation}, {"bound", bound},
                {"tol", tol},     {"computed", computed}, {"method", method}, {"verified", verified()}};
    }
};

struct TaskResult {
    json payload = json::object();
    std::vector<Claim> claims;
    std::vector<std::pair<std::string, std::string>> files;  // name, content
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::size_t need_size(const json& cfg, const char* key) {
    if (!cfg.contains(key)) throw UsageError(std::string("config is missing '") + key + "'");
    try {
        return cfg.at(key).get<std::size_t>();
    } catch (const json::exception&) {
        throw UsageError(std::string("config field '") + key + "' must be a non-negative integer");
    }
}

std::uint64_t need_seed(const json& cfg) {
    if (!cfg.contains("seed")) throw UsageError("config is missing 'seed' (required for randomized tasks)");
    return cfg.at("seed").get<std::uint64_t>();
}

ApproximationScheme scheme_of(const json& cfg) {
    if (!cfg.contains("scheme")) throw UsageError("config is missing 'scheme'");
    try {
        return build_scheme(cfg.at("scheme"));
    } catch (const ValidationError& e) {
        throw UsageError(std::string("unresolvable scheme descriptor: ") + e.what());
    }
}

void add_witness_claims(TaskResult& r, const Witness& w) {
    for (std::size_t i = 0; i < w.bounds.size(); ++i) {
        const auto& b = w.bounds[i];
        r.claims.push_back({b.tag + "/n=" + std::to_string(b.n) + "/#" + std::to_string(i), b.n, b.relation, b.bound,
                            b.tol, b.computed, b.method});
    }
}

std::string two_column(const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream os;
    for (const auto& [a, b] : rows) os << fmt(a) << ' ' << fmt(b) << '\n';
    return os.str();
}

// ---------------------------------------------------------------- tasks

TaskResult task_profile(const json& cfg) {
    std::size_t n_max = need_size(cfg, "n_max");
    ApproximationScheme s = scheme_of(cfg);
    if (!cfg.contains("element")) throw UsageError("config is missing 'element'");
    Element x = element_from_config(s, cfg.at("element"));
    SolveOptions opt;
    opt.seed = cfg.value("seed", std::uint64_t{1});
    ErrorProfile p = error_profile(s, x, std::min(n_max, s.max_level()), opt);
    TaskResult r;
    r.payload["profile"] = p.to_json();
    const double tol = 1e-9 * std::max(1.0, p.x_norm);
    std::vector<std::pair<double, double>> plot;
    for (const auto& e : p.entries) {
        if (!e.error.empty()) continue;
        r.claims.push_back({"profile-upper/n=" + std::to_string(e.n), e.n, "<=", e.value, tol, e.value});
        if (e.status == FitStatus::exact)
            r.claims.push_back({"profile-lower/n=" + std::to_string(e.n), e.n, ">=", e.value, tol, e.lower});
        plot.emplace_back(static_cast<double>(e.n), e.value);
    }
    if (cfg.contains("aqr")) {
        const auto& a = cfg.at("aqr");
        double q = a.value("q", 2.0);
        if (a.contains("q") && a.at("q").is_string()) q = kInf;
        TailModel tail;
        if (a.contains("tail_ratio")) tail = TailModel::geometric(a.at("tail_ratio").get<double>());
        r.payload["aqr"] = aqr_norm(p, a.value("r", 1.0), q, tail).to_json();
    }
    if (cfg.contains("eps")) {
        NullSequence eps = sequence_from_json(cfg.at("eps"));
        r.payload["weighted_sup_norm"] = weighted_sup_norm(p.values(), eps, cfg.value("m", std::size_t{0}));
    }
    r.files.push_back({"profile.csv", p.to_csv()});
    r.files.push_back({"profile.dat", two_column(plot)});
    return r;
}

json witness_params(const json& cfg) {
    if (cfg.contains("witness")) {
        json p = cfg.at("witness");
        if (!p.contains("type")) throw UsageError("witness config needs a 'type'");
        return p;
    }
    if (!cfg.contains("scheme")) throw UsageError("witness task needs 'witness' or 'scheme'");
    json d = resolve_scheme(cfg.at("scheme"));
    std::string kind = d.at("kind").get<std::string>();
    if (kind == "interleaved-c0") {
        if (!cfg.contains("eps")) throw UsageError("interleaved-c0 witness needs 'eps'");
        return {{"type", "c0"}, {"eps", cfg.at("eps")}, {"dim_cap", d.value("dim", std::size_t{64})}};
    }
    if (kind == "quantizer")
        return {{"type", "quantizer"}, {"m", d.value("m", json("n"))}, {"levels", cfg.value("n_max", std::size_t{8}) + 1}};
    throw UsageError("no default witness for scheme kind '" + kind + "'; give a 'witness' object");
}

bool randomized_witness(const std::string& type) {
    return type == "haar-bumps" || type == "bv" || type == "ridge" || type == "wavelet" || type == "translates" ||
           type == "slow-decay";
}

TaskResult task_witness(const json& cfg) {
    json p = witness_params(cfg);
    std::string type = p.at("type").get<std::string>();
    if (randomized_witness(type) && !p.contains("seed")) p["seed"] = need_seed(cfg);
    Witness w;
    try {
        w = witness_from_params(p);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad witness parameters: ") + e.what());
    }
    TaskResult r;
    r.payload["witness"] = w.to_json(false);
    add_witness_claims(r, w);
    r.files.push_back({"witness.json", w.to_json(true).dump(2) + "\n"});
    std::ostringstream csv;
    csv << "n,value,status\n";
    for (const auto& b : w.bounds) csv << b.n << ',' << fmt(b.computed) << ',' << (b.verified ? "verified" : "failed") << '\n';
    r.files.push_back({"witness.csv", csv.str()});
    return r;
}

TaskResult task_density(const json& cfg) {
    std::size_t n_max = need_size(cfg, "n_max");
    std::uint64_t seed = need_seed(cfg);
    ApproximationScheme s = scheme_of(cfg);
    n_max = std::min(n_max, s.max_level());
    std::size_t probes = cfg.value("probes", std::size_t{6});
    SolveOptions opt;
    opt.seed = seed;
    TaskResult r;
    json certs = json::array();
    std::ostringstream csv;
    csv << "n,value,status\n";
    std::vector<std::pair<double, double>> plot;
    const double tol = s.space.carrier == Carrier::grid ? 1e-3 : 1e-9;
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto pool = density_candidates(s, n, seed, probes);
        DensityCertificate c = density_lower_bound(s, n, pool, opt);
        DensityUpper u = density_upper_estimate(s, n, pool, opt);
        json cj = c.to_json();
        cj["upper"] = u.value;
        cj["upper_label"] = u.label;
        certs.push_back(cj);
        // Independent re-run of the solver on the certificate element.
        double again = best_approx(s, c.element, n, opt).lower;
        r.claims.push_back({"density-lower/n=" + std::to_string(n), n, ">=", c.bound, tol, again});
        if (u.certified) r.claims.push_back({"density-upper/n=" + std::to_string(n), n, "<=", u.value, tol, c.bound, "closed-form"});
        csv << n << ',' << fmt(c.bound) << ',' << to_string(c.status) << '\n';
        plot.emplace_back(static_cast<double>(n), c.bound);
    }
    r.payload["certificates"] = certs;
    r.payload["profile_check"] = density_profile_check(s, n_max, cfg.value("pairing", "default"), seed, probes);
    r.files.push_back({"density.csv", csv.str()});
    r.files.push_back({"density.dat", two_column(plot)});
    return r;
}

double verdict_code(const std::string& v) {
    if (v == "consistent-with-Shapiro") return 0.0;
    if (v == "Shapiro-fails") return 1.0;
    return 2.0;
}

TaskResult task_shapiro(const json& cfg) {
    std::size_t n_max = need_size(cfg, "n_max");
    std::uint64_t seed = need_seed(cfg);
    ApproximationScheme s = scheme_of(cfg);
    ShapiroVerdict v = shapiro_check(s, n_max, cfg.value("probes", std::size_t{16}), seed);
    TaskResult r;
    r.payload["shapiro"] = v.to_json();
    const double tol = s.space.carrier == Carrier::grid ? 1e-3 : 1e-9;
    std::ostringstream csv;
    csv << "n,value,status\n";
    for (const auto& c : v.certificates) {
        r.claims.push_back({"shapiro-certificate/n=" + std::to_string(c.n), c.n, ">=", c.bound, tol,
                            best_approx(s, c.element, c.n).lower});
        csv << c.n << ',' << fmt(c.bound) << ',' << to_string(c.status) << '\n';
    }
    r.files.push_back({"certificates.csv", csv.str()});
    if (!v.envelope.empty()) {
        std::ostringstream env;
        env << "n,value,status\n";
        std::vector<std::pair<double, double>> plot;
        const auto& worst = v.log.at("worst_probe_ratio");
        for (std::size_t n = 0; n < v.envelope.size(); ++n) {
            env << n << ',' << fmt(v.envelope[n]) << ",certified\n";
            plot.emplace_back(static_cast<double>(n), v.envelope[n]);
            r.claims.push_back({"shapiro-envelope/n=" + std::to_string(n), n, "<=", v.envelope[n], 1e-12,
                                worst[n].get<double>()});
        }
        r.files.push_back({"envelope.csv", env.str()});
        r.files.push_back({"envelope.dat", two_column(plot)});
    }
    double code = verdict_code(v.verdict);
    r.claims.push_back({"shapiro-verdict", 0, "==", code, 0.0, code, "closed-form"});
    return r;
}

TaskResult task_audit(const json& cfg) {
    if (!cfg.contains("audit")) throw UsageError("audit task needs an 'audit' object");
    const json& a = cfg.at("audit");
    std::string type = a.value("type", "");
    TaskResult r;
    if (type == "dolzhenko") {
        json res = dolzhenko_audit(a.value("samples", std::size_t{1000}), a.value("max_degree", std::size_t{5}),
                                   a.value("nodes", std::size_t{2049}), need_seed(cfg), a.value("tol", 1e-3));
        r.payload["dolzhenko"] = res;
        r.claims.push_back({"dolzhenko-violations", 0, "<=", 0.0, 0.0, res.at("violations").get<double>(), "sampled"});
        return r;
    }
    ApproximationScheme s = scheme_of(cfg);
    std::uint64_t seed = need_seed(cfg);
    if (type == "jackson" || type == "bernstein") {
        std::size_t n_max = need_size(cfg, "n_max");
        std::string Y = a.value("seminorm", "same");
        std::size_t samples = a.value("samples", std::size_t{20});
        json res;
        try {
            res = type == "jackson" ? jackson_audit(s, Y, samples, n_max, seed) : bernstein_audit(s, Y, samples, n_max, seed);
        } catch (const ValidationError& e) {
            throw UsageError(e.what());
        }
        r.payload[type] = res;
        std::ostringstream csv;
        csv << "n,value,status\n";
        if (type == "jackson") {
            const auto& c = res.at("c");
            for (std::size_t n = 0; n < c.size(); ++n) {
                if (!c[n].is_number()) {
                    csv << n << ",inf,descriptive\n";
                    continue;
                }
                double v = c[n].get<double>();
                r.claims.push_back({"jackson-fit/n=" + std::to_string(n), n, "==", v, 1e-9 * std::max(1.0, v), v, "sampled"});
                csv << n << ',' << fmt(v) << ",descriptive\n";
            }
        } else {
            for (const auto& row : res.at("levels")) {
                double v = row.at("b").get<double>();
                std::size_t n = row.at("n").get<std::size_t>();
                r.claims.push_back({"bernstein-fit/n=" + std::to_string(n), n, "==", v, 1e-9 * std::max(1.0, v), v, "sampled"});
                csv << n << ',' << fmt(v) << ",descriptive\n";
            }
        }
        r.files.push_back({type + ".csv", csv.str()});
        return r;
    }
    if (type == "property-P") {
        std::vector<std::size_t> levels = a.value("levels", std::vector<std::size_t>{1, 2, 3, 4});
        json res = property_P_check(s, a.value("a", 2.0), a.value("b", 1.0), levels, seed);
        r.payload["property_P"] = res;
        for (const auto& row : res.at("levels")) {
            double v = row.at("certificate").get<double>();
            std::size_t n = row.at("n").get<std::size_t>();
            r.claims.push_back({"property-P-certificate/n=" + std::to_string(n), n, "==", v, 1e-9, v});
        }
        return r;
    }
    if (type == "brudnyi") {
        std::size_t n_max = need_size(cfg, "n_max");
        json per;
        double g = brudnyi_gap(s, n_max, a.value("samples", std::size_t{8}), seed, &per);
        r.payload["brudnyi"] = {{"gamma", g}, {"levels", per}};
        for (const auto& row : per) {
            double v = row.at("value").get<double>();
            std::size_t n = row.at("n").get<std::size_t>();
            r.claims.push_back({"brudnyi-level/n=" + std::to_string(n), n, "==", v, 1e-10, v});
        }
        return r;
    }
    if (type == "density-profile") {
        std::size_t n_max = need_size(cfg, "n_max");
        json res = density_profile_check(s, n_max, a.value("pairing", "default"), seed, a.value("probes", std::size_t{6}));
        r.payload["density_profile"] = res;
        r.claims.push_back({"density-profile-flags", 0, "<=", 0.0, 0.0, static_cast<double>(res.at("flagged").size()), "sampled"});
        return r;
    }
    throw UsageError("unknown audit type '" + type + "'");
}

TaskResult task_slowdecay(const json& cfg) {
    ApproximationScheme s = scheme_of(cfg);
    if (!cfg.contains("eps")) throw UsageError("slowdecay task needs 'eps'");
    std::size_t i_max = need_size(cfg, "i_max");
    Witness w = construct_slow_decay(s, sequence_from_json(cfg.at("eps")), i_max, need_seed(cfg));
    TaskResult r;
    r.payload["witness"] = w.to_json(false);
    add_witness_claims(r, w);
    r.files.push_back({"witness.json", w.to_json(true).dump(2) + "\n"});
    ErrorProfile p = error_profile(s, w.element, i_max);
    r.files.push_back({"slowdecay.csv", p.to_csv()});
    return r;
}

TaskResult task_validate(const json& cfg) {
    ApproximationScheme s = scheme_of(cfg);
    std::size_t trials = cfg.value("trials", std::size_t{1000});
    json res = validate_scheme(s, trials, need_seed(cfg));
    TaskResult r;
    r.payload["validation"] = res;
    r.claims.push_back({"validate-pass", 0, "==", 1.0, 0.0, res.at("pass").get<bool>() ? 1.0 : 0.0, "sampled"});
    return r;
}

TaskResult dispatch(const json& cfg) {
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
    if (!cfg.contains("task")) throw UsageError("config is missing 'task'");
    std::string task = cfg.at("task").get<std::string>();
    if (task == "profile") return task_profile(cfg);
    if (task == "witness") return task_witness(cfg);
    if (task == "density") return task_density(cfg);
    if (task == "shapiro") return task_shapiro(cfg);
    if (task == "audit") return task_audit(cfg);
    if (task == "slowdecay") return task_slowdecay(cfg);
    if (task == "validate") return task_validate(cfg);
    throw UsageError("unknown task '" + task + "'");
}

std::string timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string major_minor(const std::string& v) {
    auto a = v.find('.');
    auto b = a == std::string::npos ? a : v.find('.', a + 1);
    return v.substr(0, b);
}

}  // namespace

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
    }
}

void apply_override(json& cfg, const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("override must look like key=value: '" + assignment + "'");
    std::string key = assignment.substr(0, eq), raw = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw;
    }
    json* node = &cfg;
    std::size_t start = 0;
    while (true) {
        auto dot = key.find('.', start);
        std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) throw UsageError("empty key segment in '" + key + "'");
        if (dot == std::string::npos) {
            (*node)[part] = value;
            return;
        }
        if (!node->contains(part) || !(*node)[part].is_object()) (*node)[part] = json::object();
        node = &(*node)[part];
        start = dot + 1;
    }
}

std::string config_hash(const json& cfg) {
    std::string s = cfg.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Element element_from_config(const ApproximationScheme& s, const json& j) {
    const QuasiNormedSpace& X = s.space;
    if (j.is_string()) return element_from_config(s, json{{"fn", j}});
    if (j.contains("payload")) return element_from_json(j.at("payload"));
    if (j.contains("values")) {
        auto v = j.at("values").get<std::vector<double>>();
        return Element::real(Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    if (j.contains("sequence")) {
        NullSequence seq = sequence_from_json(j.at("sequence"));
        Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(X.sample_count()));
        for (std::size_t i = 0; i < std::min(seq.size(), X.sample_count()); ++i) v[static_cast<Eigen::Index>(i)] = seq[i];
        return Element::real(v);
    }
    if (j.contains("matrix")) {
        auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
        Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t k = 0; k < rows[i].size(); ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
        return Element::matrix(m);
    }
    if (j.contains("identity")) {
        auto d = static_cast<Eigen::Index>(X.dim);
        return Element::matrix(Eigen::MatrixXd::Identity(d, d) * j.at("identity").get<double>());
    }
    if (j.contains("random")) {
        Rng rng(j.at("random").get<std::uint64_t>());
        if (X.carrier == Carrier::matrix) {
            auto d = static_cast<Eigen::Index>(X.dim);
            Eigen::MatrixXd m(d, d);
            for (Eigen::Index a = 0; a < d; ++a)
                for (Eigen::Index b = 0; b < d; ++b) m(a, b) = rng.normal();
            return Element::matrix(m);
        }
        Eigen::VectorXd v(static_cast<Eigen::Index>(X.sample_count()));
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        return Element::real(v);
    }
    if (j.contains("witness")) return witness_from_params(j.at("witness")).element;
    if (j.contains("fn")) {
        if (X.carrier != Carrier::grid) throw UsageError("function elements need a grid carrier");
        const Grid& g = *X.grid;
        std::string fn = j.at("fn").get<std::string>();
        double c = j.value("center", 0.5), k = j.value("freq", 1.0);
        auto u = [&](double t) { return (t - g.a) / g.length(); };
        std::function<double(double)> f;
        if (fn == "abs") f = [&](double t) { return std::abs(u(t) - c); };
        else if (fn == "exp") f = [&](double t) { return std::exp(u(t)); };
        else if (fn == "sin") f = [&](double t) { return std::sin(6.283185307179586 * k * u(t)); };
        else if (fn == "runge") f = [&](double t) { double z = 2.0 * u(t) - 1.0; return 1.0 / (1.0 + 25.0 * z * z); };
        else if (fn == "ramp") f = [&](double t) { return 2.0 * u(t) - 1.0; };
        else if (fn == "sqrt") f = [&](double t) { return std::sqrt(std::abs(u(t) - c)); };
        else if (fn == "step") f = [&](double t) { return u(t) < c ? 0.0 : 1.0; };
        else throw UsageError("unknown element function '" + fn + "'");
        return sample(g, f);
    }
    throw UsageError("unrecognized element descriptor");
}

RunOutcome run_experiment(const json& cfg, const std::string& out_dir) {
    TaskResult t = dispatch(cfg);
    RunOutcome out;
    json claims = json::array();
    bool ok = true;
    for (const auto& c : t.claims) {
        claims.push_back(c.to_json());
        ok = ok && c.verified();
    }
    json& rep = out.report;
    rep["artifact"] = "lethargy";
    rep["version"] = kVersion;
    rep["schema"] = kSchemaVersion;
    rep["timestamp"] = timestamp();
    rep["config_hash"] = config_hash(cfg);
    rep["seed"] = cfg.value("seed", json(nullptr));
    rep["config"] = cfg;
    rep["task"] = cfg.at("task");
    rep["payload"] = t.payload;
    rep["claims"] = claims;
    rep["verified"] = ok;
    out.exit_code = ok ? kExitOk : kExitVerification;

    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw Error("cannot create output directory '" + out_dir + "': " + ec.message());
        auto write = [&](const std::string& name, const std::string& content) {
            std::filesystem::path p = std::filesystem::path(out_dir) / name;
            std::ofstream f(p);
            if (!f) throw Error("cannot write '" + p.string() + "'");
            f << content;
            if (!f) throw Error("write failed for '" + p.string() + "'");
            out.files.push_back(p.string());
        };
        std::string task = cfg.at("task").get<std::string>();
        write(task + "_report.json", rep.dump(2) + "\n");
        for (const auto& [name, content] : t.files) write(name, content);
    }
    return out;
}

int replay_report(const json& report, json* details) {
    if (!report.is_object() || !report.contains("version") || !report.contains("config"))
        throw UsageError("not a report: missing version or config");
    std::string v = report.at("version").get<std::string>();
    if (major_minor(v) != major_minor(kVersion) || report.value("schema", -1) != kSchemaVersion)
        throw IncompatibleVersion("incompatible report version " + v + " (this build reads " + major_minor(kVersion) +
                                  ".x, schema " + std::to_string(kSchemaVersion) + ")");
    TaskResult t = dispatch(report.at("config"));
    std::map<std::string, const Claim*> fresh;
    for (const auto& c : t.claims) fresh[c.id] = &c;
    json mism = json::array();
    std::size_t checked = 0;
    const auto& recorded = report.contains("claims") ? report.at("claims") : json::array();
    for (const auto& rc : recorded) {
        std::string id = rc.at("id").get<std::string>();
        auto it = fresh.find(id);
        if (it == fresh.end()) {
            mism.push_back({{"id", id}, {"reason", "claim not produced on replay"}});
            continue;
        }
        const Claim& c = *it->second;
        double rb = rc.at("bound").get<double>(), rt = rc.value("tol", 0.0);
        std::string rel = rc.at("relation").get<std::string>();
        ++checked;
        if (std::abs(rb - c.bound) > 1e-9 * std::max(1.0, std::abs(c.bound)) + c.tol) {
            mism.push_back({{"id", id}, {"reason", "recorded bound differs"}, {"recorded", rb}, {"recomputed", c.bound}});
        } else if (!check_relation(rel, c.computed, rb, rt)) {
            mism.push_back({{"id", id}, {"reason", "bound not reproduced"}, {"recorded", rb}, {"computed", c.computed}});
        }
    }
    if (recorded.size() != t.claims.size())
        mism.push_back({{"reason", "claim count differs"}, {"recorded", recorded.size()}, {"recomputed", t.claims.size()}});
    if (details) *details = {{"checked", checked}, {"mismatches", mism}};
    return mism.empty() ? kExitOk : kExitVerification;
}

json list_schemes() {
    json out = json::array();
    for (const auto& [name, desc] : scheme_registry().items()) {
        ApproximationScheme s = build_scheme(json(name));
        out.push_back({{"name", name}, {"kind", to_string(s.kind)}, {"gap_rule", s.gap_rule()},
                       {"space", s.space.describe()}, {"levels", s.max_level()}});
    }
    return out;
}

}  // namespace lethargy
