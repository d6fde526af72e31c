#include "bloch/cli/app.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "bloch/cli/catalog.hpp"
#include "bloch/compop.hpp"
#include "bloch/extremal.hpp"
#include "bloch/metrics.hpp"

namespace bloch::cli {

namespace {

struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<std::pair<std::string, std::string>> keys; // (flag, help)
};

const std::vector<std::pair<std::string, std::string>> kCommonKeys = {
    {"out", "write the report to PATH instead of stdout"},
    {"csv", "write evidence rows (parameter,value) to PATH"},
    {"plan-j", "radial ladder depth J, r_j = 1 - 2^-j"},
    {"tol", "relative tolerance of refinement loops"},
    {"seed", "random seed"},
};

const std::vector<CommandSpec>& commands()
{
    static const std::vector<CommandSpec> specs = {
        {"metric", "pseudo-hyperbolic and hyperbolic distance", {{"z", "RE,IM"}, {"w", "RE,IM"}}},
        {"hardy-norm",
         "Hardy p-norm (p = inf for the supremum), or the mean at one radius",
         {{"func", "function: catalog name, JSON file or inline JSON"},
          {"p", "exponent > 0 or inf"},
          {"radius", "evaluate M_p at this radius only"}}},
        {"bloch-seminorm",
         "weighted Bloch seminorm",
         {{"func", "function: catalog name, JSON file or inline JSON"},
          {"alpha", "alpha > 0"},
          {"beta", "beta"},
          {"omega", "majorant: id or pow:S"}}},
        {"gfunction",
         "Littlewood-Paley G-function along one ray",
         {{"func", "analytic function"},
          {"angle", "ray angle in radians"},
          {"norm-p", "also compare ||f||_p^p with the G-function integral (polynomials)"}}},
        {"lipschitz-scan",
         "largest Bloch-functional Lipschitz ratio over sampled pairs",
         {{"func", "function"}, {"pairs", "random pair count"}}},
        {"sharpness-witness", "extremal pair attaining 3 sqrt 3 / 2 - eps", {{"epsilon", "eps"}}},
        {"extremal-root", "root m of psi(m) = r0", {{"r0", "r0 in (0, 1]"}, {"alpha", "alpha > 0"}}},
        {"compop-criterion",
         "Bloch-to-Hardy composition criterion integral",
         {{"phi", "symbol"},
          {"alpha", "alpha > 0"},
          {"beta", "beta"},
          {"p", "p > 0"},
          {"omega", "majorant: id or pow:S"}}},
        {"compop-verdict",
         "Hardy-to-Bloch boundedness and compactness",
         {{"phi", "symbol"},
          {"alpha", "alpha > 0"},
          {"beta", "beta"},
          {"p", "p > 1"},
          {"omega", "majorant: id or pow:S"}}},
        {"bounded-below-probe",
         "sampled check of the bounded-below hypothesis",
         {{"phi", "symbol"},
          {"r", "r in (0, 2 sqrt 3 / 9)"},
          {"epsilon", "eps > 0"},
          {"samples", "target count"}}},
        {"catalog", "list catalog entries or print one descriptor", {{"name", "catalog name"}}},
    };
    return specs;
}

std::string json_to_text(const Json& v, const std::string& key)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number_integer() || v.is_number_unsigned()) {
        return v.dump();
    }
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return json_to_text(v[0], key) + "," + json_to_text(v[1], key);
    }
    if (v.is_object()) {
        return v.dump();
    }
    throw UsageError("config key '" + key + "' has an unsupported value");
}

// typed access to resolved values

bool has(const RunConfig& c, const std::string& key) { return c.values.count(key) != 0; }

double to_double(const std::string& text, const std::string& key)
{
    if (text == "inf" || text == "+inf") {
        return INFINITY;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) {
        throw UsageError("--" + key + ": expected a number, got '" + text + "'");
    }
    return v;
}

double get_double(const RunConfig& c, const std::string& key, double fallback)
{
    return has(c, key) ? to_double(c.values.at(key), key) : fallback;
}

double require_double(const RunConfig& c, const std::string& key)
{
    if (!has(c, key)) {
        throw UsageError("--" + key + " is required");
    }
    return to_double(c.values.at(key), key);
}

std::uint64_t to_count(const std::string& text, const std::string& key)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || text[0] == '-') {
        throw UsageError("--" + key + ": expected a non-negative integer, got '" + text + "'");
    }
    return v;
}

std::uint64_t get_count(const RunConfig& c, const std::string& key, std::uint64_t fallback)
{
    return has(c, key) ? to_count(c.values.at(key), key) : fallback;
}

Complex get_complex(const RunConfig& c, const std::string& key)
{
    if (!has(c, key)) {
        throw UsageError("--" + key + " is required");
    }
    const std::string& text = c.values.at(key);
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return {to_double(text, key), 0.0};
    }
    return {to_double(text.substr(0, comma), key), to_double(text.substr(comma + 1), key)};
}

DiskPoint get_point(const RunConfig& c, const std::string& key)
{
    const Complex z = get_complex(c, key);
    if (!DiskPoint::contains(z)) {
        throw RangeError("--" + key + " must lie in the open unit disk");
    }
    return DiskPoint(z);
}

Json function_document(const RunConfig& c, const std::string& key)
{
    if (!has(c, key)) {
        throw UsageError("--" + key + " is required");
    }
    const std::string& text = c.values.at(key);
    if (!text.empty() && text.front() == '{') {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw DescriptorError(std::string("inline descriptor is not valid JSON: ") + e.what());
        }
    }
    if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        try {
            return Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw DescriptorError("descriptor file '" + text + "' is not valid JSON: " + e.what());
        }
    }
    return catalog(text);
}

BlochParams get_params(const RunConfig& c)
{
    const double alpha = get_double(c, "alpha", 1.0);
    const double beta = get_double(c, "beta", 0.0);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw RangeError("--alpha must be > 0");
    }
    if (!std::isfinite(beta)) {
        throw RangeError("--beta must be finite");
    }
    const Majorant omega = parse_majorant(has(c, "omega") ? c.values.at("omega") : "id");
    return BlochParams(alpha, beta, omega);
}

double positive(double v, const std::string& key)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw RangeError("--" + key + " must be a finite number > 0");
    }
    return v;
}

double positive_or_inf(const RunConfig& c)
{
    const double p = get_double(c, "p", 2.0);
    if (!(p > 0.0)) {
        throw RangeError("--p must be > 0 or inf");
    }
    return p;
}

Json cplx(Complex z) { return Json::array({z.real(), z.imag()}); }

Json num(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

Json optional_num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

Json plan_json(const SamplingPlan& plan)
{
    Json j;
    j["angular_resolution"] = plan.angular_resolution;
    j["ladder_rungs"] = plan.ladder_rungs;
    j["refinement_tolerance"] = plan.refinement_tolerance;
    j["sup_radii"] = plan.sup_radii;
    j["sup_angles"] = plan.sup_angles;
    j["golden_iterations"] = plan.golden_iterations;
    return j;
}

Json evidence_json(const std::vector<EvidencePoint>& ev)
{
    Json arr = Json::array();
    for (const auto& e : ev) {
        arr.push_back(Json::array({num(e.parameter), num(e.value)}));
    }
    return arr;
}

Json estimate_json(const Estimate& e)
{
    Json j;
    j["verdict"] = to_string(e.verdict);
    j["value"] = num(e.value);
    j["resolution"] = num(e.resolution);
    j["argmax"] = cplx(e.argmax);
    j["evaluations"] = e.evaluations;
    return j;
}

Json criterion_json(const compop::CriterionReport& r)
{
    Json j;
    j["verdict"] = compop::to_string(r.verdict);
    j["estimate"] = optional_num(r.estimate);
    Json d;
    d["quadrature_nodes"] = r.diagnostics.quadrature_nodes;
    d["angular_nodes"] = r.diagnostics.angular_nodes;
    d["growth_slope"] = num(r.diagnostics.growth_slope);
    d["slope_margin"] = num(r.diagnostics.slope_margin);
    d["last_relative_change"] = num(r.diagnostics.last_relative_change);
    d["stabilization_margin"] = num(r.diagnostics.stabilization_margin);
    d["note"] = r.diagnostics.note;
    j["diagnostics"] = d;
    j["evidence"] = evidence_json(r.evidence);
    return j;
}

int verdict_exit(Verdict v) { return v == Verdict::inconclusive ? kExitInconclusive : kExitDefinitive; }

int criterion_exit(compop::CriterionVerdict v)
{
    return v == compop::CriterionVerdict::inconclusive ? kExitInconclusive : kExitDefinitive;
}

Report run_metric(const RunConfig& c)
{
    const DiskPoint z = get_point(c, "z");
    const DiskPoint w = get_point(c, "w");
    Report r;
    r.doc["rho"] = num(metrics::rho(z, w));
    r.doc["sigma"] = num(metrics::sigma(z, w));
    return r;
}

Report run_hardy_norm(const RunConfig& c)
{
    const double p = positive_or_inf(c);
    const HarmonicMap f = parse_function(function_document(c, "func"));
    Report r;
    r.doc["function"] = to_json(f);
    if (has(c, "radius")) {
        const double radius = get_double(c, "radius", 0.0);
        if (!(radius >= 0.0 && radius < 1.0)) {
            throw RangeError("--radius must lie in [0, 1)");
        }
        if (std::isinf(p)) {
            throw RangeError("--radius needs a finite p");
        }
        r.doc["mean"] = num(hardy_mean(f, p, radius, c.plan));
        return r;
    }
    const Estimate e = hardy_norm(f, p, c.plan);
    r.doc["estimate"] = estimate_json(e);
    r.evidence = e.evidence;
    r.exit_code = verdict_exit(e.verdict);
    return r;
}

Report run_bloch_seminorm(const RunConfig& c)
{
    const BlochParams params = get_params(c);
    const HarmonicMap f = parse_function(function_document(c, "func"));
    const Estimate e = bloch_seminorm(f, params, c.plan);
    Report r;
    r.doc["function"] = to_json(f);
    r.doc["estimate"] = estimate_json(e);
    r.evidence = e.evidence;
    r.exit_code = verdict_exit(e.verdict);
    return r;
}

Report run_gfunction(const RunConfig& c)
{
    const double angle = get_double(c, "angle", 0.0);
    if (!std::isfinite(angle)) {
        throw RangeError("--angle must be finite");
    }
    const bool check_norm = has(c, "norm-p");
    const double norm_p = check_norm ? positive(get_double(c, "norm-p", 2.0), "norm-p") : 2.0;
    const AnalyticMap f = parse_analytic(function_document(c, "func"));
    const GFunctionResult g = g_function(f, angle, c.plan);
    Report r;
    r.doc["function"] = to_json(f);
    r.doc["value"] = num(g.value);
    r.doc["divergent"] = g.divergent;
    r.doc["evaluations"] = g.evaluations;
    if (check_norm) {
        const GNormCheck check = g_norm_check(f, norm_p, c.plan);
        r.doc["hardy_p_power"] = num(check.hardy);
        r.doc["g_integral"] = num(check.g_integral);
    }
    r.evidence = g.partial;
    return r;
}

Report run_lipschitz_scan(const RunConfig& c)
{
    const std::uint64_t pairs = get_count(c, "pairs", 10000);
    if (pairs == 0) {
        throw RangeError("--pairs must be positive");
    }
    const HarmonicMap f = parse_function(function_document(c, "func"));
    const auto scan = extremal::lipschitz_scan(f, pairs, get_count(c, "seed", 1), c.plan);
    Report r;
    r.doc["function"] = to_json(f);
    r.doc["max_ratio"] = num(scan.max_ratio);
    r.doc["argmax_z1"] = cplx(scan.argmax_z1);
    r.doc["argmax_z2"] = cplx(scan.argmax_z2);
    r.doc["seminorm"] = num(scan.seminorm);
    r.doc["cap"] = num(scan.cap);
    r.doc["pairs_evaluated"] = scan.pairs_evaluated;
    r.doc["within_cap"] = scan.within_cap;
    return r;
}

Report run_sharpness_witness(const RunConfig& c)
{
    const double eps = require_double(c, "epsilon");
    if (!(eps > 0.0 && eps <= extremal::kSharpConstant)) {
        throw RangeError("--epsilon must lie in (0, 3 sqrt(3) / 2]");
    }
    const auto w = extremal::sharpness_witness(eps);
    Report r;
    r.doc["epsilon"] = num(w.epsilon);
    r.doc["m_star"] = num(w.m_star);
    r.doc["beta"] = num(w.beta);
    r.doc["m_root"] = num(w.m_root);
    r.doc["z1"] = cplx(w.z1);
    r.doc["z2"] = cplx(w.z2);
    r.doc["achieved_ratio"] = num(w.achieved_ratio);
    r.doc["target"] = num(w.target);
    r.doc["satisfied"] = w.satisfied;
    return r;
}

Report run_extremal_root(const RunConfig& c)
{
    const double r0 = get_double(c, "r0", 1.0);
    const double alpha = get_double(c, "alpha", 1.0);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw RangeError("--alpha must be > 0");
    }
    if (!(r0 > 0.0 && r0 <= 1.0)) {
        throw RangeError("--r0 must lie in (0, 1]");
    }
    const auto sol = extremal::m_root(r0, alpha);
    Report r;
    r.doc["a0"] = num(sol.a0);
    r.doc["m"] = num(sol.m);
    r.doc["residual"] = num(sol.residual);
    return r;
}

Report run_compop_criterion(const RunConfig& c)
{
    const BlochParams params = get_params(c);
    const double p = positive(get_double(c, "p", 2.0), "p");
    const AnalyticMap phi = parse_analytic(function_document(c, "phi"));
    const auto rep = compop::bloch_to_hardy_criterion(phi, params, p, c.plan);
    Report r;
    r.doc["symbol"] = to_json(phi);
    r.doc["criterion"] = criterion_json(rep);
    r.evidence = rep.evidence;
    r.exit_code = criterion_exit(rep.verdict);
    return r;
}

Report run_compop_verdict(const RunConfig& c)
{
    const BlochParams params = get_params(c);
    const double p = get_double(c, "p", 2.0);
    compop::require_hardy_to_bloch_range(params, p);
    const AnalyticMap phi = parse_analytic(function_document(c, "phi"));
    const auto rep = compop::hardy_to_bloch_verdict(phi, params, p, c.plan);
    Report r;
    r.doc["symbol"] = to_json(phi);
    r.doc["sup_abs_phi"] = num(rep.sup_abs_phi);
    r.doc["boundedness"] = criterion_json(rep.boundedness);
    r.doc["compactness"] = criterion_json(rep.compactness);
    r.evidence = rep.boundedness.evidence;
    r.exit_code = std::max(criterion_exit(rep.boundedness.verdict),
                           criterion_exit(rep.compactness.verdict));
    return r;
}

Report run_bounded_below_probe(const RunConfig& c)
{
    const double radius = require_double(c, "r");
    if (!(radius > 0.0 && radius < compop::kProbeRadiusLimit)) {
        throw RangeError("--r must lie in (0, 2 sqrt(3) / 9 = 0.3849)");
    }
    const double eps = positive(require_double(c, "epsilon"), "epsilon");
    const std::uint64_t samples = get_count(c, "samples", 1000);
    if (samples == 0) {
        throw RangeError("--samples must be positive");
    }
    const AnalyticMap phi = parse_analytic(function_document(c, "phi"));
    const auto probe =
        compop::bounded_below_probe(phi, radius, eps, samples, get_count(c, "seed", 1), c.plan);
    Report r;
    r.doc["symbol"] = to_json(phi);
    r.doc["fraction"] = num(probe.fraction);
    r.doc["satisfied"] = probe.satisfied;
    r.doc["samples"] = probe.samples;
    r.doc["implied_constant"] = optional_num(probe.implied_constant);
    r.doc["min_best_ratio"] = num(probe.min_best_ratio);
    r.doc["note"] = probe.note;
    return r;
}

Report run_catalog(const RunConfig& c)
{
    Report r;
    if (has(c, "name")) {
        r.doc["descriptor"] = catalog(c.values.at("name"));
        return r;
    }
    Json list = Json::array();
    for (const auto& e : catalog_entries()) {
        list.push_back({{"name", e.pattern}, {"description", e.description}});
    }
    r.doc["entries"] = list;
    return r;
}

void write_csv(const std::string& path, const std::vector<EvidencePoint>& ev)
{
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot open --csv path '" + path + "'");
    }
    out << "parameter,value\n";
    char buf[96];
    for (const auto& e : ev) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", e.parameter, e.value);
        out << buf;
    }
}

} // namespace

RunConfig parse_config(const std::vector<std::string>& args)
{
    CLI::App app{"Numerical toolkit for Bloch-type spaces and composition operators", kToolName};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::map<std::string, CLI::Option*>> options;
    std::map<std::string, std::string> config_paths;
    std::map<std::string, bool> timing;

    for (const auto& spec : commands()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        auto& slots = raw[spec.name];
        auto& opts = options[spec.name];
        for (const auto& [key, help] : spec.keys) {
            if (spec.name == "catalog" && key == "name") {
                opts[key] = sub->add_option(key, slots[key], help);
            } else {
                opts[key] = sub->add_option("--" + key, slots[key], help);
            }
        }
        for (const auto& [key, help] : kCommonKeys) {
            opts[key] = sub->add_option("--" + key, slots[key], help);
        }
        sub->add_option("--config", config_paths[spec.name], "JSON document of parameters");
        sub->add_flag("--timing", timing[spec.name], "include wall-clock time in the report");
    }

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    const auto& opts = options[cfg.command];
    const auto& slots = raw[cfg.command];

    std::set<std::string> allowed;
    for (const auto& [key, opt] : opts) {
        allowed.insert(key);
    }
    allowed.insert("timing");

    cfg.timing = timing[cfg.command];
    const std::string& config_path = config_paths[cfg.command];
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw UsageError("cannot read --config '" + config_path + "'");
        }
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw UsageError("--config is not valid JSON: " + std::string(e.what()));
        }
        if (!doc.is_object()) {
            throw UsageError("--config must hold a JSON object");
        }
        for (const auto& [key, value] : doc.items()) {
            if (!allowed.count(key)) {
                throw UsageError("unknown config key '" + key + "' for " + cfg.command);
            }
            if (key == "timing") {
                if (!value.is_boolean()) {
                    throw UsageError("config key 'timing' must be a boolean");
                }
                cfg.timing = cfg.timing || value.get<bool>();
                continue;
            }
            cfg.values[key] = json_to_text(value, key);
        }
    }
    for (const auto& [key, opt] : opts) {
        if (opt->count() > 0) {
            cfg.values[key] = slots.at(key);
        }
    }

    if (has(cfg, "plan-j")) {
        const auto j = to_count(cfg.values.at("plan-j"), "plan-j");
        if (j < 6 || j > 40) {
            throw RangeError("--plan-j must lie in [6, 40]");
        }
        cfg.plan.ladder_rungs = static_cast<int>(j);
    }
    if (has(cfg, "tol")) {
        const double tol = to_double(cfg.values.at("tol"), "tol");
        if (!(tol > 0.0 && tol < 1.0)) {
            throw RangeError("--tol must lie in (0, 1)");
        }
        cfg.plan.refinement_tolerance = tol;
    }
    if (has(cfg, "out")) {
        cfg.out_path = cfg.values.at("out");
    }
    if (has(cfg, "csv")) {
        cfg.csv_path = cfg.values.at("csv");
    }
    // alpha is range-checked up front for every command that takes it
    if (has(cfg, "alpha")) {
        const double alpha = to_double(cfg.values.at("alpha"), "alpha");
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw RangeError("--alpha must be > 0");
        }
    }
    if (cfg.command == "bounded-below-probe" && has(cfg, "r")) {
        const double r = to_double(cfg.values.at("r"), "r");
        if (!(r > 0.0 && r < compop::kProbeRadiusLimit)) {
            throw RangeError("--r must lie in (0, 2 sqrt(3) / 9 = 0.3849)");
        }
    }
    cfg.plan.validate();
    return cfg;
}

Report run(const RunConfig& c)
{
    Report r;
    if (c.command == "metric") {
        r = run_metric(c);
    } else if (c.command == "hardy-norm") {
        r = run_hardy_norm(c);
    } else if (c.command == "bloch-seminorm") {
        r = run_bloch_seminorm(c);
    } else if (c.command == "gfunction") {
        r = run_gfunction(c);
    } else if (c.command == "lipschitz-scan") {
        r = run_lipschitz_scan(c);
    } else if (c.command == "sharpness-witness") {
        r = run_sharpness_witness(c);
    } else if (c.command == "extremal-root") {
        r = run_extremal_root(c);
    } else if (c.command == "compop-criterion") {
        r = run_compop_criterion(c);
    } else if (c.command == "compop-verdict") {
        r = run_compop_verdict(c);
    } else if (c.command == "bounded-below-probe") {
        r = run_bounded_below_probe(c);
    } else if (c.command == "catalog") {
        r = run_catalog(c);
    } else {
        throw UsageError("unknown command '" + c.command + "'");
    }

    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = c.command;
    Json params = Json::object();
    for (const auto& [key, value] : c.values) {
        if (key != "out" && key != "csv") {
            params[key] = value;
        }
    }
    doc["parameters"] = params;
    doc["plan"] = plan_json(c.plan);
    doc["result"] = std::move(r.doc);
    doc["exit_status"] = r.exit_code;
    r.doc = normalize_numbers(doc);
    return r;
}

Json normalize_numbers(const Json& doc)
{
    if (doc.is_number_float()) {
        const double v = doc.get<double>();
        if (!std::isfinite(v)) {
            return num(v);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return std::strtod(buf, nullptr);
    }
    if (doc.is_array()) {
        Json out = Json::array();
        for (const auto& v : doc) {
            out.push_back(normalize_numbers(v));
        }
        return out;
    }
    if (doc.is_object()) {
        Json out = Json::object();
        for (const auto& [key, v] : doc.items()) {
            out[key] = normalize_numbers(v);
        }
        return out;
    }
    return doc;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        const RunConfig cfg = parse_config(args);
        const auto start = std::chrono::steady_clock::now();
        Report report = run(cfg);
        if (cfg.timing) {
            const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            report.doc["wall_clock_seconds"] = normalize_numbers(Json(took.count()));
        }
        const std::string text = report.doc.dump(2) + "\n";
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.out_path);
            if (!file) {
                throw UsageError("cannot open --out path '" + cfg.out_path + "'");
            }
            file << text;
        }
        if (!cfg.csv_path.empty()) {
            write_csv(cfg.csv_path, report.evidence);
        }
        return report.exit_code;
    } catch (const HelpRequested& h) {
        out << h.text();
        return kExitDefinitive;
    } catch (const extremal::ScanError& e) {
        err << "error: " << e.what() << "\n";
        return e.reason() == extremal::ScanError::Reason::inconclusive_seminorm ? kExitInconclusive
                                                                              : kExitError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << "\n";
    } catch (const compop::ParameterRange& e) {
        err << "range error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitError;
}

} // namespace bloch::cli
