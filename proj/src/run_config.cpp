#include "plateuq/run_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "plateuq/output.hpp"

namespace plateuq {

namespace {

using nlohmann::json;

FuzzyParams default_params() {
    return {TriangularFuzzyNumber(1.80e-4, 2.17e-4, 2.50e-4),
            TriangularFuzzyNumber(0.030, 0.040, 0.050),
            TriangularFuzzyNumber(30.0, 40.0, 50.0)};
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw validation_error("config: " + path + ": " + msg);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) { ok = true; break; }
        if (!ok) fail(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
    }
}

double get_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

TriangularFuzzyNumber parse_tfn(const json& v, const std::string& path) {
    try {
        if (v.is_number())
            return TriangularFuzzyNumber::crisp(v.get<double>());
        if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() &&
            v[2].is_number())
            return TriangularFuzzyNumber(v[0].get<double>(), v[1].get<double>(),
                                         v[2].get<double>());
    } catch (const validation_error& e) {
        fail(path, e.what());
    }
    fail(path, "expected a number or [left, nominal, right]");
}

}  // namespace

RunConfig::RunConfig() : params(default_params()) {}

GridSpec RunConfig::make_grid(const FuzzySet& fuzzy) const {
    double step;
    if (dt.has_value()) {
        step = *dt;
    } else {
        const IntervalParams box =
            params_at_alpha(effective_params(fuzzy, params), levels.widest());
        const Interval c = iv_div(box.nu, iv_mul(box.h, box.h, options.arithmetic),
                                  options.arithmetic);
        step = resolve_dt(c.hi, nodes, record_times, d_max);
    }
    return GridSpec(nodes, step, record_times);
}

RunConfig parse_config(const std::string& json_text) {
    RunConfig cfg;

    std::string trimmed = json_text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    json root = json::object();
    if (!trimmed.empty()) {
        try {
            root = json::parse(json_text);
        } catch (const json::parse_error& e) {
            throw validation_error(std::string("config: not valid JSON: ") + e.what());
        }
        if (!root.is_object())
            throw validation_error("config: top level must be a JSON object");
    }

    reject_unknown_keys(root, "", {"parameters", "grid", "alpha_levels", "arithmetic",
                                   "propagation", "parallel", "output_dir"});

    auto note_default = [&cfg](const char* path) { cfg.defaults_applied.push_back(path); };

    TriangularFuzzyNumber nu = cfg.params.nu, h = cfg.params.h, u0 = cfg.params.u0;
    if (root.contains("parameters")) {
        const json& p = root["parameters"];
        if (!p.is_object()) fail("parameters", "expected an object");
        reject_unknown_keys(p, "parameters", {"nu", "h", "u0"});
        if (p.contains("nu")) nu = parse_tfn(p["nu"], "parameters.nu");
        else note_default("parameters.nu");
        if (p.contains("h")) h = parse_tfn(p["h"], "parameters.h");
        else note_default("parameters.h");
        if (p.contains("u0")) u0 = parse_tfn(p["u0"], "parameters.u0");
        else note_default("parameters.u0");
    } else {
        note_default("parameters");
    }
    try {
        cfg.params = FuzzyParams(nu, h, u0);
    } catch (const validation_error& e) {
        fail("parameters", e.what());
    }

    if (root.contains("grid")) {
        const json& g = root["grid"];
        if (!g.is_object()) fail("grid", "expected an object");
        reject_unknown_keys(g, "grid", {"nodes", "dt", "d_max", "record_times"});
        if (g.contains("nodes")) {
            if (!g["nodes"].is_number_integer()) fail("grid.nodes", "expected an integer");
            cfg.nodes = g["nodes"].get<int>();
            if (cfg.nodes < 3) fail("grid.nodes", "must be >= 3");
        } else {
            note_default("grid.nodes");
        }
        if (g.contains("dt")) {
            if (g["dt"].is_string()) {
                if (g["dt"].get<std::string>() != "auto")
                    fail("grid.dt", "expected a number or \"auto\"");
                cfg.dt.reset();
            } else {
                const double v = get_number(g["dt"], "grid.dt");
                if (!(v > 0.0)) fail("grid.dt", "must be > 0");
                cfg.dt = v;
            }
        } else {
            note_default("grid.dt");
        }
        if (g.contains("d_max")) {
            const double v = get_number(g["d_max"], "grid.d_max");
            if (!(v > 0.0 && v <= 0.5)) fail("grid.d_max", "must lie in (0, 0.5]");
            cfg.d_max = v;
        } else {
            note_default("grid.d_max");
        }
        if (g.contains("record_times")) {
            if (!g["record_times"].is_array()) fail("grid.record_times", "expected an array");
            std::vector<double> times;
            for (const auto& v : g["record_times"])
                times.push_back(get_number(v, "grid.record_times"));
            cfg.record_times = std::move(times);
        } else {
            note_default("grid.record_times");
        }
    } else {
        note_default("grid");
    }

    if (root.contains("alpha_levels")) {
        const json& a = root["alpha_levels"];
        try {
            if (a.is_number_integer()) {
                cfg.levels = AlphaLevels::uniform(a.get<int>());
            } else if (a.is_array()) {
                std::vector<double> v;
                for (const auto& x : a) v.push_back(get_number(x, "alpha_levels"));
                cfg.levels = AlphaLevels(std::move(v));
            } else {
                fail("alpha_levels", "expected an integer count or an array of levels");
            }
        } catch (const validation_error& e) {
            fail("alpha_levels", e.what());
        }
    } else {
        note_default("alpha_levels");
    }

    if (root.contains("arithmetic")) {
        const std::string v = root["arithmetic"].is_string()
                                  ? root["arithmetic"].get<std::string>() : "";
        if (v == "limit") cfg.options.arithmetic = ArithmeticMode::limit;
        else if (v == "standard") cfg.options.arithmetic = ArithmeticMode::standard;
        else fail("arithmetic", "expected \"limit\" or \"standard\"");
    } else {
        note_default("arithmetic");
    }

    if (root.contains("propagation")) {
        const std::string v = root["propagation"].is_string()
                                  ? root["propagation"].get<std::string>() : "";
        if (v == "naive") cfg.options.propagation = PropagationMode::naive;
        else if (v == "monotone") cfg.options.propagation = PropagationMode::monotone;
        else fail("propagation", "expected \"naive\" or \"monotone\"");
    } else {
        note_default("propagation");
    }

    if (root.contains("parallel")) {
        if (!root["parallel"].is_boolean()) fail("parallel", "expected a boolean");
        cfg.options.parallel = root["parallel"].get<bool>();
    } else {
        note_default("parallel");
    }

    if (root.contains("output_dir")) {
        if (!root["output_dir"].is_string()) fail("output_dir", "expected a string");
        cfg.output_dir = root["output_dir"].get<std::string>();
    } else {
        note_default("output_dir");
    }

    // Validate the record times against an explicit dt now; auto dt divides
    // them by construction.
    if (cfg.dt.has_value()) {
        try {
            GridSpec check(cfg.nodes, *cfg.dt, cfg.record_times);
        } catch (const validation_error& e) {
            fail("grid", e.what());
        }
    } else {
        for (std::size_t i = 0; i < cfg.record_times.size(); ++i) {
            const double t = cfg.record_times[i];
            if (!(t >= 0.0) || (i > 0 && !(cfg.record_times[i - 1] < t)))
                fail("grid.record_times", "must be nonnegative and strictly increasing");
        }
    }

    cfg.config_hash = fnv1a_hex(canonical_config(cfg));
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string canonical_config(const RunConfig& cfg) {
    json j;
    auto tfn = [](const TriangularFuzzyNumber& f) {
        return json::array({f.left, f.nominal, f.right});
    };
    j["parameters"]["nu"] = tfn(cfg.params.nu);
    j["parameters"]["h"] = tfn(cfg.params.h);
    j["parameters"]["u0"] = tfn(cfg.params.u0);
    j["grid"]["nodes"] = cfg.nodes;
    if (cfg.dt.has_value())
        j["grid"]["dt"] = *cfg.dt;
    else
        j["grid"]["dt"] = "auto";
    j["grid"]["d_max"] = cfg.d_max;
    j["grid"]["record_times"] = cfg.record_times;
    j["alpha_levels"] = cfg.levels.levels;
    j["arithmetic"] = cfg.options.arithmetic == ArithmeticMode::limit ? "limit" : "standard";
    j["propagation"] =
        cfg.options.propagation == PropagationMode::monotone ? "monotone" : "naive";
    j["parallel"] = cfg.options.parallel;
    j["output_dir"] = cfg.output_dir;
    return j.dump();
}

}  // namespace plateuq
