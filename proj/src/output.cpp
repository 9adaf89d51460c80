#include "plateuq/output.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace plateuq {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

namespace {

double parse_double(std::string_view s, const std::string& context) {
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw validation_error("csv: bad number '" + std::string(s) + "' in " + context);
    return v;
}

int parse_int(std::string_view s, const std::string& context) {
    int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw validation_error("csv: bad integer '" + std::string(s) + "' in " + context);
    return v;
}

}  // namespace

std::vector<OutputRecord> records_from_field(const std::string& case_id,
                                             const FuzzyField& field) {
    std::vector<OutputRecord> out;
    const IntervalField& core = field.core();
    for (std::size_t li = 0; li < field.levels.size(); ++li) {
        const IntervalField& f = field.per_alpha[li];
        for (std::size_t ti = 0; ti < f.times.size(); ++ti) {
            const auto& row = f.u[ti];
            const double dy = 1.0 / double(row.size() - 1);
            for (std::size_t j = 0; j < row.size(); ++j) {
                out.push_back({case_id, field.levels[li], f.times[ti],
                               static_cast<int>(j), double(j) * dy, row[j].lo,
                               core.u[ti][j].mid(), row[j].hi});
            }
        }
    }
    return out;
}

std::vector<OutputRecord> records_from_crisp(const std::string& case_id,
                                             const CrispField& field) {
    std::vector<OutputRecord> out;
    for (std::size_t ti = 0; ti < field.times.size(); ++ti) {
        const auto& row = field.u[ti];
        const double dy = 1.0 / double(row.size() - 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double v = row[j];
            out.push_back({case_id, 1.0, field.times[ti], static_cast<int>(j),
                           double(j) * dy, v, v, v});
        }
    }
    return out;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<OutputRecord>& records) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw validation_error("cannot write '" + path.string() + "'");
    os << kCsvHeader << "\n";
    for (const auto& r : records) {
        os << r.case_id << ',' << format_double(r.alpha) << ','
           << format_double(r.time_s) << ',' << r.node << ','
           << format_double(r.y_norm) << ',' << format_double(r.u_lo) << ','
           << format_double(r.u_mid) << ',' << format_double(r.u_hi) << "\n";
    }
}

std::vector<OutputRecord> read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw validation_error("cannot read '" + path.string() + "'");
    std::string line;
    if (!std::getline(is, line))
        throw validation_error("csv: empty file " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw validation_error("csv: unexpected header in " + path.string());

    std::vector<OutputRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string_view> f;
        std::string_view sv(line);
        std::size_t start = 0;
        for (std::size_t i = 0; i <= sv.size(); ++i) {
            if (i == sv.size() || sv[i] == ',') {
                f.push_back(sv.substr(start, i - start));
                start = i + 1;
            }
        }
        const std::string ctx = path.string() + ":" + std::to_string(lineno);
        if (f.size() != 8)
            throw validation_error("csv: expected 8 fields in " + ctx);
        OutputRecord r;
        r.case_id = std::string(f[0]);
        r.alpha = parse_double(f[1], ctx);
        r.time_s = parse_double(f[2], ctx);
        r.node = parse_int(f[3], ctx);
        r.y_norm = parse_double(f[4], ctx);
        r.u_lo = parse_double(f[5], ctx);
        r.u_mid = parse_double(f[6], ctx);
        r.u_hi = parse_double(f[7], ctx);
        out.push_back(std::move(r));
    }
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

namespace {

using nlohmann::json;

json interval_json(const Interval& iv) {
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

json widths_json(const WidthMetrics& wm) {
    json per_time = json::object();
    for (std::size_t i = 0; i < wm.times.size(); ++i)
        per_time[format_double(wm.times[i])] = wm.mean_width_per_time[i];
    return json{{"width_alpha", wm.alpha},
                {"mean_width_per_time", per_time},
                {"time_averaged_mean_width", wm.time_averaged_mean_width}};
}

// Least-squares slope of node width against the core velocity at the last
// record time; summarizes how the envelope width varies along the velocity
// axis (informational, not asserted anywhere).
json width_vs_velocity_json(const CaseResult& r) {
    if (r.widths.times.empty()) return nullptr;
    const std::size_t ti = r.widths.times.size() - 1;
    const auto& core = r.fuzzy_field.core().u[ti];
    const auto& profile = r.widths.width_profile[ti];
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t j = 1; j + 1 < profile.size(); ++j) {
        const double x = core[j].mid();
        const double y = profile[j];
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return nullptr;
    const double denom = double(n) * sxx - sx * sx;
    if (denom == 0.0) return nullptr;
    const double slope = (double(n) * sxy - sx * sy) / denom;
    return json{{"time", r.widths.times[ti]},
                {"slope", slope},
                {"width_increases_with_velocity", slope > 0.0}};
}

}  // namespace

std::string summary_json(const SummaryInputs& in) {
    json j;
    const RunConfig& cfg = *in.cfg;

    j["provenance"]["generator"] = "plateuq 0.1.0";
    j["provenance"]["config_hash"] = cfg.config_hash;
    j["provenance"]["defaults_applied"] = cfg.defaults_applied;

    j["grid"]["nodes"] = in.grid.nodes;
    j["grid"]["dt"] = in.grid.dt;
    j["grid"]["dt_auto"] = !cfg.dt.has_value();
    j["grid"]["d_max"] = cfg.d_max;
    j["grid"]["record_times"] = in.grid.record_times;

    j["modes"]["arithmetic"] =
        cfg.options.arithmetic == ArithmeticMode::limit ? "limit" : "standard";
    j["modes"]["propagation"] =
        cfg.options.propagation == PropagationMode::monotone ? "monotone" : "naive";
    j["modes"]["parallel"] = cfg.options.parallel;
    j["alpha_levels"] = cfg.levels.levels;

    json cases = json::object();
    for (const CaseResult* r : in.cases) {
        json c;
        c["widths"] = widths_json(r->widths);
        const IntervalParams box = params_at_alpha(
            effective_params(r->fuzzy_set, cfg.params), cfg.levels.widest());
        c["d"] = interval_json(diffusion_number(box, in.grid, cfg.options.arithmetic));
        c["width_vs_velocity"] = width_vs_velocity_json(*r);
        cases[r->id] = std::move(c);
    }
    j["cases"] = std::move(cases);

    if (in.sensitivity) {
        json ranking = json::array();
        for (const auto& e : in.sensitivity->ranking)
            ranking.push_back(json{{"case", e.id},
                                   {"time_averaged_mean_width", e.time_averaged_mean_width}});
        j["sensitivity"]["ranking"] = std::move(ranking);
        j["sensitivity"]["nu_least_sensitive"] = in.sensitivity->nu_least_sensitive;
    }

    if (in.stability) {
        const StabilityReport& s = *in.stability;
        json sj;
        sj["d"] = interval_json(s.d);
        sj["inf_norm"] = s.inf_norm;
        sj["K"] = s.K;
        sj["stable"] = s.stable;
        if (s.max_stable_dt) sj["max_stable_dt"] = *s.max_stable_dt;
        if (s.spectral_radius) sj["spectral_radius"] = *s.spectral_radius;
        if (in.probe) {
            sj["seeded_error"]["epsilon0"] = in.probe->epsilon0;
            sj["seeded_error"]["growth"] = in.probe->growth;
        }
        j["stability"] = std::move(sj);
    }

    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw validation_error("cannot write '" + path.string() + "'");
    os << text;
}

}  // namespace plateuq
