#pragma once
#include <filesystem>
#include <string>
#include <vector>

#include "plateuq/run_config.hpp"
#include "plateuq/scenario.hpp"
#include "plateuq/stability.hpp"

namespace plateuq {

/// One CSV row. u_mid is the alpha = 1 (crisp-core) value at that node and
/// time, repeated across the alpha blocks.
struct OutputRecord {
    std::string case_id;
    double alpha;
    double time_s;
    int node;
    double y_norm;
    double u_lo;
    double u_mid;
    double u_hi;
};

inline constexpr const char* kCsvHeader = "case,alpha,time_s,node,y_norm,u_lo,u_mid,u_hi";

/// Shortest representation that parses back to the exact same double.
std::string format_double(double x);

std::vector<OutputRecord> records_from_field(const std::string& case_id,
                                             const FuzzyField& field);
std::vector<OutputRecord> records_from_crisp(const std::string& case_id,
                                             const CrispField& field);

/// Deterministic byte-for-byte given identical records.
void write_csv(const std::filesystem::path& path,
               const std::vector<OutputRecord>& records);
std::vector<OutputRecord> read_csv(const std::filesystem::path& path);

/// 64-bit FNV-1a, hex-encoded; stable across platforms.
std::string fnv1a_hex(const std::string& bytes);

struct SummaryInputs {
    const RunConfig* cfg;
    GridSpec grid;
    std::vector<const CaseResult*> cases;
    const SensitivityReport* sensitivity = nullptr;  // optional
    const StabilityReport* stability = nullptr;      // optional
    const ErrorProbe* probe = nullptr;               // optional
};

/// Structured JSON report: provenance (config hash, defaults applied),
/// grid and modes, per-case width metrics, optional sensitivity ranking
/// and stability report.
std::string summary_json(const SummaryInputs& in);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace plateuq
