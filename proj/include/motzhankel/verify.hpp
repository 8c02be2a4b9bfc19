#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace motzhankel {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(const std::string& name);

struct SweepConfig {
    int n_max = 6;
    int k_max = 2;
    std::vector<int> shifts{0, 1};
    std::vector<std::string> checks;
    bool parallel = false;
    unsigned workers = 0;  // 0 = hardware concurrency
    OutputFormat output_format = OutputFormat::Json;
    int n_max_symbolic = 12;
    int n_max_integer = 24;
    bool unsafe = false;  // skip the n_max caps
    std::uint64_t seed = 20240229;
};

/// One verified instance.
struct Cell {
    std::string check;
    std::vector<std::pair<std::string, long>> params;
    std::string status;  // "pass", "fail", "expected_mismatch"
    std::string lhs;
    std::string rhs;
    std::string diff;
    std::string note;
};

struct Report {
    std::string command = "verify";
    SweepConfig config;
    std::vector<Cell> cells;

    std::size_t count(const std::string& status) const;
    bool ok() const { return count("fail") == 0; }
};

/// All check ids accepted by run_verify.
const std::vector<std::string>& known_checks();
bool is_symbolic_check(const std::string& id);

/// Throws std::invalid_argument for unknown checks or cap violations.
void validate(const SweepConfig& config);

Report run_verify(const SweepConfig& config);

std::string render(const Report& report, OutputFormat format);

}  // namespace motzhankel
