#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vgc {
namespace suite {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Flagged };

// One verification check. "flagged" is reserved for documented convention
// discrepancies (the chi case table, the pi_1 quotient vs abelianization,
// the dilogarithm sign); everything else is pass/fail.
struct Report {
    std::string check_name;
    std::string citation;
    Status status = Status::Fail;
    Json details;
    long elapsed_millis = 0;  // kept at 0 in emitted reports: output is
                              // required to be byte-identical across runs
};

struct Config {
    int truncation_order = 16;
    double float_tolerance = 1e-9;
    std::string data_dir = VGCHECK_DATA_DIR;

    // Throws std::invalid_argument on malformed input.
    static Config from_json(const Json& j);
    static Config from_file(const std::string& path);
};

std::vector<Report> run_all(const Config& cfg);

// Per-module subsets, used by the CLI subcommands.
std::vector<Report> run_dwork(const Config& cfg);
std::vector<Report> run_tropical(const Config& cfg);
std::vector<Report> run_chainlink(const Config& cfg);
std::vector<Report> run_locsys(const Config& cfg);
std::vector<Report> run_floer(const Config& cfg);
std::vector<Report> run_bps(const Config& cfg);
std::vector<Report> run_vshs(const Config& cfg);
std::vector<Report> run_dilog(const Config& cfg);

Json to_json(const std::vector<Report>& reports);
std::string to_markdown(const std::vector<Report>& reports);

// 0 if no check failed, 1 otherwise (flagged entries do not fail the run).
int exit_code(const std::vector<Report>& reports);

}  // namespace suite
}  // namespace vgc
