#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bcabe::cli {

using ordered_json = nlohmann::ordered_json;

struct Check {
    std::string name;
    double value;
    std::string relation; // "<", "<=", ">=", "=="
    double threshold;
    bool passed;
};

/// Report = header (timestamp, tool) + payload (everything else). Two runs
/// with the same arguments produce identical payloads.
class Report {
public:
    explicit Report(std::string command);

    ordered_json& parameters() { return parameters_; }
    ordered_json& tolerances() { return tolerances_; }
    ordered_json& results() { return results_; }

    /// Records `value relation threshold`; throws std::invalid_argument for an
    /// unknown relation.
    const Check& check(std::string name, double value, std::string_view relation, double threshold);
    /// Boolean check stored as value 1/0 against threshold 1.
    const Check& check_flag(std::string name, bool ok);

    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failures() const;

    ordered_json payload() const;
    std::string payload_text() const;
    /// Full document with the given header timestamp.
    std::string render(std::string_view timestamp) const;

private:
    std::string command_;
    ordered_json parameters_ = ordered_json::object();
    ordered_json tolerances_ = ordered_json::object();
    ordered_json results_ = ordered_json::object();
    std::vector<Check> checks_;
};

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string utc_timestamp();

/// The payload object of a rendered report; throws std::runtime_error when
/// the text is not a report.
ordered_json extract_payload(std::string_view report_text);

} // namespace bcabe::cli
