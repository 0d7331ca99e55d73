#include "bcabe/cli/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace bcabe::cli {

namespace {

constexpr std::string_view kTool = "bcabe";
constexpr std::string_view kVersion = "1.0.0";

bool compare(double value, std::string_view rel, double threshold)
{
    if (rel == "<")
        return value < threshold;
    if (rel == "<=")
        return value <= threshold;
    if (rel == ">=")
        return value >= threshold;
    if (rel == "==")
        return value == threshold;
    throw std::invalid_argument("unknown check relation '" + std::string(rel) + "'");
}

} // namespace

Report::Report(std::string command)
    : command_(std::move(command))
{
}

const Check& Report::check(std::string name, double value, std::string_view relation, double threshold)
{
    const bool ok = compare(value, relation, threshold);
    checks_.push_back({std::move(name), value, std::string(relation), threshold, ok});
    return checks_.back();
}

const Check& Report::check_flag(std::string name, bool ok)
{
    return check(std::move(name), ok ? 1.0 : 0.0, "==", 1.0);
}

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    std::size_t n = 0;
    for (const auto& c : checks_)
        n += c.passed ? 0 : 1;
    return n;
}

ordered_json Report::payload() const
{
    ordered_json p;
    p["command"] = command_;
    p["parameters"] = parameters_;
    p["tolerances"] = tolerances_;
    p["results"] = results_;
    ordered_json checks = ordered_json::array();
    for (const auto& c : checks_) {
        ordered_json j;
        j["name"] = c.name;
        j["value"] = c.value;
        j["relation"] = c.relation;
        j["threshold"] = c.threshold;
        j["passed"] = c.passed;
        checks.push_back(std::move(j));
    }
    p["checks"] = std::move(checks);
    p["passed"] = passed();
    return p;
}

std::string Report::payload_text() const
{
    return payload().dump(2);
}

std::string Report::render(std::string_view timestamp) const
{
    ordered_json doc;
    doc["header"]["tool"] = kTool;
    doc["header"]["version"] = kVersion;
    doc["header"]["timestamp"] = timestamp;
    doc["payload"] = payload();
    return doc.dump(2) + "\n";
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json extract_payload(std::string_view report_text)
{
    try {
        return ordered_json::parse(report_text).at("payload");
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(std::string("not a report: ") + ex.what());
    }
}

} // namespace bcabe::cli
