#pragma once

#include <string>

#include <json.hpp>

namespace digitcurve {

/// JSON report of one command: parameters, named verdicts, failures.
/// Keys come out sorted, so fixed inputs give fixed bytes (timing aside).
class Report {
public:
    explicit Report(std::string command);

    nlohmann::json& parameters() { return parameters_; }

    /// Adds a verdict; metrics may be any JSON value.
    void verdict(const std::string& name, bool pass, nlohmann::json metrics = nlohmann::json::object());
    void failure(const std::string& verdict, nlohmann::json detail);

    bool ok() const;
    void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }
    void set_timing(bool on) { timing_ = on; }

    nlohmann::json to_json() const;
    std::string dump() const;  // indented, newline-terminated

private:
    std::string command_;
    nlohmann::json parameters_ = nlohmann::json::object();
    nlohmann::json verdicts_ = nlohmann::json::array();
    nlohmann::json failures_ = nlohmann::json::array();
    double wall_time_ms_ = 0;
    bool timing_ = true;
};

}  // namespace digitcurve
